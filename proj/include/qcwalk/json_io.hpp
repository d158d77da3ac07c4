#pragma once

#include <json.hpp>
#include <string>

#include "qcwalk/automorphism.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/liouvillian.hpp"
#include "qcwalk/spectrum.hpp"

namespace qcwalk {

/// Accepts {"family": "complete|cycle|star|path", "n": int} or
/// {"n": int, "edges": [[j,k], ...]} with 1-based labels.
/// Throws std::invalid_argument with a field diagnostic on anything else.
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& g);

Graph load_graph_file(const std::string& path);

/// Trajectory as JSON: times plus per-state complex entries as [re, im]
/// pairs, row-major.
nlohmann::json trajectory_to_json(const Trajectory& traj);

/// Trajectory as CSV: header t,p_1..p_N, one row of diagonal populations per
/// time (clamped to [0,1] on output).
std::string trajectory_to_csv(const Trajectory& traj);

nlohmann::json spectrum_to_json(const Spectrum& s, const DegeneracyReport& d);

nlohmann::json theorem_check_to_json(const TheoremCheck& c);

}  // namespace qcwalk
