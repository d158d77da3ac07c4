#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/noise_model.hpp"

namespace qcwalk {

/// One model family swept over a parameter grid (gamma for intrinsic and
/// haken_strobl, p for qsw; unitary carries a single dummy entry).
struct ModelSweep {
  std::string tag;
  std::vector<double> parameters;
};

/// Parsed experiment: every (graph, model, parameter) tuple yields one curve
/// file. Time grid is t in [0, t_end] with n_points samples.
struct ExperimentConfig {
  std::vector<Graph> graphs;
  std::vector<ModelSweep> models;
  double t_end = 30.0;
  int n_points = 600;
  std::string output_dir = ".";
  bool per_node_curves = true;
  bool star_class_split = false;
  bool asymptote_table = false;
  bool theorem_check = false;
  int threads = 0;  // 0 = hardware concurrency
};

/// Throws std::invalid_argument naming the offending field.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);

/// Canonical serialization whose FNV-1a hash identifies the run.
nlohmann::json config_to_json(const ExperimentConfig& config);
std::string config_hash(const ExperimentConfig& config);

struct RunRecord {
  std::string file;  // path of the emitted curve file
  std::string graph_tag;
  std::string model_tag;
  double parameter = 0.0;
  double wall_ms = 0.0;
};

struct RunManifest {
  std::string config_hash;
  std::string version;
  std::vector<RunRecord> runs;
  std::vector<std::string> extra_files;  // asymptote table, theorem reports
};

/// Execute every tuple on a worker pool, write curve CSVs (comment header
/// with config hash and parameters, then t,d_qc,opt_node,f_node_1..f_node_N),
/// optional asymptote/theorem side files, and manifest.json. The environment
/// variable QCWALK_OUTPUT_DIR, when set, overrides the configured directory.
RunManifest run_experiment(const ExperimentConfig& config);

/// Intrinsic-decoherence asymptote table for whole families: CSV rows
/// family,n,value over n in [n_min, n_max], one block per family. Returns the
/// path of the written file.
std::string emit_asymptote_table(const std::vector<GraphFamily>& families,
                                 int n_min, int n_max,
                                 const std::string& output_dir);

/// Short tag used in file names: "complete5", "star7", or for custom graphs
/// "custom<n>_<8 hex chars of the edge-list hash>".
std::string graph_tag(const Graph& g);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace qcwalk
