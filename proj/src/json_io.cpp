#include "qcwalk/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qcwalk {

namespace {

int int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw std::invalid_argument(std::string("graph spec needs integer field \"") +
                                key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("graph spec must be a JSON object");
  }
  if (j.contains("family")) {
    if (!j["family"].is_string()) {
      throw std::invalid_argument("graph field \"family\" must be a string");
    }
    const GraphFamily family = family_from_string(j["family"].get<std::string>());
    if (family == GraphFamily::Custom) {
      throw std::invalid_argument(
          "custom graphs need an \"edges\" list, not a family tag");
    }
    return Graph::from_family(family, int_field(j, "n"));
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) {
      throw std::invalid_argument("graph field \"edges\" must be an array");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw std::invalid_argument(
            "each edge must be a pair of integer node labels");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(int_field(j, "n"), edges);
  }
  throw std::invalid_argument(
      "graph spec needs either \"family\"+\"n\" or \"n\"+\"edges\"");
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.size();
  if (g.family() != GraphFamily::Custom) j["family"] = to_string(g.family());
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return j;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open graph file \"" + path + "\"");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("graph file \"" + path +
                                "\" is not valid JSON: " + err.what());
  }
  return graph_from_json(j);
}

nlohmann::json trajectory_to_json(const Trajectory& traj) {
  nlohmann::json j;
  j["times"] = traj.times;
  auto& states = j["states"] = nlohmann::json::array();
  for (const auto& rho : traj.states) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < rho.cols(); ++c) {
        row.push_back({rho(r, c).real(), rho(r, c).imag()});
      }
      rows.push_back(std::move(row));
    }
    states.push_back(std::move(rows));
  }
  return j;
}

std::string trajectory_to_csv(const Trajectory& traj) {
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states[0].rows();
  std::string out = "t";
  for (Eigen::Index k = 1; k <= n; ++k) out += ",p_" + std::to_string(k);
  out += "\n";
  char buf[32];
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g", traj.times[i]);
    out += buf;
    for (Eigen::Index k = 0; k < n; ++k) {
      const double p =
          std::min(1.0, std::max(0.0, traj.states[i](k, k).real()));
      std::snprintf(buf, sizeof(buf), ",%.12g", p);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

nlohmann::json spectrum_to_json(const Spectrum& s, const DegeneracyReport& d) {
  nlohmann::json j;
  j["eigenvalues"] = std::vector<double>(
      s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
  j["fiedler_value"] = s.fiedler_value;
  j["classes"] = d.classes;
  j["simple_count"] = d.simple_count;
  j["degenerate"] = d.has_degeneracy();
  return j;
}

nlohmann::json theorem_check_to_json(const TheoremCheck& c) {
  nlohmann::json j;
  j["simple_count"] = c.simple_count;
  j["automorphism_count"] = c.automorphism_count;
  j["best_bound"] = c.best_bound;
  j["min_margin"] = c.min_margin;
  j["holds"] = c.holds;
  nlohmann::json perm = nlohmann::json::array();
  for (int image : c.best_element) perm.push_back(image + 1);
  j["best_element"] = std::move(perm);
  return j;
}

}  // namespace qcwalk
