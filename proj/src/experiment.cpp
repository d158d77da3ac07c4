#include "qcwalk/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qcwalk/json_io.hpp"
#include "qcwalk/qc_distance.hpp"
#include "qcwalk/version.hpp"

namespace qcwalk {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

namespace {

std::string hex16(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// Parameter grid of one model entry; gamma and p accept a scalar or array.
std::vector<double> parameter_list(const nlohmann::json& entry,
                                   const char* key) {
  if (!entry.contains(key)) {
    throw std::invalid_argument(std::string("model entry needs field \"") +
                                key + "\"");
  }
  const auto& field = entry[key];
  std::vector<double> values;
  if (field.is_number()) {
    values.push_back(field.get<double>());
  } else if (field.is_array() && !field.empty()) {
    for (const auto& v : field) {
      if (!v.is_number()) {
        throw std::invalid_argument(std::string("model field \"") + key +
                                    "\" must hold numbers");
      }
      values.push_back(v.get<double>());
    }
  } else {
    throw std::invalid_argument(std::string("model field \"") + key +
                                "\" must be a number or non-empty array");
  }
  return values;
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("experiment config must be a JSON object");
  }
  ExperimentConfig config;

  if (j.contains("graph")) {
    config.graphs.push_back(graph_from_json(j["graph"]));
  } else if (j.contains("graphs") && j["graphs"].is_array()) {
    for (const auto& spec : j["graphs"])
      config.graphs.push_back(graph_from_json(spec));
  }
  if (config.graphs.empty()) {
    throw std::invalid_argument(
        "config needs a \"graph\" object or non-empty \"graphs\" array");
  }

  if (!j.contains("models") || !j["models"].is_array() || j["models"].empty()) {
    throw std::invalid_argument("config needs a non-empty \"models\" array");
  }
  for (const auto& entry : j["models"]) {
    if (!entry.is_object() || !entry.contains("model") ||
        !entry["model"].is_string()) {
      throw std::invalid_argument(
          "each model entry needs a string field \"model\"");
    }
    ModelSweep sweep;
    sweep.tag = entry["model"].get<std::string>();
    if (sweep.tag == "unitary") {
      sweep.parameters = {0.0};
    } else if (sweep.tag == "intrinsic" || sweep.tag == "haken_strobl") {
      sweep.parameters = parameter_list(entry, "gamma");
    } else if (sweep.tag == "qsw") {
      sweep.parameters = parameter_list(entry, "p");
    } else {
      throw std::invalid_argument("unknown model: \"" + sweep.tag + "\"");
    }
    for (double v : sweep.parameters) model_from_tag(sweep.tag, v);  // range check
    config.models.push_back(std::move(sweep));
  }

  if (j.contains("grid")) {
    const auto& grid = j["grid"];
    if (!grid.is_object()) {
      throw std::invalid_argument("config field \"grid\" must be an object");
    }
    if (grid.contains("t_end")) config.t_end = grid["t_end"].get<double>();
    if (grid.contains("n_points")) config.n_points = grid["n_points"].get<int>();
  }
  if (config.t_end <= 0.0) {
    throw std::invalid_argument("grid needs t_end > 0");
  }
  if (config.n_points < 2) {
    throw std::invalid_argument("grid needs n_points >= 2");
  }

  if (j.contains("output")) {
    const auto& output = j["output"];
    if (output.contains("directory")) {
      config.output_dir = output["directory"].get<std::string>();
    }
  }
  if (j.contains("flags")) {
    const auto& flags = j["flags"];
    auto flag = [&](const char* key, bool fallback) {
      return flags.contains(key) ? flags[key].get<bool>() : fallback;
    };
    config.per_node_curves = flag("per_node_curves", config.per_node_curves);
    config.star_class_split = flag("star_class_split", config.star_class_split);
    config.asymptote_table = flag("asymptote_table", config.asymptote_table);
    config.theorem_check = flag("theorem_check", config.theorem_check);
  }
  if (j.contains("threads")) config.threads = j["threads"].get<int>();
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file \"" + path + "\"");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("config file \"" + path +
                                "\" is not valid JSON: " + err.what());
  }
  return config_from_json(j);
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
  // Canonical form: scientific content only, so the hash (and through it the
  // curve files) is independent of where results land or how many workers ran.
  nlohmann::json j;
  auto& graphs = j["graphs"] = nlohmann::json::array();
  for (const auto& g : config.graphs) graphs.push_back(graph_to_json(g));
  auto& models = j["models"] = nlohmann::json::array();
  for (const auto& sweep : config.models) {
    models.push_back({{"model", sweep.tag}, {"parameters", sweep.parameters}});
  }
  j["grid"] = {{"t_end", config.t_end}, {"n_points", config.n_points}};
  j["flags"] = {{"per_node_curves", config.per_node_curves},
                {"star_class_split", config.star_class_split},
                {"asymptote_table", config.asymptote_table},
                {"theorem_check", config.theorem_check}};
  return j;
}

std::string config_hash(const ExperimentConfig& config) {
  return hex16(fnv1a64(config_to_json(config).dump()));
}

std::string graph_tag(const Graph& g) {
  if (g.family() != GraphFamily::Custom) {
    return to_string(g.family()) + std::to_string(g.size());
  }
  std::string edge_repr;
  for (const auto& [a, b] : g.edges()) {
    edge_repr += std::to_string(a) + "-" + std::to_string(b) + ";";
  }
  return "custom" + std::to_string(g.size()) + "_" +
         hex16(fnv1a64(edge_repr)).substr(0, 8);
}

namespace {

struct Tuple {
  const Graph* graph;
  std::string model_tag;
  double parameter;
};

std::string parameter_suffix(const std::string& tag, double value) {
  if (tag == "unitary") return "";
  if (tag == "qsw") return "_p" + format_value(value);
  return "_gamma" + format_value(value);
}

std::string curve_csv(const QcDistanceCurve& curve, const std::string& hash,
                      const std::string& graph, const std::string& model,
                      const std::string& parameter, bool per_node) {
  std::string out;
  out += "# qcwalk " + std::string(kVersion) + " curve\n";
  out += "# config: " + hash + "\n";
  out += "# graph: " + graph + "\n";
  out += "# model: " + model + (parameter.empty() ? "" : " " + parameter) + "\n";
  out += "t,d_qc,opt_node";
  const Eigen::Index n =
      curve.samples.empty() ? 0 : curve.samples[0].node_fidelity.size();
  if (per_node) {
    for (Eigen::Index k = 1; k <= n; ++k) out += ",f_node_" + std::to_string(k);
  }
  out += "\n";
  char buf[48];
  for (const auto& s : curve.samples) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%d", s.t, s.d_qc, s.opt_node);
    out += buf;
    if (per_node) {
      for (Eigen::Index k = 0; k < n; ++k) {
        std::snprintf(buf, sizeof(buf), ",%.12g", s.node_fidelity(k));
        out += buf;
      }
    }
    out += "\n";
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write output file \"" + path.string() +
                                "\"");
  }
  out << content;
}

std::string parameter_label(const std::string& tag, double value) {
  if (tag == "unitary") return "";
  if (tag == "qsw") return "p=" + format_value(value);
  return "gamma=" + format_value(value);
}

}  // namespace

RunManifest run_experiment(const ExperimentConfig& config) {
  fs::path out_dir = config.output_dir;
  if (const char* env = std::getenv("QCWALK_OUTPUT_DIR");
      env != nullptr && *env != '\0') {
    out_dir = env;
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw std::invalid_argument("cannot create output directory \"" +
                                out_dir.string() + "\": " + ec.message());
  }

  std::vector<double> grid(config.n_points);
  for (int i = 0; i < config.n_points; ++i) {
    grid[i] = config.t_end * i / (config.n_points - 1);
  }

  std::vector<Tuple> tuples;
  for (const auto& g : config.graphs) {
    for (const auto& sweep : config.models) {
      for (double v : sweep.parameters) {
        tuples.push_back({&g, sweep.tag, v});
      }
    }
  }

  RunManifest manifest;
  manifest.config_hash = config_hash(config);
  manifest.version = kVersion;
  manifest.runs.resize(tuples.size());
  std::vector<std::vector<std::string>> split_files(tuples.size());

  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_workers = std::min<std::size_t>(
      config.threads > 0 ? config.threads : hardware, tuples.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < tuples.size();
         i = next.fetch_add(1)) {
      if (failure) return;
      const Tuple& tup = tuples[i];
      const auto started = std::chrono::steady_clock::now();
      try {
        const NoiseModel model = model_from_tag(tup.model_tag, tup.parameter);
        const std::string gtag = graph_tag(*tup.graph);
        const std::string base =
            gtag + "_" + tup.model_tag + parameter_suffix(tup.model_tag, tup.parameter);
        const std::string label = parameter_label(tup.model_tag, tup.parameter);

        const QcDistanceCurve curve =
            qc_distance_curve(*tup.graph, model, grid, InitialClass::All);
        const fs::path file = out_dir / (base + ".csv");
        write_file(file, curve_csv(curve, manifest.config_hash, gtag,
                                   tup.model_tag, label, config.per_node_curves));

        if (config.star_class_split &&
            tup.graph->family() == GraphFamily::Star) {
          for (const auto& [cls, name] :
               {std::pair{InitialClass::Central, "central"},
                std::pair{InitialClass::External, "external"}}) {
            const QcDistanceCurve restricted =
                qc_distance_curve(*tup.graph, model, grid, cls);
            const fs::path split = out_dir / (base + "_" + name + ".csv");
            write_file(split, curve_csv(restricted, manifest.config_hash, gtag,
                                        tup.model_tag,
                                        label + (label.empty() ? "" : " ") +
                                            "class=" + name,
                                        config.per_node_curves));
            split_files[i].push_back(split.string());
          }
        }

        const auto elapsed = std::chrono::steady_clock::now() - started;
        manifest.runs[i] = {
            file.string(), gtag, tup.model_tag, tup.parameter,
            std::chrono::duration<double, std::milli>(elapsed).count()};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  for (auto& files : split_files) {
    for (auto& f : files) manifest.extra_files.push_back(std::move(f));
  }

  if (config.asymptote_table) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& g : config.graphs) {
      const GraphFamily family = g.family();
      if (family == GraphFamily::Star) {
        for (const auto& [cls, name] :
             {std::pair{InitialClass::Central, "central"},
              std::pair{InitialClass::External, "external"}}) {
          records.push_back({{"family", to_string(family)},
                             {"n", g.size()},
                             {"initial_class", name},
                             {"value", asymptotic_qc_distance(family, g.size(), cls)}});
        }
      } else if (family == GraphFamily::Complete ||
                 family == GraphFamily::Cycle) {
        records.push_back({{"family", to_string(family)},
                           {"n", g.size()},
                           {"initial_class", "any"},
                           {"value", asymptotic_qc_distance(family, g.size())}});
      } else {
        // No closed form: fall back to the dynamics, one record per swept
        // model parameter, with the plateau checked at the config's horizon.
        for (const auto& sweep : config.models) {
          if (sweep.tag == "unitary") continue;
          for (double v : sweep.parameters) {
            const NoiseModel model = model_from_tag(sweep.tag, v);
            records.push_back(
                {{"graph", graph_tag(g)},
                 {"n", g.size()},
                 {"initial_class", "any"},
                 {"model", sweep.tag},
                 {"parameter", v},
                 {"value", numerical_asymptote(g, model, InitialClass::All,
                                               config.t_end)}});
          }
        }
      }
    }
    const fs::path file = out_dir / "asymptotes.json";
    write_file(file, records.dump(2) + "\n");
    manifest.extra_files.push_back(file.string());
  }

  if (config.theorem_check) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& g : config.graphs) {
      const Spectrum s = spectral_decompose(g);
      nlohmann::json entry = theorem_check_to_json(
          check_simple_eigenvalue_bound(g, s));
      entry["graph"] = graph_tag(g);
      entry["spectrum"] = spectrum_to_json(s, degeneracy_report(s));
      reports.push_back(std::move(entry));
    }
    const fs::path file = out_dir / "theorem_checks.json";
    write_file(file, reports.dump(2) + "\n");
    manifest.extra_files.push_back(file.string());
  }

  nlohmann::json mj;
  mj["config_hash"] = manifest.config_hash;
  mj["version"] = manifest.version;
  auto& runs = mj["runs"] = nlohmann::json::array();
  for (const auto& r : manifest.runs) {
    runs.push_back({{"file", r.file},
                    {"graph", r.graph_tag},
                    {"model", r.model_tag},
                    {"parameter", r.parameter},
                    {"wall_ms", r.wall_ms}});
  }
  mj["extra_files"] = manifest.extra_files;
  write_file(out_dir / "manifest.json", mj.dump(2) + "\n");
  return manifest;
}

std::string emit_asymptote_table(const std::vector<GraphFamily>& families,
                                 int n_min, int n_max,
                                 const std::string& output_dir) {
  if (families.empty()) {
    throw std::invalid_argument("asymptote table needs at least one family");
  }
  if (n_min > n_max) {
    throw std::invalid_argument("asymptote table needs n_min <= n_max");
  }
  for (GraphFamily family : families) {
    const int min_allowed = family == GraphFamily::Cycle ? 3 : 2;
    if (family == GraphFamily::Custom || family == GraphFamily::Path) {
      throw std::invalid_argument("no closed-form asymptotes for family \"" +
                                  to_string(family) + "\"");
    }
    if (n_min < min_allowed) {
      throw std::invalid_argument("family \"" + to_string(family) +
                                  "\" needs n >= " +
                                  std::to_string(min_allowed));
    }
  }

  fs::path out_dir = output_dir;
  if (const char* env = std::getenv("QCWALK_OUTPUT_DIR");
      env != nullptr && *env != '\0') {
    out_dir = env;
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw std::invalid_argument("cannot create output directory \"" +
                                out_dir.string() + "\": " + ec.message());
  }

  std::string csv = "family,n,value\n";
  char buf[48];
  for (GraphFamily family : families) {
    for (int n = n_min; n <= n_max; ++n) {
      std::snprintf(buf, sizeof(buf), "%s,%d,%.12g\n",
                    to_string(family).c_str(), n,
                    asymptotic_qc_distance(family, n));
      csv += buf;
    }
  }
  const fs::path file = out_dir / "asymptotes.csv";
  write_file(file, csv);
  return file.string();
}

}  // namespace qcwalk
