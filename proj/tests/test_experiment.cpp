#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qcwalk/experiment.hpp"
#include "qcwalk/qc_distance.hpp"
#include "qcwalk/version.hpp"

using namespace qcwalk;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("qcwalk_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

nlohmann::json mini_config_json(const std::string& out_dir) {
  return {
      {"graph", {{"family", "complete"}, {"n", 5}}},
      {"models",
       {{{"model", "intrinsic"}, {"gamma", {0.5, 1.0}}},
        {{"model", "unitary"}}}},
      {"grid", {{"t_end", 5.0}, {"n_points", 11}}},
      {"output", {{"directory", out_dir}}},
  };
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("config parsing") {
  const ExperimentConfig config = config_from_json(mini_config_json("/tmp/x"));
  REQUIRE(config.graphs.size() == 1);
  CHECK(config.graphs[0].family() == GraphFamily::Complete);
  CHECK(config.graphs[0].size() == 5);
  REQUIRE(config.models.size() == 2);
  CHECK(config.models[0].tag == "intrinsic");
  CHECK(config.models[0].parameters == std::vector<double>{0.5, 1.0});
  CHECK(config.models[1].tag == "unitary");
  CHECK(config.t_end == 5.0);
  CHECK(config.n_points == 11);
  CHECK(config.output_dir == "/tmp/x");
  CHECK(config.per_node_curves);       // defaults
  CHECK_FALSE(config.star_class_split);

  nlohmann::json custom = mini_config_json("/tmp/x");
  custom["graph"] = {{"n", 3}, {"edges", {{1, 2}, {2, 3}}}};
  custom["flags"] = {{"theorem_check", true}};
  const ExperimentConfig parsed = config_from_json(custom);
  CHECK(parsed.graphs[0].family() == GraphFamily::Custom);
  CHECK(parsed.theorem_check);
}

TEST_CASE("config validation") {
  auto mutate = [](auto&& edit) {
    nlohmann::json j = mini_config_json("/tmp/x");
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j.erase("graph");
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["models"] = nlohmann::json::array();
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["models"][0]["model"] = "telegraph";
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["models"][0]["gamma"] = -1.0;
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["models"] = {{{"model", "qsw"}, {"p", 1.5}}};
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["models"] = {{{"model", "qsw"}}};  // p missing
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["grid"]["t_end"] = 0.0;
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["grid"]["n_points"] = 1;
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["graph"] = {{"family", "complete"}};  // n missing
                  })),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_config_file("/nonexistent/config.json"),
                  std::invalid_argument);
}

TEST_CASE("run writes curve files with the documented layout") {
  const fs::path dir = fresh_dir("run");
  const ExperimentConfig config = config_from_json(mini_config_json(dir.string()));
  const RunManifest manifest = run_experiment(config);

  REQUIRE(manifest.runs.size() == 3);
  CHECK(manifest.config_hash == config_hash(config));
  const std::vector<std::string> expected = {
      "complete5_intrinsic_gamma0.5.csv", "complete5_intrinsic_gamma1.csv",
      "complete5_unitary.csv"};
  for (const std::string& name : expected) CHECK(fs::exists(dir / name));
  CHECK(fs::exists(dir / "manifest.json"));

  const std::vector<std::string> lines =
      lines_of(read_file(dir / expected[0]));
  REQUIRE(lines.size() == 5 + 11);  // 4 comments + header + data rows
  CHECK(lines[0] == std::string("# qcwalk ") + kVersion + " curve");
  CHECK(lines[1] == "# config: " + manifest.config_hash);
  CHECK(lines[2] == "# graph: complete5");
  CHECK(lines[3] == "# model: intrinsic gamma=0.5");
  CHECK(lines[4] ==
        "t,d_qc,opt_node,f_node_1,f_node_2,f_node_3,f_node_4,f_node_5");

  // The walk starts indistinguishable from its classical counterpart.
  std::istringstream first_row(lines[5]);
  std::string t_field, d_field;
  std::getline(first_row, t_field, ',');
  std::getline(first_row, d_field, ',');
  CHECK(std::stod(t_field) == 0.0);
  CHECK(std::stod(d_field) <= 1e-8);

  const nlohmann::json mj = nlohmann::json::parse(read_file(dir / "manifest.json"));
  CHECK(mj["config_hash"] == manifest.config_hash);
  CHECK(mj["version"] == kVersion);
  CHECK(mj["runs"].size() == 3);

  fs::remove_all(dir);
}

TEST_CASE("identical configs produce byte-identical curves") {
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  run_experiment(config_from_json(mini_config_json(a.string())));
  run_experiment(config_from_json(mini_config_json(b.string())));
  for (const std::string name :
       {"complete5_intrinsic_gamma0.5.csv", "complete5_intrinsic_gamma1.csv",
        "complete5_unitary.csv"}) {
    CHECK(read_file(a / name) == read_file(b / name));
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("environment variable redirects the output directory") {
  const fs::path ignored = fresh_dir("env_ignored");
  const fs::path actual = fresh_dir("env_actual");
  ::setenv("QCWALK_OUTPUT_DIR", actual.string().c_str(), 1);
  run_experiment(config_from_json(mini_config_json(ignored.string())));
  ::unsetenv("QCWALK_OUTPUT_DIR");
  CHECK(fs::exists(actual / "complete5_unitary.csv"));
  CHECK_FALSE(fs::exists(ignored / "complete5_unitary.csv"));
  fs::remove_all(ignored);
  fs::remove_all(actual);
}

TEST_CASE("star runs can split the initial classes") {
  const fs::path dir = fresh_dir("split");
  nlohmann::json j = {
      {"graph", {{"family", "star"}, {"n", 5}}},
      {"models", {{{"model", "intrinsic"}, {"gamma", 1.0}}}},
      {"grid", {{"t_end", 2.0}, {"n_points", 5}}},
      {"output", {{"directory", dir.string()}}},
      {"flags", {{"star_class_split", true}}},
  };
  const RunManifest manifest = run_experiment(config_from_json(j));
  CHECK(fs::exists(dir / "star5_intrinsic_gamma1.csv"));
  CHECK(fs::exists(dir / "star5_intrinsic_gamma1_central.csv"));
  CHECK(fs::exists(dir / "star5_intrinsic_gamma1_external.csv"));
  CHECK(manifest.extra_files.size() == 2);
  const std::vector<std::string> central =
      lines_of(read_file(dir / "star5_intrinsic_gamma1_central.csv"));
  CHECK(central[3] == "# model: intrinsic gamma=1 class=central");
  fs::remove_all(dir);
}

TEST_CASE("side tables: asymptotes and theorem checks") {
  const fs::path dir = fresh_dir("tables");
  nlohmann::json j = {
      {"graphs",
       {{{"family", "complete"}, {"n", 5}}, {{"family", "cycle"}, {"n", 5}}}},
      {"models", {{{"model", "intrinsic"}, {"gamma", 1.0}}}},
      {"grid", {{"t_end", 2.0}, {"n_points", 5}}},
      {"output", {{"directory", dir.string()}}},
      {"flags", {{"asymptote_table", true}, {"theorem_check", true}}},
  };
  run_experiment(config_from_json(j));

  const nlohmann::json table =
      nlohmann::json::parse(read_file(dir / "asymptotes.json"));
  REQUIRE(table.is_array());
  REQUIRE(table.size() == 2);
  CHECK(table[0]["family"] == "complete");
  CHECK(table[0]["n"] == 5);
  CHECK(table[0]["value"].get<double>() == doctest::Approx(0.64).epsilon(1e-12));

  const nlohmann::json checks =
      nlohmann::json::parse(read_file(dir / "theorem_checks.json"));
  REQUIRE(checks.is_array());
  REQUIRE(checks.size() == 2);
  for (const auto& entry : checks) {
    CHECK(entry["holds"].get<bool>());
    CHECK(entry["simple_count"].get<int>() <= entry["best_bound"].get<int>());
  }
  CHECK(checks[1]["automorphism_count"] == 10);  // dihedral group of C5
  fs::remove_all(dir);
}

TEST_CASE("asymptote table over whole families") {
  const fs::path dir = fresh_dir("table_csv");
  const std::string file = emit_asymptote_table(
      {GraphFamily::Complete, GraphFamily::Star, GraphFamily::Cycle}, 3, 10,
      dir.string());
  const std::vector<std::string> lines = lines_of(read_file(file));
  REQUIRE(lines.size() == 1 + 3 * 8);
  CHECK(lines[0] == "family,n,value");
  CHECK(lines[3] == "complete,5,0.64");

  auto value_of = [&](const std::string& family, int n) {
    const std::string prefix = family + "," + std::to_string(n) + ",";
    for (const std::string& line : lines) {
      if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
    }
    REQUIRE(false);
    return 0.0;
  };
  CHECK(value_of("star", 5) == doctest::Approx(value_of("complete", 5)).epsilon(1e-14));
  CHECK(value_of("cycle", 6) ==
        doctest::Approx(asymptotic_qc_distance(GraphFamily::Cycle, 6)).epsilon(1e-12));

  CHECK_THROWS_AS(
      emit_asymptote_table({GraphFamily::Cycle}, 2, 5, dir.string()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      emit_asymptote_table({GraphFamily::Path}, 3, 5, dir.string()),
      std::invalid_argument);
  CHECK_THROWS_AS(emit_asymptote_table({}, 3, 5, dir.string()),
                  std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("graph tags") {
  CHECK(graph_tag(Graph::complete(5)) == "complete5");
  CHECK(graph_tag(Graph::star(7)) == "star7");
  const Graph c1 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  const Graph c2 = Graph::from_edges(4, {{3, 4}, {1, 2}, {2, 3}});  // same set
  const Graph c3 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(graph_tag(c1) == graph_tag(c2));
  CHECK(graph_tag(c1) != graph_tag(c3));
  CHECK(graph_tag(c1).rfind("custom4_", 0) == 0);
  CHECK(graph_tag(c1).size() == std::string("custom4_").size() + 8);
}

TEST_CASE("hashing") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);

  const ExperimentConfig base = config_from_json(mini_config_json("/tmp/a"));
  const std::string h = config_hash(base);
  CHECK(h.size() == 16);
  CHECK(h == config_hash(base));

  // Output location and worker count are presentation, not content.
  ExperimentConfig moved = base;
  moved.output_dir = "/tmp/elsewhere";
  moved.threads = 3;
  CHECK(config_hash(moved) == h);

  ExperimentConfig longer = base;
  longer.t_end = 6.0;
  CHECK(config_hash(longer) != h);
}

}  // TEST_SUITE
