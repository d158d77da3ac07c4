#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "qcwalk/automorphism.hpp"
#include "qcwalk/density.hpp"
#include "qcwalk/dynamics.hpp"
#include "qcwalk/fidelity.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/liouvillian.hpp"
#include "qcwalk/qc_distance.hpp"
#include "qcwalk/spectrum.hpp"
#include "qcwalk/version.hpp"

namespace py = pybind11;
using namespace qcwalk;

namespace {

InitialClass class_from_string(const std::string& name) {
  if (name == "all") return InitialClass::All;
  if (name == "central") return InitialClass::Central;
  if (name == "external") return InitialClass::External;
  throw std::invalid_argument(
      "initial_class must be \"all\", \"central\" or \"external\"");
}

std::vector<DensityMatrix> evolve_states(const Graph& g, const NoiseModel& model,
                                         int node,
                                         const std::vector<double>& times) {
  const DensityMatrix rho0 = localized_state(g.size(), node);
  if (std::holds_alternative<UnitaryModel>(model) ||
      std::holds_alternative<IntrinsicModel>(model)) {
    const Spectrum s = spectral_decompose(g);
    std::vector<DensityMatrix> states;
    states.reserve(times.size());
    for (double t : times) {
      if (const auto* m = std::get_if<IntrinsicModel>(&model)) {
        states.push_back(intrinsic_evolve(s, rho0, m->gamma, t));
      } else {
        states.push_back(unitary_evolve(s, rho0, t));
      }
    }
    return states;
  }
  return lindblad_evolve(g, model, rho0, times).states;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Continuous-time quantum walks under decoherence: graph spectra, "
      "Lindblad dynamics, and the fidelity-based quantum-classical distance.";
  m.attr("__version__") = kVersion;

  py::class_<Graph>(m, "Graph")
      .def_static("complete", &Graph::complete, py::arg("n"))
      .def_static("cycle", &Graph::cycle, py::arg("n"))
      .def_static("star", &Graph::star, py::arg("n"))
      .def_static("path", &Graph::path, py::arg("n"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly(
          "family", [](const Graph& g) { return to_string(g.family()); })
      .def_property_readonly("edges", &Graph::edges)
      .def("degree", &Graph::degree, py::arg("node"))
      .def("adjacency", &Graph::adjacency)
      .def("laplacian", &Graph::laplacian)
      .def("__repr__", [](const Graph& g) {
        return "<qcwalk.Graph " + to_string(g.family()) +
               ", n=" + std::to_string(g.size()) + ">";
      });

  m.def(
      "spectrum",
      [](const Graph& g) {
        const Spectrum s = spectral_decompose(g);
        const DegeneracyReport d = degeneracy_report(s);
        py::dict out;
        out["eigenvalues"] = s.eigenvalues;
        out["eigenvectors"] = s.eigenvectors;
        out["fiedler_value"] = s.fiedler_value;
        out["classes"] = d.classes;
        out["simple_count"] = d.simple_count;
        out["degenerate"] = d.has_degeneracy();
        return out;
      },
      py::arg("graph"),
      "Laplacian eigendecomposition with the degeneracy-class report.");

  m.def("fidelity", &fidelity, py::arg("rho"), py::arg("sigma"),
        "Uhlmann fidelity of two density matrices, clamped to [0, 1].");

  m.def(
      "classical_evolve",
      [](const Graph& g, int node, double t) {
        return classical_evolve(spectral_decompose(g), node, t);
      },
      py::arg("graph"), py::arg("node"), py::arg("t"),
      "CTRW occupation probabilities from a walker localized at `node`.");

  m.def(
      "evolve",
      [](const Graph& g, const std::string& model, int node,
         const std::vector<double>& times, double parameter) {
        return evolve_states(g, model_from_tag(model, parameter), node, times);
      },
      py::arg("graph"), py::arg("model"), py::arg("node"), py::arg("times"),
      py::arg("parameter") = 0.0,
      "Density matrices at the requested times for a walker started at "
      "`node`. `model` is unitary | intrinsic | haken_strobl | qsw; the "
      "parameter is gamma or p.");

  m.def(
      "qc_distance_curve",
      [](const Graph& g, const std::string& model,
         const std::vector<double>& times, double parameter,
         const std::string& initial_class) {
        const QcDistanceCurve curve =
            qc_distance_curve(g, model_from_tag(model, parameter), times,
                              class_from_string(initial_class));
        const Eigen::Index n_times = curve.samples.size();
        const Eigen::Index n = g.size();
        Eigen::VectorXd t(n_times), d(n_times);
        Eigen::VectorXi opt(n_times);
        Eigen::MatrixXd node_fidelity(n_times, n);
        for (Eigen::Index i = 0; i < n_times; ++i) {
          t(i) = curve.samples[i].t;
          d(i) = curve.samples[i].d_qc;
          opt(i) = curve.samples[i].opt_node;
          node_fidelity.row(i) = curve.samples[i].node_fidelity.transpose();
        }
        py::dict out;
        out["t"] = t;
        out["d_qc"] = d;
        out["opt_node"] = opt;
        out["node_fidelity"] = node_fidelity;
        return out;
      },
      py::arg("graph"), py::arg("model"), py::arg("times"),
      py::arg("parameter") = 0.0, py::arg("initial_class") = "all",
      "Quantum-classical distance 1 - min_j F_j over a time grid; returns "
      "arrays t, d_qc, opt_node and the per-node fidelity matrix.");

  m.def(
      "asymptotic_qc_distance",
      [](const std::string& family, int n, const std::string& initial_class) {
        return asymptotic_qc_distance(family_from_string(family), n,
                                      class_from_string(initial_class));
      },
      py::arg("family"), py::arg("n"), py::arg("initial_class") = "all",
      "Closed-form late-time distance under intrinsic decoherence.");

  m.def(
      "numerical_asymptote",
      [](const Graph& g, const std::string& model, double parameter,
         const std::string& initial_class, double t_max, double tol) {
        return numerical_asymptote(g, model_from_tag(model, parameter),
                                   class_from_string(initial_class), t_max,
                                   tol);
      },
      py::arg("graph"), py::arg("model"), py::arg("parameter") = 0.0,
      py::arg("initial_class") = "all", py::arg("t_max") = 200.0,
      py::arg("tol") = 1e-3,
      "Late-time distance from the dynamics (plateau-checked for "
      "haken_strobl/qsw, exact projection for intrinsic).");

  m.def(
      "theorem_check",
      [](const Graph& g, int max_n) {
        const TheoremCheck check =
            check_simple_eigenvalue_bound(g, spectral_decompose(g), max_n);
        std::vector<int> best(check.best_element.size());
        for (std::size_t i = 0; i < best.size(); ++i)
          best[i] = check.best_element[i] + 1;
        py::dict out;
        out["simple_count"] = check.simple_count;
        out["automorphism_count"] = check.automorphism_count;
        out["best_bound"] = check.best_bound;
        out["best_element"] = best;
        out["min_margin"] = check.min_margin;
        out["holds"] = check.holds;
        return out;
      },
      py::arg("graph"), py::arg("max_n") = 10,
      "Verify that every automorphism's odd/even cycle counts bound the "
      "number of simple Laplacian eigenvalues.");
}
