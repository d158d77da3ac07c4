#include "qcwalk/qc_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qcwalk/density.hpp"
#include "qcwalk/dynamics.hpp"
#include "qcwalk/errors.hpp"
#include "qcwalk/fidelity.hpp"
#include "qcwalk/liouvillian.hpp"
#include "qcwalk/spectrum.hpp"

namespace qcwalk {

namespace {

bool is_star(const Graph& g) { return g.family() == GraphFamily::Star; }

// 1-based nodes over which the minimization runs for a class.
std::vector<int> class_nodes(const Graph& g, InitialClass cls) {
  if (cls == InitialClass::All) {
    std::vector<int> nodes(g.size());
    std::iota(nodes.begin(), nodes.end(), 1);
    return nodes;
  }
  if (!is_star(g)) {
    throw std::invalid_argument(
        "central/external initial classes only apply to star graphs");
  }
  if (cls == InitialClass::Central) return {1};
  std::vector<int> nodes(g.size() - 1);
  std::iota(nodes.begin(), nodes.end(), 2);
  return nodes;
}

// Representative (1-based) for each node under the family's symmetry group.
std::vector<int> rep_of_node(const Graph& g) {
  std::vector<int> rep(g.size());
  switch (g.family()) {
    case GraphFamily::Complete:
    case GraphFamily::Cycle:
      std::fill(rep.begin(), rep.end(), 1);
      break;
    case GraphFamily::Star:
      rep[0] = 1;
      std::fill(rep.begin() + 1, rep.end(), 2);
      break;
    case GraphFamily::Path:
    case GraphFamily::Custom:
      std::iota(rep.begin(), rep.end(), 1);
      break;
  }
  return rep;
}

}  // namespace

std::vector<int> representative_nodes(const Graph& g, InitialClass cls) {
  const std::vector<int> nodes = class_nodes(g, cls);
  const std::vector<int> rep = rep_of_node(g);
  std::vector<int> out;
  for (int node : nodes) {
    const int r = rep[node - 1];
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

std::vector<double> QcDistanceCurve::times() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.t);
  return out;
}

std::vector<double> QcDistanceCurve::values() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.d_qc);
  return out;
}

QcDistanceCurve qc_distance_curve(const Graph& g, const NoiseModel& model,
                                  const std::vector<double>& times,
                                  InitialClass cls) {
  validate(model);
  const std::vector<int> minimized = class_nodes(g, cls);
  const std::vector<int> rep = rep_of_node(g);
  // Evolve every representative (not only the class's): node_fidelity
  // reports all N nodes regardless of the minimization class.
  const std::vector<int> reps = representative_nodes(g, InitialClass::All);

  const Spectrum spectrum = spectral_decompose(g);
  const int n = g.size();
  const std::size_t n_times = times.size();

  // Quantum trajectories per representative node.
  std::vector<std::vector<DensityMatrix>> quantum(reps.size());
  const bool closed_form = std::holds_alternative<UnitaryModel>(model) ||
                           std::holds_alternative<IntrinsicModel>(model);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const DensityMatrix rho0 = localized_state(n, reps[r]);
    if (closed_form) {
      quantum[r].reserve(n_times);
      for (double t : times) {
        if (const auto* m = std::get_if<IntrinsicModel>(&model)) {
          quantum[r].push_back(intrinsic_evolve(spectrum, rho0, m->gamma, t));
        } else {
          quantum[r].push_back(unitary_evolve(spectrum, rho0, t));
        }
      }
    } else {
      quantum[r] = lindblad_evolve(g, model, rho0, times).states;
    }
  }

  QcDistanceCurve curve;
  curve.samples.reserve(n_times);
  for (std::size_t i = 0; i < n_times; ++i) {
    const Eigen::MatrixXd propagator = classical_propagator(spectrum, times[i]);

    QcSample sample;
    sample.t = times[i];
    sample.node_fidelity.resize(n);
    std::vector<double> rep_fidelity(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r) {
      rep_fidelity[r] = fidelity(diagonal_state(propagator.col(reps[r] - 1)),
                                 quantum[r][i]);
    }
    for (int node = 1; node <= n; ++node) {
      const auto r = std::find(reps.begin(), reps.end(), rep[node - 1]);
      sample.node_fidelity(node - 1) =
          rep_fidelity[static_cast<std::size_t>(r - reps.begin())];
    }

    double min_f = 2.0;
    for (int node : minimized) {
      if (sample.node_fidelity(node - 1) < min_f) {
        min_f = sample.node_fidelity(node - 1);
        sample.opt_node = node;
      }
    }
    sample.d_qc = std::clamp(1.0 - min_f, 0.0, 1.0);
    curve.samples.push_back(std::move(sample));
  }
  return curve;
}

QcSample qc_distance_at(const Graph& g, const NoiseModel& model, double t,
                        InitialClass cls) {
  if (t < 0.0) {
    throw std::invalid_argument("qc_distance_at needs t >= 0");
  }
  return qc_distance_curve(g, model, {t}, cls).samples.front();
}

double asymptotic_qc_distance(GraphFamily family, int n, InitialClass cls) {
  const double nd = n;
  switch (family) {
    case GraphFamily::Complete: {
      if (n < 2) throw std::invalid_argument("complete asymptote needs n >= 2");
      const double s = 1.0 + std::sqrt(nd - 1.0);
      return 1.0 - s * s / (nd * nd);
    }
    case GraphFamily::Cycle: {
      if (n < 3) throw std::invalid_argument("cycle asymptote needs n >= 3");
      const double s = (n % 2 == 0) ? 2.0 + (nd - 2.0) / std::sqrt(2.0)
                                    : 1.0 + (nd - 1.0) / std::sqrt(2.0);
      return 1.0 - s * s / (nd * nd);
    }
    case GraphFamily::Star: {
      if (n < 2) throw std::invalid_argument("star asymptote needs n >= 2");
      if (cls == InitialClass::External) {
        const double s =
            std::sqrt(nd * (nd - 2.0)) + std::sqrt(nd - 1.0) + 1.0;
        return 1.0 - s * s / (nd * nd * (nd - 1.0));
      }
      // Central start, and the overall minimum, match the complete graph.
      return asymptotic_qc_distance(GraphFamily::Complete, n);
    }
    case GraphFamily::Path:
    case GraphFamily::Custom:
      break;
  }
  throw std::invalid_argument(
      "no closed-form asymptote for family \"" + to_string(family) +
      "\"; use numerical_asymptote");
}

double numerical_asymptote(const Graph& g, const NoiseModel& model,
                           InitialClass cls, double t_max, double tol) {
  validate(model);
  if (const auto* m = std::get_if<IntrinsicModel>(&model)) {
    if (m->gamma <= 0.0) {
      throw std::invalid_argument(
          "intrinsic asymptote needs gamma > 0 (gamma = 0 never decoheres)");
    }
    const Spectrum spectrum = spectral_decompose(g);
    const DensityMatrix mixed = maximally_mixed(g.size());
    double min_f = 2.0;
    for (int node : representative_nodes(g, cls)) {
      const DensityMatrix limit = intrinsic_asymptotic(
          spectrum, localized_state(g.size(), node));
      min_f = std::min(min_f, fidelity(limit, mixed));
    }
    return std::clamp(1.0 - min_f, 0.0, 1.0);
  }

  // No closed-form limit: evaluate at t_max and insist the curve has
  // flattened over the trailing 10% window.
  const QcDistanceCurve tail =
      qc_distance_curve(g, model, {0.9 * t_max, t_max}, cls);
  const double before = tail.samples[0].d_qc;
  const double at_end = tail.samples[1].d_qc;
  if (std::abs(at_end - before) >= tol) {
    throw NumericalError(
        "asymptote plateau check failed for " + model_tag(model) + " on " +
        to_string(g.family()) + std::to_string(g.size()) +
        ": D(" + std::to_string(0.9 * t_max) + ") = " +
        std::to_string(before) + ", D(" + std::to_string(t_max) + ") = " +
        std::to_string(at_end));
  }
  return at_end;
}

}  // namespace qcwalk
