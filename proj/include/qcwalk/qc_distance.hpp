#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/noise_model.hpp"

namespace qcwalk {

/// Which localized initial states enter the minimization. Central/External
/// refine star graphs (node 1 = hub); on other graphs only All is meaningful.
enum class InitialClass { All, Central, External };

/// 1-based nodes whose localized states must be evolved explicitly; the rest
/// follow by symmetry. Complete/cycle collapse to {1}, star to {1, 2}
/// (center + one leaf), path/custom keep every node.
std::vector<int> representative_nodes(const Graph& g,
                                      InitialClass cls = InitialClass::All);

/// One time point of the QC-distance: d_qc = 1 - min_j F_j with the argmin
/// node; node_fidelity holds F_j for every node (symmetry classes share their
/// representative's value). Ties go to the lowest node label.
struct QcSample {
  double t = 0.0;
  double d_qc = 0.0;
  int opt_node = 1;
  Eigen::VectorXd node_fidelity;
};

struct QcDistanceCurve {
  std::vector<QcSample> samples;

  std::vector<double> times() const;
  std::vector<double> values() const;
};

/// D_QC over an ascending grid. Intrinsic and unitary models use their closed
/// forms per time; Haken-Strobl/QSW integrate one trajectory per
/// representative node over the whole grid.
QcDistanceCurve qc_distance_curve(const Graph& g, const NoiseModel& model,
                                  const std::vector<double>& times,
                                  InitialClass cls = InitialClass::All);

QcSample qc_distance_at(const Graph& g, const NoiseModel& model, double t,
                        InitialClass cls = InitialClass::All);

/// Closed-form t -> infinity value of the intrinsic-decoherence QC-distance:
///   complete:       1 - (1 + sqrt(N-1))^2 / N^2
///   cycle (even N): 1 - (2 + (N-2)/sqrt(2))^2 / N^2
///   cycle (odd N):  1 - (1 + (N-1)/sqrt(2))^2 / N^2
///   star central (= star overall): the complete-graph expression
///   star external:  1 - (sqrt(N(N-2)) + sqrt(N-1) + 1)^2 / (N^2 (N-1))
/// Throws std::invalid_argument for other families or undersized n.
double asymptotic_qc_distance(GraphFamily family, int n,
                              InitialClass cls = InitialClass::All);

/// Late-time limit computed from the dynamics. Intrinsic evaluates
/// 1 - min_j F(E_inf[rho_j], I/N) exactly via the asymptotic map; unitary,
/// Haken-Strobl and QSW return D(t_max) after verifying the plateau
/// |D(t_max) - D(0.9 t_max)| < tol (NumericalError otherwise).
double numerical_asymptote(const Graph& g, const NoiseModel& model,
                           InitialClass cls = InitialClass::All,
                           double t_max = 200.0, double tol = 1e-3);

}  // namespace qcwalk
