#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/tolerances.hpp"

namespace qcwalk {

/// Eigendecomposition of a graph Laplacian. Eigenvalues ascend; column i of
/// `eigenvectors` belongs to eigenvalues[i]. Any orthonormal basis of a
/// degenerate eigenspace is acceptable: downstream maps are covariant under
/// rotations inside a block.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  double fiedler_value = 0.0;   // smallest strictly positive eigenvalue

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

Spectrum spectral_decompose(const Eigen::MatrixXd& laplacian);

inline Spectrum spectral_decompose(const Graph& g) {
  return spectral_decompose(g.laplacian());
}

/// Partition of eigenvalue indices (0-based, ascending order) into
/// equal-value classes under |l_n - l_p| <= eps * max(1, l_max).
struct DegeneracyReport {
  std::vector<std::vector<int>> classes;
  int simple_count = 0;
  std::vector<std::pair<int, int>> degenerate_pairs;  // ordered, n != p

  bool has_degeneracy() const { return !degenerate_pairs.empty(); }
};

DegeneracyReport degeneracy_report(const Spectrum& spectrum,
                                   double eps_deg = kDegeneracyTol);

/// Smallest nonzero |l_n - l_p| over all eigenvalue pairs, with the zero
/// threshold taken from the degeneracy classification. Governs the slowest
/// coherence decay under eigenbasis dephasing.
double min_positive_gap(const Spectrum& spectrum,
                        double eps_deg = kDegeneracyTol);

}  // namespace qcwalk
