#include "qcwalk/density.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "qcwalk/errors.hpp"

namespace qcwalk {

DensityMatrix localized_state(int n, int node) {
  if (node < 1 || node > n) {
    throw std::invalid_argument("node " + std::to_string(node) +
                                " out of range 1.." + std::to_string(n));
  }
  DensityMatrix rho = DensityMatrix::Zero(n, n);
  rho(node - 1, node - 1) = 1.0;
  return rho;
}

DensityMatrix maximally_mixed(int n) {
  return DensityMatrix::Identity(n, n) / static_cast<double>(n);
}

DensityMatrix hermitize(const DensityMatrix& rho) {
  return 0.5 * (rho + rho.adjoint());
}

double purity(const DensityMatrix& rho) {
  const DensityMatrix h = hermitize(rho);
  return (h * h).trace().real();
}

void require_valid_state(const DensityMatrix& rho, double eps_trace,
                         double eps_psd) {
  const double herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kStateTol) {
    throw NumericalError("state lost Hermiticity: |rho - rho^dag|_max = " +
                         std::to_string(herm_dev));
  }
  const double trace_dev = std::abs(rho.trace().real() - 1.0) +
                           std::abs(rho.trace().imag());
  if (trace_dev > eps_trace) {
    throw NumericalError("state lost unit trace: |Tr rho - 1| = " +
                         std::to_string(trace_dev));
  }
  Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(hermitize(rho));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed during state validation");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -eps_psd) {
    throw NumericalError("state lost positivity: min eigenvalue = " +
                         std::to_string(min_eig));
  }
}

}  // namespace qcwalk
