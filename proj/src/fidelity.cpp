#include "qcwalk/fidelity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcwalk/errors.hpp"

namespace qcwalk {

namespace {

// Hermitian square root with negative eigenvalues clamped at zero; guards
// against -1e-16 roundoff in near-singular states.
Eigen::MatrixXcd psd_sqrt(const DensityMatrix& m) {
  Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed in fidelity square root");
  }
  const Eigen::VectorXd roots =
      solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() *
         roots.cast<std::complex<double>>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("fidelity needs states of equal dimension");
  }
  const Eigen::MatrixXcd sqrt_rho = psd_sqrt(hermitize(rho));
  const Eigen::MatrixXcd inner =
      hermitize(sqrt_rho * hermitize(sigma) * sqrt_rho);

  Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(inner);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed in fidelity trace");
  }
  const double trace_sqrt =
      solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(trace_sqrt * trace_sqrt, 0.0, 1.0);
}

}  // namespace qcwalk
