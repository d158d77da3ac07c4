#include "qcwalk/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qcwalk/errors.hpp"

namespace qcwalk {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Eigen::MatrixXcd eigenbasis_unitary(const Spectrum& s, double t) {
  const Eigen::VectorXcd phases =
      (-kI * t * s.eigenvalues.cast<std::complex<double>>().array()).exp();
  return s.eigenvectors.cast<std::complex<double>>() * phases.asDiagonal() *
         s.eigenvectors.transpose().cast<std::complex<double>>();
}

}  // namespace

Eigen::MatrixXd classical_propagator(const Spectrum& spectrum, double t) {
  if (t < 0.0) {
    throw std::invalid_argument("classical propagator needs t >= 0, got " +
                                std::to_string(t));
  }
  const Eigen::VectorXd decay = (-t * spectrum.eigenvalues.array()).exp();
  Eigen::MatrixXd p = spectrum.eigenvectors * decay.asDiagonal() *
                      spectrum.eigenvectors.transpose();
  // Roundoff can push entries slightly outside [0,1]; clamp on output and
  // renormalize each column.
  p = p.cwiseMax(0.0).cwiseMin(1.0);
  for (int j = 0; j < p.cols(); ++j) {
    const double sum = p.col(j).sum();
    if (sum > 0.0) p.col(j) /= sum;
  }
  return p;
}

ClassicalState classical_evolve(const Spectrum& spectrum, int node, double t) {
  const int n = spectrum.size();
  if (node < 1 || node > n) {
    throw std::invalid_argument("node " + std::to_string(node) +
                                " out of range 1.." + std::to_string(n));
  }
  return classical_propagator(spectrum, t).col(node - 1);
}

DensityMatrix diagonal_state(const ClassicalState& probs) {
  return probs.cast<std::complex<double>>().asDiagonal();
}

DensityMatrix unitary_evolve(const Spectrum& spectrum,
                             const DensityMatrix& rho0, double t) {
  const Eigen::MatrixXcd u = eigenbasis_unitary(spectrum, t);
  return hermitize(u * rho0 * u.adjoint());
}

DensityMatrix intrinsic_evolve(const Spectrum& spectrum,
                               const DensityMatrix& rho0, double gamma,
                               double t) {
  if (t < 0.0 || gamma < 0.0) {
    throw std::invalid_argument("intrinsic evolution needs t, gamma >= 0");
  }
  const Eigen::MatrixXcd v =
      spectrum.eigenvectors.cast<std::complex<double>>();
  Eigen::MatrixXcd in_basis = v.adjoint() * rho0 * v;
  const int n = spectrum.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double gap = spectrum.eigenvalues(a) - spectrum.eigenvalues(b);
      in_basis(a, b) *=
          std::exp(-kI * gap * t - 0.5 * gamma * gap * gap * t);
    }
  }
  return hermitize(v * in_basis * v.adjoint());
}

DensityMatrix intrinsic_asymptotic(const Spectrum& spectrum,
                                   const DensityMatrix& rho0,
                                   double eps_deg) {
  const DegeneracyReport report = degeneracy_report(spectrum, eps_deg);
  const int n = spectrum.size();
  std::vector<int> class_of(n, 0);
  for (std::size_t c = 0; c < report.classes.size(); ++c)
    for (int idx : report.classes[c]) class_of[idx] = static_cast<int>(c);

  const Eigen::MatrixXcd v =
      spectrum.eigenvectors.cast<std::complex<double>>();
  Eigen::MatrixXcd in_basis = v.adjoint() * rho0 * v;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (class_of[a] != class_of[b]) in_basis(a, b) = 0.0;
  return hermitize(v * in_basis * v.adjoint());
}

DensityMatrix intrinsic_evolve_quadrature(const Spectrum& spectrum,
                                          const DensityMatrix& rho0,
                                          double gamma, double t,
                                          int n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("quadrature needs n_points >= 2, got " +
                                std::to_string(n_points));
  }
  if (t < 0.0 || gamma < 0.0) {
    throw std::invalid_argument("quadrature needs t, gamma >= 0");
  }
  Eigen::VectorXd nodes, weights;
  gauss_hermite(n_points, nodes, weights);

  // rho(t) = Int dy g(y|0,sigma) U(t+y) rho0 U^dag(t+y), sigma^2 = gamma t;
  // substituting y = sqrt(2) sigma x turns the Gaussian into the
  // Gauss-Hermite weight e^{-x^2} / sqrt(pi).
  const double sigma = std::sqrt(gamma * t);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  DensityMatrix acc = DensityMatrix::Zero(spectrum.size(), spectrum.size());
  for (int i = 0; i < n_points; ++i) {
    const double shift = std::sqrt(2.0) * sigma * nodes(i);
    const Eigen::MatrixXcd u = eigenbasis_unitary(spectrum, t + shift);
    acc += (weights(i) * inv_sqrt_pi) * (u * rho0 * u.adjoint());
  }
  return hermitize(acc);
}

void gauss_hermite(int n_points, Eigen::VectorXd& nodes,
                   Eigen::VectorXd& weights) {
  if (n_points < 1) {
    throw std::invalid_argument("gauss_hermite needs n_points >= 1");
  }
  // Golub-Welsch: Jacobi matrix of the Hermite recurrence has zero diagonal
  // and off-diagonals sqrt(k/2); nodes are its eigenvalues, weights are
  // sqrt(pi) times the squared first components of the eigenvectors.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n_points, n_points);
  for (int k = 1; k < n_points; ++k) {
    const double b = std::sqrt(0.5 * k);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Gauss-Hermite Jacobi eigensolve failed");
  }
  nodes = solver.eigenvalues();
  weights = std::sqrt(M_PI) *
            solver.eigenvectors().row(0).array().square().matrix();
}

}  // namespace qcwalk
