#include "qcwalk/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "qcwalk/errors.hpp"

namespace qcwalk {

Spectrum spectral_decompose(const Eigen::MatrixXd& laplacian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver failed on a " +
                         std::to_string(laplacian.rows()) + "x" +
                         std::to_string(laplacian.cols()) + " Laplacian");
  }
  Spectrum s;
  s.eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();

  const double lmax = std::max(1.0, s.eigenvalues(s.size() - 1));
  s.fiedler_value = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    if (s.eigenvalues(i) > kDegeneracyTol * lmax) {
      s.fiedler_value = s.eigenvalues(i);
      break;
    }
  }
  return s;
}

DegeneracyReport degeneracy_report(const Spectrum& spectrum, double eps_deg) {
  DegeneracyReport report;
  const int n = spectrum.size();
  if (n == 0) return report;

  const double scale = std::max(1.0, spectrum.eigenvalues(n - 1));
  const double tol = eps_deg * scale;

  // Eigenvalues ascend, so equal-value classes are contiguous runs.
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n ||
        spectrum.eigenvalues(i) - spectrum.eigenvalues(i - 1) > tol) {
      std::vector<int> cls;
      for (int k = start; k < i; ++k) cls.push_back(k);
      report.classes.push_back(std::move(cls));
      start = i;
    }
  }

  for (const auto& cls : report.classes) {
    if (cls.size() == 1) {
      ++report.simple_count;
    } else {
      for (int a : cls)
        for (int b : cls)
          if (a != b) report.degenerate_pairs.emplace_back(a, b);
    }
  }
  return report;
}

double min_positive_gap(const Spectrum& spectrum, double eps_deg) {
  const int n = spectrum.size();
  const double scale = std::max(1.0, spectrum.eigenvalues(n - 1));
  const double tol = eps_deg * scale;

  double best = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double gap =
          std::abs(spectrum.eigenvalues(b) - spectrum.eigenvalues(a));
      if (gap > tol && gap < best) best = gap;
    }
  }
  return best;
}

}  // namespace qcwalk
