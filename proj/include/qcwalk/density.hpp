#pragma once

#include <Eigen/Dense>

#include "qcwalk/tolerances.hpp"

namespace qcwalk {

using DensityMatrix = Eigen::MatrixXcd;

/// |j><j| for 1-based node j of an n-node graph.
DensityMatrix localized_state(int n, int node);

/// I/n, the unique stationary state shared by all three noise channels on the
/// graphs studied here.
DensityMatrix maximally_mixed(int n);

/// (r + r^dag)/2. Evolution steps re-symmetrize with this to stop Hermiticity
/// drift from compounding.
DensityMatrix hermitize(const DensityMatrix& rho);

/// Tr r^2, real part (r is hermitized first).
double purity(const DensityMatrix& rho);

/// Throws NumericalError unless r is Hermitian within eps_state, has unit
/// trace within eps_trace, and has spectrum >= -eps_psd.
void require_valid_state(const DensityMatrix& rho,
                         double eps_trace = kTraceTol,
                         double eps_psd = kPsdTol);

}  // namespace qcwalk
