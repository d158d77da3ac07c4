#pragma once

#include "qcwalk/density.hpp"

namespace qcwalk {

/// Uhlmann fidelity F(r, s) = [Tr sqrt(sqrt(r) s sqrt(r))]^2, clamped to
/// [0, 1]. Inputs are hermitized and negative eigenvalues within kPsdTol are
/// floored at zero before the square roots.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qcwalk
