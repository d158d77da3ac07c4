#pragma once

// Numerical tolerances used across the library. Values sit well above
// double-precision noise for the supported problem sizes (N <= 64) and
// below any physically meaningful signal.

namespace qcwalk {

// Eigendecomposition residuals (reconstruction, orthonormality).
inline constexpr double kSpectralTol = 1e-10;

// Relative threshold for treating two Laplacian eigenvalues as equal,
// scaled by max(1, lambda_max).
inline constexpr double kDegeneracyTol = 1e-9;

// Hermiticity / unit-trace deviation allowed in a density matrix.
inline constexpr double kStateTol = 1e-8;

// Most negative eigenvalue a density matrix may have before it is
// considered invalid.
inline constexpr double kPsdTol = 1e-8;

// Trace drift along an integrated trajectory that triggers a
// numerical-failure diagnostic.
inline constexpr double kTraceTol = 1e-6;

}  // namespace qcwalk
