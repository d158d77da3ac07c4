#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qcwalk/density.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/noise_model.hpp"

namespace qcwalk {

/// Vectorized generator acting on column-major vec(r), dimension n^2 x n^2:
///   Lv = -i[(I (x) L) - (L^T (x) I)]
///      + sum_k g_k [ conj(O_k) (x) O_k
///                    - (1/2) I (x) (O_k^dag O_k)
///                    - (1/2) (O_k^dag O_k)^T (x) I ].
struct Liouvillian {
  Eigen::MatrixXcd matrix;
  int n = 0;  // Hilbert-space dimension
};

Liouvillian build_liouvillian(const Graph& g, const NoiseModel& model);

/// One application of the generator without forming the n^2 x n^2 matrix.
/// Haken-Strobl uses the Hadamard form -i[L,r] - gamma (J - I) o r; the other
/// models assemble commutator plus dissipator directly from n x n products.
DensityMatrix apply_generator(const Graph& g, const NoiseModel& model,
                              const DensityMatrix& rho);

/// Sampled solution of dr/dt = Lv r.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
};

/// Evolve by exponentiating the vectorized generator. Uniform grids reuse a
/// single step propagator e^{Lv dt}; arbitrary grids cache e^{Lv g} per
/// distinct gap g. Each sampled state is re-symmetrized and validated
/// (trace within kTraceTol, spectrum >= -kPsdTol); violations throw
/// NumericalError.
Trajectory lindblad_evolve(const Graph& g, const NoiseModel& model,
                           const DensityMatrix& rho0,
                           const std::vector<double>& times);

/// || Lv vec(r) ||_inf — how far r is from annihilating the generator. Used
/// to certify asymptotic states; I/n gives zero (to rounding) for all three
/// noise models on these graphs.
double stationary_residual(const Graph& g, const NoiseModel& model,
                           const DensityMatrix& rho);

}  // namespace qcwalk
