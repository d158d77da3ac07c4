#pragma once

#include <Eigen/Dense>

#include "qcwalk/density.hpp"
#include "qcwalk/spectrum.hpp"

namespace qcwalk {

/// Occupation probabilities of a classical walker.
using ClassicalState = Eigen::VectorXd;

/// e^{-Lt}: column j holds the CTRW occupation probabilities p_kj(t) for a
/// walker started at node j+1. Roundoff negatives are clamped to 0 and the
/// columns renormalized on output.
Eigen::MatrixXd classical_propagator(const Spectrum& spectrum, double t);

/// Column `node` (1-based) of classical_propagator.
ClassicalState classical_evolve(const Spectrum& spectrum, int node, double t);

/// Classical marginal as a diagonal density matrix, for feeding the fidelity.
DensityMatrix diagonal_state(const ClassicalState& probs);

/// e^{-iLt} r e^{+iLt}.
DensityMatrix unitary_evolve(const Spectrum& spectrum,
                             const DensityMatrix& rho0, double t);

/// Closed-form intrinsic-decoherence propagation: in the Laplacian eigenbasis
/// each coherence picks up e^{-i(l_n - l_p)t - (gamma/2)(l_n - l_p)^2 t}.
DensityMatrix intrinsic_evolve(const Spectrum& spectrum,
                               const DensityMatrix& rho0, double gamma,
                               double t);

/// t -> infinity limit of intrinsic_evolve: coherences between distinct
/// eigenvalues vanish; degenerate blocks keep oscillating and are projected
/// onto their time average (the block itself, phases intact at gap zero).
DensityMatrix intrinsic_asymptotic(const Spectrum& spectrum,
                                   const DensityMatrix& rho0,
                                   double eps_deg = kDegeneracyTol);

/// Intrinsic decoherence as a Gaussian coarse-graining of the unitary orbit:
/// r(t) = (1/sqrt(pi)) Int dw e^{-w^2} U(t + sqrt(2) sigma w) r U^dag(...),
/// sigma^2 = gamma t, evaluated by Gauss-Hermite quadrature. Agrees with the
/// closed form when n_points resolves the fastest phase sqrt(2 gamma t) l_max.
DensityMatrix intrinsic_evolve_quadrature(const Spectrum& spectrum,
                                          const DensityMatrix& rho0,
                                          double gamma, double t,
                                          int n_points = 64);

/// Gauss-Hermite nodes and weights for weight e^{-x^2}, via the Golub-Welsch
/// symmetric tridiagonal eigenproblem. Exposed for testing.
void gauss_hermite(int n_points, Eigen::VectorXd& nodes,
                   Eigen::VectorXd& weights);

}  // namespace qcwalk
