#include "qcwalk/liouvillian.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qcwalk/errors.hpp"
#include "qcwalk/tolerances.hpp"

namespace qcwalk {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// gamma [ conj(O) (x) O - 1/2 I (x) O^T O - 1/2 (O^T O)^T (x) I ] for a real
// jump operator O, acting on column-major vec(rho).
Eigen::MatrixXd dissipator_term(const Eigen::MatrixXd& o, double gamma) {
  const int n = static_cast<int>(o.rows());
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd oto = o.transpose() * o;
  return gamma * (kroneckerProduct(o, o).eval() -
                  0.5 * kroneckerProduct(eye, oto).eval() -
                  0.5 * kroneckerProduct(oto.transpose(), eye).eval());
}

}  // namespace

Liouvillian build_liouvillian(const Graph& g, const NoiseModel& model) {
  validate(model);
  if (std::holds_alternative<UnitaryModel>(model)) {
    throw std::invalid_argument(
        "no Liouvillian for the unitary model; use unitary_evolve");
  }
  const int n = g.size();
  const Eigen::MatrixXd l = g.laplacian();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd commutator =
      kroneckerProduct(eye, l).eval() - kroneckerProduct(l, eye).eval();

  double coherent = 1.0;
  Eigen::MatrixXd dissipator = Eigen::MatrixXd::Zero(n * n, n * n);
  if (const auto* m = std::get_if<IntrinsicModel>(&model)) {
    // Eq.-(3) double commutator as a single Lindblad channel with O = L.
    dissipator = dissipator_term(l, m->gamma);
  } else if (const auto* m = std::get_if<HakenStroblModel>(&model)) {
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
      p(k, k) = 1.0;
      dissipator += dissipator_term(p, m->gamma);
    }
  } else if (const auto* m = std::get_if<QswModel>(&model)) {
    coherent = 1.0 - m->p;
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (l(k, j) == 0.0) continue;  // integer entries, exact test
        Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
        p(k, j) = l(k, j);
        dissipator += dissipator_term(p, m->p);
      }
    }
  }

  Liouvillian result;
  result.n = n;
  result.matrix = dissipator.cast<std::complex<double>>();
  result.matrix -= kI * coherent * commutator.cast<std::complex<double>>();
  return result;
}

DensityMatrix apply_generator(const Graph& g, const NoiseModel& model,
                              const DensityMatrix& rho) {
  validate(model);
  const int n = g.size();
  const Eigen::MatrixXcd l = g.laplacian().cast<std::complex<double>>();

  if (std::holds_alternative<UnitaryModel>(model)) {
    return -kI * (l * rho - rho * l);
  }
  if (const auto* m = std::get_if<IntrinsicModel>(&model)) {
    const DensityMatrix inner = l * rho - rho * l;
    return -kI * (l * rho - rho * l) -
           0.5 * m->gamma * (l * inner - inner * l);
  }
  if (const auto* m = std::get_if<HakenStroblModel>(&model)) {
    // Hadamard form: -i[L,rho] - gamma (J - I) o rho, i.e. a flat -gamma on
    // every off-diagonal element.
    DensityMatrix out = -kI * (l * rho - rho * l);
    out -= m->gamma * rho;
    out.diagonal() += m->gamma * rho.diagonal();
    return out;
  }
  const auto& m = std::get<QswModel>(model);
  // Jump channels P_kj = L_kj |k><j| give population gains sum_j L_kj^2
  // rho_jj at node k and an anticommutator loss with column weights
  // w_j = sum_k L_kj^2.
  const Eigen::MatrixXd lsq = g.laplacian().cwiseAbs2();
  const Eigen::VectorXd w = lsq.colwise().sum();
  const Eigen::VectorXd pops = rho.diagonal().real();
  DensityMatrix out = -kI * (1.0 - m.p) * (l * rho - rho * l);
  out.diagonal() += (m.p * (lsq * pops)).cast<std::complex<double>>();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out(a, b) -= 0.5 * m.p * (w(a) + w(b)) * rho(a, b);
  return out;
}

Trajectory lindblad_evolve(const Graph& g, const NoiseModel& model,
                           const DensityMatrix& rho0,
                           const std::vector<double>& times) {
  if (times.empty()) {
    throw std::invalid_argument("lindblad_evolve needs a non-empty time grid");
  }
  if (times.front() < 0.0) {
    throw std::invalid_argument("time grid must start at t >= 0");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] < times[i - 1]) {
      throw std::invalid_argument("time grid must be ascending");
    }
  }

  const Liouvillian lv = build_liouvillian(g, model);
  const int n = lv.n;

  // Steps between consecutive samples (the first from t = 0). Grids from
  // linspace have equal gaps up to roundoff, so key the propagator cache on
  // a rounded gap and exponentiate once per distinct value.
  auto gap_key = [](double gap) {
    if (gap == 0.0) return 0.0;
    const double mag = std::pow(10.0, std::floor(std::log10(gap)) - 12);
    return std::round(gap / mag) * mag;
  };
  std::map<double, Eigen::MatrixXcd> propagators;
  auto propagator_for = [&](double gap) -> const Eigen::MatrixXcd& {
    const double key = gap_key(gap);
    auto it = propagators.find(key);
    if (it == propagators.end()) {
      it = propagators.emplace(key, (lv.matrix * key).exp()).first;
    }
    return it->second;
  };

  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());

  Eigen::VectorXcd vec =
      Eigen::Map<const Eigen::VectorXcd>(rho0.data(), n * n);
  double current = 0.0;
  for (double t : times) {
    const double gap = t - current;
    if (gap > 0.0) {
      vec = propagator_for(gap) * vec;
      current = t;
    }
    DensityMatrix state =
        hermitize(Eigen::Map<const DensityMatrix>(vec.data(), n, n));
    try {
      require_valid_state(state, kTraceTol, kPsdTol);
    } catch (const NumericalError& err) {
      throw NumericalError("lindblad_evolve(" + model_tag(model) + ", " +
                           to_string(g.family()) + std::to_string(g.size()) +
                           ") at t = " + std::to_string(t) + ": " +
                           err.what());
    }
    traj.states.push_back(std::move(state));
  }
  return traj;
}

double stationary_residual(const Graph& g, const NoiseModel& model,
                           const DensityMatrix& rho) {
  return apply_generator(g, model, rho).cwiseAbs().maxCoeff();
}

}  // namespace qcwalk
