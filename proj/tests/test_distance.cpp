#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qcwalk/density.hpp"
#include "qcwalk/dynamics.hpp"
#include "qcwalk/errors.hpp"
#include "qcwalk/fidelity.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/qc_distance.hpp"
#include "qcwalk/spectrum.hpp"

using namespace qcwalk;

namespace {

std::vector<double> linspace(double t_end, int n_points) {
  std::vector<double> times(n_points);
  for (int i = 0; i < n_points; ++i)
    times[i] = t_end * i / static_cast<double>(n_points - 1);
  return times;
}

DensityMatrix random_state(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = {gauss(rng), gauss(rng)};
  DensityMatrix rho = m * m.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST_SUITE("distance") {

TEST_CASE("fidelity on known pairs") {
  const DensityMatrix rho = random_state(4, 11);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK(fidelity(localized_state(3, 1), localized_state(3, 2)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fidelity(maximally_mixed(2), localized_state(2, 1)) ==
        doctest::Approx(0.5).epsilon(1e-10));
  // F(pure, I/N) = 1/N.
  CHECK(fidelity(localized_state(5, 3), maximally_mixed(5)) ==
        doctest::Approx(0.2).epsilon(1e-10));

  const DensityMatrix sigma = random_state(4, 12);
  CHECK(std::abs(fidelity(rho, sigma) - fidelity(sigma, rho)) < 1e-10);
  const double f = fidelity(rho, sigma);
  CHECK(f >= 0.0);
  CHECK(f <= 1.0);

  CHECK_THROWS_AS(fidelity(random_state(3, 13), random_state(4, 14)),
                  std::invalid_argument);
}

TEST_CASE("representative nodes per family") {
  CHECK(representative_nodes(Graph::complete(6)) == std::vector<int>{1});
  CHECK(representative_nodes(Graph::cycle(5)) == std::vector<int>{1});
  CHECK(representative_nodes(Graph::star(5)) == std::vector<int>{1, 2});
  CHECK(representative_nodes(Graph::star(5), InitialClass::Central) ==
        std::vector<int>{1});
  CHECK(representative_nodes(Graph::star(5), InitialClass::External) ==
        std::vector<int>{2});
  CHECK(representative_nodes(Graph::path(4)) == std::vector<int>{1, 2, 3, 4});

  CHECK_THROWS_AS(representative_nodes(Graph::complete(4), InitialClass::Central),
                  std::invalid_argument);
  CHECK_THROWS_AS(representative_nodes(Graph::cycle(4), InitialClass::External),
                  std::invalid_argument);
}

TEST_CASE("distance vanishes at t = 0 and stays in [0, 1]") {
  const Graph k5 = Graph::complete(5);
  CHECK(qc_distance_at(k5, IntrinsicModel{1.0}, 0.0).d_qc <= 1e-8);
  CHECK(qc_distance_at(k5, QswModel{0.5}, 0.0).d_qc <= 1e-8);
  CHECK_THROWS_AS(qc_distance_at(k5, IntrinsicModel{1.0}, -1.0),
                  std::invalid_argument);

  const QcDistanceCurve intrinsic =
      qc_distance_curve(k5, IntrinsicModel{1.0}, linspace(50.0, 101));
  const QcDistanceCurve qsw = qc_distance_curve(
      Graph::star(5), QswModel{0.5}, linspace(10.0, 51));
  for (const QcDistanceCurve* curve : {&intrinsic, &qsw}) {
    for (const QcSample& s : curve->samples) {
      CHECK(s.d_qc >= 0.0);
      CHECK(s.d_qc <= 1.0);
      CHECK(s.node_fidelity.minCoeff() >= 0.0);
      CHECK(s.node_fidelity.maxCoeff() <= 1.0 + 1e-12);
    }
  }
  CHECK(intrinsic.samples.front().d_qc <= 1e-8);
}

TEST_CASE("intrinsic distance converges to the closed-form asymptote") {
  const QcSample late = qc_distance_at(Graph::complete(5), IntrinsicModel{1.0}, 50.0);
  CHECK(std::abs(late.d_qc - 0.64) <= 1e-3);
  CHECK(late.opt_node == 1);  // all nodes tie; lowest label wins
}

TEST_CASE("unitary distance saturates at 1 - 1/N instead of classicalizing") {
  // Once the classical marginal is uniform, the fidelity with any pure state
  // is exactly 1/N, so the coherent walk's distance pins at 1 - 1/N after an
  // oscillatory overshoot; it never decays to zero.
  const QcDistanceCurve curve =
      qc_distance_curve(Graph::cycle(5), UnitaryModel{}, linspace(10.0, 201));
  const std::vector<double> v = curve.values();
  CHECK(std::abs(v.back() - 0.8) < 1e-4);

  double floor_after_rise = 1.0, peak = 0.0, wiggle = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    peak = std::max(peak, v[i]);
    if (curve.samples[i].t >= 2.0) {
      floor_after_rise = std::min(floor_after_rise, v[i]);
      wiggle = std::max(wiggle, v[i] - v[i - 1]);
    }
  }
  CHECK(floor_after_rise > 0.75);   // never classicalizes
  CHECK(peak > 0.81);               // overshoots the saturation value ...
  CHECK(wiggle > 1e-5);             // ... and keeps ringing around it
}

TEST_CASE("haken-strobl distance rises then classicalizes") {
  const QcDistanceCurve curve = qc_distance_curve(
      Graph::cycle(7), HakenStroblModel{1.0}, linspace(10.0, 201));
  const std::vector<double> v = curve.values();
  CHECK(*std::max_element(v.begin(), v.end()) > 0.3);
  CHECK(v.back() < 0.01);
}

TEST_CASE("qsw distance decays by t = 50") {
  CHECK(qc_distance_at(Graph::star(7), QswModel{0.5}, 50.0).d_qc < 0.01);
}

TEST_CASE("star minimization splits into central and external classes") {
  const Graph star5 = Graph::star(5);
  const std::vector<double> grid = linspace(20.0, 41);
  const QcDistanceCurve all =
      qc_distance_curve(star5, IntrinsicModel{1.0}, grid);
  const QcDistanceCurve central =
      qc_distance_curve(star5, IntrinsicModel{1.0}, grid, InitialClass::Central);
  const QcDistanceCurve external =
      qc_distance_curve(star5, IntrinsicModel{1.0}, grid, InitialClass::External);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(all.samples[i].d_qc -
                   std::max(central.samples[i].d_qc,
                            external.samples[i].d_qc)) < 1e-12);
  }
  // Asymptotically the hub lags behind the leaves, so it carries the minimum.
  CHECK(all.samples.back().opt_node == 1);
}

TEST_CASE("closed-form asymptotes") {
  CHECK(asymptotic_qc_distance(GraphFamily::Complete, 2) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(asymptotic_qc_distance(GraphFamily::Complete, 5) ==
        doctest::Approx(0.64).epsilon(1e-12));
  // N = 3: complete graph and 6-cycle coincide at 1 - (3 + 2 sqrt 2)/9.
  const double shared = 1.0 - (3.0 + 2.0 * std::sqrt(2.0)) / 9.0;
  CHECK(asymptotic_qc_distance(GraphFamily::Complete, 3) ==
        doctest::Approx(shared).epsilon(1e-12));
  CHECK(asymptotic_qc_distance(GraphFamily::Cycle, 6) ==
        doctest::Approx(shared).epsilon(1e-12));
  CHECK(asymptotic_qc_distance(GraphFamily::Cycle, 6) ==
        doctest::Approx(0.352397).epsilon(1e-5));
  CHECK(asymptotic_qc_distance(GraphFamily::Cycle, 5) ==
        doctest::Approx(0.413726).epsilon(1e-5));
  CHECK(asymptotic_qc_distance(GraphFamily::Cycle, 4) ==
        doctest::Approx(0.271447).epsilon(1e-5));
  CHECK(asymptotic_qc_distance(GraphFamily::Star, 5, InitialClass::External) ==
        doctest::Approx(0.527621).epsilon(1e-5));

  // Star central coincides with the complete graph for every N.
  for (int n = 3; n <= 12; ++n) {
    CHECK(asymptotic_qc_distance(GraphFamily::Star, n, InitialClass::Central) ==
          doctest::Approx(asymptotic_qc_distance(GraphFamily::Complete, n))
              .epsilon(1e-14));
  }
  // The overall star value is the larger of the two class values.
  const double c5 = asymptotic_qc_distance(GraphFamily::Star, 5, InitialClass::Central);
  const double e5 = asymptotic_qc_distance(GraphFamily::Star, 5, InitialClass::External);
  CHECK(asymptotic_qc_distance(GraphFamily::Star, 5) ==
        doctest::Approx(std::max(c5, e5)).epsilon(1e-14));
  CHECK(c5 > e5);

  // Large-N limits approach full classicalization.
  CHECK(std::abs(asymptotic_qc_distance(GraphFamily::Complete, 100) - 0.99) <
        2.0 / 100.0);
  CHECK(std::abs(asymptotic_qc_distance(GraphFamily::Cycle, 200) - 0.5) < 0.01);

  CHECK_THROWS_AS(asymptotic_qc_distance(GraphFamily::Path, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_qc_distance(GraphFamily::Custom, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_qc_distance(GraphFamily::Complete, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_qc_distance(GraphFamily::Cycle, 2),
                  std::invalid_argument);
}

TEST_CASE("numerical asymptotes reproduce the closed forms") {
  const NoiseModel intrinsic = IntrinsicModel{1.0};
  CHECK(std::abs(numerical_asymptote(Graph::complete(5), intrinsic) - 0.64) <
        1e-7);
  CHECK(std::abs(numerical_asymptote(Graph::cycle(6), intrinsic) -
                 asymptotic_qc_distance(GraphFamily::Cycle, 6)) < 1e-6);
  CHECK(std::abs(numerical_asymptote(Graph::star(5), intrinsic,
                                     InitialClass::Central) -
                 asymptotic_qc_distance(GraphFamily::Star, 5,
                                        InitialClass::Central)) < 1e-6);
  CHECK(std::abs(numerical_asymptote(Graph::star(5), intrinsic,
                                     InitialClass::External) -
                 asymptotic_qc_distance(GraphFamily::Star, 5,
                                        InitialClass::External)) < 1e-6);

  // The other channels relax all the way to the classical walk.
  CHECK(numerical_asymptote(Graph::complete(7), HakenStroblModel{1.0}) < 0.01);
  CHECK(numerical_asymptote(Graph::star(7), QswModel{0.5},
                            InitialClass::All, 50.0) < 0.01);

  // A horizon short of the plateau is reported, not silently accepted.
  CHECK_THROWS_AS(numerical_asymptote(Graph::star(7), QswModel{0.5},
                                      InitialClass::All, 3.0),
                  NumericalError);
  CHECK_THROWS_AS(numerical_asymptote(Graph::complete(5), IntrinsicModel{0.0}),
                  std::invalid_argument);
}

TEST_CASE("hub of a star mirrors the complete graph walker") {
  // Removing every leaf-leaf edge from K5 leaves the hub's intrinsic
  // dynamics unchanged: compare the custom-built star's node-1 fidelity
  // column against the complete-graph distance.
  const Graph star_as_custom = Graph::from_edges(
      5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  const Graph k5 = Graph::complete(5);
  const std::vector<double> grid = linspace(20.0, 41);
  const QcDistanceCurve custom_curve =
      qc_distance_curve(star_as_custom, IntrinsicModel{1.0}, grid);
  const QcDistanceCurve k5_curve =
      qc_distance_curve(k5, IntrinsicModel{1.0}, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double hub_distance = 1.0 - custom_curve.samples[i].node_fidelity(0);
    CHECK(std::abs(hub_distance - k5_curve.samples[i].d_qc) < 1e-6);
  }
}

TEST_CASE("node fidelities respect graph symmetry") {
  const Graph c6 = Graph::cycle(6);
  const QcSample s = qc_distance_at(c6, HakenStroblModel{0.8}, 1.5);
  REQUIRE(s.node_fidelity.size() == 6);
  for (int j = 1; j < 6; ++j) {
    CHECK(std::abs(s.node_fidelity(j) - s.node_fidelity(0)) < 1e-12);
  }

  const QcSample star = qc_distance_at(Graph::star(5), IntrinsicModel{1.0}, 2.0);
  for (int leaf = 2; leaf < 5; ++leaf) {
    CHECK(std::abs(star.node_fidelity(leaf) - star.node_fidelity(1)) < 1e-12);
  }
  CHECK(star.node_fidelity(0) != doctest::Approx(star.node_fidelity(1)));
}

}  // TEST_SUITE
