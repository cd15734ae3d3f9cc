#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinstar/entanglement.hpp"
#include "spinstar/thermal.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace spinstar;
using namespace spinstar::testing;

TEST_CASE("gibbs_state: infinite-temperature limit is maximally mixed") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, 10.0));
  const DensityMatrix rho = gibbs_state(h, Temperature{1e6});
  CHECK((rho.op - ComplexMatrix::Identity(16, 16) / 16.0).cwiseAbs().maxCoeff() <= 1e-5);
}

TEST_CASE("gibbs_state: free spins freeze into |0000> at low temperature") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, 0.0));
  const DensityMatrix rho = gibbs_state(h, Temperature{0.01});
  ComplexMatrix target = ComplexMatrix::Zero(16, 16);
  target(0, 0) = 1.0;
  CHECK(trace_distance(rho.op, target) <= 1e-8);
}

TEST_CASE("gibbs_state: reduced state reproduces the A3 plateau mixture") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, 6.0));
  const DensityMatrix rho = gibbs_state(h, Temperature{0.01});
  const DensityMatrix reduced = partial_trace(rho, {Qubit::S1, Qubit::S2, Qubit::S3});
  CHECK(trace_distance(reduced.op, named_state(NamedState::RhoA3).op) <= 1e-3);
}

TEST_CASE("gibbs_state: t = 0 and t < 0 are rejected") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, 1.0));
  CHECK_THROWS_AS(gibbs_state(h, Temperature{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(gibbs_state(h, Temperature{-0.5}), std::domain_error);
}

TEST_CASE("gibbs_state: state invariants hold") {
  Rng rng(31);
  std::uniform_real_distribution<double> uc(0.0, 10.0), ux(0.2, 8.0), ut(0.02, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Scheme scheme = static_cast<Scheme>(rng() % 3);
    const double x = scheme == Scheme::Homogeneous ? 1.0 : ux(rng);
    const ComplexMatrix h = build_hamiltonian(make_params(scheme, uc(rng), x));
    const DensityMatrix rho = gibbs_state(h, Temperature{ut(rng)});
    CHECK(std::abs(rho.op.trace().real() - 1.0) <= 1e-12);
    CHECK(eigh(rho.op).values.minCoeff() >= -1e-10);
    CHECK((rho.op * h - h * rho.op).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("gibbs_state: invariant under shifting H by a multiple of the identity") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::TypeA, 3.0, 2.0));
  const ComplexMatrix shifted = h + 7.5 * ComplexMatrix::Identity(16, 16);
  const DensityMatrix a = gibbs_state(h, Temperature{0.7});
  const DensityMatrix b = gibbs_state(shifted, Temperature{0.7});
  CHECK(trace_distance(a.op, b.op) <= 1e-12);
}

TEST_CASE("gibbs_state: purity falls and energy rises with temperature") {
  for (const auto& [scheme, c, x] : {std::tuple{Scheme::Homogeneous, 6.0, 1.0},
                                     std::tuple{Scheme::TypeA, 6.0, 2.5},
                                     std::tuple{Scheme::TypeB, 4.0, 1.5}}) {
    const ComplexMatrix h = build_hamiltonian(make_params(scheme, c, x));
    double prev_purity = 2.0;
    double prev_energy = -1e300;
    for (double t : {0.02, 0.1, 0.3, 1.0, 3.0, 10.0, 100.0}) {
      const DensityMatrix rho = gibbs_state(h, Temperature{t});
      const double purity = (rho.op * rho.op).trace().real();
      const double energy = (rho.op * h).trace().real();
      CHECK(purity <= prev_purity + 1e-12);
      CHECK(energy >= prev_energy - 1e-10);
      prev_purity = purity;
      prev_energy = energy;
    }
  }
}

TEST_CASE("ground_manifold_state: rank-1 projector away from crossings") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, 6.0));
  const DensityMatrix rho = ground_manifold_state(h);
  CHECK((rho.op * rho.op - rho.op).cwiseAbs().maxCoeff() <= 1e-12);  // idempotent
  CHECK(std::abs((rho.op * h).trace().real() - eigh(h).values[0]) <= 1e-10);
}

TEST_CASE("ground_manifold_state: c = 0 gives |0000><0000|") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, 0.0));
  const DensityMatrix rho = ground_manifold_state(h);
  ComplexMatrix target = ComplexMatrix::Zero(16, 16);
  target(0, 0) = 1.0;
  CHECK(trace_distance(rho.op, target) <= 1e-12);
}

TEST_CASE("ground_manifold_state: rank >= 2 at the homogeneous crossing") {
  const double c_cross = crossing_curve_c_of_x(1.0);
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, c_cross));
  const DensityMatrix rho = ground_manifold_state(h, 1e-9);
  const EigenSystem es = eigh(rho.op);
  // equal 1/2 weights on a two-dimensional ground manifold
  CHECK(es.values[15] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(es.values[14] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("ground_manifold_state: agrees with gibbs_state as t -> 0") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, 6.0));
  const EigenSystem es = eigh(h);
  const double gap = es.values[1] - es.values[0];
  REQUIRE(gap > 1e-3);
  const DensityMatrix cold = gibbs_state(h, Temperature{1e-6 * gap});
  const DensityMatrix manifold = ground_manifold_state(h);
  CHECK(trace_distance(cold.op, manifold.op) <= 1e-6);
}

TEST_CASE("ground_manifold_state: tolerance validation") {
  const ComplexMatrix h = build_hamiltonian(make_params(Scheme::Homogeneous, 1.0));
  CHECK_THROWS_AS(ground_manifold_state(h, 0.0), std::invalid_argument);
}
