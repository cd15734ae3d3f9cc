#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinstar/csv.hpp"
#include "spinstar/sweeps.hpp"
#include "test_support.hpp"

#include <cmath>
#include <sstream>

using namespace spinstar;
using namespace spinstar::testing;

namespace {

int column_index(const SweepTable& table, const std::string& name) {
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    if (table.columns[k] == name) return static_cast<int>(k);
  }
  REQUIRE(false);
  return -1;
}

SweepSpec one_axis(Scheme scheme, Axis axis, std::map<std::string, double> fixed,
                   std::vector<Observable> obs) {
  SweepSpec spec;
  spec.scheme = scheme;
  spec.axes = {std::move(axis)};
  spec.fixed = std::move(fixed);
  spec.observables = std::move(obs);
  return spec;
}

}  // namespace

TEST_CASE("run_sweep: negativity nearly constant at low temperature, c = 10") {
  const SweepTable table = run_sweep(one_axis(
      Scheme::Homogeneous, Axis{"t", 0.01, 0.5, 50}, {{"c", 10.0}, {"x", 1.0}},
      {Observable::N123}));
  const int n_col = column_index(table, "N123");
  const double base = table.data(0, n_col);
  double max_rel_to_03 = 0.0, max_rel_to_05 = 0.0;
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    const double rel = std::abs(table.data(r, n_col) - base) / base;
    if (table.data(r, 0) <= 0.3) max_rel_to_03 = std::max(max_rel_to_03, rel);
    max_rel_to_05 = std::max(max_rel_to_05, rel);
  }
  CHECK(max_rel_to_03 < 0.01);
  CHECK(max_rel_to_05 < 0.08);  // measured 7.1% at t = 0.5
}

TEST_CASE("run_sweep: three low-temperature plateaux in c") {
  const SweepTable table = run_sweep(one_axis(
      Scheme::Homogeneous, Axis{"c", 0.05, 6.0, 120}, {{"t", 0.01}, {"x", 1.0}},
      {Observable::N123}));
  const int n_col = column_index(table, "N123");
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    const double c = table.data(r, 0);
    const double n = table.data(r, n_col);
    if (c < 0.45) CHECK(n <= 1e-6);
    if (c > 0.75 && c < 3.55) CHECK(n == doctest::Approx(0.18718427093627685).epsilon(5e-3));
    if (c > 3.95) CHECK(n == doctest::Approx(0.4880338717125854).epsilon(5e-3));
  }
}

TEST_CASE("run_sweep: homogeneity makes the three partial negativities equal") {
  SweepSpec spec;
  spec.scheme = Scheme::Homogeneous;
  spec.axes = {Axis{"c", 0.5, 9.5, 7}, Axis{"t", 0.05, 1.5, 5}};
  spec.fixed = {{"x", 1.0}};
  spec.observables = {Observable::N1_23, Observable::N2_13, Observable::N3_12};
  const SweepTable table = run_sweep(spec);
  CHECK(table.data.rows() == 35);
  const int a = column_index(table, "N1_23");
  const int b = column_index(table, "N2_13");
  const int c = column_index(table, "N3_12");
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    CHECK(std::abs(table.data(r, a) - table.data(r, b)) <= 1e-10);
    CHECK(std::abs(table.data(r, a) - table.data(r, c)) <= 1e-10);
  }
}

TEST_CASE("run_sweep: type-A 1<->3 exchange symmetry of observables") {
  SweepSpec spec;
  spec.scheme = Scheme::TypeA;
  spec.axes = {Axis{"x", 0.5, 4.0, 8}};
  spec.fixed = {{"c", 6.0}, {"t", 0.01}};
  spec.observables = {Observable::C12, Observable::C23, Observable::N1_23, Observable::N3_12};
  const SweepTable table = run_sweep(spec);
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    CHECK(std::abs(table.data(r, column_index(table, "C12")) -
                   table.data(r, column_index(table, "C23"))) <= 1e-10);
    CHECK(std::abs(table.data(r, column_index(table, "N1_23")) -
                   table.data(r, column_index(table, "N3_12"))) <= 1e-10);
  }
}

TEST_CASE("run_sweep: negativity is dead at t = 100") {
  for (const auto& [scheme, c, x] : {std::tuple{Scheme::Homogeneous, 10.0, 1.0},
                                     std::tuple{Scheme::TypeA, 10.0, 8.0},
                                     std::tuple{Scheme::TypeB, 10.0, 8.0},
                                     std::tuple{Scheme::TypeB, 6.0, 2.5}}) {
    const SweepTable table = run_sweep(one_axis(
        scheme, Axis{"t", 100.0, 101.0, 2}, {{"c", c}, {"x", x}}, {Observable::N123}));
    const int n_col = column_index(table, "N123");
    for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
      CHECK(table.data(r, n_col) <= 1e-6);
    }
  }
}

TEST_CASE("run_sweep: E0/E1/GAP and PURITY columns") {
  const SweepTable table = run_sweep(one_axis(
      Scheme::Homogeneous, Axis{"c", 5.9, 6.1, 3}, {{"t", 0.5}, {"x", 1.0}},
      {Observable::E0, Observable::E1, Observable::Gap, Observable::Purity}));
  const int e0 = column_index(table, "E0");
  const int e1 = column_index(table, "E1");
  const int gap = column_index(table, "GAP");
  const int purity = column_index(table, "PURITY");
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    const double c = table.data(r, 0);
    CHECK(table.data(r, e0) == doctest::Approx(-2.0 * c).epsilon(1e-12));
    CHECK(table.data(r, e1) == doctest::Approx(-(std::sqrt(3.0) * c + 1.0)).epsilon(1e-12));
    CHECK(table.data(r, gap) ==
          doctest::Approx(table.data(r, e1) - table.data(r, e0)).epsilon(1e-12));
    CHECK(table.data(r, purity) > 0.0);
    CHECK(table.data(r, purity) <= 1.0 + 1e-12);
  }
}

TEST_CASE("run_sweep: spec validation") {
  SweepSpec spec;
  spec.scheme = Scheme::Homogeneous;
  spec.axes = {Axis{"c", 0.0, 1.0, 4}, Axis{"c", 0.0, 1.0, 4}};
  spec.fixed = {{"t", 0.1}, {"x", 1.0}};
  spec.observables = {Observable::N123};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);  // duplicate axis

  spec.axes = {Axis{"c", 0.0, 1.0, 4}};
  spec.fixed = {{"t", 0.1}};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);  // x uncovered

  spec.fixed = {{"t", 0.0}, {"x", 1.0}};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);  // t = 0 without the flag
  spec.exact_zero_temperature = true;
  CHECK_NOTHROW(validate(spec));

  SweepSpec hom_x;
  hom_x.scheme = Scheme::Homogeneous;
  hom_x.axes = {Axis{"x", 0.5, 2.0, 4}};
  hom_x.fixed = {{"c", 1.0}, {"t", 0.1}};
  hom_x.observables = {Observable::N123};
  CHECK_THROWS_AS(validate(hom_x), std::invalid_argument);  // hom pins x
}

TEST_CASE("run_sweep: exact t = 0 uses the ground manifold") {
  SweepSpec spec = one_axis(Scheme::Homogeneous, Axis{"c", 5.0, 6.0, 2},
                            {{"t", 0.0}, {"x", 1.0}}, {Observable::N123, Observable::Purity});
  spec.exact_zero_temperature = true;
  const SweepTable table = run_sweep(spec);
  const int n_col = column_index(table, "N123");
  // away from crossings the T -> 0 state is the pure ground state
  CHECK(table.data(0, column_index(table, "PURITY")) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(table.data(0, n_col) == doctest::Approx(0.4880338717125854).epsilon(1e-9));
}

TEST_CASE("find_level_crossing: homogeneous pair at 1/sqrt(3) and 2+sqrt(3)") {
  CrossingSearch search;
  search.base = make_params(Scheme::Homogeneous, 0.0);
  search.axis = "c";
  search.lo = 0.1;
  search.hi = 10.0;
  const auto points = find_level_crossing(search);
  REQUIRE(points.size() == 2);
  CHECK(points[0] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-6));
  CHECK(points[1] == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-6));
}

TEST_CASE("find_level_crossing: type A in x at c = 6") {
  CrossingSearch search;
  search.base = make_params(Scheme::TypeA, 6.0, 1.0);
  search.axis = "x";
  search.lo = 0.1;
  search.hi = 8.0;
  const auto points = find_level_crossing(search);
  REQUIRE(points.size() == 2);
  CHECK(points[0] == doctest::Approx(0.4276969438757635).epsilon(1e-6));
  CHECK(points[1] == doctest::Approx(5.36617040032603).epsilon(1e-6));
}

TEST_CASE("find_level_crossing: type A in c at x = 3 matches the closed form") {
  CrossingSearch search;
  search.base = make_params(Scheme::TypeA, 0.0, 3.0);
  search.axis = "c";
  search.lo = 0.5;
  search.hi = 10.0;
  const auto points = find_level_crossing(search);
  REQUIRE(points.size() == 1);
  const double expected = 1.0 / ((3.0 + std::sqrt(17.0)) / 2.0 - std::sqrt(11.0));
  CHECK(points[0] == doctest::Approx(expected).epsilon(1e-6));
  CHECK(points[0] == doctest::Approx(4.08).epsilon(1e-2));
}

TEST_CASE("find_level_crossing: located points sit on the analytic crossing curve") {
  for (double x : {0.5, 1.5, 2.5, 4.0}) {
    const double expected_c = crossing_curve_c_of_x(x);
    CrossingSearch search;
    search.base = make_params(Scheme::TypeA, 0.0, x);
    search.axis = "c";
    search.lo = std::max(0.1, expected_c - 2.0);
    search.hi = expected_c + 2.0;
    const auto points = find_level_crossing(search);
    REQUIRE(points.size() >= 1);
    double best = points[0];
    for (double p : points) {
      if (std::abs(p - expected_c) < std::abs(best - expected_c)) best = p;
    }
    CHECK(std::abs(best - expected_c) <= 1e-6);
  }
}

TEST_CASE("find_level_crossing: empty result when no crossing is bracketed") {
  CrossingSearch search;
  search.base = make_params(Scheme::Homogeneous, 0.0);
  search.axis = "c";
  search.lo = 4.5;
  search.hi = 9.5;
  CHECK(find_level_crossing(search).empty());
}

TEST_CASE("find_negativity_maximum: type A lands on x_M ~ 2.46") {
  const MaximumResult res = find_negativity_maximum(Scheme::TypeA, 6.0, 0.01, 0.6, 5.4);
  CHECK(res.x_m == doctest::Approx(2.4606561704).epsilon(2e-4));
  CHECK(std::abs(res.x_m - 2.46) <= 0.05);
  CHECK(res.n_max == doctest::Approx(closed_form_negativity(res.x_m)).epsilon(1e-6).scale(1.0));
  CHECK(std::abs(res.n_max - closed_form_negativity(res.x_m)) <= 1e-4);
}

TEST_CASE("find_negativity_maximum: type B lands on x_M ~ 1.91") {
  const MaximumResult res = find_negativity_maximum(Scheme::TypeB, 6.0, 0.01, 1.0, 3.0);
  CHECK(res.x_m == doctest::Approx(1.9130890501).epsilon(2e-4));
  CHECK(std::abs(res.x_m - 1.91) <= 0.05);
  CHECK(res.n_max == doctest::Approx(0.516083718084809).epsilon(1e-6));
}

TEST_CASE("find_negativity_maximum: non-unimodal bracket raises a diagnostic") {
  // [0.40, 0.45] straddles the x ~ 0.4277 level crossing where N123 dips
  CHECK_THROWS_AS(find_negativity_maximum(Scheme::TypeA, 6.0, 0.01, 0.40, 0.45),
                  std::runtime_error);
}

TEST_CASE("reproduce_figure: lowt exhibits the three plateaux") {
  const SweepTable table = reproduce_figure("lowt");
  CHECK(table.data.rows() == 400);
  const int n_col = column_index(table, "N123");
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    const double c = table.data(r, 0);
    const double n = table.data(r, n_col);
    if (c < 0.45) a1 = std::max(a1, n);
    if (c > 1.0 && c < 3.0) a2 = std::max(a2, std::abs(n - 0.18718427093627685));
    if (c > 4.2) a3 = std::max(a3, std::abs(n - 0.4880338717125854));
  }
  CHECK(a1 <= 1e-6);
  CHECK(a2 <= 1e-3);
  CHECK(a3 <= 1e-3);
}

TEST_CASE("reproduce_figure: psi2minus closed form matches the thermal curve") {
  const SweepTable table = reproduce_figure("psi2minus");
  CHECK(table.data.rows() == 400);
  const int closed = column_index(table, "N_closed_form");
  const int thermal = column_index(table, "N_thermal");
  // the curves coincide while the closed-form state is the ground state;
  // the thermal column picks up Boltzmann smearing once the E2-/E4- gap
  // shrinks toward the x = 5.36617 crossing, and drops away beyond it
  double dev_core = 0.0, dev_near = 0.0, tail_gap = 0.0;
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    const double x = table.data(r, 0);
    const double dev = std::abs(table.data(r, closed) - table.data(r, thermal));
    if (x <= 4.5) dev_core = std::max(dev_core, dev);
    if (x <= 5.0) dev_near = std::max(dev_near, dev);
    if (x >= 5.45) tail_gap = std::max(tail_gap, table.data(r, closed) - table.data(r, thermal));
  }
  CHECK(dev_core <= 1e-4);
  CHECK(dev_near <= 1e-2);
  CHECK(tail_gap > 0.3);
}

TEST_CASE("reproduce_figure: concurrences columns and the negativity contrast") {
  const SweepTable table = reproduce_figure("concurrences");
  const int c12 = column_index(table, "C12");
  const int c23 = column_index(table, "C23");
  const int n123 = column_index(table, "N123");
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    CHECK(std::abs(table.data(r, c12) - table.data(r, c23)) <= 1e-10);
    const double x = table.data(r, 0);
    if (x > 3.5 && x < 5.5) {
      CHECK(table.data(r, c12) <= 1e-12);
      CHECK(table.data(r, n123) > 0.05);
    }
  }
}

TEST_CASE("reproduce_figure: unknown id") {
  CHECK_THROWS_AS(reproduce_figure("nope"), std::invalid_argument);
}

TEST_CASE("run_sweep and CSV output are deterministic") {
  const auto render = [] {
    const SweepTable table = run_sweep(one_axis(Scheme::TypeA, Axis{"x", 0.4, 4.0, 12},
                                                {{"c", 6.0}, {"t", 0.05}},
                                                {Observable::N123, Observable::C13}));
    std::ostringstream os;
    write_csv(os, table);
    return os.str();
  };
  const std::string first = render();
  const std::string second = render();
  CHECK(first == second);
  CHECK(first.find("# negativity convention") != std::string::npos);
}
