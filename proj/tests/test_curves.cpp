#include <doctest.h>

#include <cmath>
#include <random>

#include "pepr/curves.hpp"
#include "pepr/scoring.hpp"

using namespace pepr;

namespace {

PerformanceCurve line(double p0, double p1) {
  PerformanceCurve f;
  f.samples = {{0.0, p0}, {1.0, p1}};
  return f;
}

}  // namespace

TEST_CASE("curve validation") {
  PerformanceCurve f;
  f.samples = {{0.0, 0.5}};
  CHECK_THROWS(f.validate());
  f.samples = {{0.1, 0.5}, {1.0, 0.9}};
  CHECK_THROWS(f.validate());  // must start at r = 0
  f.samples = {{0.0, 0.5}, {0.0, 0.9}};
  CHECK_THROWS(f.validate());
  f.samples = {{0.0, 0.5}, {1.0, 1.4}};
  CHECK_THROWS(f.validate());
}

TEST_CASE("piecewise-linear evaluation") {
  auto f = line(0.5, 0.9);
  CHECK(eval_curve(f, 0.5) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(eval_curve(f, 0.0) == 0.5);
  PerformanceCurve g;
  g.samples = {{0.0, 0.2}, {0.5, 0.6}, {1.0, 0.8}};
  CHECK(eval_curve(g, 0.75) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK_THROWS(eval_curve(f, 1.5));
}

TEST_CASE("step-left interpolation holds the previous sample") {
  PerformanceCurve f;
  f.samples = {{0.0, 0.2}, {0.5, 0.6}, {1.0, 0.8}};
  f.interpolation = CurveInterp::StepLeft;
  CHECK(eval_curve(f, 0.25) == 0.2);
  CHECK(eval_curve(f, 0.5) == 0.6);
  CHECK(eval_curve(f, 0.75) == 0.6);
}

TEST_CASE("pepr along a curve") {
  auto f = line(0.5, 0.9);
  CHECK(pepr_curve(f, 1.0) == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(pepr_curve(f, 0.0) == 0.5);  // equals f(0) at zero cost
}

TEST_CASE("a half-plus-half-r curve has constant score") {
  auto f = synth_curve(Linear{0.5, 0.5}, 1001);
  for (double r : {0.0, 0.123, 0.5, 0.987, 1.0})
    CHECK(pepr_curve(f, r) == doctest::Approx(0.5).epsilon(1e-12));
  auto star = peprc_star(f, 1001);
  CHECK(star.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(star.r_star == 0.0);  // ties resolve to the smallest r
}

TEST_CASE("kinked curve peaks where it hits the cap") {
  auto f = synth_curve(KinkedLinear{0.5, 2.0, 1.0}, 1001);
  auto star = peprc_star(f, 1001);
  CHECK(star.r_star == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(star.value == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("constant curve peaks at zero cost") {
  auto f = synth_curve(Linear{0.7, 0.0}, 101);
  auto star = peprc_star(f, 1001);
  CHECK(star.r_star == 0.0);
  CHECK(star.value == 0.7);
}

TEST_CASE("derivative of sampled curves") {
  auto f = line(0.5, 0.9);
  CHECK(curve_derivative(f, 0.5) == doctest::Approx(0.4).epsilon(1e-9));
  auto kinked = synth_curve(KinkedLinear{0.5, 2.0, 1.0}, 1001);
  CHECK(curve_derivative(kinked, 0.1) == doctest::Approx(2.0).epsilon(1e-9));
  auto flat = synth_curve(Linear{0.7, 0.0}, 101);
  CHECK(curve_derivative(flat, 0.3) == doctest::Approx(0.0));
}

TEST_CASE("returns regions split at the kink") {
  auto f = synth_curve(KinkedLinear{0.5, 2.0, 1.0}, 1001);
  auto regions = diminishing_returns_regions(f);
  REQUIRE(!regions.increase.empty());
  REQUIRE(!regions.decrease.empty());
  CHECK(regions.increase.front().lo == 0.0);
  CHECK(regions.increase.back().hi == doctest::Approx(0.25).epsilon(0.01));
  CHECK(regions.decrease.front().lo == doctest::Approx(0.25).epsilon(0.01));
  CHECK(regions.decrease.back().hi == 1.0);
}

TEST_CASE("in-band slope yields no guaranteed region") {
  auto f = synth_curve(Linear{0.5, 0.5}, 101);
  auto regions = diminishing_returns_regions(f);
  CHECK(regions.increase.empty());
  CHECK(regions.decrease.empty());
  REQUIRE(regions.indeterminate.size() == 1);
  CHECK(regions.indeterminate[0].lo == 0.0);
  CHECK(regions.indeterminate[0].hi == 1.0);
}

TEST_CASE("flat curve always loses score") {
  auto f = synth_curve(Linear{0.8, 0.0}, 101);
  auto regions = diminishing_returns_regions(f);
  CHECK(regions.increase.empty());
  REQUIRE(regions.decrease.size() == 1);
  CHECK(regions.decrease[0].lo == 0.0);
  CHECK(regions.decrease[0].hi == 1.0);
}

TEST_CASE("returns regions reject decreasing curves") {
  PerformanceCurve f;
  f.samples = {{0.0, 0.9}, {1.0, 0.5}};
  CHECK_THROWS(diminishing_returns_regions(f));
}

TEST_CASE("integral representation matches the direct score") {
  auto sat = synth_curve(SaturatingExp{0.5, 1.0, 3.0}, 2001);
  auto check = integral_representation_check(sat, 1.0, 10000);
  CHECK(check.abs_error <= 1e-6);

  auto lin = line(0.5, 0.9);
  auto lin_check = integral_representation_check(lin, 1.0, 10000);
  CHECK(lin_check.abs_error <= 1e-6);
  // Closed form for the linear curve: f(0) + s*ln 2 - [ln 2 (s - f0) + ...]
  // collapses to f(1)/2; the quadrature must land there too.
  CHECK(lin_check.rhs == doctest::Approx(0.45).epsilon(1e-6));

  auto zero = integral_representation_check(lin, 0.0, 100);
  CHECK(zero.lhs == zero.rhs);
  CHECK(zero.abs_error == 0.0);
  CHECK_THROWS(integral_representation_check(lin, 0.5, 1));
}

TEST_CASE("quadrature error shrinks with resolution") {
  auto sat = synth_curve(SaturatingExp{0.5, 1.0, 3.0}, 2001);
  const double coarse = integral_representation_check(sat, 1.0, 10000).abs_error;
  const double fine = integral_representation_check(sat, 1.0, 100000).abs_error;
  CHECK(coarse <= 10.0 * fine + 1e-12);
}

TEST_CASE("isocline grid corners and monotonicity") {
  auto grid = isocline_grid(101);
  CHECK(grid.values[100][0] == 1.0);    // (R=0, P=1)
  CHECK(grid.values[100][100] == 0.5);  // (R=1, P=1)
  for (int i = 0; i < 101; ++i) CHECK(grid.values[i][0] == grid.p_axis[i]);
  const int p60 = 60, r50 = 50;
  CHECK(grid.values[p60][r50] == doctest::Approx(0.4).epsilon(1e-12));
  for (int i = 1; i < 101; ++i)
    for (int j = 1; j < 101; ++j) {
      CHECK(grid.values[i][j] < grid.values[i][j - 1]);
      CHECK(grid.values[i][j] > grid.values[i - 1][j]);
    }
}

TEST_CASE("synthetic curve families") {
  auto lin = synth_curve(Linear{0.5, 0.4}, 11);
  REQUIRE(lin.samples.size() == 11);
  CHECK(lin.samples.front() == std::pair{0.0, 0.5});
  CHECK(lin.samples.back().second == doctest::Approx(0.9).epsilon(1e-15));

  auto sat = synth_curve(SaturatingExp{0.5, 1.0, 3.0}, 1001);
  CHECK(sat.p0() == 0.5);
  CHECK(sat.samples.back().second ==
        doctest::Approx(0.5 + 0.5 * (1.0 - std::exp(-3.0))).epsilon(1e-12));

  auto kinked = synth_curve(KinkedLinear{0.5, 2.0, 1.0}, 1001);
  CHECK(eval_curve(kinked, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eval_curve(kinked, 0.2) == doctest::Approx(0.9).epsilon(1e-12));

  CHECK_THROWS(synth_curve(Linear{0.5, 0.8}, 11));  // exits [0,1]
}

TEST_CASE("footnote bound and argmax lower bound on random curves") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double p0 = 0.2 + 0.4 * unit(rng);
    PerformanceCurve f;
    if (trial % 2 == 0)
      f = synth_curve(SaturatingExp{p0, p0 + (1.0 - p0) * unit(rng),
                                    0.5 + 2.5 * unit(rng)}, 1001);
    else
      f = synth_curve(KinkedLinear{p0, 1.2 + unit(rng),
                                   p0 + (1.0 - p0) * unit(rng)}, 1001);
    auto star = peprc_star(f);
    CHECK(star.value >= f.p0() - 1e-12);
    for (int i = 0; i <= 100; ++i) {
      const double r = i / 100.0;
      const double ratio = eval_curve(f, r) / (1.0 + r);
      CHECK(ratio >= f.p0() / 2.0 - 1e-12);
      CHECK(ratio <= 1.0 + 1e-12);
    }
  }
}
