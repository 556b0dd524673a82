#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace pepr {

enum class CurveInterp { PiecewiseLinear, StepLeft };

/// Sampled monotone mapping resource -> performance. The first sample must
/// sit at r = 0 so f(0) is defined.
struct PerformanceCurve {
  std::vector<std::pair<double, double>> samples;  // (r, p), r strictly increasing
  CurveInterp interpolation = CurveInterp::PiecewiseLinear;

  void validate() const;
  double r_min() const { return samples.front().first; }
  double r_max() const { return samples.back().first; }
  double p0() const { return samples.front().second; }
};

struct CurveScore {
  double r_star = 0.0;   // smallest grid point attaining the maximum
  double value = 0.0;    // pepr(r_star, f(r_star))
  int grid_resolution = 0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ReturnsRegions {
  std::vector<Interval> increase;       // f' > 1: guaranteed score increase
  std::vector<Interval> decrease;       // f' < f(0)/2: guaranteed decrease
  std::vector<Interval> indeterminate;  // slope in [f(0)/2, 1]
};

struct IntegralCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_error = 0.0;
};

struct IsoclineGrid {
  std::vector<double> r_axis;
  std::vector<double> p_axis;
  std::vector<std::vector<double>> values;  // values[i][j] = pepr(r_axis[j], p_axis[i])
};

double eval_curve(const PerformanceCurve& f, double r);
double pepr_curve(const PerformanceCurve& f, double r);
CurveScore peprc_star(const PerformanceCurve& f, int grid_resolution = 1001);

/// Central finite difference with step range/1000; one-sided at the
/// boundaries. At knots of a piecewise-linear curve this averages the
/// adjacent segment slopes.
double curve_derivative(const PerformanceCurve& f, double r);

ReturnsRegions diminishing_returns_regions(const PerformanceCurve& f,
                                           int grid_resolution = 1001);

IntegralCheck integral_representation_check(const PerformanceCurve& f, double r,
                                            int quadrature_points);

IsoclineGrid isocline_grid(int resolution);

// Synthetic curve families used as test fixtures.
struct SaturatingExp { double p0, p_max, rate; };
struct Linear { double p0, slope; };
struct KinkedLinear { double p0, slope, cap; };
using SynthKind = std::variant<SaturatingExp, Linear, KinkedLinear>;

PerformanceCurve synth_curve(const SynthKind& kind, int n_samples);

}  // namespace pepr
