#include "pepr/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pepr/scoring.hpp"

namespace pepr {

void PerformanceCurve::validate() const {
  if (samples.size() < 2)
    throw std::invalid_argument("curve: needs at least 2 samples");
  if (samples.front().first != 0.0)
    throw std::invalid_argument("curve: first sample must sit at r = 0");
  double prev_r = -1.0;
  for (const auto& [r, p] : samples) {
    if (!(r >= 0.0 && r <= 1.0))
      throw std::invalid_argument("curve: r outside [0,1]");
    if (r <= prev_r)
      throw std::invalid_argument("curve: r values must be strictly increasing");
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("curve: p outside [0,1]");
    prev_r = r;
  }
}

namespace {

// Assumes the curve was validated by the caller.
double eval_unchecked(const PerformanceCurve& f, double r) {
  if (r < f.r_min() || r > f.r_max())
    throw std::out_of_range("eval_curve: r outside sampled range");

  // First sample with sample.r >= r.
  auto it = std::lower_bound(
      f.samples.begin(), f.samples.end(), r,
      [](const std::pair<double, double>& s, double value) { return s.first < value; });
  if (it->first == r) return it->second;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  if (f.interpolation == CurveInterp::StepLeft) return lo.second;
  const double t = (r - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

double derivative_unchecked(const PerformanceCurve& f, double r) {
  const double lo = f.r_min(), hi = f.r_max();
  const double h = (hi - lo) / 1000.0;
  const double a = std::max(lo, r - h);
  const double b = std::min(hi, r + h);
  return (eval_unchecked(f, b) - eval_unchecked(f, a)) / (b - a);
}

}  // namespace

double eval_curve(const PerformanceCurve& f, double r) {
  f.validate();
  return eval_unchecked(f, r);
}

double pepr_curve(const PerformanceCurve& f, double r) {
  return pepr(r, eval_curve(f, r));
}

CurveScore peprc_star(const PerformanceCurve& f, int grid_resolution) {
  if (grid_resolution < 2)
    throw std::invalid_argument("peprc_star: grid_resolution < 2");
  f.validate();
  const double lo = f.r_min(), hi = f.r_max();

  CurveScore best;
  best.grid_resolution = grid_resolution;
  best.r_star = lo;
  best.value = pepr(lo, eval_unchecked(f, lo));
  for (int i = 1; i < grid_resolution; ++i) {
    const double r = lo + (hi - lo) * i / (grid_resolution - 1);
    const double v = pepr(r, eval_unchecked(f, r));
    if (v > best.value) {  // ties keep the smallest r
      best.value = v;
      best.r_star = r;
    }
  }
  return best;
}

double curve_derivative(const PerformanceCurve& f, double r) {
  f.validate();
  const double lo = f.r_min(), hi = f.r_max();
  if (r < lo || r > hi)
    throw std::out_of_range("curve_derivative: r outside sampled range");
  const double h = (hi - lo) / 1000.0;
  const double a = std::max(lo, r - h);
  const double b = std::min(hi, r + h);
  return (eval_curve(f, b) - eval_curve(f, a)) / (b - a);
}

ReturnsRegions diminishing_returns_regions(const PerformanceCurve& f,
                                           int grid_resolution) {
  if (grid_resolution < 2)
    throw std::invalid_argument("diminishing_returns_regions: grid too small");
  f.validate();
  double prev_p = -1.0;
  for (const auto& [r, p] : f.samples) {
    if (p < prev_p)
      throw std::invalid_argument(
          "diminishing_returns_regions: curve must be non-decreasing");
    prev_p = p;
  }

  const double lo = f.r_min(), hi = f.r_max();
  const double slow = f.p0() / 2.0;

  ReturnsRegions out;
  auto push = [](std::vector<Interval>& list, double a, double b) {
    if (!list.empty() && list.back().hi == a)
      list.back().hi = b;
    else
      list.push_back({a, b});
  };
  for (int i = 0; i + 1 < grid_resolution; ++i) {
    const double a = lo + (hi - lo) * i / (grid_resolution - 1);
    const double b = lo + (hi - lo) * (i + 1) / (grid_resolution - 1);
    const double da = derivative_unchecked(f, a);
    const double db = derivative_unchecked(f, b);
    if (da > 1.0 && db > 1.0)
      push(out.increase, a, b);
    else if (da < slow && db < slow)
      push(out.decrease, a, b);
    else
      push(out.indeterminate, a, b);
  }
  return out;
}

IntegralCheck integral_representation_check(const PerformanceCurve& f, double r,
                                            int quadrature_points) {
  if (quadrature_points < 2)
    throw std::invalid_argument("integral_representation_check: need >= 2 points");
  f.validate();
  if (r < f.r_min() || r > f.r_max())
    throw std::out_of_range("integral_representation_check: r outside range");

  IntegralCheck out;
  out.lhs = pepr_curve(f, r);
  if (r == f.r_min()) {
    out.rhs = f.p0();
    out.abs_error = std::fabs(out.lhs - out.rhs);
    return out;
  }

  const double lo = f.r_min();
  const double h = (r - lo) / (quadrature_points - 1);
  double gain = 0.0, discount = 0.0;
  for (int i = 0; i < quadrature_points; ++i) {
    const double t = lo + h * i;
    const double w = (i == 0 || i == quadrature_points - 1) ? 0.5 : 1.0;
    gain += w * derivative_unchecked(f, t) / (1.0 + t);
    discount += w * eval_unchecked(f, t) / ((1.0 + t) * (1.0 + t));
  }
  out.rhs = f.p0() + h * (gain - discount);
  out.abs_error = std::fabs(out.lhs - out.rhs);
  return out;
}

IsoclineGrid isocline_grid(int resolution) {
  if (resolution < 2) throw std::invalid_argument("isocline_grid: resolution < 2");
  IsoclineGrid grid;
  grid.r_axis.resize(resolution);
  grid.p_axis.resize(resolution);
  for (int i = 0; i < resolution; ++i) {
    grid.r_axis[i] = static_cast<double>(i) / (resolution - 1);
    grid.p_axis[i] = static_cast<double>(i) / (resolution - 1);
  }
  grid.values.assign(resolution, std::vector<double>(resolution));
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j)
      grid.values[i][j] = pepr(grid.r_axis[j], grid.p_axis[i]);
  return grid;
}

PerformanceCurve synth_curve(const SynthKind& kind, int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("synth_curve: n_samples < 2");

  auto eval = [&kind](double r) -> double {
    if (const auto* s = std::get_if<SaturatingExp>(&kind))
      return s->p0 + (s->p_max - s->p0) * (1.0 - std::exp(-s->rate * r));
    if (const auto* l = std::get_if<Linear>(&kind)) return l->p0 + l->slope * r;
    const auto& k = std::get<KinkedLinear>(kind);
    return std::min(k.cap, k.p0 + k.slope * r);
  };

  PerformanceCurve curve;
  curve.samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double r = static_cast<double>(i) / (n_samples - 1);
    const double p = eval(r);
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("synth_curve: parameterization exits [0,1]");
    curve.samples.emplace_back(r, p);
  }
  return curve;
}

}  // namespace pepr
