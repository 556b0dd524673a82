#include "pepr/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pepr {

namespace {

// Continued fraction for the incomplete beta function, modified Lentz.
double ibeta_cf(double x, double a, double b) {
  const double tiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h;
}

double sample_mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_var(const std::vector<double>& xs, double mean) {
  double s = 0.0;
  for (double x : xs) s += (x - mean) * (x - mean);
  return s / static_cast<double>(xs.size() - 1);
}

}  // namespace

double incomplete_beta_reg(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0))
    throw std::invalid_argument("incomplete_beta_reg: a, b must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front =
      std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
               a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * ibeta_cf(x, a, b) / a;
  return 1.0 - front * ibeta_cf(1.0 - x, b, a) / b;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("student_t_two_sided_p: df <= 0");
  return incomplete_beta_reg(df / (df + t * t), df / 2.0, 0.5);
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

MedianSplit median_split(const std::vector<RunRecord>& records) {
  if (records.size() < 2)
    throw std::invalid_argument("median_split: needs >= 2 records");
  std::vector<double> keys;
  keys.reserve(records.size());
  for (const auto& rec : records) {
    if (!std::isfinite(rec.tags.params_millions))
      throw std::invalid_argument("median_split: missing params for " + rec.model_id);
    keys.push_back(rec.tags.params_millions);
  }
  MedianSplit out;
  out.threshold = median(keys);
  for (const auto& rec : records) {
    if (rec.tags.params_millions <= out.threshold)
      out.small.push_back(rec);
    else
      out.large.push_back(rec);
  }
  return out;
}

GroupComparison welch_t_test(const std::vector<double>& sample_a,
                             const std::vector<double>& sample_b) {
  if (sample_a.size() < 2 || sample_b.size() < 2)
    throw std::invalid_argument("welch_t_test: each sample needs >= 2 values");

  GroupComparison out;
  out.group_a = sample_a;
  out.group_b = sample_b;
  out.median_a = median(sample_a);
  out.median_b = median(sample_b);

  const double na = static_cast<double>(sample_a.size());
  const double nb = static_cast<double>(sample_b.size());
  const double ma = sample_mean(sample_a), mb = sample_mean(sample_b);
  const double va = sample_var(sample_a, ma), vb = sample_var(sample_b, mb);
  const double se2 = va / na + vb / nb;
  auto flat = [](const std::vector<double>& s) {
    for (double v : s)
      if (v != s.front()) return false;
    return true;
  };
  // Zero combined variance: p = 1 with equal means, by convention. Checked
  // on the raw values so rounding in the mean cannot hide the case.
  if (se2 == 0.0 || (flat(sample_a) && flat(sample_b))) {
    out.degenerate = true;
    out.degrees_of_freedom = na + nb - 2.0;
    if (sample_a.front() == sample_b.front()) {
      out.t_statistic = 0.0;
      out.p_value = 1.0;
    } else {
      out.t_statistic = sample_a.front() > sample_b.front()
                            ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
      out.p_value = 0.0;
    }
    return out;
  }
  out.t_statistic = (ma - mb) / std::sqrt(se2);
  out.degrees_of_freedom =
      se2 * se2 /
      ((va / na) * (va / na) / (na - 1.0) + (vb / nb) * (vb / nb) / (nb - 1.0));
  out.p_value = student_t_two_sided_p(out.t_statistic, out.degrees_of_freedom);
  return out;
}

GroupComparison paired_t_test(const std::vector<double>& sample_a,
                              const std::vector<double>& sample_b) {
  if (sample_a.size() != sample_b.size())
    throw std::invalid_argument("paired_t_test: samples must have equal size");
  if (sample_a.size() < 2)
    throw std::invalid_argument("paired_t_test: needs >= 2 pairs");

  std::vector<double> diff(sample_a.size());
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = sample_a[i] - sample_b[i];

  GroupComparison out;
  out.group_a = sample_a;
  out.group_b = sample_b;
  out.median_a = median(sample_a);
  out.median_b = median(sample_b);

  const double n = static_cast<double>(diff.size());
  const double m = sample_mean(diff);
  const double v = sample_var(diff, m);
  out.degrees_of_freedom = n - 1.0;
  if (v == 0.0) {
    out.degenerate = true;
    out.t_statistic = 0.0;
    out.p_value = m == 0.0 ? 1.0 : 0.0;
    return out;
  }
  out.t_statistic = m / std::sqrt(v / n);
  out.p_value = student_t_two_sided_p(out.t_statistic, out.degrees_of_freedom);
  return out;
}

}  // namespace pepr
