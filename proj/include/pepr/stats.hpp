#pragma once

#include <string>
#include <vector>

#include "pepr/resource.hpp"

namespace pepr {

struct GroupComparison {
  std::string label_a;
  std::string label_b;
  std::vector<double> group_a;
  std::vector<double> group_b;
  double median_a = 0.0;
  double median_b = 0.0;
  double t_statistic = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;
  bool degenerate = false;  // zero combined variance with equal means
};

struct MedianSplit {
  double threshold = 0.0;
  std::vector<RunRecord> small;  // key <= threshold
  std::vector<RunRecord> large;
};

double median(std::vector<double> values);

/// Splits on the median params_millions; records at the threshold go to the
/// small group.
MedianSplit median_split(const std::vector<RunRecord>& records);

/// Welch's unequal-variance two-sided t-test with Welch-Satterthwaite
/// degrees of freedom.
GroupComparison welch_t_test(const std::vector<double>& sample_a,
                             const std::vector<double>& sample_b);

/// Paired two-sided t-test (one-sample test on differences).
GroupComparison paired_t_test(const std::vector<double>& sample_a,
                              const std::vector<double>& sample_b);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta_reg(double x, double a, double b);

/// Two-sided Student-t p-value for statistic t at df degrees of freedom.
double student_t_two_sided_p(double t, double df);

}  // namespace pepr
