#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pepr/resource.hpp"

namespace pepr {

struct ScoreParams {
  double alpha = 1.0;  // >= 1
  std::optional<std::map<ResourceKind, double>> weights;  // convex, sum to 1

  void validate() const;
};

struct PeprScore {
  double value = 0.0;
  double performance = 0.0;
  double normalized_resource = 0.0;
  std::string variant;  // "PePR-E", "PePR-M", "weighted", ...
  ScoreParams params;
};

struct LeaderboardEntry {
  std::string model_id;
  double performance = 0.0;
  std::map<ResourceKind, double> resources;  // absolute costs
  RunTags tags;
  PeprScore score;
};

/// Entries sorted descending by score value; ties broken by lower
/// normalized resource, then lexicographic model id.
struct Leaderboard {
  std::vector<LeaderboardEntry> entries;
};

/// Eq-style score P/(1+R), both arguments normalized to [0,1].
double pepr(double normalized_resource, double performance);

/// alpha * P / (alpha + R); alpha >= 1, reduces to pepr at alpha = 1.
double pepr_alpha(double normalized_resource, double performance, double alpha);

/// P / (1 + sum_i w_i * R_i) over several resource kinds with convex weights.
double pepr_weighted(const std::map<ResourceKind, double>& normalized,
                     double performance,
                     const std::map<ResourceKind, double>& weights);

std::string variant_label(ResourceKind kind);

Leaderboard score_experiment(const ExperimentSet& set, ResourceKind kind,
                             const ScoreParams& params = {});

/// Weighted multi-resource scoring of a whole set (alpha not supported here).
Leaderboard score_experiment_weighted(const ExperimentSet& set,
                                      const std::map<ResourceKind, double>& weights);

}  // namespace pepr
