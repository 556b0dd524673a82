#include "pepr/scoring.hpp"

#include <algorithm>
#include <cmath>

namespace pepr {

namespace {
constexpr double kWeightSumTol = 1e-9;
}

void ScoreParams::validate() const {
  if (!(alpha >= 1.0))
    throw std::invalid_argument("score params: alpha must be >= 1");
  if (weights) {
    double sum = 0.0;
    for (const auto& [kind, w] : *weights) {
      if (w < 0.0)
        throw std::invalid_argument(std::string("score params: negative weight for ") +
                                    kind_name(kind));
      sum += w;
    }
    if (std::fabs(sum - 1.0) > kWeightSumTol)
      throw std::invalid_argument("score params: weights must sum to 1");
  }
}

double pepr(double normalized_resource, double performance) {
  if (!(normalized_resource >= 0.0 && normalized_resource <= 1.0))
    throw std::invalid_argument("pepr: R outside [0,1]");
  if (!(performance >= 0.0 && performance <= 1.0))
    throw std::invalid_argument("pepr: P outside [0,1]");
  return performance / (1.0 + normalized_resource);
}

double pepr_alpha(double normalized_resource, double performance, double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("pepr_alpha: alpha < 1");
  if (!(normalized_resource >= 0.0 && normalized_resource <= 1.0))
    throw std::invalid_argument("pepr_alpha: R outside [0,1]");
  if (!(performance >= 0.0 && performance <= 1.0))
    throw std::invalid_argument("pepr_alpha: P outside [0,1]");
  return alpha * performance / (alpha + normalized_resource);
}

double pepr_weighted(const std::map<ResourceKind, double>& normalized,
                     double performance,
                     const std::map<ResourceKind, double>& weights) {
  ScoreParams check;
  check.weights = weights;
  check.validate();
  if (!(performance >= 0.0 && performance <= 1.0))
    throw std::invalid_argument("pepr_weighted: P outside [0,1]");

  double weighted_r = 0.0;
  for (const auto& [kind, w] : weights) {
    auto it = normalized.find(kind);
    if (it == normalized.end())
      throw std::invalid_argument(std::string("pepr_weighted: missing resource ") +
                                  kind_name(kind));
    if (!(it->second >= 0.0 && it->second <= 1.0))
      throw std::invalid_argument("pepr_weighted: R outside [0,1]");
    weighted_r += w * it->second;
  }
  return performance / (1.0 + weighted_r);
}

std::string variant_label(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::Energy: return "PePR-E";
    case ResourceKind::Carbon: return "PePR-C";
    case ResourceKind::Memory: return "PePR-M";
    case ResourceKind::Time: return "PePR-T";
    case ResourceKind::DataFraction: return "PePR-D";
    case ResourceKind::Params: return "PePR-P";
  }
  return "PePR";
}

namespace {

void sort_board(Leaderboard& board) {
  std::stable_sort(board.entries.begin(), board.entries.end(),
                   [](const LeaderboardEntry& a, const LeaderboardEntry& b) {
                     if (a.score.value != b.score.value)
                       return a.score.value > b.score.value;
                     if (a.score.normalized_resource != b.score.normalized_resource)
                       return a.score.normalized_resource < b.score.normalized_resource;
                     return a.model_id < b.model_id;
                   });
}

}  // namespace

Leaderboard score_experiment(const ExperimentSet& set, ResourceKind kind,
                             const ScoreParams& params) {
  params.validate();
  if (set.records.empty()) throw std::invalid_argument("score_experiment: empty set");
  const auto& ctx = set.context(kind);

  Leaderboard board;
  for (const auto& rec : set.records) {
    const double r = normalize(rec.resource(kind), ctx).value;
    LeaderboardEntry entry;
    entry.model_id = rec.model_id;
    entry.performance = rec.performance;
    entry.resources = rec.resources;
    entry.tags = rec.tags;
    entry.score.value = pepr_alpha(r, rec.performance, params.alpha);
    entry.score.performance = rec.performance;
    entry.score.normalized_resource = r;
    entry.score.variant = variant_label(kind);
    entry.score.params = params;
    board.entries.push_back(std::move(entry));
  }
  sort_board(board);
  return board;
}

Leaderboard score_experiment_weighted(const ExperimentSet& set,
                                      const std::map<ResourceKind, double>& weights) {
  if (set.records.empty())
    throw std::invalid_argument("score_experiment_weighted: empty set");

  Leaderboard board;
  for (const auto& rec : set.records) {
    std::map<ResourceKind, double> normalized;
    double weighted_r = 0.0;
    for (const auto& [kind, w] : weights) {
      const double r = normalize(rec.resource(kind), set.context(kind)).value;
      normalized[kind] = r;
      weighted_r += w * r;
    }
    LeaderboardEntry entry;
    entry.model_id = rec.model_id;
    entry.performance = rec.performance;
    entry.resources = rec.resources;
    entry.tags = rec.tags;
    entry.score.value = pepr_weighted(normalized, rec.performance, weights);
    entry.score.performance = rec.performance;
    entry.score.normalized_resource = weighted_r;
    entry.score.variant = "weighted";
    entry.score.params.weights = weights;
    board.entries.push_back(std::move(entry));
  }
  sort_board(board);
  return board;
}

}  // namespace pepr
