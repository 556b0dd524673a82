#pragma once

#include <string>
#include <vector>

#include "pepr/scoring.hpp"

namespace pepr {

struct TradeoffPoint {
  std::string label;
  double r = 0.0;  // normalized resource, minimize
  double p = 0.0;  // performance, maximize
};

struct DominatedPoint {
  TradeoffPoint point;
  TradeoffPoint witness;  // one point that dominates it
};

struct ParetoFront {
  std::vector<TradeoffPoint> frontier;
  std::vector<DominatedPoint> dominated;
};

/// Strict Pareto dominance: a is at least as good on both axes and strictly
/// better on one. Identical points do not dominate each other.
bool dominates(const TradeoffPoint& a, const TradeoffPoint& b);

/// Non-dominated subset via sort-on-r sweep, O(n log n).
ParetoFront pareto_front(std::vector<TradeoffPoint> points);

/// Frontier point maximizing pepr_alpha(r, p, alpha); ties to smallest r.
TradeoffPoint knee_point(const ParetoFront& front, const ScoreParams& params = {});

}  // namespace pepr
