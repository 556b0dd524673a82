#include "pepr/frontier.hpp"

#include <algorithm>
#include <stdexcept>

namespace pepr {

bool dominates(const TradeoffPoint& a, const TradeoffPoint& b) {
  return a.p >= b.p && a.r <= b.r && (a.p > b.p || a.r < b.r);
}

ParetoFront pareto_front(std::vector<TradeoffPoint> points) {
  if (points.empty()) throw std::invalid_argument("pareto_front: empty input");
  for (const auto& pt : points) {
    if (!(pt.r >= 0.0 && pt.r <= 1.0 && pt.p >= 0.0 && pt.p <= 1.0))
      throw std::invalid_argument("pareto_front: point outside unit square");
  }

  // Sort by r ascending, p descending. After the sort, a point can only be
  // dominated by a predecessor.
  std::vector<size_t> order(points.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&points](size_t i, size_t j) {
    if (points[i].r != points[j].r) return points[i].r < points[j].r;
    return points[i].p > points[j].p;
  });

  ParetoFront out;
  // Best point among those with strictly smaller r.
  bool have_left = false;
  TradeoffPoint best_left;
  // Best point in the current equal-r run.
  double run_r = -1.0;
  bool have_run = false;
  TradeoffPoint best_run;

  for (size_t idx : order) {
    const TradeoffPoint& pt = points[idx];
    if (pt.r != run_r) {
      if (have_run && (!have_left || best_run.p > best_left.p))
        best_left = best_run, have_left = true;
      run_r = pt.r;
      have_run = false;
    }
    if (have_left && best_left.p >= pt.p) {
      // best_left has strictly smaller r, so it dominates.
      out.dominated.push_back({pt, best_left});
    } else if (have_run && best_run.p > pt.p) {
      // Same r, strictly better p.
      out.dominated.push_back({pt, best_run});
    } else {
      out.frontier.push_back(pt);
    }
    if (!have_run || pt.p > best_run.p) best_run = pt, have_run = true;
  }
  return out;
}

TradeoffPoint knee_point(const ParetoFront& front, const ScoreParams& params) {
  params.validate();
  if (front.frontier.empty())
    throw std::invalid_argument("knee_point: empty frontier");

  const TradeoffPoint* best = nullptr;
  double best_score = -1.0;
  for (const auto& pt : front.frontier) {
    const double s = pepr_alpha(pt.r, pt.p, params.alpha);
    if (best == nullptr || s > best_score ||
        (s == best_score && pt.r < best->r)) {
      best = &pt;
      best_score = s;
    }
  }
  return *best;
}

}  // namespace pepr
