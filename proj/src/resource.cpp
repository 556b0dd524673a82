#include "pepr/resource.hpp"

#include <algorithm>
#include <cmath>

namespace pepr {

const char* kind_name(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::Energy: return "energy";
    case ResourceKind::Carbon: return "carbon";
    case ResourceKind::Memory: return "memory";
    case ResourceKind::Time: return "time";
    case ResourceKind::DataFraction: return "data";
    case ResourceKind::Params: return "params";
  }
  return "?";
}

const char* kind_unit(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::Energy: return "Wh";
    case ResourceKind::Carbon: return "kgCO2eq";
    case ResourceKind::Memory: return "GB";
    case ResourceKind::Time: return "s";
    case ResourceKind::DataFraction: return "";
    case ResourceKind::Params: return "M";
  }
  return "?";
}

std::optional<ResourceKind> parse_kind(const std::string& name) {
  static const std::map<std::string, ResourceKind> table = {
      {"energy", ResourceKind::Energy},   {"carbon", ResourceKind::Carbon},
      {"memory", ResourceKind::Memory},   {"time", ResourceKind::Time},
      {"data", ResourceKind::DataFraction}, {"params", ResourceKind::Params},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

void RunRecord::validate() const {
  if (model_id.empty()) throw std::invalid_argument("run record: empty model_id");
  if (dataset_id.empty()) throw std::invalid_argument("run record: empty dataset_id");
  if (!(performance >= 0.0 && performance <= 1.0))
    throw std::invalid_argument("run record " + model_id +
                                ": performance outside [0,1]");
  for (const auto& [kind, value] : resources) {
    if (!std::isfinite(value) || value < 0.0)
      throw std::invalid_argument("run record " + model_id + ": resource " +
                                  kind_name(kind) + " must be finite and >= 0");
  }
}

double RunRecord::resource(ResourceKind kind) const {
  auto it = resources.find(kind);
  if (it == resources.end())
    throw std::invalid_argument("record " + model_id + " has no " +
                                kind_name(kind) + " value");
  return it->second;
}

const NormalizationContext& ExperimentSet::context(ResourceKind kind) const {
  auto it = contexts.find(kind);
  if (it == contexts.end())
    throw std::invalid_argument(std::string("no normalization context for ") +
                                kind_name(kind));
  return it->second;
}

double percentile(std::vector<double> values, double pct) {
  if (values.empty()) throw std::invalid_argument("percentile of empty set");
  if (!(pct >= 0.0 && pct <= 100.0))
    throw std::invalid_argument("percentile outside [0,100]");
  std::sort(values.begin(), values.end());
  const double rank = pct / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<size_t>(std::floor(rank));
  const auto hi = static_cast<size_t>(std::ceil(rank));
  const double frac = rank - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

NormalizationContext build_context(const std::vector<RunRecord>& records,
                                   ResourceKind kind, NormStrategy strategy,
                                   double lo_pct, double hi_pct) {
  if (records.empty())
    throw std::invalid_argument("build_context: empty record collection");
  if (strategy == NormStrategy::FixedBounds)
    throw std::invalid_argument("build_context: use fixed_context for FixedBounds");

  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& rec : records) values.push_back(rec.resource(kind));

  NormalizationContext ctx;
  ctx.kind = kind;
  ctx.strategy = strategy;
  if (strategy == NormStrategy::MinMaxOverSet) {
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    ctx.r_min = *mn;
    ctx.r_max = *mx;
  } else {  // PercentileClamped
    if (!(lo_pct <= hi_pct))
      throw std::invalid_argument("build_context: lo_pct > hi_pct");
    ctx.lo_pct = lo_pct;
    ctx.hi_pct = hi_pct;
    ctx.r_min = percentile(values, lo_pct);
    ctx.r_max = percentile(values, hi_pct);
  }
  return ctx;
}

NormalizationContext fixed_context(ResourceKind kind, double r_min, double r_max) {
  if (!(r_min <= r_max))
    throw std::invalid_argument("fixed_context: r_min > r_max");
  NormalizationContext ctx;
  ctx.kind = kind;
  ctx.strategy = NormStrategy::FixedBounds;
  ctx.r_min = r_min;
  ctx.r_max = r_max;
  return ctx;
}

NormalizedValue normalize(double r_abs, const NormalizationContext& ctx) {
  if (!std::isfinite(r_abs))
    throw std::invalid_argument("normalize: non-finite input");
  if (ctx.r_min == ctx.r_max) return {0.0, false};
  const double raw = (r_abs - ctx.r_min) / (ctx.r_max - ctx.r_min);
  NormalizedValue out;
  out.clamped = raw < 0.0 || raw > 1.0;
  out.value = std::clamp(raw, 0.0, 1.0);
  return out;
}

ExperimentSet make_experiment_set(std::vector<RunRecord> records) {
  if (records.empty())
    throw std::invalid_argument("experiment set: no records");
  for (const auto& rec : records) rec.validate();

  ExperimentSet set;
  set.records = std::move(records);
  // Contexts only for kinds carried by every record of the set.
  for (const auto& [kind, _] : set.records.front().resources) {
    bool everywhere = true;
    for (const auto& rec : set.records)
      if (!rec.has(kind)) { everywhere = false; break; }
    if (everywhere)
      set.contexts[kind] =
          build_context(set.records, kind, NormStrategy::MinMaxOverSet);
  }
  return set;
}

}  // namespace pepr
