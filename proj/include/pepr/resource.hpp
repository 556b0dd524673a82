#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pepr {

/// Resource kinds and their fixed units. No unit conversion happens anywhere
/// in the library; callers supply values in the unit listed here.
enum class ResourceKind {
  Energy,        // Wh
  Carbon,        // kgCO2eq
  Memory,        // GB
  Time,          // s
  DataFraction,  // unitless, already in [0,1]
  Params,        // millions of trainable parameters
};

const char* kind_name(ResourceKind kind);
const char* kind_unit(ResourceKind kind);
std::optional<ResourceKind> parse_kind(const std::string& name);

enum class ArchClass { CNN, Other };

struct RunTags {
  ArchClass arch_class = ArchClass::Other;
  bool efficient = false;
  double params_millions = 0.0;
};

/// One (model, dataset) benchmark observation.
struct RunRecord {
  std::string model_id;
  std::string dataset_id;
  double performance = 0.0;  // in [0,1]
  std::map<ResourceKind, double> resources;  // absolute costs, >= 0
  RunTags tags;
  std::optional<double> epoch;  // present for learning-curve rows

  void validate() const;
  bool has(ResourceKind kind) const { return resources.count(kind) > 0; }
  double resource(ResourceKind kind) const;
};

enum class NormStrategy { MinMaxOverSet, FixedBounds, PercentileClamped };

/// Maps absolute resource costs of one kind into [0,1].
struct NormalizationContext {
  ResourceKind kind = ResourceKind::Energy;
  double r_min = 0.0;
  double r_max = 0.0;
  NormStrategy strategy = NormStrategy::MinMaxOverSet;
  double lo_pct = 0.0;  // PercentileClamped only
  double hi_pct = 100.0;
};

struct NormalizedValue {
  double value = 0.0;
  bool clamped = false;  // input fell outside [r_min, r_max]
};

struct ExperimentSet {
  std::vector<RunRecord> records;
  std::map<ResourceKind, NormalizationContext> contexts;

  const NormalizationContext& context(ResourceKind kind) const;
};

/// Linear-interpolated order statistic, pct in [0,100]. Matches the
/// "linear" convention: rank = pct/100 * (n-1).
double percentile(std::vector<double> values, double pct);

NormalizationContext build_context(const std::vector<RunRecord>& records,
                                   ResourceKind kind, NormStrategy strategy,
                                   double lo_pct = 0.0, double hi_pct = 100.0);

/// FixedBounds variant; bounds are stored verbatim.
NormalizationContext fixed_context(ResourceKind kind, double r_min, double r_max);

/// (r_abs - r_min) / (r_max - r_min), clamped to [0,1]. Degenerate
/// r_min == r_max maps everything to 0.
NormalizedValue normalize(double r_abs, const NormalizationContext& ctx);

/// Builds MinMaxOverSet contexts for every kind present in all records.
ExperimentSet make_experiment_set(std::vector<RunRecord> records);

}  // namespace pepr
