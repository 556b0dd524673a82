#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pepr/bundled.hpp"
#include "pepr/curves.hpp"
#include "pepr/frontier.hpp"
#include "pepr/scoring.hpp"
#include "pepr/stats.hpp"

namespace pepr {

enum class FileFormat { CSV, JSON, Markdown };

/// Run records grouped per dataset, each group with its own MinMaxOverSet
/// contexts (normalization is always within one experiment).
struct ExperimentCollection {
  std::map<std::string, ExperimentSet> by_dataset;

  std::vector<RunRecord> all_records() const;
  const ExperimentSet& only() const;  // throws unless exactly one dataset
};

struct FitResult {
  double e_min = 0.0;
  double e_max = 0.0;
  std::vector<double> residuals;  // |reported - recomputed| per row
  double max_residual = 0.0;
};

ExperimentCollection ingest_runs(const std::filesystem::path& path, FileFormat format);
ExperimentCollection ingest_runs_text(const std::string& text, FileFormat format);

/// Epoch-indexed rows for one model turned into a performance curve; the
/// cumulative resource is min-max rescaled to [0,1].
PerformanceCurve ingest_curve(const std::filesystem::path& path,
                              const std::string& model_id, ResourceKind kind);
PerformanceCurve ingest_curve_text(const std::string& text,
                                   const std::string& model_id, ResourceKind kind);

/// Recovers the unpublished energy normalization bounds of a published
/// block by least squares: coarse grid (0.1 Wh steps, e_min in [0, min E],
/// e_max in [max E, 500]) then local grid refinement.
FitResult fit_normalization_bounds(const std::vector<BenchRow>& block);

std::string emit_runs(const ExperimentCollection& runs, FileFormat format);
std::string emit_leaderboard(const Leaderboard& board, FileFormat format);

std::string isocline_csv(const IsoclineGrid& grid);
std::string scatter_csv(const std::vector<TradeoffPoint>& points,
                        const ParetoFront& front);
std::string score_bars_csv(const Leaderboard& board);

struct Report {
  std::vector<std::pair<std::string, Leaderboard>> leaderboards;  // per dataset
  ParetoFront frontier;
  std::vector<std::pair<std::string, GroupComparison>> comparisons;
  std::map<std::string, FitResult> fitted_bounds;  // per block
};

std::string emit_report_json(const Report& report);
std::string emit_report_markdown(const Report& report);

/// Writes via a temp file in the same directory, then renames.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace pepr
