// pepr: batch scoring and report generation over benchmark run files.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pepr/bundled.hpp"
#include "pepr/curves.hpp"
#include "pepr/frontier.hpp"
#include "pepr/io.hpp"
#include "pepr/scoring.hpp"
#include "pepr/stats.hpp"

using namespace pepr;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool use_color() {
  static const bool enabled = std::getenv("PEPR_NO_COLOR") == nullptr;
  return enabled;
}

std::string bold(const std::string& text) {
  return use_color() ? "\033[1m" + text + "\033[0m" : text;
}

struct Options {
  std::string input;
  std::string output;
  std::string format = "markdown";
  std::string resource = "energy";
  double alpha = 1.0;
  std::string weights;
  std::string strategy = "minmax";
  std::string bounds;
  int grid = 1001;
  bool paired = false;
  std::string model;  // curve subcommand
};

void add_common_flags(CLI::App* cmd, Options& opt, bool needs_input = true) {
  auto* input = cmd->add_option("--input", opt.input,
                                "Run file (CSV or JSON) or bundled set name");
  if (needs_input) input->required();
  cmd->add_option("--output", opt.output, "Write the result to this file");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  cmd->add_option("--resource", opt.resource, "Resource kind to score on")
      ->check(CLI::IsMember({"energy", "carbon", "memory", "time", "data",
                             "params"}));
  cmd->add_option("--alpha", opt.alpha, "Scaling factor, >= 1");
  cmd->add_option("--weights", opt.weights,
                  "Multi-resource weights, e.g. energy=0.5,memory=0.5");
  cmd->add_option("--strategy", opt.strategy, "Normalization strategy")
      ->check(CLI::IsMember({"minmax", "fixed", "clamp"}));
  cmd->add_option("--bounds", opt.bounds,
                  "lo,hi: fixed bounds or clamp percentiles");
  cmd->add_option("--grid", opt.grid, "Grid resolution");
  cmd->add_flag("--paired", opt.paired, "Use the paired test in compare");
}

ResourceKind resource_kind(const Options& opt) {
  auto kind = parse_kind(opt.resource);
  if (!kind) throw ConfigError("unknown resource kind: " + opt.resource);
  return *kind;
}

std::pair<double, double> parse_bounds(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ConfigError("--bounds expects lo,hi");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("--bounds expects numeric lo,hi");
  }
}

std::map<ResourceKind, double> parse_weights(const std::string& text) {
  std::map<ResourceKind, double> weights;
  size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const auto item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--weights expects kind=value pairs");
    auto kind = parse_kind(item.substr(0, eq));
    if (!kind) throw ConfigError("unknown resource kind in --weights: " + item);
    try {
      weights[*kind] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("non-numeric weight in --weights: " + item);
    }
    pos = comma + 1;
  }
  if (weights.empty()) throw ConfigError("--weights is empty");
  return weights;
}

FileFormat input_format(const std::string& path) {
  return std::filesystem::path(path).extension() == ".json" ? FileFormat::JSON
                                                            : FileFormat::CSV;
}

FileFormat output_format(const Options& opt) {
  if (opt.format == "csv") return FileFormat::CSV;
  if (opt.format == "json") return FileFormat::JSON;
  return FileFormat::Markdown;
}

ExperimentCollection load_runs(const Options& opt) {
  ExperimentCollection runs;
  if (is_bundled(opt.input)) {
    auto set = make_experiment_set(bundled_records(opt.input));
    // The published scores of the benchmark blocks were normalized within
    // the original full experiment, so default to the recovered bounds.
    if (opt.input != "table3_models") {
      auto fit = fit_normalization_bounds(bundled_block(opt.input));
      set.contexts[ResourceKind::Energy] =
          fixed_context(ResourceKind::Energy, fit.e_min, fit.e_max);
    }
    runs.by_dataset.emplace(opt.input, std::move(set));
    return runs;
  }
  return ingest_runs(opt.input, input_format(opt.input));
}

// Rebuilds the context of the selected kind per the strategy flags.
void apply_strategy(ExperimentSet& set, ResourceKind kind, const Options& opt) {
  if (opt.strategy == "minmax") {
    if (!opt.bounds.empty())
      throw ConfigError("--bounds requires --strategy fixed or clamp");
    return;
  }
  if (opt.strategy == "fixed") {
    if (opt.bounds.empty()) throw ConfigError("--strategy fixed needs --bounds");
    auto [lo, hi] = parse_bounds(opt.bounds);
    set.contexts[kind] = fixed_context(kind, lo, hi);
    return;
  }
  double lo = 1.0, hi = 99.0;
  if (!opt.bounds.empty()) std::tie(lo, hi) = parse_bounds(opt.bounds);
  set.contexts[kind] =
      build_context(set.records, kind, NormStrategy::PercentileClamped, lo, hi);
}

Leaderboard score_set(const ExperimentSet& set, const Options& opt) {
  if (!opt.weights.empty()) {
    if (opt.alpha != 1.0)
      throw ConfigError("--alpha and --weights cannot be combined");
    return score_experiment_weighted(set, parse_weights(opt.weights));
  }
  ScoreParams params;
  params.alpha = opt.alpha;
  return score_experiment(set, resource_kind(opt), params);
}

void write_result(const Options& opt, const std::string& text) {
  if (!opt.output.empty()) atomic_write(opt.output, text);
  std::cout << text;
}

int cmd_score(const Options& opt) {
  auto runs = load_runs(opt);
  const auto kind = resource_kind(opt);
  std::string out;
  for (auto& [dataset, set] : runs.by_dataset) {
    apply_strategy(set, kind, opt);
    auto board = score_set(set, opt);
    if (runs.by_dataset.size() > 1) out += "## " + dataset + "\n\n";
    out += emit_leaderboard(board, output_format(opt));
    out += "\n";
  }
  write_result(opt, out);
  return 0;
}

int cmd_rank(const Options& opt) {
  auto runs = load_runs(opt);
  const auto kind = resource_kind(opt);
  // Mean score per model across datasets, models missing from a dataset
  // simply contribute fewer terms.
  std::map<std::string, std::pair<double, int>> sums;
  for (auto& [dataset, set] : runs.by_dataset) {
    apply_strategy(set, kind, opt);
    for (const auto& entry : score_set(set, opt).entries) {
      auto& slot = sums[entry.model_id];
      slot.first += entry.score.value;
      slot.second += 1;
    }
  }
  std::vector<std::pair<std::string, double>> rows;
  for (const auto& [model, slot] : sums)
    rows.emplace_back(model, slot.first / slot.second);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::string out = bold("mean PePR score across datasets") + "\n";
  char buf[64];
  for (const auto& [model, score] : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", score);
    out += model + "," + buf + "\n";
  }
  write_result(opt, out);
  return 0;
}

std::vector<TradeoffPoint> tradeoff_points(const ExperimentCollection& runs,
                                           ResourceKind kind,
                                           const Options& opt) {
  std::vector<TradeoffPoint> points;
  for (auto runs_copy = runs; auto& [dataset, set] : runs_copy.by_dataset) {
    apply_strategy(set, kind, opt);
    const auto& ctx = set.context(kind);
    for (const auto& rec : set.records) {
      const std::string label = runs_copy.by_dataset.size() > 1
                                    ? dataset + "/" + rec.model_id
                                    : rec.model_id;
      points.push_back(
          {label, normalize(rec.resource(kind), ctx).value, rec.performance});
    }
  }
  return points;
}

int cmd_pareto(const Options& opt) {
  auto runs = load_runs(opt);
  auto points = tradeoff_points(runs, resource_kind(opt), opt);
  auto front = pareto_front(points);
  ScoreParams params;
  params.alpha = opt.alpha;
  auto knee = knee_point(front, params);
  std::string out = bold("frontier") + "\n";
  char buf[96];
  for (const auto& pt : front.frontier) {
    std::snprintf(buf, sizeof buf, "%s,%.6f,%.6f%s\n", pt.label.c_str(), pt.r,
                  pt.p, pt.label == knee.label ? ",knee" : "");
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "knee: %s (score %.6f)\n", knee.label.c_str(),
                pepr_alpha(knee.r, knee.p, opt.alpha));
  out += buf;
  if (!opt.output.empty()) atomic_write(opt.output, scatter_csv(points, front));
  std::cout << out;
  return 0;
}

int cmd_curve(const Options& opt) {
  if (opt.model.empty()) throw ConfigError("--model is required for curve");
  const auto kind = resource_kind(opt);
  auto curve = ingest_curve(opt.input, opt.model, kind);
  auto star = peprc_star(curve, opt.grid);
  auto regions = diminishing_returns_regions(curve, opt.grid);
  char buf[128];
  std::string out = bold("PePRc for " + opt.model) + "\n";
  std::snprintf(buf, sizeof buf, "PePRc* = %.6f at r = %.6f (grid %d)\n",
                star.value, star.r_star, star.grid_resolution);
  out += buf;
  auto describe = [&](const char* name, const std::vector<Interval>& list) {
    for (const auto& iv : list) {
      std::snprintf(buf, sizeof buf, "%s: [%.4f, %.4f]\n", name, iv.lo, iv.hi);
      out += buf;
    }
  };
  describe("increase", regions.increase);
  describe("indeterminate", regions.indeterminate);
  describe("decrease", regions.decrease);
  write_result(opt, out);
  return 0;
}

int cmd_isoclines(const Options& opt) {
  write_result(opt, isocline_csv(isocline_grid(opt.grid)));
  return 0;
}

std::vector<std::pair<std::string, GroupComparison>> group_comparisons(
    const ExperimentCollection& runs, const Options& opt) {
  const auto kind = resource_kind(opt);
  std::vector<RunRecord> records;
  std::vector<double> scores;
  for (auto runs_copy = runs; auto& [dataset, set] : runs_copy.by_dataset) {
    apply_strategy(set, kind, opt);
    for (const auto& entry : score_set(set, opt).entries)
      for (const auto& rec : set.records)
        if (rec.model_id == entry.model_id) {
          records.push_back(rec);
          scores.push_back(entry.score.value);
        }
  }

  auto split_scores = [&](auto&& predicate) {
    std::pair<std::vector<double>, std::vector<double>> out;
    for (size_t i = 0; i < records.size(); ++i)
      (predicate(records[i]) ? out.first : out.second).push_back(scores[i]);
    return out;
  };
  auto test = [&](std::vector<double> a, std::vector<double> b) {
    return opt.paired ? paired_t_test(a, b) : welch_t_test(a, b);
  };

  std::vector<std::pair<std::string, GroupComparison>> comparisons;
  const auto threshold =
      median_split(records).threshold;  // throws if under 2 records
  auto [small, large] = split_scores([&](const RunRecord& rec) {
    return rec.tags.params_millions <= threshold;
  });
  if (small.size() >= 2 && large.size() >= 2) {
    auto cmp = test(small, large);
    cmp.label_a = "small-scale";
    cmp.label_b = "large-scale";
    comparisons.emplace_back("small_vs_large", cmp);
  }
  auto [cnn, other] = split_scores([](const RunRecord& rec) {
    return rec.tags.arch_class == ArchClass::CNN;
  });
  if (cnn.size() >= 2 && other.size() >= 2) {
    auto cmp = test(cnn, other);
    cmp.label_a = "cnn";
    cmp.label_b = "other";
    comparisons.emplace_back("cnn_vs_other", cmp);
  }
  auto [eff, rest] = split_scores(
      [](const RunRecord& rec) { return rec.tags.efficient; });
  if (eff.size() >= 2 && rest.size() >= 2) {
    auto cmp = test(eff, rest);
    cmp.label_a = "efficient";
    cmp.label_b = "standard";
    comparisons.emplace_back("efficient_vs_standard", cmp);
  }
  return comparisons;
}

int cmd_compare(const Options& opt) {
  auto comparisons = group_comparisons(load_runs(opt), opt);
  if (comparisons.empty())
    throw std::runtime_error("no group has at least two members per side");
  std::string out;
  char buf[160];
  for (const auto& [name, cmp] : comparisons) {
    std::snprintf(buf, sizeof buf,
                  "%s: median %s %.4f vs %s %.4f, t = %.4f, p = %.6f%s\n",
                  name.c_str(), cmp.label_a.c_str(), cmp.median_a,
                  cmp.label_b.c_str(), cmp.median_b, cmp.t_statistic,
                  cmp.p_value, cmp.degenerate ? " (degenerate)" : "");
    out += buf;
  }
  write_result(opt, out);
  return 0;
}

int cmd_fit_bounds(const Options& opt) {
  std::vector<std::string> names;
  if (opt.input.empty()) {
    for (const auto& name : bundled_names())
      if (name != "table3_models") names.push_back(name);
  } else if (is_bundled(opt.input) && opt.input != "table3_models") {
    names.push_back(opt.input);
  } else {
    throw ConfigError("fit-bounds expects a bundled benchmark block name");
  }
  std::string out;
  char buf[160];
  for (const auto& name : names) {
    auto fit = fit_normalization_bounds(bundled_block(name));
    std::snprintf(buf, sizeof buf,
                  "%s: e_min = %.4f Wh, e_max = %.4f Wh, max residual %.6f\n",
                  name.c_str(), fit.e_min, fit.e_max, fit.max_residual);
    out += buf;
  }
  write_result(opt, out);
  return 0;
}

int cmd_report(const Options& opt) {
  auto runs = load_runs(opt);
  const auto kind = resource_kind(opt);
  Report report;
  for (auto& [dataset, set] : runs.by_dataset) {
    apply_strategy(set, kind, opt);
    report.leaderboards.emplace_back(dataset, score_set(set, opt));
  }
  auto points = tradeoff_points(runs, kind, opt);
  report.frontier = pareto_front(points);
  try {
    report.comparisons = group_comparisons(runs, opt);
  } catch (const std::exception&) {
    // Too few records for any split; the report simply has no comparisons.
  }
  for (const auto& [dataset, set] : runs.by_dataset)
    if (is_bundled(dataset) && dataset != "table3_models")
      report.fitted_bounds[dataset] = fit_normalization_bounds(bundled_block(dataset));
  write_result(opt, opt.format == "json" ? emit_report_json(report)
                                         : emit_report_markdown(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Performance-per-resource scoring toolkit"};
  app.require_subcommand(1);

  Options opt;
  std::map<std::string, int (*)(const Options&)> handlers;

  add_common_flags(app.add_subcommand("score", "Rank one experiment set"), opt);
  handlers["score"] = cmd_score;
  add_common_flags(
      app.add_subcommand("rank", "Aggregate leaderboard across datasets"), opt);
  handlers["rank"] = cmd_rank;
  add_common_flags(
      app.add_subcommand("pareto", "Pareto frontier and knee point"), opt);
  handlers["pareto"] = cmd_pareto;
  auto* curve = app.add_subcommand("curve", "PePR along one learning curve");
  add_common_flags(curve, opt);
  curve->add_option("--model", opt.model, "Model id within the curve file");
  handlers["curve"] = cmd_curve;
  auto* iso = app.add_subcommand("isoclines", "Score grid for contour plots");
  add_common_flags(iso, opt, /*needs_input=*/false);
  handlers["isoclines"] = cmd_isoclines;
  add_common_flags(app.add_subcommand("compare", "Group median split and tests"),
                   opt);
  handlers["compare"] = cmd_compare;
  auto* fit = app.add_subcommand("fit-bounds",
                                 "Recover normalization bounds of bundled blocks");
  add_common_flags(fit, opt, /*needs_input=*/false);
  handlers["fit-bounds"] = cmd_fit_bounds;
  add_common_flags(app.add_subcommand("report", "Full analysis bundle"), opt);
  handlers["report"] = cmd_report;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const auto* sub = app.get_subcommands().front();
  if (opt.grid < 2) {
    std::cerr << "error: --grid must be at least 2\n";
    return 2;
  }
  if (sub->get_name() == "isoclines" && opt.grid == 1001) opt.grid = 101;
  try {
    return handlers.at(sub->get_name())(opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
