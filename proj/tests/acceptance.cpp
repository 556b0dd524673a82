// Acceptance suite: one criterion per invocation (argv[1] in 1..9), or all
// when run without arguments. Prints one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
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

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::printf("    FAILED: %s\n", what.c_str());
  }
}

RunRecord run(const std::string& id, double energy, double perf) {
  RunRecord rec;
  rec.model_id = id;
  rec.dataset_id = "d";
  rec.performance = perf;
  rec.resources[ResourceKind::Energy] = energy;
  return rec;
}

// 1. alpha worked examples.
void criterion1() {
  expect(pepr_alpha(1.0, 1.0, 1.0) == 0.5, "pepr_alpha(1,1,1) == 0.5 exactly");
  expect(std::fabs(pepr_alpha(1.0, 1.0, 100.0) - 0.990099) <= 5e-3,
         "pepr_alpha(1,1,100) near 0.99");
}

// 2. Published-table consistency: bounds fit and rerank per block.
void criterion2() {
  for (const auto& name : {"table2_derma_npt", "table2_derma", "table2_lidc",
                           "table2_pneumonia"}) {
    const auto& block = bundled_block(name);
    const auto fit = fit_normalization_bounds(block);
    expect(fit.max_residual <= 0.01,
           std::string(name) + ": max residual " +
               std::to_string(fit.max_residual) + " <= 0.01");

    auto set = make_experiment_set(bundled_records(name));
    set.contexts[ResourceKind::Energy] =
        fixed_context(ResourceKind::Energy, fit.e_min, fit.e_max);
    auto board = score_experiment(set, ResourceKind::Energy);
    bool order_ok = true;
    for (size_t i = 0; i < 5; ++i)
      if (board.entries[i].model_id != block[i].model) order_ok = false;
    std::string got;
    for (size_t i = 0; i < 5; ++i) got += board.entries[i].model_id + " ";
    expect(order_ok, std::string(name) + ": recomputed top-5 order (got: " + got +
                         ") matches the published rows");
  }
}

// 3. Feature contracts, 10 000 randomized cases each.
void criterion3() {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const double p = unit(rng);
    expect(pepr::pepr(0.0, p) == p, "pepr::pepr(0, P) == P");
  }
  for (int i = 0; i < n; ++i) {
    const double p0 = unit(rng), p1 = unit(rng);
    const double e0 = 1.0 + 10.0 * unit(rng);
    const double e1 = e0 + 1.0 + 10.0 * unit(rng);
    auto board = score_experiment(
        make_experiment_set({run("cheap", e0, p0), run("big", e1, p1)}),
        ResourceKind::Energy);
    double cheap_score = 0.0, big_score = 0.0;
    for (const auto& entry : board.entries)
      (entry.model_id == "cheap" ? cheap_score : big_score) = entry.score.value;
    expect(cheap_score == p0 && big_score == p1 / 2.0,
           "two-model scores are {P0, P1/2}");
  }
  for (int i = 0; i < n; ++i) {
    const double p = unit(rng);
    auto board = score_experiment(
        make_experiment_set({run("only", 1.0 + 10.0 * unit(rng), p)}),
        ResourceKind::Energy);
    expect(board.entries[0].score.value == p, "single-model score == P");
  }
  for (int i = 0; i < n; ++i) {
    const double r = unit(rng) * 0.99, p = 0.01 + 0.98 * unit(rng);
    const double dr = 1e-3 + unit(rng) * (1.0 - r - 1e-3) * 0.0;
    expect(pepr::pepr(r + 0.005, p) < pepr::pepr(r, p), "strictly decreasing in R");
    expect(pepr::pepr(r, p + 0.005) > pepr::pepr(r, p), "strictly increasing in P");
    (void)dr;
  }
}

// 4. Curve theory on 50 randomized synthetic curves.
void criterion4() {
  std::mt19937 rng(103);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double p0 = 0.2 + 0.4 * unit(rng);
    PerformanceCurve f;
    if (trial % 2 == 0)
      f = synth_curve(SaturatingExp{p0, p0 + (1.0 - p0) * (0.5 + 0.5 * unit(rng)),
                                    0.5 + 2.5 * unit(rng)}, 2001);
    else
      f = synth_curve(KinkedLinear{p0, 1.1 + 1.1 * unit(rng),
                                   p0 + (1.0 - p0) * (0.5 + 0.5 * unit(rng))},
                      2001);

    // (a) maximum at least the zero-cost performance
    const auto star = peprc_star(f);
    expect(star.value >= f.p0() - 1e-12, "PePRc* >= f(0)");

    // (b) guaranteed slopes on classified grid intervals
    const double slow = f.p0() / 2.0;
    const int grid = 401;
    for (int i = 0; i + 1 < grid; ++i) {
      const double a = static_cast<double>(i) / (grid - 1);
      const double b = static_cast<double>(i + 1) / (grid - 1);
      const double da = curve_derivative(f, a), db = curve_derivative(f, b);
      const double va = pepr_curve(f, a), vb = pepr_curve(f, b);
      if (da > 1.0 && db > 1.0)
        expect(vb > va, "PePRc strictly increases where f' > 1");
      else if (da < slow && db < slow)
        expect(vb < va, "PePRc strictly decreases where f' < f(0)/2");
    }

    // (c) integral representation at 10 000 quadrature points
    const auto check = integral_representation_check(f, 1.0, 10000);
    expect(check.abs_error <= 1e-6,
           "integral representation error " + std::to_string(check.abs_error) +
               " <= 1e-6");

    // (d) footnote bound
    for (int i = 0; i <= 200; ++i) {
      const double r = i / 200.0;
      const double ratio = eval_curve(f, r) / (1.0 + r);
      expect(ratio >= f.p0() / 2.0 - 1e-12 && ratio <= 1.0 + 1e-12,
             "footnote bound f(0)/2 <= f(r)/(1+r) <= 1");
    }
  }
}

// 5. Pareto sweep vs brute force, 1 000 instances up to n = 200.
void criterion5() {
  std::mt19937 rng(107);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> size(1, 200);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<TradeoffPoint> pts;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) {
      double r = unit(rng), p = unit(rng);
      if (trial % 4 == 0) {  // quantized clouds exercise ties
        r = std::round(r * 16) / 16.0;
        p = std::round(p * 16) / 16.0;
      }
      pts.push_back({"m" + std::to_string(i), r, p});
    }
    auto fast = pareto_front(pts);
    std::vector<std::string> brute;
    for (const auto& candidate : pts) {
      bool dominated = false;
      for (const auto& other : pts)
        if (dominates(other, candidate)) { dominated = true; break; }
      if (!dominated) brute.push_back(candidate.label);
    }
    std::vector<std::string> sweep;
    for (const auto& pt : fast.frontier) sweep.push_back(pt.label);
    std::sort(brute.begin(), brute.end());
    std::sort(sweep.begin(), sweep.end());
    expect(brute == sweep, "sweep frontier equals brute-force set");
  }
}

// 6. Knee point alignment with the global score maximizer.
void criterion6() {
  std::mt19937 rng(109);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<TradeoffPoint> pts;
    const int n = 5 + static_cast<int>(unit(rng) * 100);
    for (int i = 0; i < n; ++i)
      pts.push_back({"m" + std::to_string(i), unit(rng), 0.01 + 0.99 * unit(rng)});

    const TradeoffPoint* global = &pts[0];
    for (const auto& pt : pts)
      if (pepr::pepr(pt.r, pt.p) > pepr::pepr(global->r, global->p)) global = &pt;

    bool global_dominated = false;
    for (const auto& pt : pts)
      if (dominates(pt, *global)) global_dominated = true;
    expect(!global_dominated, "the score-maximizing point is never dominated");

    auto knee = knee_point(pareto_front(pts));
    expect(knee.label == global->label,
           "knee point equals the global score maximizer");
  }
}

// 7. Statistics reference cases.
void criterion7() {
  auto c1 = welch_t_test({0.8, 0.82, 0.81, 0.79}, {0.70, 0.72, 0.71, 0.69});
  expect(std::fabs(c1.t_statistic - 10.95445115010334) <= 1e-9, "case 1 t");
  expect(std::fabs(c1.p_value - 3.4364028076121247e-05) <= 1e-9, "case 1 p");
  auto c2 = welch_t_test({1.0, 2.0, 3.0, 4.0, 5.0}, {2.0, 2.5, 3.0, 3.5});
  expect(std::fabs(c2.t_statistic - 0.32163376045133846) <= 1e-9, "case 2 t");
  expect(std::fabs(c2.p_value - 0.7595555254247377) <= 1e-9, "case 2 p");
  auto c3 = welch_t_test({0.5, 0.6, 0.55}, {0.52, 0.58, 0.61, 0.49, 0.53});
  expect(std::fabs(c3.t_statistic - 0.11096849635446489) <= 1e-9, "case 3 t");
  expect(std::fabs(c3.p_value - 0.9167381240590409) <= 1e-9, "case 3 p");
  auto same = welch_t_test({0.3, 0.3, 0.3}, {0.3, 0.3, 0.3});
  expect(same.p_value == 1.0 && same.t_statistic == 0.0,
         "identical samples give t = 0, p = 1");
}

// 8. Bundled model table composition and median split.
void criterion8() {
  const auto& models = bundled_models();
  int cnn = 0, efficient = 0;
  for (const auto& m : models) {
    if (m.arch_class == ArchClass::CNN) ++cnn;
    if (m.efficient) ++efficient;
  }
  expect(models.size() == 131, "131 bundled models");
  expect(cnn == 80 && models.size() - cnn == 51, "80 CNN / 51 Other");
  expect(efficient == 31 && models.size() - efficient == 100,
         "31 Efficient / 100 Not");
  auto split = median_split(bundled_records("table3_models"));
  expect(split.threshold >= 23.8 && split.threshold <= 24.7,
         "median threshold brackets the published 24.6M");
}

// 9. CSV and JSON ingest/emit round trips.
void criterion9() {
  ExperimentCollection runs;
  for (const auto& name : {"table2_derma", "table2_lidc"})
    runs.by_dataset.emplace(name, make_experiment_set(bundled_records(name)));

  for (auto format : {FileFormat::CSV, FileFormat::JSON}) {
    auto text = emit_runs(runs, format);
    auto again = ingest_runs_text(text, format);
    auto twice = ingest_runs_text(emit_runs(again, format), format);
    const auto a = again.all_records();
    const auto b = runs.all_records();
    bool same = a.size() == b.size();
    for (size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].model_id == b[i].model_id &&
             std::fabs(a[i].performance - b[i].performance) <=
                 1e-9 * std::max(1.0, std::fabs(b[i].performance));
      for (const auto& [kind, value] : b[i].resources) {
        same = same && a[i].resources.count(kind) &&
               std::fabs(a[i].resources.at(kind) - value) <=
                   1e-9 * std::max(1.0, std::fabs(value));
      }
    }
    expect(same, "round trip preserves records at 9 significant digits");
    expect(emit_runs(again, format) == emit_runs(twice, format),
           "emit is stable after one round trip");
  }
}

struct Criterion {
  int id;
  const char* name;
  void (*fn)();
};

const Criterion kCriteria[] = {
    {1, "alpha worked examples", criterion1},
    {2, "published-table consistency (bounds fit + rerank)", criterion2},
    {3, "feature contracts, 10k randomized cases", criterion3},
    {4, "curve theory on randomized synthetic curves", criterion4},
    {5, "pareto sweep vs brute force", criterion5},
    {6, "knee point / score-maximizer alignment", criterion6},
    {7, "statistics reference cases", criterion7},
    {8, "bundled model table composition", criterion8},
    {9, "ingest/emit round trips", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = argc > 1 ? std::atoi(argv[1]) : 0;
  int total_failures = 0;
  for (const auto& criterion : kCriteria) {
    if (selected != 0 && criterion.id != selected) continue;
    failures = 0;
    criterion.fn();
    std::printf("criterion %d: %s - %s\n", criterion.id,
                failures == 0 ? "PASS" : "FAIL", criterion.name);
    total_failures += failures;
  }
  return total_failures == 0 ? 0 : 1;
}
