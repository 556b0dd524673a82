#include "pepr/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace pepr {

using nlohmann::json;

namespace {

// CSV dialect: comma separated, '.' decimal point, UTF-8, mandatory header,
// LF line endings, no quoting.
const std::vector<std::pair<std::string, ResourceKind>> kResourceColumns = {
    {"energy_wh", ResourceKind::Energy},   {"carbon_kg", ResourceKind::Carbon},
    {"memory_gb", ResourceKind::Memory},   {"time_s", ResourceKind::Time},
    {"data_fraction", ResourceKind::DataFraction},
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_number(const std::string& cell, const std::string& what, int line_no) {
  try {
    size_t pos = 0;
    const double value = std::stod(cell, &pos);
    if (pos != cell.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": non-numeric " +
                             what + " '" + cell + "'");
  }
}

bool parse_bool(const std::string& cell, const std::string& what, int line_no) {
  const std::string v = lower(cell);
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw std::runtime_error("line " + std::to_string(line_no) + ": bad " + what +
                           " '" + cell + "'");
}

std::string fmt9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string fmt4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

ExperimentCollection group_records(std::vector<RunRecord> records) {
  if (records.empty()) throw std::runtime_error("no records");
  std::map<std::string, std::vector<RunRecord>> groups;
  for (auto& rec : records) groups[rec.dataset_id].push_back(std::move(rec));
  ExperimentCollection out;
  for (auto& [dataset, recs] : groups)
    out.by_dataset.emplace(dataset, make_experiment_set(std::move(recs)));
  return out;
}

void check_duplicates(const std::vector<RunRecord>& records) {
  std::vector<std::string> keys;
  for (const auto& rec : records) {
    std::string key = rec.model_id + "\x1f" + rec.dataset_id;
    if (rec.epoch) key += "\x1f" + fmt9(*rec.epoch);
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end())
    throw std::runtime_error("duplicate (model_id, dataset_id, epoch) key: " + *dup);
}

std::vector<RunRecord> parse_csv_records(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("no records");

  const auto header = split_csv_line(line);
  std::map<std::string, size_t> columns;
  for (size_t i = 0; i < header.size(); ++i) columns[lower(header[i])] = i;
  for (const char* required : {"model_id", "dataset_id", "performance"})
    if (!columns.count(required))
      throw std::runtime_error(std::string("malformed header: missing column ") +
                               required);

  auto cell = [&](const std::vector<std::string>& row,
                  const std::string& name) -> std::string {
    auto it = columns.find(name);
    if (it == columns.end() || it->second >= row.size()) return "";
    return row[it->second];
  };

  std::vector<RunRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto row = split_csv_line(line);

    RunRecord rec;
    rec.model_id = cell(row, "model_id");
    rec.dataset_id = cell(row, "dataset_id");
    if (rec.model_id.empty() || rec.dataset_id.empty())
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": empty model_id or dataset_id");
    rec.performance = parse_number(cell(row, "performance"), "performance", line_no);
    if (!(rec.performance >= 0.0 && rec.performance <= 1.0))
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": performance outside [0,1]");
    for (const auto& [name, kind] : kResourceColumns) {
      const std::string v = cell(row, name);
      if (!v.empty()) rec.resources[kind] = parse_number(v, name, line_no);
    }
    const std::string params = cell(row, "params_millions");
    if (!params.empty()) {
      rec.tags.params_millions = parse_number(params, "params_millions", line_no);
      rec.resources[ResourceKind::Params] = rec.tags.params_millions;
    }
    const std::string arch = cell(row, "arch_class");
    if (!arch.empty())
      rec.tags.arch_class = lower(arch) == "cnn" ? ArchClass::CNN : ArchClass::Other;
    const std::string eff = cell(row, "efficient");
    if (!eff.empty()) rec.tags.efficient = parse_bool(eff, "efficient", line_no);
    const std::string epoch = cell(row, "epoch");
    if (!epoch.empty()) rec.epoch = parse_number(epoch, "epoch", line_no);
    rec.validate();
    records.push_back(std::move(rec));
  }
  check_duplicates(records);
  return records;
}

RunRecord record_from_json(const json& obj) {
  RunRecord rec;
  rec.model_id = obj.at("model_id").get<std::string>();
  rec.dataset_id = obj.at("dataset_id").get<std::string>();
  rec.performance = obj.at("performance").get<double>();
  if (!(rec.performance >= 0.0 && rec.performance <= 1.0))
    throw std::runtime_error("record " + rec.model_id + ": performance outside [0,1]");
  for (const auto& [name, kind] : kResourceColumns)
    if (obj.contains(name) && !obj[name].is_null())
      rec.resources[kind] = obj[name].get<double>();
  if (obj.contains("params_millions") && !obj["params_millions"].is_null()) {
    rec.tags.params_millions = obj["params_millions"].get<double>();
    rec.resources[ResourceKind::Params] = rec.tags.params_millions;
  }
  if (obj.contains("arch_class"))
    rec.tags.arch_class = lower(obj["arch_class"].get<std::string>()) == "cnn"
                              ? ArchClass::CNN
                              : ArchClass::Other;
  if (obj.contains("efficient")) rec.tags.efficient = obj["efficient"].get<bool>();
  if (obj.contains("epoch") && !obj["epoch"].is_null())
    rec.epoch = obj["epoch"].get<double>();
  rec.validate();
  return rec;
}

json record_to_json(const RunRecord& rec) {
  json obj;
  obj["model_id"] = rec.model_id;
  obj["dataset_id"] = rec.dataset_id;
  obj["performance"] = rec.performance;
  obj["params_millions"] = rec.tags.params_millions;
  obj["arch_class"] = rec.tags.arch_class == ArchClass::CNN ? "CNN" : "Other";
  obj["efficient"] = rec.tags.efficient;
  for (const auto& [name, kind] : kResourceColumns)
    if (rec.has(kind)) obj[name] = rec.resources.at(kind);
  if (rec.epoch) obj["epoch"] = *rec.epoch;
  return obj;
}

}  // namespace

std::vector<RunRecord> ExperimentCollection::all_records() const {
  std::vector<RunRecord> out;
  for (const auto& [_, set] : by_dataset)
    out.insert(out.end(), set.records.begin(), set.records.end());
  return out;
}

const ExperimentSet& ExperimentCollection::only() const {
  if (by_dataset.size() != 1)
    throw std::runtime_error("expected exactly one dataset, found " +
                             std::to_string(by_dataset.size()));
  return by_dataset.begin()->second;
}

ExperimentCollection ingest_runs_text(const std::string& text, FileFormat format) {
  if (format == FileFormat::CSV) return group_records(parse_csv_records(text));
  if (format == FileFormat::JSON) {
    const json doc = json::parse(text);
    const json& rows = doc.is_array() ? doc : doc.at("records");
    std::vector<RunRecord> records;
    for (const auto& obj : rows) records.push_back(record_from_json(obj));
    check_duplicates(records);
    return group_records(std::move(records));
  }
  throw std::invalid_argument("ingest_runs: unsupported format");
}

ExperimentCollection ingest_runs(const std::filesystem::path& path,
                                 FileFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_runs_text(buf.str(), format);
}

PerformanceCurve ingest_curve_text(const std::string& text,
                                   const std::string& model_id, ResourceKind kind) {
  const auto records = parse_csv_records(text);
  // (cumulative resource, performance) rows for the requested model.
  std::vector<std::pair<double, double>> rows;
  for (const auto& rec : records) {
    if (rec.model_id != model_id) continue;
    if (!rec.epoch && !rec.has(kind)) continue;
    const double cost = rec.has(kind) ? rec.resource(kind) : *rec.epoch;
    rows.emplace_back(cost, rec.performance);
  }
  if (rows.size() < 2)
    throw std::runtime_error("ingest_curve: fewer than 2 epochs for " + model_id);
  std::sort(rows.begin(), rows.end());
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].first == rows[i - 1].first)
      throw std::runtime_error("ingest_curve: non-monotone cumulative resource");

  const double lo = rows.front().first, hi = rows.back().first;
  PerformanceCurve curve;
  for (const auto& [cost, p] : rows)
    curve.samples.emplace_back((cost - lo) / (hi - lo), p);
  // f(0) must exist; with min-max rescaling the first sample already sits
  // at r = 0, but anchor defensively for fixed-bound callers.
  if (curve.samples.front().first > 0.0)
    curve.samples.insert(curve.samples.begin(), {0.0, curve.samples.front().second});
  curve.validate();
  return curve;
}

PerformanceCurve ingest_curve(const std::filesystem::path& path,
                              const std::string& model_id, ResourceKind kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_curve_text(buf.str(), model_id, kind);
}

namespace {

double fit_sse(const std::vector<BenchRow>& block, double e_min, double e_max) {
  double sse = 0.0;
  for (const auto& row : block) {
    const double r = (row.energy_wh - e_min) / (e_max - e_min);
    const double diff = row.pepr_e - row.test_p / (1.0 + r);
    sse += diff * diff;
  }
  return sse;
}

}  // namespace

FitResult fit_normalization_bounds(const std::vector<BenchRow>& block) {
  if (block.size() < 3)
    throw std::invalid_argument("fit_normalization_bounds: underdetermined block");
  double lo_cap = block.front().energy_wh, hi_floor = block.front().energy_wh;
  for (const auto& row : block) {
    lo_cap = std::min(lo_cap, row.energy_wh);
    hi_floor = std::max(hi_floor, row.energy_wh);
  }
  if (lo_cap == hi_floor)
    throw std::invalid_argument("fit_normalization_bounds: all energies equal");

  constexpr double kHiCap = 500.0;
  double best_sse = std::numeric_limits<double>::infinity();
  double best_lo = 0.0, best_hi = hi_floor;
  for (double lo = 0.0; lo <= lo_cap + 1e-12; lo += 0.1) {
    for (double hi = hi_floor; hi <= kHiCap + 1e-12; hi += 0.1) {
      const double sse = fit_sse(block, lo, hi);
      if (sse < best_sse) {
        best_sse = sse;
        best_lo = lo;
        best_hi = hi;
      }
    }
  }
  // Local refinement: shrinking grid around the coarse optimum.
  for (double step = 0.05; step > 1e-7; step /= 4.0) {
    for (int i = -4; i <= 4; ++i) {
      for (int j = -4; j <= 4; ++j) {
        const double lo = std::clamp(best_lo + i * step, 0.0, lo_cap);
        const double hi = std::clamp(best_hi + j * step, hi_floor, kHiCap);
        const double sse = fit_sse(block, lo, hi);
        if (sse < best_sse) {
          best_sse = sse;
          best_lo = lo;
          best_hi = hi;
        }
      }
    }
  }

  FitResult out;
  out.e_min = best_lo;
  out.e_max = best_hi;
  for (const auto& row : block) {
    const double r = (row.energy_wh - best_lo) / (best_hi - best_lo);
    out.residuals.push_back(std::fabs(row.pepr_e - row.test_p / (1.0 + r)));
    out.max_residual = std::max(out.max_residual, out.residuals.back());
  }
  return out;
}

std::string emit_runs(const ExperimentCollection& runs, FileFormat format) {
  const auto records = runs.all_records();
  if (format == FileFormat::CSV) {
    std::ostringstream out;
    out << "model_id,dataset_id,performance,params_millions,arch_class,efficient,"
           "energy_wh,carbon_kg,memory_gb,time_s,data_fraction,epoch\n";
    for (const auto& rec : records) {
      out << rec.model_id << ',' << rec.dataset_id << ',' << fmt9(rec.performance)
          << ',' << fmt9(rec.tags.params_millions) << ','
          << (rec.tags.arch_class == ArchClass::CNN ? "CNN" : "Other") << ','
          << (rec.tags.efficient ? "true" : "false");
      for (const auto& [name, kind] : kResourceColumns) {
        out << ',';
        if (rec.has(kind)) out << fmt9(rec.resources.at(kind));
      }
      out << ',';
      if (rec.epoch) out << fmt9(*rec.epoch);
      out << '\n';
    }
    return out.str();
  }
  if (format == FileFormat::JSON) {
    json rows = json::array();
    for (const auto& rec : records) rows.push_back(record_to_json(rec));
    return rows.dump(2) + "\n";
  }
  throw std::invalid_argument("emit_runs: unsupported format");
}

namespace {

json leaderboard_json(const Leaderboard& board) {
  json rows = json::array();
  for (const auto& entry : board.entries) {
    json row;
    row["model_id"] = entry.model_id;
    row["performance"] = entry.performance;
    for (const auto& [kind, value] : entry.resources)
      row[std::string(kind_name(kind))] = value;
    row["efficient"] = entry.tags.efficient;
    row["score"] = entry.score.value;
    row["normalized_resource"] = entry.score.normalized_resource;
    row["variant"] = entry.score.variant;
    row["alpha"] = entry.score.params.alpha;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string emit_leaderboard(const Leaderboard& board, FileFormat format) {
  if (board.entries.empty())
    throw std::invalid_argument("emit_leaderboard: empty board");

  if (format == FileFormat::JSON) return leaderboard_json(board).dump(2) + "\n";

  if (format == FileFormat::CSV) {
    std::ostringstream out;
    out << "model_id,efficient,params_millions,memory_gb,energy_wh,time_s,"
           "performance,score,normalized_resource,variant\n";
    for (const auto& e : board.entries) {
      auto res = [&e](ResourceKind kind) {
        return e.resources.count(kind) ? fmt9(e.resources.at(kind)) : std::string();
      };
      out << e.model_id << ',' << (e.tags.efficient ? "true" : "false") << ','
          << fmt9(e.tags.params_millions) << ',' << res(ResourceKind::Memory) << ','
          << res(ResourceKind::Energy) << ',' << res(ResourceKind::Time) << ','
          << fmt9(e.performance) << ',' << fmt9(e.score.value) << ','
          << fmt9(e.score.normalized_resource) << ',' << e.score.variant << '\n';
    }
    return out.str();
  }

  // Markdown, published-table column order, best value per column in bold.
  struct Col {
    const char* title;
    bool minimize;
    std::function<std::optional<double>(const LeaderboardEntry&)> get;
  };
  auto res_col = [](ResourceKind kind) {
    return [kind](const LeaderboardEntry& e) -> std::optional<double> {
      auto it = e.resources.find(kind);
      if (it == e.resources.end()) return std::nullopt;
      return it->second;
    };
  };
  const std::vector<Col> cols = {
      {"|W| (M)", true,
       [](const LeaderboardEntry& e) -> std::optional<double> {
         return e.tags.params_millions;
       }},
      {"M (GB)", true, res_col(ResourceKind::Memory)},
      {"E (Wh)", true, res_col(ResourceKind::Energy)},
      {"T (s)", true, res_col(ResourceKind::Time)},
      {"Test P", false,
       [](const LeaderboardEntry& e) -> std::optional<double> {
         return e.performance;
       }},
  };

  auto best_of = [&board](const Col& col) -> std::optional<double> {
    std::optional<double> best;
    for (const auto& e : board.entries) {
      const auto v = col.get(e);
      if (!v) continue;
      if (!best || (col.minimize ? *v < *best : *v > *best)) best = v;
    }
    return best;
  };
  std::vector<std::optional<double>> bests;
  for (const auto& col : cols) bests.push_back(best_of(col));
  double best_score = board.entries.front().score.value;
  for (const auto& e : board.entries) best_score = std::max(best_score, e.score.value);

  const std::string variant = board.entries.front().score.variant;
  std::ostringstream out;
  out << "| Model | Efficient |";
  for (const auto& col : cols) out << ' ' << col.title << " |";
  out << ' ' << variant << " |\n";
  out << "|---|---|";
  for (size_t i = 0; i < cols.size(); ++i) out << "---|";
  out << "---|\n";

  for (const auto& e : board.entries) {
    out << "| " << e.model_id << " | " << (e.tags.efficient ? "yes" : "no") << " |";
    for (size_t i = 0; i < cols.size(); ++i) {
      const auto v = cols[i].get(e);
      out << ' ';
      if (!v) {
        out << "- |";
        continue;
      }
      const bool is_p = std::string(cols[i].title) == "Test P";
      const std::string text = is_p ? fmt4(*v) : fmt9(*v);
      if (bests[i] && *v == *bests[i])
        out << "**" << text << "**";
      else
        out << text;
      out << " |";
    }
    out << ' ';
    if (e.score.value == best_score)
      out << "**" << fmt4(e.score.value) << "**";
    else
      out << fmt4(e.score.value);
    out << " |\n";
  }
  return out.str();
}

std::string isocline_csv(const IsoclineGrid& grid) {
  std::ostringstream out;
  // First row: blank corner, then the r axis.
  out << "p\\r";
  for (double r : grid.r_axis) out << ',' << fmt9(r);
  out << '\n';
  for (size_t i = 0; i < grid.p_axis.size(); ++i) {
    out << fmt9(grid.p_axis[i]);
    for (double v : grid.values[i]) out << ',' << fmt9(v);
    out << '\n';
  }
  return out.str();
}

std::string scatter_csv(const std::vector<TradeoffPoint>& points,
                        const ParetoFront& front) {
  if (points.empty()) throw std::invalid_argument("scatter_csv: empty scatter");
  auto on_frontier = [&front](const TradeoffPoint& pt) {
    for (const auto& f : front.frontier)
      if (f.label == pt.label && f.r == pt.r && f.p == pt.p) return true;
    return false;
  };
  std::ostringstream out;
  out << "label,r,p,on_frontier\n";
  for (const auto& pt : points)
    out << pt.label << ',' << fmt9(pt.r) << ',' << fmt9(pt.p) << ','
        << (on_frontier(pt) ? "true" : "false") << '\n';
  return out.str();
}

std::string score_bars_csv(const Leaderboard& board) {
  std::ostringstream out;
  out << "model_id,score,performance,normalized_resource\n";
  for (const auto& e : board.entries)
    out << e.model_id << ',' << fmt9(e.score.value) << ',' << fmt9(e.performance)
        << ',' << fmt9(e.score.normalized_resource) << '\n';
  return out.str();
}

namespace {

json comparison_json(const GroupComparison& cmp) {
  json obj;
  obj["label_a"] = cmp.label_a;
  obj["label_b"] = cmp.label_b;
  obj["n_a"] = cmp.group_a.size();
  obj["n_b"] = cmp.group_b.size();
  obj["median_a"] = cmp.median_a;
  obj["median_b"] = cmp.median_b;
  obj["t_statistic"] = cmp.t_statistic;
  obj["degrees_of_freedom"] = cmp.degrees_of_freedom;
  obj["p_value"] = cmp.p_value;
  obj["degenerate"] = cmp.degenerate;
  return obj;
}

}  // namespace

std::string emit_report_json(const Report& report) {
  json doc;
  doc["leaderboard"] = json::array();
  for (const auto& [dataset, board] : report.leaderboards) {
    json entry;
    entry["dataset_id"] = dataset;
    entry["entries"] = leaderboard_json(board);
    doc["leaderboard"].push_back(std::move(entry));
  }
  doc["frontier"] = json::array();
  for (const auto& pt : report.frontier.frontier)
    doc["frontier"].push_back({{"label", pt.label}, {"r", pt.r}, {"p", pt.p}});
  doc["comparisons"] = json::array();
  for (const auto& [name, cmp] : report.comparisons) {
    json obj = comparison_json(cmp);
    obj["name"] = name;
    doc["comparisons"].push_back(std::move(obj));
  }
  doc["fitted_bounds"] = json::object();
  for (const auto& [block, fit] : report.fitted_bounds)
    doc["fitted_bounds"][block] = {{"e_min", fit.e_min},
                                   {"e_max", fit.e_max},
                                   {"max_residual", fit.max_residual}};
  return doc.dump(2) + "\n";
}

std::string emit_report_markdown(const Report& report) {
  std::ostringstream out;
  for (const auto& [dataset, board] : report.leaderboards) {
    out << "## " << dataset << "\n\n"
        << emit_leaderboard(board, FileFormat::Markdown) << '\n';
  }
  if (!report.frontier.frontier.empty()) {
    out << "## Pareto frontier\n\n| label | r | p |\n|---|---|---|\n";
    for (const auto& pt : report.frontier.frontier)
      out << "| " << pt.label << " | " << fmt9(pt.r) << " | " << fmt9(pt.p)
          << " |\n";
    out << '\n';
  }
  if (!report.comparisons.empty()) {
    out << "## Group comparisons\n\n"
        << "| comparison | median A | median B | t | df | p |\n"
        << "|---|---|---|---|---|---|\n";
    for (const auto& [name, cmp] : report.comparisons)
      out << "| " << name << " | " << fmt4(cmp.median_a) << " | "
          << fmt4(cmp.median_b) << " | " << fmt4(cmp.t_statistic) << " | "
          << fmt4(cmp.degrees_of_freedom) << " | " << fmt9(cmp.p_value) << " |\n";
    out << '\n';
  }
  if (!report.fitted_bounds.empty()) {
    out << "## Fitted normalization bounds\n\n"
        << "| block | e_min (Wh) | e_max (Wh) | max residual |\n|---|---|---|---|\n";
    for (const auto& [block, fit] : report.fitted_bounds)
      out << "| " << block << " | " << fmt4(fit.e_min) << " | " << fmt4(fit.e_max)
          << " | " << fmt9(fit.max_residual) << " |\n";
  }
  return out.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace pepr
