#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pepr/bundled.hpp"
#include "pepr/curves.hpp"
#include "pepr/frontier.hpp"
#include "pepr/io.hpp"
#include "pepr/scoring.hpp"
#include "pepr/stats.hpp"

namespace py = pybind11;
using namespace pepr;

PYBIND11_MODULE(_pepr, m) {
  m.doc() = "Performance-per-resource scoring core";

  py::enum_<ResourceKind>(m, "ResourceKind")
      .value("Energy", ResourceKind::Energy)
      .value("Carbon", ResourceKind::Carbon)
      .value("Memory", ResourceKind::Memory)
      .value("Time", ResourceKind::Time)
      .value("DataFraction", ResourceKind::DataFraction)
      .value("Params", ResourceKind::Params);

  py::enum_<NormStrategy>(m, "NormStrategy")
      .value("MinMaxOverSet", NormStrategy::MinMaxOverSet)
      .value("FixedBounds", NormStrategy::FixedBounds)
      .value("PercentileClamped", NormStrategy::PercentileClamped);

  py::class_<RunRecord>(m, "RunRecord")
      .def(py::init([](std::string model_id, std::string dataset_id,
                       double performance,
                       std::map<ResourceKind, double> resources) {
             RunRecord rec;
             rec.model_id = std::move(model_id);
             rec.dataset_id = std::move(dataset_id);
             rec.performance = performance;
             rec.resources = std::move(resources);
             rec.validate();
             return rec;
           }),
           py::arg("model_id"), py::arg("dataset_id"), py::arg("performance"),
           py::arg("resources"))
      .def_readonly("model_id", &RunRecord::model_id)
      .def_readonly("dataset_id", &RunRecord::dataset_id)
      .def_readonly("performance", &RunRecord::performance)
      .def_readonly("resources", &RunRecord::resources);

  py::class_<NormalizationContext>(m, "NormalizationContext")
      .def_readonly("kind", &NormalizationContext::kind)
      .def_readonly("r_min", &NormalizationContext::r_min)
      .def_readonly("r_max", &NormalizationContext::r_max);

  py::class_<ExperimentSet>(m, "ExperimentSet")
      .def_readonly("records", &ExperimentSet::records)
      .def("context", &ExperimentSet::context,
           py::return_value_policy::reference_internal);

  py::class_<PeprScore>(m, "PeprScore")
      .def_readonly("value", &PeprScore::value)
      .def_readonly("performance", &PeprScore::performance)
      .def_readonly("normalized_resource", &PeprScore::normalized_resource)
      .def_readonly("variant", &PeprScore::variant);

  py::class_<LeaderboardEntry>(m, "LeaderboardEntry")
      .def_readonly("model_id", &LeaderboardEntry::model_id)
      .def_readonly("performance", &LeaderboardEntry::performance)
      .def_readonly("score", &LeaderboardEntry::score);

  py::class_<Leaderboard>(m, "Leaderboard")
      .def_readonly("entries", &Leaderboard::entries);

  m.def("pepr", &pepr::pepr, py::arg("normalized_resource"),
        py::arg("performance"));
  m.def("pepr_alpha", &pepr_alpha, py::arg("normalized_resource"),
        py::arg("performance"), py::arg("alpha"));
  m.def("pepr_weighted", &pepr_weighted, py::arg("normalized"),
        py::arg("performance"), py::arg("weights"));

  m.def(
      "normalize",
      [](double r_abs, const NormalizationContext& ctx) {
        auto out = pepr::normalize(r_abs, ctx);
        return py::make_tuple(out.value, out.clamped);
      },
      py::arg("r_abs"), py::arg("context"));
  m.def("fixed_context", &fixed_context, py::arg("kind"), py::arg("r_min"),
        py::arg("r_max"));
  m.def("make_experiment_set", &make_experiment_set, py::arg("records"));
  m.def("score_experiment",
        [](const ExperimentSet& set, ResourceKind kind, double alpha) {
          ScoreParams params;
          params.alpha = alpha;
          return score_experiment(set, kind, params);
        },
        py::arg("set"), py::arg("kind"), py::arg("alpha") = 1.0);
  m.def("score_experiment_weighted", &score_experiment_weighted, py::arg("set"),
        py::arg("weights"));

  py::class_<TradeoffPoint>(m, "TradeoffPoint")
      .def(py::init([](std::string label, double r, double p) {
             return TradeoffPoint{std::move(label), r, p};
           }),
           py::arg("label"), py::arg("r"), py::arg("p"))
      .def_readonly("label", &TradeoffPoint::label)
      .def_readonly("r", &TradeoffPoint::r)
      .def_readonly("p", &TradeoffPoint::p);

  py::class_<ParetoFront>(m, "ParetoFront")
      .def_readonly("frontier", &ParetoFront::frontier)
      .def("dominated_labels", [](const ParetoFront& front) {
        std::vector<std::string> out;
        for (const auto& d : front.dominated) out.push_back(d.point.label);
        return out;
      });

  m.def("dominates", &dominates, py::arg("a"), py::arg("b"));
  m.def("pareto_front", &pareto_front, py::arg("points"));
  m.def(
      "knee_point",
      [](const ParetoFront& front, double alpha) {
        ScoreParams params;
        params.alpha = alpha;
        return knee_point(front, params);
      },
      py::arg("front"), py::arg("alpha") = 1.0);

  py::class_<PerformanceCurve>(m, "PerformanceCurve")
      .def(py::init([](std::vector<std::pair<double, double>> samples) {
             PerformanceCurve f;
             f.samples = std::move(samples);
             f.validate();
             return f;
           }),
           py::arg("samples"))
      .def_readonly("samples", &PerformanceCurve::samples);

  m.def("eval_curve", &eval_curve, py::arg("curve"), py::arg("r"));
  m.def("pepr_curve", &pepr_curve, py::arg("curve"), py::arg("r"));
  m.def(
      "peprc_star",
      [](const PerformanceCurve& f, int grid) {
        auto star = peprc_star(f, grid);
        return py::make_tuple(star.r_star, star.value);
      },
      py::arg("curve"), py::arg("grid_resolution") = 1001);
  m.def("curve_derivative", &curve_derivative, py::arg("curve"), py::arg("r"));

  py::class_<GroupComparison>(m, "GroupComparison")
      .def_readonly("t_statistic", &GroupComparison::t_statistic)
      .def_readonly("degrees_of_freedom", &GroupComparison::degrees_of_freedom)
      .def_readonly("p_value", &GroupComparison::p_value)
      .def_readonly("degenerate", &GroupComparison::degenerate);

  m.def("welch_t_test", &welch_t_test, py::arg("sample_a"), py::arg("sample_b"));
  m.def("paired_t_test", &paired_t_test, py::arg("sample_a"),
        py::arg("sample_b"));
  m.def("median", &median, py::arg("values"));

  m.def("bundled_names", &bundled_names);
  m.def("bundled_records", &bundled_records, py::arg("name"));
}
