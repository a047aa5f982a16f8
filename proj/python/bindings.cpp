#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pairsmell/cochange.hpp"
#include "pairsmell/consensus.hpp"
#include "pairsmell/depgraph.hpp"
#include "pairsmell/error.hpp"
#include "pairsmell/evolution.hpp"
#include "pairsmell/modularize.hpp"
#include "pairsmell/smells.hpp"
#include "pairsmell/structure.hpp"

namespace py = pybind11;
using namespace pairsmell;

namespace {

PortfolioConfig make_portfolio_config(const std::vector<std::string>& tools, int k,
                                      int max_cluster_size) {
    PortfolioConfig pc;
    pc.enabled.clear();
    for (const std::string& name : tools) pc.enabled.push_back(parse_algorithm(name));
    pc.k = k;
    pc.acdc.max_cluster_size = max_cluster_size;
    return pc;
}

std::string apt_name(AptMr apt) {
    switch (apt) {
        case AptMr::Separated: return "separated";
        case AptMr::Collocated: return "collocated";
        case AptMr::NoConsensus: return "no_consensus";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_pairsmell, m) {
    m.doc() = "PairSmell core: dependency graphs, deterministic modularization, consensus "
              "smell detection, co-change metrics, and trend fitting";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_ValueError);

    py::class_<Entity>(m, "Entity")
        .def_readonly("id", &Entity::id)
        .def_readonly("path", &Entity::path)
        .def("__repr__", [](const Entity& e) {
            return "Entity(" + std::to_string(e.id) + ", '" + e.path + "')";
        });

    py::class_<DependencyGraph>(m, "DependencyGraph")
        .def_property_readonly("entity_count", &DependencyGraph::entity_count)
        .def_property_readonly("entities", &DependencyGraph::entities)
        .def_property_readonly("paths",
                               [](const DependencyGraph& g) {
                                   std::vector<std::string> paths;
                                   for (const Entity& e : g.entities()) paths.push_back(e.path);
                                   return paths;
                               })
        .def("weight", &DependencyGraph::weight, py::arg("src"), py::arg("dst"))
        .def("entity_by_path", &DependencyGraph::entity_by_path, py::arg("path"));

    m.def("load_canonical", &load_canonical_text, py::arg("text"),
          py::arg("kind_weights") = KindWeights{});
    m.def("load_canonical_file", &load_canonical_file, py::arg("path"),
          py::arg("kind_weights") = KindWeights{});
    m.def("export_canonical", &export_canonical, py::arg("graph"));
    m.def("load_depends_json", &load_depends_json_text, py::arg("text"),
          py::arg("kind_weights") = KindWeights{});
    m.def("load_depends_json_file", &load_depends_json_file, py::arg("path"),
          py::arg("kind_weights") = KindWeights{});
    m.def(
        "scan_sources",
        [](const std::string& root, const std::string& profile,
           const std::vector<std::string>& include, const std::vector<std::string>& exclude) {
            ScanOptions opts;
            opts.include_globs = include;
            opts.exclude_globs = exclude;
            return scan_sources(root, parse_language_profile(profile), opts);
        },
        py::arg("root"), py::arg("profile"), py::arg("include") = std::vector<std::string>{},
        py::arg("exclude") = std::vector<std::string>{});

    py::class_<ModularSolution>(m, "ModularSolution")
        .def_readonly("assignment", &ModularSolution::assignment)
        .def_readonly("module_count", &ModularSolution::module_count)
        .def_readonly("tool", &ModularSolution::tool_tag)
        .def("modules", &ModularSolution::modules)
        .def("__repr__", [](const ModularSolution& s) {
            return "ModularSolution('" + s.tool_tag + "', " +
                   std::to_string(s.module_count) + " modules)";
        });

    m.def("uenm_similarity", &uenm_similarity, py::arg("x"), py::arg("y"));
    m.def("wca", &wca, py::arg("graph"), py::arg("k"));
    m.def("limbo", &limbo, py::arg("graph"), py::arg("k"));
    m.def(
        "acdc",
        [](const DependencyGraph& g, int max_cluster_size) {
            return acdc(g, {max_cluster_size});
        },
        py::arg("graph"), py::arg("max_cluster_size") = 20);
    m.def("fca", &fca, py::arg("graph"));
    m.def("turbo_mq", &turbo_mq, py::arg("graph"), py::arg("assignment"));
    m.def(
        "run_portfolio",
        [](const DependencyGraph& g, const std::vector<std::string>& tools, int k,
           int max_cluster_size) {
            return run_portfolio(g, make_portfolio_config(tools, k, max_cluster_size));
        },
        py::arg("graph"),
        py::arg("tools") = std::vector<std::string>{"wca", "limbo", "acdc", "fca"},
        py::arg("k") = 1, py::arg("max_cluster_size") = 20);

    py::class_<CoAssociationMatrix>(m, "CoAssociationMatrix")
        .def_property_readonly("entity_count", &CoAssociationMatrix::entity_count)
        .def_property_readonly("solution_count", &CoAssociationMatrix::solution_count)
        .def("value", &CoAssociationMatrix::value, py::arg("i"), py::arg("j"))
        .def("votes", &CoAssociationMatrix::votes, py::arg("i"), py::arg("j"));

    m.def("mr_of", &mr_of, py::arg("solution"), py::arg("i"), py::arg("j"));
    m.def("build_coassociation", &build_coassociation, py::arg("solutions"));
    m.def(
        "classify_apt",
        [](const CoAssociationMatrix& matrix, int i, int j) {
            return apt_name(AptClassification(matrix).of(i, j));
        },
        py::arg("matrix"), py::arg("i"), py::arg("j"),
        "Unanimity classification of one pair: separated, collocated, or no_consensus");

    py::class_<ActualStructure>(m, "ActualStructure")
        .def_readonly("solution", &ActualStructure::solution)
        .def_readonly("folders", &ActualStructure::folders);

    m.def(
        "recover_modules",
        [](const DependencyGraph& g) { return recover_modules(g.entities()); },
        py::arg("graph"));
    m.def("actual_mr", &actual_mr, py::arg("structure"), py::arg("i"), py::arg("j"));

    py::class_<PairSmellRecord>(m, "PairSmellRecord")
        .def_readonly("first", &PairSmellRecord::first)
        .def_readonly("second", &PairSmellRecord::second)
        .def_readonly("actual", &PairSmellRecord::actual)
        .def_readonly("apt", &PairSmellRecord::apt)
        .def_readonly("coassoc", &PairSmellRecord::coassoc)
        .def_property_readonly("form",
                               [](const PairSmellRecord& r) { return smell_form_name(r.form); })
        .def("__repr__", [](const PairSmellRecord& r) {
            return smell_form_name(r.form) + "(" + std::to_string(r.first) + ", " +
                   std::to_string(r.second) + ")";
        });

    py::class_<DetectionResult>(m, "DetectionResult")
        .def_readonly("records", &DetectionResult::records)
        .def_readonly("suppressed", &DetectionResult::suppressed);

    py::class_<PrevalenceStats>(m, "PrevalenceStats")
        .def_readonly("insep_pairs", &PrevalenceStats::insep_pairs)
        .def_readonly("incol_pairs", &PrevalenceStats::incol_pairs)
        .def_readonly("insep_entities", &PrevalenceStats::insep_entities)
        .def_readonly("incol_entities", &PrevalenceStats::incol_entities)
        .def_readonly("insep_pair_pct", &PrevalenceStats::insep_pair_pct)
        .def_readonly("incol_pair_pct", &PrevalenceStats::incol_pair_pct)
        .def_readonly("insep_entity_pct", &PrevalenceStats::insep_entity_pct)
        .def_readonly("incol_entity_pct", &PrevalenceStats::incol_entity_pct)
        .def_readonly("insep_density", &PrevalenceStats::insep_density)
        .def_readonly("incol_density", &PrevalenceStats::incol_density);

    // One-call pipeline for scripting: graph in, records and stats out.
    m.def(
        "detect",
        [](const DependencyGraph& g, const std::vector<std::string>& tools,
           std::optional<int> k, int max_cluster_size, bool suppress_body_header) {
            const ActualStructure actual = recover_modules(g.entities());
            const PortfolioConfig pc = make_portfolio_config(
                tools, k.value_or(actual.solution.module_count), max_cluster_size);
            const auto solutions = run_portfolio(g, pc);
            const auto matrix = build_coassociation(solutions);
            const AptClassification classification(matrix);
            DetectOptions opts;
            opts.suppress_body_header = suppress_body_header;
            DetectionResult result = detect(classification, actual, g.entities(), opts);
            PrevalenceStats stats = prevalence(
                result.records, compute_universe_stats(classification, actual));
            return py::make_tuple(result, stats);
        },
        py::arg("graph"),
        py::arg("tools") = std::vector<std::string>{"wca", "limbo", "acdc", "fca"},
        py::arg("k") = std::nullopt, py::arg("max_cluster_size") = 20,
        py::arg("suppress_body_header") = false,
        "Full pipeline: folder recovery, portfolio, consensus, detection. Returns "
        "(DetectionResult, PrevalenceStats).");

    m.def(
        "render_dsm",
        [](const std::vector<int>& subset, const CoAssociationMatrix& matrix,
           const ActualStructure& actual, const DependencyGraph& graph, int limit) {
            DsmOptions opts;
            opts.display_limit = limit;
            return render_dsm(subset, matrix, actual, graph.entities(), opts);
        },
        py::arg("subset"), py::arg("matrix"), py::arg("actual"), py::arg("graph"),
        py::arg("limit") = 30);

    py::class_<CommitRecord>(m, "CommitRecord")
        .def_readonly("hash", &CommitRecord::hash)
        .def_readonly("author", &CommitRecord::author)
        .def_readonly("timestamp", &CommitRecord::timestamp);

    py::class_<ChangeHistory>(m, "ChangeHistory")
        .def_property_readonly("entity_count", &ChangeHistory::entity_count)
        .def_property_readonly("commits_used", &ChangeHistory::commits_used)
        .def_property_readonly("shortfall", &ChangeHistory::shortfall);

    m.def("ingest_log", &ingest_log_text, py::arg("text"));
    m.def("ingest_log_file", &ingest_log_file, py::arg("path"));
    m.def(
        "window",
        [](const std::vector<CommitRecord>& records, std::size_t delta,
           const DependencyGraph& graph) { return window(records, delta, graph.entities()); },
        py::arg("records"), py::arg("delta"), py::arg("graph"));
    m.def("cor", &cor, py::arg("history"), py::arg("i"), py::arg("j"));
    m.def("cco", &cco, py::arg("history"), py::arg("i"), py::arg("j"));
    m.def("dor", &dor, py::arg("history"), py::arg("i"), py::arg("j"));

    py::class_<KRatioReport>(m, "KRatioReport")
        .def_property_readonly(
            "metric", [](const KRatioReport& r) { return pair_metric_name(r.metric); })
        .def_readonly("smelly_mean", &KRatioReport::smelly_mean)
        .def_readonly("baseline_mean", &KRatioReport::baseline_mean)
        .def_property_readonly("k",
                               [](const KRatioReport& r) -> py::object {
                                   if (r.k.has_value()) return py::float_(*r.k);
                                   return py::none();
                               })
        .def_property_readonly("cohens_d",
                               [](const KRatioReport& r) -> py::object {
                                   if (r.cohens_d.has_value()) return py::float_(*r.cohens_d);
                                   return py::none();
                               })
        .def_readonly("p_value", &KRatioReport::p_value)
        .def_readonly("no_data", &KRatioReport::no_data);

    m.def(
        "k_ratio",
        [](const ChangeHistory& history, const std::string& metric,
           const std::vector<EntityPair>& smelly, const std::vector<EntityPair>& baseline) {
            return k_ratio(history, parse_pair_metric(metric), smelly, baseline);
        },
        py::arg("history"), py::arg("metric"), py::arg("smelly_pairs"),
        py::arg("baseline_pairs"));

    py::class_<Snapshot>(m, "Snapshot")
        .def_readonly("revision", &Snapshot::revision)
        .def_readonly("timestamp", &Snapshot::timestamp);

    m.def("sample_snapshots", &sample_snapshots, py::arg("history"),
          py::arg("interval_days") = 14, py::arg("count") = 25, py::arg("anchor") = std::string{});

    py::class_<TrendResult>(m, "TrendResult")
        .def_readonly("slope", &TrendResult::slope)
        .def_readonly("intercept", &TrendResult::intercept)
        .def_readonly("p_value", &TrendResult::p_value)
        .def_property_readonly("classification", [](const TrendResult& t) {
            return trend_class_name(t.classification);
        });

    m.def("fit_trend", py::overload_cast<const std::vector<double>&, double>(&fit_trend),
          py::arg("series"), py::arg("alpha") = 0.05);
    m.def("fit_trend_points",
          py::overload_cast<const std::vector<double>&, const std::vector<double>&, double>(
              &fit_trend_points),
          py::arg("xs"), py::arg("ys"), py::arg("alpha") = 0.05);
}
