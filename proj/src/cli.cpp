#include "pairsmell/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "pairsmell/cochange.hpp"
#include "pairsmell/consensus.hpp"
#include "pairsmell/error.hpp"
#include "pairsmell/evolution.hpp"
#include "pairsmell/report.hpp"
#include "pairsmell/repo.hpp"
#include "pairsmell/smells.hpp"
#include "pairsmell/structure.hpp"

namespace pairsmell {
namespace cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(const Error& e) {
    if (dynamic_cast<const InsufficientDataError*>(&e)) return kExitInsufficientData;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e) ||
        dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const IoError*>(&e))
        return kExitInput;
    return kExitInternal;
}

template <typename Fn>
int guarded(const char* command, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        std::cerr << "pairsmell " << command << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "pairsmell " << command << ": internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

PortfolioConfig portfolio_config(const RunConfig& config, int actual_modules) {
    PortfolioConfig pc;
    pc.enabled.clear();
    for (const std::string& name : config.tools) pc.enabled.push_back(parse_algorithm(name));
    if (pc.enabled.size() < 2)
        throw ParameterError("consensus needs at least two enabled tools, got " +
                             std::to_string(pc.enabled.size()));
    pc.k = config.k.value_or(actual_modules);
    pc.acdc.max_cluster_size = config.max_cluster_size;
    return pc;
}

ConsensusPolicy consensus_policy(const RunConfig& config) {
    ConsensusPolicy policy;
    if (config.consensus == "unanimity") return policy;
    if (config.consensus == "threshold") {
        policy.unanimity = false;
        policy.collocate_min = config.collocate_threshold;
        return policy;
    }
    throw ParameterError("unknown consensus mode: " + config.consensus);
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
}

bool format_enabled(const RunConfig& config, const std::string& fmt) {
    return std::find(config.formats.begin(), config.formats.end(), fmt) != config.formats.end();
}

std::string log_capture(const RunConfig& config) {
    if (!config.log_file.empty()) {
        std::ifstream in(config.log_file, std::ios::binary);
        if (!in) throw IoError("cannot open log capture: " + config.log_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    if (config.root.empty())
        throw ParameterError("co-change mining needs --log <capture> or --root <repository>");
    return git_log_capture(config.root, config.anchor);
}

}  // namespace

DependencyGraph load_graph(const RunConfig& config) {
    const int sources = !config.graph_file.empty() + !config.depends_file.empty() +
                        !config.scan_profile.empty();
    if (sources != 1)
        throw ParameterError(
            "exactly one graph source is required: --graph, --depends-json, or --scan");
    KindWeights kw;  // reserved for per-kind weighting via config files
    if (!config.graph_file.empty()) return load_canonical_file(config.graph_file, kw);
    if (!config.depends_file.empty()) return load_depends_json_file(config.depends_file, kw);
    if (config.root.empty()) throw ParameterError("--scan requires --root <directory>");
    ScanOptions opts;
    opts.include_globs = config.include_globs;
    opts.exclude_globs = config.exclude_globs;
    return scan_sources(config.root, parse_language_profile(config.scan_profile), opts);
}

namespace {

struct PipelineOutput {
    DependencyGraph graph;
    ActualStructure actual;
    std::vector<ModularSolution> solutions;
    CoAssociationMatrix matrix;
    DetectionResult detection;
    PrevalenceStats stats;
    DetectReportMeta meta;
};

PipelineOutput run_pipeline(const RunConfig& config) {
    PipelineOutput out;
    out.graph = load_graph(config);
    out.actual = recover_modules(out.graph.entities());
    const PortfolioConfig pc = portfolio_config(config, out.actual.solution.module_count);
    out.solutions = run_portfolio(out.graph, pc);
    out.matrix = build_coassociation(out.solutions);
    const AptClassification classification = classify_apt(out.matrix, consensus_policy(config));
    DetectOptions detect_opts;
    detect_opts.suppress_body_header = config.suppress_body_header;
    out.detection = detect(classification, out.actual, out.graph.entities(), detect_opts);
    out.stats = prevalence(out.detection.records,
                           compute_universe_stats(classification, out.actual));
    for (const ModularSolution& s : out.solutions) out.meta.tools.push_back(s.tool_tag);
    out.meta.k = pc.k;
    out.meta.consensus = config.consensus;
    out.meta.degenerate = degenerate_tools(out.solutions);
    out.meta.body_header_suppression = config.suppress_body_header;
    return out;
}

}  // namespace

int cmd_detect(const RunConfig& config) {
    return guarded("detect", [&] {
        const PipelineOutput out = run_pipeline(config);
        ensure_out_dir(config.out_dir);
        const fs::path dir(config.out_dir);

        for (const ModularSolution& s : out.solutions)
            write_text_file((dir / ("solution_" + s.tool_tag + ".json")).string(),
                            solution_to_json(s));
        write_text_file((dir / "actual.json").string(), actual_to_json(out.actual));
        write_text_file((dir / "coassociation.csv").string(),
                        coassociation_csv(out.matrix, config.dump_matrix));
        if (format_enabled(config, "json"))
            write_text_file((dir / "smells.json").string(),
                            smell_report_json(out.graph.entities(), out.detection, out.stats,
                                              out.meta));
        if (format_enabled(config, "csv"))
            write_text_file((dir / "smells.csv").string(),
                            smell_report_csv(out.graph.entities(), out.detection));
        std::cout << "detect: " << out.stats.insep_pairs << " InSep, " << out.stats.incol_pairs
                  << " InCol over " << out.graph.entity_count() << " entities ("
                  << out.actual.solution.module_count << " actual modules)\n";
        return kExitOk;
    });
}

int cmd_cochange(const RunConfig& config, const std::string& smell_report_path) {
    return guarded("cochange", [&] {
        const LoadedSmellReport report = load_smell_report(smell_report_path);

        std::vector<Entity> entities(report.entity_paths.size());
        for (std::size_t i = 0; i < report.entity_paths.size(); ++i)
            entities[i] = {static_cast<int>(i), report.entity_paths[i]};
        const ActualStructure actual = recover_modules(entities);

        std::set<EntityPair> insep_set, incol_set;
        for (const PairSmellRecord& rec : report.records) {
            if (rec.form == SmellForm::InSep)
                insep_set.insert({rec.first, rec.second});
            else
                incol_set.insert({rec.first, rec.second});
        }
        // Baselines per the K-ratio definition: Separated - InSep and
        // Collocated - InCol.
        std::vector<EntityPair> insep_pairs(insep_set.begin(), insep_set.end());
        std::vector<EntityPair> incol_pairs(incol_set.begin(), incol_set.end());
        std::vector<EntityPair> separated_baseline, collocated_baseline;
        const int n = static_cast<int>(entities.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (actual_mr(actual, i, j) == 0) {
                    if (!insep_set.count({i, j})) separated_baseline.push_back({i, j});
                } else {
                    if (!incol_set.count({i, j})) collocated_baseline.push_back({i, j});
                }
            }
        }

        const std::vector<CommitRecord> records = ingest_log_text(log_capture(config));

        std::vector<KRatioRun> runs;
        for (int delta : config.deltas) {
            if (delta < 1) throw ParameterError("delta must be at least 1");
            const ChangeHistory history =
                window(records, static_cast<std::size_t>(delta), entities);
            KRatioRun run;
            run.delta = static_cast<std::size_t>(delta);
            run.commits_used = history.commits_used();
            run.shortfall = history.shortfall();
            for (const SmellForm form : {SmellForm::InSep, SmellForm::InCol}) {
                const auto& smelly = form == SmellForm::InSep ? insep_pairs : incol_pairs;
                const auto& baseline =
                    form == SmellForm::InSep ? separated_baseline : collocated_baseline;
                std::vector<KRatioReport> reports;
                for (const PairMetric metric :
                     {PairMetric::Cor, PairMetric::Cco, PairMetric::Dor})
                    reports.push_back(k_ratio(history, metric, smelly, baseline));
                run.forms.emplace_back(form, std::move(reports));
            }
            runs.push_back(std::move(run));
        }

        ensure_out_dir(config.out_dir);
        write_text_file((fs::path(config.out_dir) / "kratio.json").string(),
                        kratio_report_json(runs));
        std::cout << "cochange: " << runs.size() << " delta windows over " << records.size()
                  << " commits\n";
        return kExitOk;
    });
}

int cmd_evolve(const RunConfig& config) {
    return guarded("evolve", [&] {
        if (config.root.empty()) throw ParameterError("evolve requires --root <repository>");
        if (config.scan_profile.empty())
            throw ParameterError("evolve requires --scan <profile> to build per-snapshot graphs");

        const std::vector<CommitRecord> history = ingest_log_text(log_capture(config));
        const std::vector<Snapshot> snapshots =
            sample_snapshots(history, config.interval_days, config.snapshots, config.anchor);
        if (snapshots.size() < 3)
            throw InsufficientDataError("only " + std::to_string(snapshots.size()) +
                                        " usable snapshots; trend fitting needs at least 3");

        const std::string work = git_clone_to_temp(config.root);
        SeriesPipelineConfig spc;
        spc.tools.clear();
        for (const std::string& name : config.tools) spc.tools.push_back(parse_algorithm(name));
        spc.k = config.k;
        spc.max_cluster_size = config.max_cluster_size;
        const LanguageProfile profile = parse_language_profile(config.scan_profile);
        ScanOptions scan_opts;
        scan_opts.include_globs = config.include_globs;
        scan_opts.exclude_globs = config.exclude_globs;

        SnapshotSeries series = series_percentages(
            snapshots, spc, [&](const Snapshot& snap) -> std::optional<DependencyGraph> {
                git_checkout(work, snap.revision);
                return scan_sources(work, profile, scan_opts);
            });
        std::error_code ec;
        fs::remove_all(work, ec);

        std::size_t present = 0;
        for (const SnapshotPoint& p : series.points) present += p.present;
        if (present < 3)
            throw InsufficientDataError("only " + std::to_string(present) +
                                        " snapshots produced graphs; trend fitting needs 3");

        ensure_out_dir(config.out_dir);
        write_text_file((fs::path(config.out_dir) / "series.csv").string(), series_csv(series));
        write_text_file((fs::path(config.out_dir) / "trends.json").string(),
                        trends_json(series, config.alpha));
        std::cout << "evolve: " << present << "/" << series.points.size() << " snapshots\n";
        return kExitOk;
    });
}

int cmd_dsm(const RunConfig& config) {
    return guarded("dsm", [&] {
        if (config.dsm_entities.empty())
            throw ParameterError("dsm requires one or more entity paths");
        const PipelineOutput out = run_pipeline(config);
        std::vector<int> subset;
        for (const std::string& path : config.dsm_entities) {
            const int id = out.graph.entity_by_path(normalize_path(path));
            if (id < 0) throw ValidationError("unknown entity path: " + path);
            subset.push_back(id);
        }
        DsmOptions opts;
        opts.display_limit = config.dsm_limit;
        const std::string dsm =
            render_dsm(subset, out.matrix, out.actual, out.graph.entities(), opts);
        if (config.out_dir.empty() || config.out_dir == "-") {
            std::cout << dsm;
        } else {
            ensure_out_dir(config.out_dir);
            write_text_file((fs::path(config.out_dir) / "dsm.txt").string(), dsm);
            std::cout << dsm;
        }
        return kExitOk;
    });
}

int cmd_export_graph(const RunConfig& config, const std::string& out_file) {
    return guarded("export-graph", [&] {
        const DependencyGraph graph = load_graph(config);
        const std::string text = export_canonical(graph);
        if (out_file.empty() || out_file == "-") {
            std::cout << text;
        } else {
            write_text_file(out_file, text);
            std::cout << "export-graph: " << graph.entity_count() << " entities, "
                      << graph.edges().size() << " edges\n";
        }
        return kExitOk;
    });
}

}  // namespace cli
}  // namespace pairsmell
