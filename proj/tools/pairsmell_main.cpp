#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pairsmell/cli.hpp"

namespace {

using pairsmell::cli::RunConfig;

void add_graph_source_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--graph", config.graph_file, "Canonical dependency-graph JSON file");
    cmd->add_option("--depends-json", config.depends_file, "Depends-style JSON export");
    cmd->add_option("--scan", config.scan_profile,
                    "Scan sources under --root (java-imports or c-includes)");
    cmd->add_option("--root", config.root, "Scan root / repository directory");
    cmd->add_option("--include", config.include_globs, "Glob(s) a scanned path must match")
        ->delimiter(',');
    cmd->add_option("--exclude", config.exclude_globs, "Glob(s) that drop scanned paths")
        ->delimiter(',');
}

bool parse_k(const CLI::results_t& res, std::optional<int>& k_holder) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(res.front(), &used);
        if (used != res.front().size()) return false;
        k_holder = value;
        return true;
    } catch (...) {
        return false;
    }
}

void add_portfolio_options(CLI::App* cmd, RunConfig& config, std::optional<int>& k_holder) {
    cmd->add_option("--tools", config.tools,
                    "Enabled algorithms, comma separated (wca,limbo,acdc,fca)")
        ->delimiter(',');
    cmd->add_option("--k",
                    [&k_holder](const CLI::results_t& res) { return parse_k(res, k_holder); },
                    "Cut for wca/limbo (default: number of actual folder modules)");
    cmd->add_option("--max-cluster-size", config.max_cluster_size,
                    "Largest module the acdc dominator pass may emit");
    cmd->add_option("--consensus", config.consensus, "unanimity (default) or threshold");
    cmd->add_option("--threshold", config.collocate_threshold,
                    "Collocation threshold for the relaxed consensus mode");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PairSmell toolchain: modular-relation smell detection, co-change impact, "
                 "and evolution trends"};
    app.require_subcommand(1);
    app.fallthrough();  // lets `pairsmell detect --config ...` reach the app option
    app.set_config("--config", "", "TOML-like key/value config; flags win over file values");
    app.allow_config_extras(CLI::config_extras_mode::error);

    RunConfig config;
    std::optional<int> k_holder;
    std::string smell_report = "smells.json";
    std::string export_out = "-";

    CLI::App* detect = app.add_subcommand("detect", "Detect InSep/InCol pair smells");
    add_graph_source_options(detect, config);
    add_portfolio_options(detect, config, k_holder);
    detect->add_option("--out", config.out_dir, "Output directory");
    detect->add_option("--format", config.formats, "Report formats (json,csv)")->delimiter(',');
    detect->add_flag("--suppress-body-header", config.suppress_body_header,
                     "Report C/C++ body-header InSep pairs as suppressed");
    detect->add_flag("--dump-matrix", config.dump_matrix,
                     "Write every pair to coassociation.csv, not only unanimous ones");

    CLI::App* cochange = app.add_subcommand("cochange", "Co-change K-ratios for smelly pairs");
    cochange->add_option("--report", smell_report, "smells.json produced by detect")
        ->required();
    cochange->add_option("--log", config.log_file, "Pre-captured log file (numstat format)");
    cochange->add_option("--root", config.root, "Repository to mine via git");
    cochange->add_option("--anchor", config.anchor, "Anchor revision for the log walk");
    cochange->add_option("--delta", config.deltas, "Window sizes in commits (e.g. 100,200,300)")
        ->delimiter(',');
    cochange->add_option("--out", config.out_dir, "Output directory");

    CLI::App* evolve = app.add_subcommand("evolve", "Smell percentage series over snapshots");
    evolve->add_option("--root", config.root, "Repository with history")->required();
    evolve->add_option("--scan", config.scan_profile,
                       "Language profile for per-snapshot graphs")
        ->required();
    evolve->add_option("--include", config.include_globs, "Scan include glob(s)")->delimiter(',');
    evolve->add_option("--exclude", config.exclude_globs, "Scan exclude glob(s)")->delimiter(',');
    evolve->add_option("--k",
                       [&k_holder](const CLI::results_t& res) { return parse_k(res, k_holder); },
                       "Fixed cut for wca/limbo across snapshots");
    evolve->add_option("--tools", config.tools, "Enabled algorithms")->delimiter(',');
    evolve->add_option("--interval-days", config.interval_days, "Days between snapshots");
    evolve->add_option("--snapshots", config.snapshots, "Maximum snapshot count");
    evolve->add_option("--anchor", config.anchor, "Anchor revision (default HEAD)");
    evolve->add_option("--alpha", config.alpha, "Significance level for the trend test");
    evolve->add_option("--out", config.out_dir, "Output directory");

    CLI::App* dsm = app.add_subcommand("dsm", "Render a co-association DSM for chosen files");
    add_graph_source_options(dsm, config);
    add_portfolio_options(dsm, config, k_holder);
    dsm->add_option("--limit", config.dsm_limit, "Maximum matrix size");
    CLI::Option* dsm_out =
        dsm->add_option("--out", config.out_dir, "Output directory ('-' for stdout only)");
    dsm->add_option("entities", config.dsm_entities, "Entity paths to include")->required();

    CLI::App* export_graph =
        app.add_subcommand("export-graph", "Normalize any graph source to canonical JSON");
    add_graph_source_options(export_graph, config);
    export_graph->add_option("--out", export_out, "Output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? pairsmell::cli::kExitOk : pairsmell::cli::kExitInput;
    }

    config.k = k_holder;
    if (detect->parsed()) return pairsmell::cli::cmd_detect(config);
    if (cochange->parsed()) return pairsmell::cli::cmd_cochange(config, smell_report);
    if (evolve->parsed()) return pairsmell::cli::cmd_evolve(config);
    if (dsm->parsed()) {
        if (dsm_out->count() == 0) config.out_dir = "-";  // stdout-only by default
        return pairsmell::cli::cmd_dsm(config);
    }
    if (export_graph->parsed()) return pairsmell::cli::cmd_export_graph(config, export_out);
    return pairsmell::cli::kExitInput;
}
