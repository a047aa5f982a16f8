#ifndef PAIRSMELL_CLI_HPP_
#define PAIRSMELL_CLI_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pairsmell/depgraph.hpp"
#include "pairsmell/modularize.hpp"

namespace pairsmell {
namespace cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInsufficientData = 3;

struct RunConfig {
    // graph source: exactly one of these
    std::string graph_file;         // canonical JSON
    std::string depends_file;       // Depends-style export
    std::string scan_profile;       // java-imports | c-includes (with root)
    std::string root;               // scan root / repository directory

    std::vector<std::string> include_globs;
    std::vector<std::string> exclude_globs;

    std::vector<std::string> tools{"wca", "limbo", "acdc", "fca"};
    std::optional<int> k;
    int max_cluster_size = 20;
    std::string consensus = "unanimity";  // or "threshold"
    double collocate_threshold = 0.75;
    bool suppress_body_header = false;
    bool dump_matrix = false;

    std::vector<int> deltas{100, 200, 300};
    std::string log_file;           // captured log; empty = invoke git on root
    std::string anchor;

    int interval_days = 14;
    int snapshots = 25;
    double alpha = 0.05;

    std::string out_dir = ".";
    std::vector<std::string> formats{"json", "csv"};

    int dsm_limit = 30;
    std::vector<std::string> dsm_entities;
};

// Loads the configured graph source (validation errors surface as exceptions).
DependencyGraph load_graph(const RunConfig& config);

// Full detect pipeline: solutions, co-association export, smell report
// JSON/CSV, prevalence stats. Returns the process exit code.
int cmd_detect(const RunConfig& config);

// Per-delta, per-form, per-metric K-ratio reports from a smell report plus
// a log source.
int cmd_cochange(const RunConfig& config, const std::string& smell_report_path);

// Biweekly snapshot series and trend classification over a repository.
int cmd_evolve(const RunConfig& config);

// Textual DSM of a small entity subset, written to stdout or out_dir.
int cmd_dsm(const RunConfig& config);

// Loads any graph source and writes the canonical normalized JSON.
int cmd_export_graph(const RunConfig& config, const std::string& out_file);

}  // namespace cli
}  // namespace pairsmell

#endif  // PAIRSMELL_CLI_HPP_
