// Acceptance suite: ten end-to-end criteria, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "pairsmell/cli.hpp"
#include "pairsmell/cochange.hpp"
#include "pairsmell/consensus.hpp"
#include "pairsmell/error.hpp"
#include "pairsmell/evolution.hpp"
#include "pairsmell/repo.hpp"
#include "pairsmell/smells.hpp"
#include "pairsmell/stats.hpp"
#include "pairsmell/structure.hpp"

using namespace pairsmell;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename T, typename U>
    void equal(const T& got, const U& want, const std::string& what) {
        if (!(got == static_cast<T>(want))) {
            std::ostringstream msg;
            msg << what << " (got " << got << ", want " << want << ")";
            failures.push_back(msg.str());
        }
    }
};

using Criterion = std::function<void(Check&)>;

double elapsed_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- shared fixtures -------------------------------------------------------

// P1: two 6-cliques joined by one low->high edge, all files in one folder.
DependencyGraph p1_graph() {
    std::vector<std::string> paths;
    for (int i = 0; i < 12; ++i)
        paths.push_back("core/f" + std::string(i < 10 ? "0" : "") + std::to_string(i) + ".java");
    return testutil::two_cliques(6, std::move(paths));
}

// P2: one 6-clique split 3/3 across folders plus six isolated files.
DependencyGraph p2_graph() {
    std::vector<std::string> paths{"a/c0.java", "a/c1.java", "a/c2.java",
                                   "b/c3.java", "b/c4.java", "b/c5.java"};
    for (int i = 0; i < 6; ++i)
        paths.push_back("i" + std::to_string(i) + "/x" + std::to_string(i) + ".java");
    std::vector<testutil::EdgeSpec> edges = testutil::clique_edges({0, 1, 2, 3, 4, 5});
    return testutil::make_graph(12, edges, std::move(paths));
}

struct PipelineRun {
    std::vector<ModularSolution> solutions;
    CoAssociationMatrix matrix;
    ActualStructure actual;
    DetectionResult detection;
};

PipelineRun run_pipeline(const DependencyGraph& graph, int k) {
    PipelineRun run;
    run.actual = recover_modules(graph.entities());
    PortfolioConfig config;
    config.k = k;
    run.solutions = run_portfolio(graph, config);
    run.matrix = build_coassociation(run.solutions);
    const AptClassification classification(run.matrix);
    run.detection = detect(classification, run.actual, graph.entities());
    return run;
}

// ---- criteria --------------------------------------------------------------

void p1_incol_end_to_end(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto graph = p1_graph();
    const auto run = run_pipeline(graph, 2);

    for (const ModularSolution& s : run.solutions)
        for (int i = 0; i < 6; ++i)
            for (int j = 6; j < 12; ++j)
                c.require(s.assignment[i] != s.assignment[j],
                          s.tool_tag + " keeps cross-clique pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ") apart");

    std::size_t incol = 0, insep = 0;
    for (const auto& rec : run.detection.records) {
        if (rec.form == SmellForm::InCol) ++incol;
        if (rec.form == SmellForm::InSep) ++insep;
    }
    c.equal(incol, 36u, "InCol record count");
    c.equal(insep, 0u, "InSep record count");
    c.require(elapsed_seconds(t0) < 1.0, "P1 pipeline under one second");
}

void p2_insep_end_to_end(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto graph = p2_graph();
    const auto run = run_pipeline(graph, 2);

    // Portfolio unanimity on the cross-folder clique pairs comes first.
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            c.require(run.matrix.value(i, j) == 1.0,
                      "unanimous collocation of clique pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");

    std::size_t insep = 0, incol = 0;
    std::set<std::pair<int, int>> insep_pairs;
    for (const auto& rec : run.detection.records) {
        if (rec.form == SmellForm::InSep) {
            ++insep;
            insep_pairs.insert({rec.first, rec.second});
        } else {
            ++incol;
        }
    }
    c.equal(insep, 9u, "InSep record count");
    c.equal(incol, 0u, "InCol record count");
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            c.require(insep_pairs.count({i, j}) == 1, "InSep covers the cross-folder pair (" +
                                                          std::to_string(i) + "," +
                                                          std::to_string(j) + ")");
    c.require(elapsed_seconds(t0) < 1.0, "P2 pipeline under one second");
}

std::map<std::string, std::string> detect_outputs(const std::string& graph_json, int k,
                                                  const fs::path& out_dir) {
    testutil::TempDir in("accept-in");
    in.write("graph.json", graph_json);
    cli::RunConfig config;
    config.graph_file = (in.path() / "graph.json").string();
    config.k = k;
    config.out_dir = out_dir.string();
    if (cli::cmd_detect(config) != cli::kExitOk) throw Error("cmd_detect failed");
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(out_dir))
        files[entry.path().filename().string()] = testutil::read_file(entry.path());
    return files;
}

void p3_determinism(Check& c) {
    for (const bool second_fixture : {false, true}) {
        const DependencyGraph graph = second_fixture ? p2_graph() : p1_graph();
        const std::string label = second_fixture ? "P2 fixture" : "P1 fixture";
        const std::string canonical = export_canonical(graph);

        testutil::TempDir out_root("accept-det");
        std::map<std::string, std::string> first;
        for (int run = 0; run < 10; ++run) {
            const auto files =
                detect_outputs(canonical, 2, out_root.path() / ("run" + std::to_string(run)));
            if (run == 0) {
                first = files;
                c.require(!first.empty(), label + ": outputs produced");
            } else {
                c.require(files == first,
                          label + ": run " + std::to_string(run) + " byte-identical");
            }
        }

        // Permuted entity listing: reverse entity order, keep ids.
        nlohmann::json doc = nlohmann::json::parse(canonical);
        std::reverse(doc["entities"].begin(), doc["entities"].end());
        std::reverse(doc["edges"].begin(), doc["edges"].end());
        const auto permuted =
            detect_outputs(doc.dump(), 2, out_root.path() / "permuted");
        c.require(permuted == first, label + ": permuted input byte-identical");
    }
}

void p4_density_arithmetic(Check& c) {
    UniverseStats u;
    u.entity_count = 1000;
    u.actual_separated_pairs = 100000;
    u.actual_collocated_pairs = 10000;

    // 27 InSep pairs over exactly 34 entities: 21 star pairs + 6 disjoint.
    std::vector<PairSmellRecord> insep;
    int next = 1;
    for (int s = 0; s < 21; ++s) {
        PairSmellRecord rec;
        rec.first = 0;
        rec.second = next++;
        rec.form = SmellForm::InSep;
        insep.push_back(rec);
    }
    for (int d = 0; d < 6; ++d, next += 2) {
        PairSmellRecord rec;
        rec.first = next;
        rec.second = next + 1;
        rec.form = SmellForm::InSep;
        insep.push_back(rec);
    }
    const auto insep_stats = prevalence(insep, u);
    c.equal(insep_stats.insep_pairs, 27u, "InSep pair count");
    c.equal(insep_stats.insep_entities, 34u, "InSep entity count");
    c.require(std::fabs(insep_stats.insep_density - 1.59) <= 0.005,
              "density(27 pairs, 34 entities) = 1.59 +/- 0.005, got " +
                  std::to_string(insep_stats.insep_density));

    // 143 InCol pairs over exactly 86 entities: hub covers all, rest reuse.
    std::vector<PairSmellRecord> incol;
    for (int k = 1; k <= 85; ++k) {
        PairSmellRecord rec;
        rec.first = 0;
        rec.second = k;
        rec.form = SmellForm::InCol;
        incol.push_back(rec);
    }
    for (int k = 2; k <= 59; ++k) {
        PairSmellRecord rec;
        rec.first = 1;
        rec.second = k;
        rec.form = SmellForm::InCol;
        incol.push_back(rec);
    }
    const auto incol_stats = prevalence(incol, u);
    c.equal(incol_stats.incol_pairs, 143u, "InCol pair count");
    c.equal(incol_stats.incol_entities, 86u, "InCol entity count");
    c.require(std::fabs(incol_stats.incol_density - 3.33) <= 0.005,
              "density(143 pairs, 86 entities) = 3.33 +/- 0.005, got " +
                  std::to_string(incol_stats.incol_density));
}

void p5_metric_oracles(Check& c) {
    std::mt19937 rng(271828);
    const char* devs[] = {"a@x", "b@x", "c@x"};
    int cases = 0;
    while (cases < 1000) {
        const int commits = 1 + static_cast<int>(rng() % 20);
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<CommitRecord> records;
        for (int k = 0; k < commits; ++k) {
            CommitRecord rec;
            rec.hash = "h" + std::to_string(k);
            rec.author = devs[rng() % 3];
            rec.timestamp = 1700000000 - k * 60;
            std::set<int> touched;
            const int t = static_cast<int>(rng() % (n + 1));
            for (int x = 0; x < t; ++x) touched.insert(static_cast<int>(rng() % n));
            for (int f : touched)
                rec.files.push_back({"f" + std::to_string(f) + ".java",
                                     static_cast<std::int64_t>(rng() % 8),
                                     static_cast<std::int64_t>(rng() % 8)});
            records.push_back(std::move(rec));
        }
        std::vector<Entity> entities;
        for (int i = 0; i < n; ++i) entities.push_back({i, "f" + std::to_string(i) + ".java"});
        const std::size_t delta = 1 + rng() % commits;
        const ChangeHistory h = window(records, delta, entities);

        for (int i = 0; i < n && cases < 1000; ++i) {
            for (int j = i + 1; j < n && cases < 1000; ++j) {
                // Independent set computation from the raw records.
                std::set<std::string> ci, cj, di, dj;
                std::map<std::string, std::int64_t> li, lj;
                std::int64_t chi = 0, chj = 0;
                for (std::size_t k = 0; k < std::min(delta, records.size()); ++k) {
                    for (const auto& fc : records[k].files) {
                        const std::int64_t lines = fc.lines_added + fc.lines_deleted;
                        if (fc.path == entities[i].path) {
                            ci.insert(records[k].hash);
                            di.insert(records[k].author);
                            chi += lines;
                            li[records[k].hash] += lines;
                        }
                        if (fc.path == entities[j].path) {
                            cj.insert(records[k].hash);
                            dj.insert(records[k].author);
                            chj += lines;
                            lj[records[k].hash] += lines;
                        }
                    }
                }
                std::size_t shared_c = 0;
                std::int64_t joint = 0;
                for (const auto& hsh : ci)
                    if (cj.count(hsh)) {
                        ++shared_c;
                        joint += li[hsh] + lj[hsh];
                    }
                std::size_t shared_d = 0;
                for (const auto& d : di) shared_d += dj.count(d);

                const double want_cor =
                    ci.empty() && cj.empty() ? 0.0 : 2.0 * shared_c / double(ci.size() + cj.size());
                const double want_cco = chi + chj == 0 ? 0.0 : joint / double(chi + chj);
                const double want_dor =
                    di.empty() && dj.empty() ? 0.0 : 2.0 * shared_d / double(di.size() + dj.size());

                c.require(std::fabs(cor(h, i, j) - want_cor) < 1e-12, "COR oracle equality");
                c.require(std::fabs(cco(h, i, j) - want_cco) < 1e-12, "CCO oracle equality");
                c.require(std::fabs(dor(h, i, j) - want_dor) < 1e-12, "DOR oracle equality");
                ++cases;
            }
        }
    }
}

void p6_consensus_oracle(Check& c) {
    std::mt19937 rng(141421);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int m = 2 + static_cast<int>(rng() % 3);
        std::vector<ModularSolution> solutions;
        for (int s = 0; s < m; ++s) {
            std::vector<int> labels(n);
            for (int& l : labels) l = static_cast<int>(rng() % n);
            solutions.push_back(ModularSolution::from_labels(std::move(labels), "t"));
        }
        const auto matrix = build_coassociation(solutions);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                int recount = 0;
                for (const auto& s : solutions) recount += mr_of(s, i, j);
                if (matrix.votes(i, j) != recount) {
                    c.require(false, "vote recount mismatch");
                    return;
                }
            }
        }
    }

    // Set-decomposition identities hold exactly on both end-to-end fixtures.
    for (const bool second : {false, true}) {
        const auto graph = second ? p2_graph() : p1_graph();
        const auto run = run_pipeline(graph, 2);
        const AptClassification classification(run.matrix);
        const auto u = compute_universe_stats(classification, run.actual);
        const auto stats = prevalence(run.detection.records, u);
        c.require(u.apt_collocated_pairs ==
                      stats.insep_pairs + u.apt_collocated_and_actual_collocated,
                  "apt-collocated decomposition exact");
        c.require(u.apt_separated_pairs ==
                      stats.incol_pairs + u.apt_separated_and_actual_separated,
                  "apt-separated decomposition exact");
    }
}

double reference_t_two_sided_p(double t, double df) {
    const double at = std::fabs(t);
    auto density = [df](double x) {
        return std::exp(std::lgamma((df + 1) / 2) - std::lgamma(df / 2)) /
               std::sqrt(df * M_PI) * std::pow(1 + x * x / df, -(df + 1) / 2);
    };
    const int steps = 20000;
    const double h = at / steps;
    double integral = density(0.0) + density(at);
    for (int i = 1; i < steps; ++i) integral += density(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    integral *= h / 3.0;
    return 2.0 * (0.5 - integral);
}

void p7_trend_correctness(Check& c) {
    std::vector<double> line;
    for (int i = 0; i < 25; ++i) line.push_back(0.01 * i);
    const auto t = fit_trend(line);
    c.require(std::fabs(t.slope - 0.01) <= 1e-9, "noiseless slope within 1e-9");
    c.require(t.classification == TrendClass::Increasing, "noiseless line increases");

    const auto flat = fit_trend(std::vector<double>(10, 0.2));
    c.require(flat.classification == TrendClass::Stable, "constant series stable");
    c.require(flat.slope == 0.0, "constant series slope zero");

    std::mt19937 rng(9);
    std::normal_distribution<double> noise(0.0, 0.04);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> xs, ys;
        const int n = 5 + static_cast<int>(rng() % 21);
        const double slope = (static_cast<int>(rng() % 100) - 50) / 2500.0;
        for (int i = 0; i < n; ++i) {
            xs.push_back(i);
            ys.push_back(0.3 + slope * i + noise(rng));
        }
        const auto fit = stats::ols(xs, ys);
        if (fit.se_slope == 0.0) continue;
        const double ref = reference_t_two_sided_p(fit.t_stat, double(n - 2));
        c.require(std::fabs(fit.p_value - ref) < 1e-6,
                  "p-value matches reference OLS t-test within 1e-6");
    }
}

void p8_k_ratio_direction(Check& c) {
    // 40 commits; the smelly pair changes together in every commit, the
    // baseline pair shares exactly one of its many commits (near-zero
    // overlap keeps K defined).
    std::string log;
    for (int k = 0; k < 40; ++k) {
        log += "@h" + std::to_string(k) + "|dev@x|" + std::to_string(2000000 - k * 100) + "\n";
        log += "1\t1\ts0.java\n1\t1\ts1.java\n";
        if (k < 20) log += "1\t0\tb0.java\n";
        if (k == 0 || k >= 20) log += "1\t0\tb1.java\n";
        log += "\n";
    }
    std::vector<Entity> entities{
        {0, "b0.java"}, {1, "b1.java"}, {2, "s0.java"}, {3, "s1.java"}};
    const auto history = window(ingest_log_text(log), 40, entities);

    const auto insep_like = k_ratio(history, PairMetric::Cor, {{2, 3}}, {{0, 1}});
    c.require(insep_like.k.has_value(), "InSep-style K defined");
    if (insep_like.k) c.require(*insep_like.k >= 10.0, "InSep-style K_COR >= 10, got " +
                                                           std::to_string(*insep_like.k));

    const auto incol_like = k_ratio(history, PairMetric::Cor, {{0, 1}}, {{2, 3}});
    c.require(incol_like.k.has_value(), "InCol-style K defined");
    if (incol_like.k) c.require(*incol_like.k <= 0.5, "InCol-style K_COR <= 0.5, got " +
                                                          std::to_string(*incol_like.k));

    // Fully silent baseline: K is undefined but the means still report.
    std::vector<Entity> silent{{0, "q0.java"}, {1, "q1.java"}, {2, "s0.java"}, {3, "s1.java"}};
    const auto h2 = window(ingest_log_text(log), 40, silent);
    const auto undefined_k = k_ratio(h2, PairMetric::Cor, {{2, 3}}, {{0, 1}});
    c.require(!undefined_k.k.has_value(), "zero baseline leaves K undefined");
    c.require(undefined_k.smelly_mean == 1.0, "smelly mean still reported");
}

void p9_fixture_repository(Check& c) {
    testutil::TempDir root("accept-fixture");
    const std::string repo = (root.path() / "repo").string();
    const std::string out = (root.path() / "out").string();

    const CommandResult gen = run_command("python3 " + shell_quote(PAIRSMELL_FIXTURE_SCRIPT) +
                                          " " + shell_quote(repo));
    c.equal(gen.exit_code, 0, "fixture generator exit code");
    if (gen.exit_code != 0) return;

    const std::string cli = PAIRSMELL_CLI_PATH;
    const auto t0 = std::chrono::steady_clock::now();
    const CommandResult detect_run =
        run_command(shell_quote(cli) + " detect --scan java-imports --root " + shell_quote(repo) +
                    " --out " + shell_quote(out));
    c.equal(detect_run.exit_code, 0, "detect exit code");
    const CommandResult cochange_run = run_command(
        shell_quote(cli) + " cochange --report " + shell_quote(out + "/smells.json") +
        " --root " + shell_quote(repo) + " --delta 20,40 --out " + shell_quote(out));
    c.equal(cochange_run.exit_code, 0, "cochange exit code");
    const CommandResult evolve_run = run_command(
        shell_quote(cli) + " evolve --root " + shell_quote(repo) +
        " --scan java-imports --snapshots 5 --out " + shell_quote(out));
    c.equal(evolve_run.exit_code, 0, "evolve exit code");
    c.require(elapsed_seconds(t0) < 10.0, "detect+cochange+evolve under ten seconds");
    if (detect_run.exit_code || cochange_run.exit_code || evolve_run.exit_code) return;

    auto in_unit = [&c](double v, const std::string& what) {
        c.require(v >= 0.0 && v <= 1.0, what + " in [0,1], got " + std::to_string(v));
    };

    // Smell report validates and its percentages are proportions.
    const auto smells = nlohmann::json::parse(testutil::read_file(fs::path(out) / "smells.json"));
    c.require(smells.at("schema") == "pairsmell-report/1", "smell report schema");
    for (const char* key : {"insep_pair_pct", "incol_pair_pct", "insep_entity_pct",
                            "incol_entity_pct"})
        in_unit(smells.at("stats").at(key).get<double>(), std::string("stats.") + key);
    const std::size_t n_entities = smells.at("entities").size();
    c.require(n_entities >= 50, "fixture scans at least 50 entities");
    for (const auto& rec : smells.at("records")) {
        c.require(rec.at("form") == "InSep" || rec.at("form") == "InCol", "record form");
        c.require(rec.at("actual") != rec.at("apt"), "record MRs contradict");
    }

    // Solutions are valid total partitions of the entity set.
    for (const char* tool : {"wca", "limbo", "acdc", "fca"}) {
        const auto sol = nlohmann::json::parse(
            testutil::read_file(fs::path(out) / (std::string("solution_") + tool + ".json")));
        c.require(sol.at("tool") == tool, std::string(tool) + " tag");
        std::set<int> seen;
        for (const auto& mod : sol.at("modules"))
            for (const auto& member : mod) seen.insert(member.get<int>());
        c.equal(seen.size(), n_entities, std::string(tool) + " covers every entity");
    }

    // Co-association export parses as i,j,value triples in [0,1].
    std::istringstream coassoc(testutil::read_file(fs::path(out) / "coassociation.csv"));
    std::string line;
    std::getline(coassoc, line);
    c.require(line == "i,j,apt_value", "coassociation header");
    while (std::getline(coassoc, line)) {
        int i = -1, j = -1;
        double v = -1.0;
        c.require(std::sscanf(line.c_str(), "%d,%d,%lf", &i, &j, &v) == 3,
                  "coassociation row parses");
        in_unit(v, "coassociation value");
    }

    // K-ratio report structure.
    const auto kratio = nlohmann::json::parse(testutil::read_file(fs::path(out) / "kratio.json"));
    c.require(kratio.at("schema") == "pairsmell-kratio/1", "kratio schema");
    c.equal(kratio.at("deltas").size(), std::size_t{2}, "two delta windows");
    for (const auto& delta : kratio.at("deltas"))
        for (const char* form : {"InSep", "InCol"})
            for (const char* metric : {"COR", "CCO", "DOR"}) {
                const auto& entry = delta.at("forms").at(form).at(metric);
                c.require(entry.at("status") == "ok" || entry.at("status") == "no_data_point",
                          "kratio status");
            }

    // Series rows and trends.
    std::istringstream series(testutil::read_file(fs::path(out) / "series.csv"));
    std::getline(series, line);
    c.require(line ==
                  "snapshot_index,timestamp,insep_pair_pct,incol_pair_pct,insep_entity_pct,"
                  "incol_entity_pct",
              "series header");
    std::size_t rows = 0;
    while (std::getline(series, line)) {
        int idx;
        long long ts;
        double a, b, d, e;
        c.require(std::sscanf(line.c_str(), "%d,%lld,%lf,%lf,%lf,%lf", &idx, &ts, &a, &b, &d,
                              &e) == 6,
                  "series row parses");
        for (double v : {a, b, d, e}) in_unit(v, "series percentage");
        ++rows;
    }
    c.require(rows >= 3, "at least three snapshot rows");

    const auto trends = nlohmann::json::parse(testutil::read_file(fs::path(out) / "trends.json"));
    c.require(trends.at("schema") == "pairsmell-trends/1", "trends schema");
    for (const char* key : {"insep_pair", "incol_pair", "insep_entity", "incol_entity"}) {
        const std::string cls = trends.at("trends").at(key).at("classification");
        c.require(cls == "increasing" || cls == "decreasing" || cls == "stable",
                  "trend classification vocabulary");
    }
}

void p10_small_graph_oracles(Check& c) {
    std::size_t graphs = 0;
    double min_ratio = 1.0;
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
        const int edge_count = static_cast<int>(slots.size());

        for (long mask = 0; mask < (1L << edge_count); ++mask) {
            // Weak connectivity via union-find.
            std::vector<int> parent(n);
            for (int i = 0; i < n; ++i) parent[i] = i;
            std::function<int(int)> find = [&](int x) {
                return parent[x] == x ? x : parent[x] = find(parent[x]);
            };
            for (int e = 0; e < edge_count; ++e)
                if (mask & (1L << e)) parent[find(slots[e].first)] = find(slots[e].second);
            bool connected = true;
            for (int i = 1; i < n; ++i) connected = connected && find(i) == find(0);
            if (!connected) continue;
            ++graphs;

            std::vector<testutil::EdgeSpec> edges;
            for (int e = 0; e < edge_count; ++e)
                if (mask & (1L << e)) edges.push_back({slots[e].first, slots[e].second, 1});
            const auto graph = testutil::make_graph(n, edges);

            auto check_partition = [&](const ModularSolution& s, const std::string& tool) {
                if (static_cast<int>(s.assignment.size()) != n) {
                    c.require(false, tool + " covers all entities");
                    return;
                }
                std::vector<int> first_seen;
                for (int i = 0; i < n; ++i) {
                    const int m = s.assignment[i];
                    if (m < 0 || m >= s.module_count) {
                        c.require(false, tool + " module ids in range");
                        return;
                    }
                    if (std::find(first_seen.begin(), first_seen.end(), m) == first_seen.end())
                        first_seen.push_back(m);
                }
                if (static_cast<int>(first_seen.size()) != s.module_count ||
                    !std::is_sorted(first_seen.begin(), first_seen.end()))
                    c.require(false, tool + " canonical numbering");
            };

            for (int k : {1, (n + 1) / 2, n}) {
                const auto w = wca(graph, k);
                const auto l = limbo(graph, k);
                check_partition(w, "wca");
                check_partition(l, "limbo");
                if (w.module_count != k) c.require(false, "wca honors k");
                if (l.module_count != k) c.require(false, "limbo honors k");
            }
            check_partition(acdc(graph), "acdc");
            const auto f = fca(graph);
            check_partition(f, "fca");

            std::vector<int> singletons(n);
            for (int i = 0; i < n; ++i) singletons[i] = i;
            const double mq = turbo_mq(graph, f.assignment);
            const double singleton_mq = turbo_mq(graph, singletons);
            if (mq < singleton_mq - 1e-12)
                c.require(false, "fca TurboMQ >= singleton TurboMQ");

            if (n <= 5) {  // exhaustive optimum for the recorded greedy ratio
                double best = 0.0;
                for (const auto& labels : testutil::all_partitions(n))
                    best = std::max(best, turbo_mq(graph, labels));
                if (best > 0.0) min_ratio = std::min(min_ratio, mq / best);
            }
        }
    }
    c.require(graphs == 1 + 4 + 38 + 728 + 26704,
              "connected graph enumeration count, got " + std::to_string(graphs));
    std::printf("         [note] fca greedy/optimum TurboMQ ratio >= %.4f over all "
                "connected graphs with n <= 5\n",
                min_ratio);
    c.require(min_ratio > 0.0, "fca ratio recorded");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"P1 InCol end-to-end (two cliques, one folder)", p1_incol_end_to_end},
        {"P2 InSep end-to-end (split clique, isolated files)", p2_insep_end_to_end},
        {"P3 determinism (10 runs + permuted input)", p3_determinism},
        {"P4 density arithmetic on reference tallies", p4_density_arithmetic},
        {"P5 co-change metric oracles (1000 random histories)", p5_metric_oracles},
        {"P6 consensus oracle (500 random portfolios)", p6_consensus_oracle},
        {"P7 trend correctness (slope, class, p-values)", p7_trend_correctness},
        {"P8 K-ratio direction (InSep up, InCol down)", p8_k_ratio_direction},
        {"P9 fixture repository end-to-end pipeline", p9_fixture_repository},
        {"P10 small-graph clustering oracles (enumerated)", p10_small_graph_oracles},
    };

    int failed = 0;
    for (const auto& [name, criterion] : criteria) {
        Check check;
        try {
            criterion(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        if (check.failures.empty()) {
            std::printf("[PASS]   %s\n", name.c_str());
        } else {
            ++failed;
            std::printf("[FAIL]   %s\n", name.c_str());
            std::size_t shown = 0;
            for (const auto& f : check.failures) {
                if (++shown > 5) {
                    std::printf("         ... and %zu more\n", check.failures.size() - shown + 1);
                    break;
                }
                std::printf("         - %s\n", f.c_str());
            }
        }
    }
    if (failed) std::printf("%d of %zu acceptance criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
