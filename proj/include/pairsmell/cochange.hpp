#ifndef PAIRSMELL_COCHANGE_HPP_
#define PAIRSMELL_COCHANGE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pairsmell/depgraph.hpp"

namespace pairsmell {

// One commit in the @hash|author|timestamp + numstat capture format.
struct CommitRecord {
    std::string hash;
    std::string author;
    std::int64_t timestamp = 0;  // seconds since epoch
    struct FileChange {
        std::string path;
        std::int64_t lines_added = 0;
        std::int64_t lines_deleted = 0;
    };
    std::vector<FileChange> files;
};

// Parses a captured log (or live `git log --no-merges --numstat --date=unix
// --pretty=format:@%H|%ae|%ad` output). Binary numstat entries count 0/0;
// renamed paths are attributed to the new name.
std::vector<CommitRecord> ingest_log(std::istream& in);
std::vector<CommitRecord> ingest_log_text(const std::string& text);
std::vector<CommitRecord> ingest_log_file(const std::string& path);

// Per-entity change evidence over the delta most recent commits.
class ChangeHistory {
  public:
    ChangeHistory() = default;

    int entity_count() const { return static_cast<int>(commits_.size()); }
    std::size_t delta_requested() const { return delta_requested_; }
    std::size_t commits_used() const { return commits_used_; }
    bool shortfall() const { return commits_used_ < delta_requested_; }

    const std::set<int>& commit_set(int entity) const { return commits_.at(entity); }
    std::int64_t churn(int entity) const { return churn_.at(entity); }  // added + deleted
    const std::set<std::string>& developers(int entity) const { return developers_.at(entity); }
    std::int64_t churn_in_commit(int entity, int commit_index) const;

    friend ChangeHistory window(const std::vector<CommitRecord>& records, std::size_t delta,
                                const std::vector<Entity>& entities);

  private:
    std::size_t delta_requested_ = 0;
    std::size_t commits_used_ = 0;
    std::vector<std::set<int>> commits_;  // entity -> window commit indices
    std::vector<std::map<int, std::int64_t>> lines_;
    std::vector<std::int64_t> churn_;
    std::vector<std::set<std::string>> developers_;
};

// Builds per-entity aggregates from the delta most recent commits (records
// are expected newest-first, as git log emits them). A shorter history is
// used in full and flagged.
ChangeHistory window(const std::vector<CommitRecord>& records, std::size_t delta,
                     const std::vector<Entity>& entities);

// Commit overlap rate: 2|Cmt_i ∩ Cmt_j| / (|Cmt_i| + |Cmt_j|); 0 on empty.
double cor(const ChangeHistory& history, int i, int j);

// Code change overlap: lines changed in either entity within shared
// commits, over total churn of both; 0 on empty.
double cco(const ChangeHistory& history, int i, int j);

// Developer overlap rate: 2|Dev_i ∩ Dev_j| / (|Dev_i| + |Dev_j|); 0 on empty.
double dor(const ChangeHistory& history, int i, int j);

enum class PairMetric { Cor, Cco, Dor };
std::string pair_metric_name(PairMetric metric);
PairMetric parse_pair_metric(const std::string& name);

double pair_metric(const ChangeHistory& history, PairMetric metric, int i, int j);

using EntityPair = std::pair<int, int>;

struct KRatioReport {
    PairMetric metric = PairMetric::Cor;
    std::size_t smelly_pairs = 0;
    std::size_t baseline_pairs = 0;
    std::size_t smelly_active = 0;    // pairs with a nonzero metric denominator
    std::size_t baseline_active = 0;
    double smelly_mean = 0.0;         // inclusive of zero-denominator pairs
    double baseline_mean = 0.0;
    double smelly_mean_active = 0.0;  // over active pairs only
    double baseline_mean_active = 0.0;
    std::optional<double> k;          // defined iff baseline_mean > 0
    std::optional<double> cohens_d;
    double p_value = 1.0;
    bool no_data = false;  // empty smelly set, or no smelly pair changed
};

// Mean metric of smelly pairs over mean of a non-smelly baseline, with a
// Welch t-test and pooled-SD effect size over the two per-pair samples.
KRatioReport k_ratio(const ChangeHistory& history, PairMetric metric,
                     const std::vector<EntityPair>& smelly_pairs,
                     const std::vector<EntityPair>& baseline_pairs);

}  // namespace pairsmell

#endif  // PAIRSMELL_COCHANGE_HPP_
