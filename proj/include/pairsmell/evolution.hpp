#ifndef PAIRSMELL_EVOLUTION_HPP_
#define PAIRSMELL_EVOLUTION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pairsmell/cochange.hpp"
#include "pairsmell/depgraph.hpp"
#include "pairsmell/modularize.hpp"

namespace pairsmell {

struct Snapshot {
    std::string revision;
    std::int64_t timestamp = 0;
};

// Walks backward from the anchor picking the latest commit at or before
// each interval boundary; empty periods are skipped. Result is ordered
// oldest to newest and ends at the anchor.
std::vector<Snapshot> sample_snapshots(const std::vector<CommitRecord>& revision_history,
                                       int interval_days = 14, int count = 25,
                                       const std::string& anchor = {});

struct SnapshotPoint {
    Snapshot snapshot;
    int index = 0;        // position in the sampled sequence (the trend x value)
    bool present = false; // false = pipeline failed for this snapshot (gap)
    std::size_t insep_pairs = 0;
    std::size_t incol_pairs = 0;
    std::size_t insep_entities = 0;
    std::size_t incol_entities = 0;
    double insep_pair_pct = 0.0;
    double incol_pair_pct = 0.0;
    double insep_entity_pct = 0.0;
    double incol_entity_pct = 0.0;
};

struct SnapshotSeries {
    std::vector<SnapshotPoint> points;
};

struct SeriesPipelineConfig {
    std::vector<Algorithm> tools{Algorithm::Wca, Algorithm::Limbo, Algorithm::Acdc,
                                 Algorithm::Fca};
    std::optional<int> k;  // default: actual module count per snapshot
    int max_cluster_size = 20;
};

// Produces the dependency graph of one snapshot; std::nullopt or a thrown
// error marks the snapshot as a gap.
using SnapshotMaterializer = std::function<std::optional<DependencyGraph>(const Snapshot&)>;

// Runs the detect pipeline per snapshot and collects pair- and entity-level
// percentage series. Absolute counts are stored but never trend-fitted.
SnapshotSeries series_percentages(const std::vector<Snapshot>& snapshots,
                                  const SeriesPipelineConfig& config,
                                  const SnapshotMaterializer& materialize);

enum class TrendClass { Increasing, Decreasing, Stable };
std::string trend_class_name(TrendClass c);

struct TrendResult {
    double slope = 0.0;
    double intercept = 0.0;
    double p_value = 1.0;
    TrendClass classification = TrendClass::Stable;
};

// OLS of the percentage on the snapshot index; stable when the slope is not
// significant at alpha, otherwise the sign decides. Requires >= 3 points.
TrendResult fit_trend(const std::vector<double>& series, double alpha = 0.05);
TrendResult fit_trend_points(const std::vector<double>& xs, const std::vector<double>& ys,
                             double alpha = 0.05);

}  // namespace pairsmell

#endif  // PAIRSMELL_EVOLUTION_HPP_
