#include "pairsmell/evolution.hpp"

#include <algorithm>
#include <numeric>

#include "pairsmell/consensus.hpp"
#include "pairsmell/error.hpp"
#include "pairsmell/smells.hpp"
#include "pairsmell/stats.hpp"
#include "pairsmell/structure.hpp"

namespace pairsmell {

std::vector<Snapshot> sample_snapshots(const std::vector<CommitRecord>& revision_history,
                                       int interval_days, int count, const std::string& anchor) {
    if (revision_history.empty())
        throw InsufficientDataError("snapshot sampling requires a non-empty revision history");
    if (interval_days < 1) throw ParameterError("snapshot interval must be at least one day");
    if (count < 1) throw ParameterError("snapshot count must be at least one");

    // Log order is newest-first; the anchor defaults to the newest commit.
    std::size_t anchor_idx = 0;
    if (!anchor.empty()) {
        auto it = std::find_if(revision_history.begin(), revision_history.end(),
                               [&](const CommitRecord& r) { return r.hash == anchor; });
        if (it == revision_history.end())
            throw ValidationError("anchor revision not found in history: " + anchor);
        anchor_idx = static_cast<std::size_t>(it - revision_history.begin());
    }

    // Timestamps are not assumed monotonic in log order; order candidates by
    // (timestamp, older log position first) for a deterministic pick.
    std::vector<std::size_t> by_time;
    for (std::size_t i = anchor_idx; i < revision_history.size(); ++i) by_time.push_back(i);
    std::stable_sort(by_time.begin(), by_time.end(), [&](std::size_t a, std::size_t b) {
        if (revision_history[a].timestamp != revision_history[b].timestamp)
            return revision_history[a].timestamp < revision_history[b].timestamp;
        return a > b;  // older log position first
    });

    const std::int64_t interval = static_cast<std::int64_t>(interval_days) * 24 * 3600;
    const std::int64_t anchor_time = revision_history[anchor_idx].timestamp;

    std::vector<Snapshot> picked;
    std::vector<std::string> seen;
    for (int i = 0; i < count; ++i) {
        const std::int64_t boundary = anchor_time - static_cast<std::int64_t>(i) * interval;
        // Latest commit at or before the boundary.
        const CommitRecord* best = nullptr;
        if (i == 0) {
            best = &revision_history[anchor_idx];
        } else {
            auto it = std::upper_bound(by_time.begin(), by_time.end(), boundary,
                                       [&](std::int64_t t, std::size_t idx) {
                                           return t < revision_history[idx].timestamp;
                                       });
            if (it == by_time.begin()) continue;  // nothing at or before this boundary
            best = &revision_history[*(it - 1)];
        }
        if (std::find(seen.begin(), seen.end(), best->hash) != seen.end())
            continue;  // period without commits collapses onto an already-picked snapshot
        seen.push_back(best->hash);
        picked.push_back({best->hash, best->timestamp});
    }
    std::reverse(picked.begin(), picked.end());  // oldest -> newest, ending at the anchor
    return picked;
}

SnapshotSeries series_percentages(const std::vector<Snapshot>& snapshots,
                                  const SeriesPipelineConfig& config,
                                  const SnapshotMaterializer& materialize) {
    SnapshotSeries series;
    for (std::size_t idx = 0; idx < snapshots.size(); ++idx) {
        SnapshotPoint point;
        point.snapshot = snapshots[idx];
        point.index = static_cast<int>(idx);
        try {
            std::optional<DependencyGraph> graph = materialize(snapshots[idx]);
            if (graph.has_value()) {
                const ActualStructure actual = recover_modules(graph->entities());
                PortfolioConfig pc;
                pc.enabled = config.tools;
                pc.k = config.k.value_or(actual.solution.module_count);
                pc.acdc.max_cluster_size = config.max_cluster_size;
                const auto solutions = run_portfolio(*graph, pc);
                const auto matrix = build_coassociation(solutions);
                const auto classification = classify_apt(matrix);
                const auto detection = detect(classification, actual, graph->entities());
                const auto universe = compute_universe_stats(classification, actual);
                const auto stats = prevalence(detection.records, universe);
                point.present = true;
                point.insep_pairs = stats.insep_pairs;
                point.incol_pairs = stats.incol_pairs;
                point.insep_entities = stats.insep_entities;
                point.incol_entities = stats.incol_entities;
                point.insep_pair_pct = stats.insep_pair_pct;
                point.incol_pair_pct = stats.incol_pair_pct;
                point.insep_entity_pct = stats.insep_entity_pct;
                point.incol_entity_pct = stats.incol_entity_pct;
            }
        } catch (const Error&) {
            // snapshot marked missing; the series keeps a gap
        }
        series.points.push_back(std::move(point));
    }
    return series;
}

std::string trend_class_name(TrendClass c) {
    switch (c) {
        case TrendClass::Increasing: return "increasing";
        case TrendClass::Decreasing: return "decreasing";
        case TrendClass::Stable: return "stable";
    }
    return "?";
}

TrendResult fit_trend_points(const std::vector<double>& xs, const std::vector<double>& ys,
                             double alpha) {
    if (xs.size() != ys.size()) throw ParameterError("trend fit requires matching x/y sizes");
    if (xs.size() < 3)
        throw InsufficientDataError("trend fitting requires at least 3 snapshots, got " +
                                    std::to_string(xs.size()));

    TrendResult r;
    const bool constant = std::all_of(ys.begin(), ys.end(),
                                      [&](double v) { return v == ys.front(); });
    if (constant) {
        // Zero-variance series: stable by definition, no t statistic.
        r.intercept = ys.front();
        return r;
    }
    const stats::OlsResult fit = stats::ols(xs, ys);
    r.slope = fit.slope;
    r.intercept = fit.intercept;
    r.p_value = fit.p_value;
    if (r.p_value >= alpha)
        r.classification = TrendClass::Stable;
    else
        r.classification = r.slope > 0.0 ? TrendClass::Increasing : TrendClass::Decreasing;
    return r;
}

TrendResult fit_trend(const std::vector<double>& series, double alpha) {
    std::vector<double> xs(series.size());
    std::iota(xs.begin(), xs.end(), 0.0);
    return fit_trend_points(xs, series, alpha);
}

}  // namespace pairsmell
