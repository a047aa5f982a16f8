#ifndef PAIRSMELL_MODULARIZE_HPP_
#define PAIRSMELL_MODULARIZE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pairsmell/depgraph.hpp"

namespace pairsmell {

// Flat total partition of the entity set. Module ids are canonical:
// contiguous, ordered by smallest member entity id.
struct ModularSolution {
    std::vector<int> assignment;  // entity id -> module id
    int module_count = 0;
    std::string tool_tag;

    // Renumbers arbitrary labels into canonical form.
    static ModularSolution from_labels(std::vector<int> labels, std::string tool_tag);

    // Members per module, ascending within and across modules.
    std::vector<std::vector<int>> modules() const;
};

// Working state of the agglomerative algorithms: summed member vectors and
// the member count.
struct ClusterFeature {
    SparseVec vector;
    int mass = 0;
};

// Support-count UENM: with M matched, b/c one-sided supports,
// (M/2) / (M/2 + b + c); 0 when all empty.
double uenm_similarity(const SparseVec& x, const SparseVec& y);

// Agglomerative clustering over feature vectors, merging the pair with the
// highest UENM similarity of summed cluster vectors until k clusters remain.
ModularSolution wca(const DependencyGraph& graph, int k);

// Agglomerative information-bottleneck clustering: repeatedly merges the
// cluster pair with the lowest information-loss cost
// (p_i+p_j) * JS(P(f|c_i), P(f|c_j)) until k clusters remain. Clusters with
// all-zero vectors carry a uniform conditional distribution.
ModularSolution limbo(const DependencyGraph& graph, int k);

struct AcdcOptions {
    int max_cluster_size = 20;
};

// Pattern-based clustering: body-header pre-merge, subgraph-dominator
// modules, then orphan adoption.
ModularSolution acdc(const DependencyGraph& graph, const AcdcOptions& options = {});

// Greedy TurboMQ-maximizing agglomeration from singletons; stops when no
// merge strictly improves the objective.
ModularSolution fca(const DependencyGraph& graph);

// TurboMQ of an arbitrary partition (used by fca and by oracle tests).
double turbo_mq(const DependencyGraph& graph, const std::vector<int>& assignment);

enum class Algorithm { Wca, Limbo, Acdc, Fca };
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

struct PortfolioConfig {
    std::vector<Algorithm> enabled{Algorithm::Wca, Algorithm::Limbo, Algorithm::Acdc,
                                   Algorithm::Fca};
    int k = 1;  // cut for wca/limbo; callers default it to the actual module count
    AcdcOptions acdc;
};

// Runs the enabled algorithms in fixed order [wca, limbo, acdc, fca].
// Any failure aborts the whole portfolio with the failing tool named.
std::vector<ModularSolution> run_portfolio(const DependencyGraph& graph,
                                           const PortfolioConfig& config);

// {"tool":..., "variant":"pairsmell-variant", "modules":[[...],...]}
std::string solution_to_json(const ModularSolution& solution);

}  // namespace pairsmell

#endif  // PAIRSMELL_MODULARIZE_HPP_
