#ifndef PAIRSMELL_DEPGRAPH_HPP_
#define PAIRSMELL_DEPGRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pairsmell {

// One code file. Ids are dense 0..n-1, assigned by lexicographic path order
// so that permuted inputs produce identical graphs.
struct Entity {
    int id = 0;
    std::string path;  // repository-relative, '/' separated
};

struct DependencyEdge {
    int src = 0;
    int dst = 0;
    std::string kind;          // extractor-defined label ("call", "use", ...)
    std::int64_t weight = 1;   // >= 1
};

// Optional per-kind multipliers for the aggregated adjacency. Kinds absent
// from the table count with weight 1.
using KindWeights = std::map<std::string, double>;

// Sparse non-negative vector, entries sorted by dimension.
using SparseVec = std::vector<std::pair<int, double>>;

// File-level dependency graph. Immutable once constructed; normalization
// (path sort, id remap, self-edge drop, duplicate merge) happens in
// from_parts so every loader shares the same rules.
class DependencyGraph {
  public:
    DependencyGraph() = default;

    static DependencyGraph from_parts(std::vector<Entity> entities,
                                      std::vector<DependencyEdge> edges,
                                      const KindWeights& kind_weights = {});

    const std::vector<Entity>& entities() const { return entities_; }
    const std::vector<DependencyEdge>& edges() const { return edges_; }
    int entity_count() const { return static_cast<int>(entities_.size()); }

    // Aggregated adjacency: sum of kind-weighted edge weights per (src,dst).
    double weight(int src, int dst) const;
    const std::vector<std::pair<int, double>>& out_edges(int id) const;
    const std::vector<std::pair<int, double>>& in_edges(int id) const;

    int entity_by_path(const std::string& path) const;  // -1 when absent

  private:
    std::vector<Entity> entities_;
    std::vector<DependencyEdge> edges_;
    std::vector<std::vector<std::pair<int, double>>> out_;
    std::vector<std::vector<std::pair<int, double>>> in_;
};

// Canonical JSON schema "pairsmell-depgraph/1".
DependencyGraph load_canonical(std::istream& in, const KindWeights& kind_weights = {});
DependencyGraph load_canonical_text(const std::string& text, const KindWeights& kind_weights = {});
DependencyGraph load_canonical_file(const std::string& path, const KindWeights& kind_weights = {});
std::string export_canonical(const DependencyGraph& graph);

// Depends-style export: {"variables":[paths], "cells":[{src,dest,values:{kind:count}}]}.
DependencyGraph load_depends_json(std::istream& in, const KindWeights& kind_weights = {});
DependencyGraph load_depends_json_text(const std::string& text, const KindWeights& kind_weights = {});
DependencyGraph load_depends_json_file(const std::string& path, const KindWeights& kind_weights = {});

enum class LanguageProfile { JavaImports, CIncludes };
LanguageProfile parse_language_profile(const std::string& name);
std::string language_profile_name(LanguageProfile profile);

struct ScanOptions {
    std::vector<std::string> include_globs;  // empty = all profile matches
    std::vector<std::string> exclude_globs;
    KindWeights kind_weights;
};

// Fixture-scale substitute for an external extractor: resolves Java imports
// or quoted C/C++ includes between scanned files. Duplicate references to
// the same file count once.
DependencyGraph scan_sources(const std::string& root_dir, LanguageProfile profile,
                             const ScanOptions& options = {});

// 2n-dimensional representation consumed by wca/limbo: dims 0..n-1 carry
// outgoing aggregated weights, dims n..2n-1 incoming.
std::vector<SparseVec> feature_vectors(const DependencyGraph& graph);

// Shared path hygiene: '/' separators, no empty/'.'/'..' segments, no
// leading or trailing '/'. Throws ValidationError.
std::string normalize_path(const std::string& raw);

// Glob match with '*', '?' over the whole path ('*' crosses '/').
bool glob_match(const std::string& pattern, const std::string& path);

}  // namespace pairsmell

#endif  // PAIRSMELL_DEPGRAPH_HPP_
