#ifndef PAIRSMELL_TESTS_HELPERS_HPP_
#define PAIRSMELL_TESTS_HELPERS_HPP_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pairsmell/depgraph.hpp"

namespace testutil {

struct EdgeSpec {
    int src;
    int dst;
    std::int64_t weight = 1;
    std::string kind = "dep";
};

// Graph over n entities with generated paths; all files share one folder
// unless explicit paths are given.
inline pairsmell::DependencyGraph make_graph(int n, const std::vector<EdgeSpec>& edges,
                                             std::vector<std::string> paths = {}) {
    std::vector<pairsmell::Entity> entities;
    for (int i = 0; i < n; ++i) {
        std::string path = paths.empty()
                               ? "m/f" + std::string(i < 10 ? "0" : "") + std::to_string(i) + ".x"
                               : paths[i];
        entities.push_back({i, std::move(path)});
    }
    std::vector<pairsmell::DependencyEdge> es;
    for (const EdgeSpec& e : edges) es.push_back({e.src, e.dst, e.kind, e.weight});
    return pairsmell::DependencyGraph::from_parts(std::move(entities), std::move(es));
}

// Bidirectional clique over the given members plus optional extra edges.
inline std::vector<EdgeSpec> clique_edges(const std::vector<int>& members) {
    std::vector<EdgeSpec> edges;
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = 0; b < members.size(); ++b)
            if (a != b) edges.push_back({members[a], members[b], 1});
    return edges;
}

// Two bidirectional cliques of the given size joined by a single edge from
// the first clique's lowest id to the second's (low -> high).
inline pairsmell::DependencyGraph two_cliques(int clique_size,
                                              std::vector<std::string> paths = {}) {
    std::vector<int> left, right;
    for (int i = 0; i < clique_size; ++i) left.push_back(i);
    for (int i = 0; i < clique_size; ++i) right.push_back(clique_size + i);
    std::vector<EdgeSpec> edges = clique_edges(left);
    const std::vector<EdgeSpec> more = clique_edges(right);
    edges.insert(edges.end(), more.begin(), more.end());
    edges.push_back({0, clique_size, 1});
    return make_graph(2 * clique_size, edges, std::move(paths));
}

class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("pairsmell-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

    void write(const std::string& rel, const std::string& content) const {
        const std::filesystem::path full = path_ / rel;
        std::filesystem::create_directories(full.parent_path());
        std::ofstream out(full, std::ios::binary);
        out << content;
    }

  private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Enumerates every set partition of {0..n-1} as label vectors.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> labels(n, 0);
    // restricted growth strings
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            out.push_back(labels);
            return;
        }
        for (int l = 0; l <= max_used + 1 && l < n; ++l) {
            labels[i] = l;
            rec(i + 1, std::max(max_used, l));
        }
    };
    if (n > 0) rec(1, 0);  // labels[0] fixed to 0
    if (n == 0) out.push_back({});
    return out;
}

}  // namespace testutil

#endif  // PAIRSMELL_TESTS_HELPERS_HPP_
