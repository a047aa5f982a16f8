#include "pairsmell/depgraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "pairsmell/error.hpp"

namespace pairsmell {

using nlohmann::json;

std::string normalize_path(const std::string& raw) {
    std::string p = raw;
    std::replace(p.begin(), p.end(), '\\', '/');
    if (p.rfind("./", 0) == 0) p = p.substr(2);
    while (!p.empty() && p.front() == '/') p = p.substr(1);
    if (p.empty()) throw ValidationError("entity path is empty");
    if (p.back() == '/') throw ValidationError("entity path ends with '/': " + raw);
    std::size_t start = 0;
    while (start <= p.size()) {
        std::size_t end = p.find('/', start);
        if (end == std::string::npos) end = p.size();
        std::string seg = p.substr(start, end - start);
        if (seg.empty() || seg == "." || seg == "..")
            throw ValidationError("entity path has invalid segment '" + seg + "': " + raw);
        start = end + 1;
    }
    return p;
}

bool glob_match(const std::string& pattern, const std::string& path) {
    // iterative '*' backtracking
    std::size_t p = 0, s = 0, star = std::string::npos, mark = 0;
    while (s < path.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == path[s])) {
            ++p;
            ++s;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = s;
        } else if (star != std::string::npos) {
            p = star + 1;
            s = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

DependencyGraph DependencyGraph::from_parts(std::vector<Entity> entities,
                                            std::vector<DependencyEdge> edges,
                                            const KindWeights& kind_weights) {
    for (Entity& e : entities) e.path = normalize_path(e.path);

    // Stable entity order: lexicographic by path, ids reassigned.
    std::vector<Entity> sorted = entities;
    std::sort(sorted.begin(), sorted.end(),
              [](const Entity& a, const Entity& b) { return a.path < b.path; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].path == sorted[i - 1].path)
            throw ValidationError("duplicate entity path: " + sorted[i].path);
    }
    std::unordered_map<int, int> remap;  // old id -> new id
    remap.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!remap.emplace(sorted[i].id, static_cast<int>(i)).second)
            throw ValidationError("duplicate entity id: " + std::to_string(sorted[i].id));
        sorted[i].id = static_cast<int>(i);
    }

    const int n = static_cast<int>(sorted.size());
    std::vector<DependencyEdge> kept;
    kept.reserve(edges.size());
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        DependencyEdge e = edges[idx];
        auto s = remap.find(e.src);
        auto d = remap.find(e.dst);
        if (s == remap.end() || d == remap.end())
            throw ValidationError("edge #" + std::to_string(idx) + " (" + std::to_string(e.src) +
                                  "->" + std::to_string(e.dst) + " '" + e.kind +
                                  "') references an unknown entity id");
        if (e.weight < 1)
            throw ValidationError("edge #" + std::to_string(idx) + " has non-positive weight");
        e.src = s->second;
        e.dst = d->second;
        if (e.src == e.dst) continue;  // self-edges dropped
        kept.push_back(std::move(e));
    }

    // Merge duplicate (src,dst,kind) by summing weights.
    std::sort(kept.begin(), kept.end(), [](const DependencyEdge& a, const DependencyEdge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.kind < b.kind;
    });
    std::vector<DependencyEdge> merged;
    for (DependencyEdge& e : kept) {
        if (!merged.empty() && merged.back().src == e.src && merged.back().dst == e.dst &&
            merged.back().kind == e.kind) {
            merged.back().weight += e.weight;
        } else {
            merged.push_back(std::move(e));
        }
    }

    DependencyGraph g;
    g.entities_ = std::move(sorted);
    g.edges_ = std::move(merged);
    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (const DependencyEdge& e : g.edges_) {
        auto it = kind_weights.find(e.kind);
        const double kw = it == kind_weights.end() ? 1.0 : it->second;
        const double w = kw * static_cast<double>(e.weight);
        if (w < 0.0) throw ValidationError("negative kind weight for '" + e.kind + "'");
        if (w == 0.0) continue;
        auto& out = g.out_[e.src];
        if (!out.empty() && out.back().first == e.dst)
            out.back().second += w;
        else
            out.emplace_back(e.dst, w);
    }
    for (int i = 0; i < n; ++i)
        for (const auto& [dst, w] : g.out_[i]) g.in_[dst].emplace_back(i, w);
    return g;
}

double DependencyGraph::weight(int src, int dst) const {
    const auto& row = out_.at(src);
    auto it = std::lower_bound(row.begin(), row.end(), dst,
                               [](const auto& p, int d) { return p.first < d; });
    return it != row.end() && it->first == dst ? it->second : 0.0;
}

const std::vector<std::pair<int, double>>& DependencyGraph::out_edges(int id) const {
    return out_.at(id);
}

const std::vector<std::pair<int, double>>& DependencyGraph::in_edges(int id) const {
    return in_.at(id);
}

int DependencyGraph::entity_by_path(const std::string& path) const {
    auto it = std::lower_bound(entities_.begin(), entities_.end(), path,
                               [](const Entity& e, const std::string& p) { return e.path < p; });
    if (it != entities_.end() && it->path == path) return it->id;
    return -1;
}

namespace {

json parse_stream(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

}  // namespace

DependencyGraph load_canonical(std::istream& in, const KindWeights& kind_weights) {
    const json doc = parse_stream(in);
    if (!doc.is_object() || !doc.contains("schema") || !doc["schema"].is_string() ||
        doc["schema"].get<std::string>() != "pairsmell-depgraph/1")
        throw ValidationError("missing or unsupported schema (expected pairsmell-depgraph/1)");
    if (!doc.contains("entities") || !doc["entities"].is_array())
        throw ValidationError("canonical graph: 'entities' array missing");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ValidationError("canonical graph: 'edges' array missing");

    std::vector<Entity> entities;
    std::vector<DependencyEdge> edges;
    try {
        for (const json& je : doc["entities"]) {
            if (!je.contains("id") || !je.contains("path"))
                throw ValidationError("canonical graph: entity requires 'id' and 'path'");
            entities.push_back({je["id"].get<int>(), je["path"].get<std::string>()});
        }
        for (const json& je : doc["edges"]) {
            DependencyEdge e;
            e.src = je.at("src").get<int>();
            e.dst = je.at("dst").get<int>();
            e.kind = je.value("kind", std::string{});
            e.weight = je.value("weight", std::int64_t{1});
            edges.push_back(std::move(e));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("canonical graph: ") + e.what());
    }
    return DependencyGraph::from_parts(std::move(entities), std::move(edges), kind_weights);
}

DependencyGraph load_canonical_text(const std::string& text, const KindWeights& kind_weights) {
    std::istringstream in(text);
    return load_canonical(in, kind_weights);
}

DependencyGraph load_canonical_file(const std::string& path, const KindWeights& kind_weights) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open graph file: " + path);
    return load_canonical(in, kind_weights);
}

std::string export_canonical(const DependencyGraph& graph) {
    json doc;
    doc["schema"] = "pairsmell-depgraph/1";
    doc["entities"] = json::array();
    for (const Entity& e : graph.entities()) doc["entities"].push_back({{"id", e.id}, {"path", e.path}});
    doc["edges"] = json::array();
    for (const DependencyEdge& e : graph.edges())
        doc["edges"].push_back(
            {{"src", e.src}, {"dst", e.dst}, {"kind", e.kind}, {"weight", e.weight}});
    return doc.dump(2) + "\n";
}

DependencyGraph load_depends_json(std::istream& in, const KindWeights& kind_weights) {
    const json doc = parse_stream(in);
    if (!doc.is_object() || !doc.contains("variables") || !doc["variables"].is_array())
        throw ValidationError("depends export: 'variables' array missing");
    if (!doc.contains("cells") || !doc["cells"].is_array())
        throw ValidationError("depends export: 'cells' array missing");

    std::vector<Entity> entities;
    std::vector<DependencyEdge> edges;
    try {
        int next = 0;
        for (const json& v : doc["variables"]) entities.push_back({next++, v.get<std::string>()});

        const int n = next;
        for (const json& cell : doc["cells"]) {
            const int src = cell.at("src").get<int>();
            const int dst = cell.at("dest").get<int>();
            if (src < 0 || src >= n || dst < 0 || dst >= n)
                throw ValidationError("depends export: cell index out of range (" +
                                      std::to_string(src) + "->" + std::to_string(dst) + ")");
            if (!cell.contains("values") || !cell["values"].is_object())
                throw ValidationError("depends export: cell requires a 'values' object");
            for (auto it = cell["values"].begin(); it != cell["values"].end(); ++it) {
                const auto count =
                    static_cast<std::int64_t>(std::llround(it.value().get<double>()));
                if (count < 1)
                    throw ValidationError("depends export: non-positive count for kind '" +
                                          it.key() + "'");
                edges.push_back({src, dst, it.key(), count});
            }
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("depends export: ") + e.what());
    }
    return DependencyGraph::from_parts(std::move(entities), std::move(edges), kind_weights);
}

DependencyGraph load_depends_json_text(const std::string& text, const KindWeights& kind_weights) {
    std::istringstream in(text);
    return load_depends_json(in, kind_weights);
}

DependencyGraph load_depends_json_file(const std::string& path, const KindWeights& kind_weights) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open depends export: " + path);
    return load_depends_json(in, kind_weights);
}

std::vector<SparseVec> feature_vectors(const DependencyGraph& graph) {
    const int n = graph.entity_count();
    std::vector<SparseVec> vecs(n);
    for (int i = 0; i < n; ++i) {
        SparseVec v;
        for (const auto& [dst, w] : graph.out_edges(i)) v.emplace_back(dst, w);
        for (const auto& [src, w] : graph.in_edges(i)) v.emplace_back(n + src, w);
        std::sort(v.begin(), v.end());
        vecs[i] = std::move(v);
    }
    return vecs;
}

}  // namespace pairsmell
