#include "pairsmell/modularize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "pairsmell/error.hpp"

namespace pairsmell {

ModularSolution ModularSolution::from_labels(std::vector<int> labels, std::string tool_tag) {
    // Canonical numbering: modules ordered by smallest member entity id.
    std::unordered_map<int, int> renumber;
    int next = 0;
    std::vector<int> assignment(labels.size(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = renumber.emplace(labels[i], next);
        if (inserted) ++next;
        assignment[i] = it->second;
    }
    ModularSolution s;
    s.assignment = std::move(assignment);
    s.module_count = next;
    s.tool_tag = std::move(tool_tag);
    return s;
}

std::vector<std::vector<int>> ModularSolution::modules() const {
    std::vector<std::vector<int>> mods(module_count);
    for (std::size_t i = 0; i < assignment.size(); ++i)
        mods[assignment[i]].push_back(static_cast<int>(i));
    return mods;
}

double uenm_similarity(const SparseVec& x, const SparseVec& y) {
    std::size_t i = 0, j = 0;
    long matched = 0, only_x = 0, only_y = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first == y[j].first) {
            const bool xp = x[i].second > 0.0, yp = y[j].second > 0.0;
            matched += xp && yp;
            only_x += xp && !yp;
            only_y += yp && !xp;
            ++i;
            ++j;
        } else if (x[i].first < y[j].first) {
            only_x += x[i].second > 0.0;
            ++i;
        } else {
            only_y += y[j].second > 0.0;
            ++j;
        }
    }
    for (; i < x.size(); ++i) only_x += x[i].second > 0.0;
    for (; j < y.size(); ++j) only_y += y[j].second > 0.0;
    if (matched == 0 && only_x == 0 && only_y == 0) return 0.0;
    const double half_m = 0.5 * static_cast<double>(matched);
    return half_m / (half_m + static_cast<double>(only_x + only_y));
}

namespace {

SparseVec sparse_sum(const SparseVec& a, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

struct Cluster {
    int min_id = 0;  // smallest member entity id; the global tie-break key
    std::vector<int> members;
    ClusterFeature feature;
};

// Tie-break rule shared by all agglomerative loops: among candidate merges
// the smallest (min-member-id, other min-member-id) pair wins.
std::pair<int, int> merge_key(const Cluster& a, const Cluster& b) {
    return {std::min(a.min_id, b.min_id), std::max(a.min_id, b.min_id)};
}

std::vector<int> labels_from_clusters(const std::vector<Cluster>& clusters, std::size_t n) {
    std::vector<int> labels(n, -1);
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (int m : clusters[c].members) labels[m] = static_cast<int>(c);
    return labels;
}

void validate_k(int k, int n) {
    if (k < 1 || k > n)
        throw ParameterError("k out of range: " + std::to_string(k) + " (must be 1.." +
                             std::to_string(n) + ")");
}

std::vector<Cluster> singleton_clusters(const std::vector<SparseVec>& features) {
    std::vector<Cluster> clusters(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        clusters[i].min_id = static_cast<int>(i);
        clusters[i].members = {static_cast<int>(i)};
        clusters[i].feature = {features[i], 1};
    }
    return clusters;
}

void merge_into(std::vector<Cluster>& clusters, std::size_t a, std::size_t b) {
    Cluster& dst = clusters[a];
    Cluster& src = clusters[b];
    dst.min_id = std::min(dst.min_id, src.min_id);
    dst.members.insert(dst.members.end(), src.members.begin(), src.members.end());
    std::sort(dst.members.begin(), dst.members.end());
    dst.feature.vector = sparse_sum(dst.feature.vector, src.feature.vector);
    dst.feature.mass += src.feature.mass;
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
}

// Conditional feature distribution: sparse part plus an implicit value held
// by every one of the 2n dimensions (uniform fallback for zero-mass
// clusters, and mixtures thereof).
struct Distribution {
    SparseVec sparse;   // explicit deviations, absolute values
    double base = 0.0;  // implicit value of unlisted dimensions
};

Distribution normalized_distribution(const SparseVec& vec, int dims) {
    double total = 0.0;
    for (const auto& [_, w] : vec) total += w;
    Distribution d;
    if (total <= 0.0) {
        d.base = 1.0 / static_cast<double>(dims);
        return d;
    }
    d.sparse.reserve(vec.size());
    for (const auto& [f, w] : vec)
        if (w > 0.0) d.sparse.emplace_back(f, w / total);
    return d;
}

Distribution mix(const Distribution& p, double wp, const Distribution& q, double wq) {
    Distribution m;
    m.base = wp * p.base + wq * q.base;
    std::size_t i = 0, j = 0;
    while (i < p.sparse.size() && j < q.sparse.size()) {
        if (p.sparse[i].first == q.sparse[j].first) {
            m.sparse.emplace_back(p.sparse[i].first,
                                  wp * p.sparse[i].second + wq * q.sparse[j].second);
            ++i;
            ++j;
        } else if (p.sparse[i].first < q.sparse[j].first) {
            m.sparse.emplace_back(p.sparse[i].first, wp * p.sparse[i].second);
            ++i;
        } else {
            m.sparse.emplace_back(q.sparse[j].first, wq * q.sparse[j].second);
            ++j;
        }
    }
    for (; i < p.sparse.size(); ++i) m.sparse.emplace_back(p.sparse[i].first, wp * p.sparse[i].second);
    for (; j < q.sparse.size(); ++j) m.sparse.emplace_back(q.sparse[j].first, wq * q.sparse[j].second);
    return m;
}

// KL(P || M) where M is a mixture containing P with positive weight; the
// mixture's sparse support covers P's, so one aligned walk suffices.
// Dimensions outside the mixture support contribute
// (dims - |support|) * base_p * log(base_p / base_m).
double kl_divergence(const Distribution& p, const Distribution& m, int dims) {
    double kl = 0.0;
    std::size_t ip = 0;
    for (const auto& [f, mv] : m.sparse) {
        while (ip < p.sparse.size() && p.sparse[ip].first < f) ++ip;
        double pf = p.base;
        if (ip < p.sparse.size() && p.sparse[ip].first == f) pf += p.sparse[ip].second;
        if (pf > 0.0) kl += pf * std::log(pf / (mv + m.base));
    }
    const auto rest = static_cast<double>(dims - static_cast<int>(m.sparse.size()));
    if (rest > 0.0 && p.base > 0.0) kl += rest * p.base * std::log(p.base / m.base);
    return kl;
}

// Jensen-Shannon divergence with mixture weights proportional to cluster
// probabilities.
double js_divergence(const Distribution& p, double pi_p, const Distribution& q, double pi_q,
                     int dims) {
    const Distribution m = mix(p, pi_p, q, pi_q);
    return pi_p * kl_divergence(p, m, dims) + pi_q * kl_divergence(q, m, dims);
}

}  // namespace

ModularSolution wca(const DependencyGraph& graph, int k) {
    const int n = graph.entity_count();
    validate_k(k, n);
    std::vector<Cluster> clusters = singleton_clusters(feature_vectors(graph));

    while (static_cast<int>(clusters.size()) > k) {
        double best = -1.0;
        std::pair<int, int> best_key{std::numeric_limits<int>::max(), 0};
        std::size_t best_a = 0, best_b = 0;
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                const double sim =
                    uenm_similarity(clusters[a].feature.vector, clusters[b].feature.vector);
                const auto key = merge_key(clusters[a], clusters[b]);
                if (sim > best || (sim == best && key < best_key)) {
                    best = sim;
                    best_key = key;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        merge_into(clusters, best_a, best_b);
    }
    return ModularSolution::from_labels(labels_from_clusters(clusters, n), "wca");
}

ModularSolution limbo(const DependencyGraph& graph, int k) {
    const int n = graph.entity_count();
    validate_k(k, n);
    const int dims = 2 * n;
    std::vector<Cluster> clusters = singleton_clusters(feature_vectors(graph));
    std::vector<Distribution> dists(clusters.size());
    for (std::size_t i = 0; i < clusters.size(); ++i)
        dists[i] = normalized_distribution(clusters[i].feature.vector, dims);

    while (static_cast<int>(clusters.size()) > k) {
        double best = std::numeric_limits<double>::infinity();
        std::pair<int, int> best_key{std::numeric_limits<int>::max(), 0};
        std::size_t best_a = 0, best_b = 0;
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            const double pa = static_cast<double>(clusters[a].feature.mass) / n;
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                const double pb = static_cast<double>(clusters[b].feature.mass) / n;
                const double total = pa + pb;
                const double cost =
                    total * js_divergence(dists[a], pa / total, dists[b], pb / total, dims);
                const auto key = merge_key(clusters[a], clusters[b]);
                if (cost < best || (cost == best && key < best_key)) {
                    best = cost;
                    best_key = key;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        const double pa = static_cast<double>(clusters[best_a].feature.mass) / n;
        const double pb = static_cast<double>(clusters[best_b].feature.mass) / n;
        dists[best_a] = mix(dists[best_a], pa / (pa + pb), dists[best_b], pb / (pa + pb));
        dists.erase(dists.begin() + static_cast<std::ptrdiff_t>(best_b));
        merge_into(clusters, best_a, best_b);
    }
    return ModularSolution::from_labels(labels_from_clusters(clusters, n), "limbo");
}

namespace {

struct PathParts {
    std::string dir;
    std::string stem;
    std::string ext;
};

PathParts split_path(const std::string& path) {
    PathParts parts;
    const std::size_t slash = path.find_last_of('/');
    parts.dir = slash == std::string::npos ? std::string{} : path.substr(0, slash);
    const std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = base.find_last_of('.');
    parts.stem = dot == std::string::npos ? base : base.substr(0, dot);
    parts.ext = dot == std::string::npos ? std::string{} : base.substr(dot);
    return parts;
}

bool is_header_ext(const std::string& ext) { return ext == ".h" || ext == ".hpp"; }
bool is_body_ext(const std::string& ext) { return ext == ".c" || ext == ".cc" || ext == ".cpp"; }

}  // namespace

ModularSolution acdc(const DependencyGraph& graph, const AcdcOptions& options) {
    const int n = graph.entity_count();
    std::vector<int> labels(n, -1);
    int next_label = 0;

    // Pass 1: body-header pattern. Files sharing directory and stem with
    // both a header and a body extension form a module.
    std::map<std::pair<std::string, std::string>, std::vector<int>> by_dir_stem;
    for (const Entity& e : graph.entities()) {
        const PathParts parts = split_path(e.path);
        if (is_header_ext(parts.ext) || is_body_ext(parts.ext))
            by_dir_stem[{parts.dir, parts.stem}].push_back(e.id);
    }
    for (const auto& [key, members] : by_dir_stem) {
        bool header = false, body = false;
        for (int id : members) {
            const std::string ext = split_path(graph.entities()[id].path).ext;
            header = header || is_header_ext(ext);
            body = body || is_body_ext(ext);
        }
        if (header && body) {
            for (int id : members) labels[id] = next_label;
            ++next_label;
        }
    }

    // Pass 2: subgraph dominator. For each unassigned d the candidate set is
    // its still-unassigned transitive dependents; nodes with an edge coming
    // in from outside {d} + S are pruned until the set is closed.
    for (int d = 0; d < n; ++d) {
        if (labels[d] != -1) continue;
        std::vector<bool> in_set(n, false);
        std::vector<int> stack{d};
        std::vector<bool> seen(n, false);
        seen[d] = true;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            for (const auto& [src, _] : graph.in_edges(cur)) {
                if (seen[src] || labels[src] != -1) continue;
                seen[src] = true;
                in_set[src] = true;
                stack.push_back(src);
            }
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < n; ++s) {
                if (!in_set[s]) continue;
                for (const auto& [src, _] : graph.in_edges(s)) {
                    if (src != d && !in_set[src]) {
                        in_set[s] = false;
                        changed = true;
                        break;
                    }
                }
            }
        }
        int size = 1;
        for (int s = 0; s < n; ++s) size += in_set[s];
        if (size >= 2 && size <= options.max_cluster_size) {
            labels[d] = next_label;
            for (int s = 0; s < n; ++s)
                if (in_set[s]) labels[s] = next_label;
            ++next_label;
        }
    }

    // Pass 3: orphan adoption. Remaining entities join the module with the
    // strongest total connection; ties prefer the larger module, then the
    // lower module id. Unconnected entities become singletons.
    for (int e = 0; e < n; ++e) {
        if (labels[e] != -1) continue;
        std::unordered_map<int, double> pull;
        for (const auto& [dst, w] : graph.out_edges(e))
            if (labels[dst] != -1) pull[labels[dst]] += w;
        for (const auto& [src, w] : graph.in_edges(e))
            if (labels[src] != -1) pull[labels[src]] += w;
        int best_label = -1;
        double best_weight = 0.0;
        std::size_t best_size = 0;
        std::vector<std::size_t> module_size(next_label, 0);
        for (int i = 0; i < n; ++i)
            if (labels[i] != -1) ++module_size[labels[i]];
        std::vector<std::pair<int, double>> candidates(pull.begin(), pull.end());
        std::sort(candidates.begin(), candidates.end());
        for (const auto& [label, w] : candidates) {
            if (w <= 0.0) continue;
            const std::size_t size = module_size[label];
            if (best_label == -1 || w > best_weight ||
                (w == best_weight && (size > best_size || (size == best_size && label < best_label)))) {
                best_label = label;
                best_weight = w;
                best_size = size;
            }
        }
        labels[e] = best_label != -1 ? best_label : next_label++;
    }

    return ModularSolution::from_labels(std::move(labels), "acdc");
}

namespace {

struct FcaState {
    // Live cluster stats; clusters identified by index into the vectors.
    std::vector<double> intra;                            // mu_i
    std::vector<double> ext;                              // sum of in+out weight to others
    std::vector<std::map<int, double>> between;           // ordered pair weights i->j
    std::vector<int> min_id;
    std::vector<std::vector<int>> members;

    double cf(std::size_t i) const {
        const double denom = 2.0 * intra[i] + ext[i];
        return denom <= 0.0 ? 0.0 : 2.0 * intra[i] / denom;
    }
};

}  // namespace

double turbo_mq(const DependencyGraph& graph, const std::vector<int>& assignment) {
    int modules = 0;
    for (int a : assignment) modules = std::max(modules, a + 1);
    std::vector<double> intra(modules, 0.0), ext(modules, 0.0);
    for (const Entity& e : graph.entities()) {
        for (const auto& [dst, w] : graph.out_edges(e.id)) {
            if (assignment[e.id] == assignment[dst]) {
                intra[assignment[e.id]] += w;
            } else {
                ext[assignment[e.id]] += w;
                ext[assignment[dst]] += w;
            }
        }
    }
    double mq = 0.0;
    for (int i = 0; i < modules; ++i) {
        const double denom = 2.0 * intra[i] + ext[i];
        if (denom > 0.0) mq += 2.0 * intra[i] / denom;
    }
    return mq;
}

ModularSolution fca(const DependencyGraph& graph) {
    const int n = graph.entity_count();
    FcaState st;
    st.intra.assign(n, 0.0);
    st.ext.assign(n, 0.0);
    st.between.assign(n, {});
    st.min_id.resize(n);
    st.members.resize(n);
    for (int i = 0; i < n; ++i) {
        st.min_id[i] = i;
        st.members[i] = {i};
    }
    for (int i = 0; i < n; ++i) {
        for (const auto& [dst, w] : graph.out_edges(i)) {
            st.between[i][dst] += w;
            st.ext[i] += w;
            st.ext[dst] += w;
        }
    }
    std::vector<bool> alive(n, true);

    while (true) {
        double best_delta = 0.0;
        std::pair<int, int> best_key{std::numeric_limits<int>::max(), 0};
        int best_a = -1, best_b = -1;
        for (int a = 0; a < n; ++a) {
            if (!alive[a]) continue;
            for (int b = a + 1; b < n; ++b) {
                if (!alive[b]) continue;
                const double ab = st.between[a].count(b) ? st.between[a].at(b) : 0.0;
                const double ba = st.between[b].count(a) ? st.between[b].at(a) : 0.0;
                const double merged_intra = st.intra[a] + st.intra[b] + ab + ba;
                const double merged_ext = st.ext[a] + st.ext[b] - 2.0 * (ab + ba);
                const double denom = 2.0 * merged_intra + merged_ext;
                const double merged_cf = denom <= 0.0 ? 0.0 : 2.0 * merged_intra / denom;
                const double delta = merged_cf - st.cf(a) - st.cf(b);
                const std::pair<int, int> key{std::min(st.min_id[a], st.min_id[b]),
                                              std::max(st.min_id[a], st.min_id[b])};
                if (delta > best_delta || (delta == best_delta && delta > 0.0 && key < best_key)) {
                    best_delta = delta;
                    best_key = key;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (best_a < 0) break;

        const int a = best_a, b = best_b;
        const double ab = st.between[a].count(b) ? st.between[a].at(b) : 0.0;
        const double ba = st.between[b].count(a) ? st.between[b].at(a) : 0.0;
        st.intra[a] += st.intra[b] + ab + ba;
        st.ext[a] += st.ext[b] - 2.0 * (ab + ba);
        st.between[a].erase(b);
        st.between[b].erase(a);
        for (const auto& [j, w] : st.between[b]) st.between[a][j] += w;
        for (int j = 0; j < n; ++j) {
            if (!alive[j] || j == a || j == b) continue;
            auto it = st.between[j].find(b);
            if (it != st.between[j].end()) {
                st.between[j][a] += it->second;
                st.between[j].erase(it);
            }
        }
        st.min_id[a] = std::min(st.min_id[a], st.min_id[b]);
        st.members[a].insert(st.members[a].end(), st.members[b].begin(), st.members[b].end());
        alive[b] = false;
    }

    std::vector<int> labels(n, -1);
    int next = 0;
    for (int c = 0; c < n; ++c) {
        if (!alive[c]) continue;
        for (int m : st.members[c]) labels[m] = next;
        ++next;
    }
    return ModularSolution::from_labels(std::move(labels), "fca");
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "wca") return Algorithm::Wca;
    if (name == "limbo") return Algorithm::Limbo;
    if (name == "acdc") return Algorithm::Acdc;
    if (name == "fca") return Algorithm::Fca;
    throw ParameterError("unknown algorithm: " + name);
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Wca: return "wca";
        case Algorithm::Limbo: return "limbo";
        case Algorithm::Acdc: return "acdc";
        case Algorithm::Fca: return "fca";
    }
    return "?";
}

std::vector<ModularSolution> run_portfolio(const DependencyGraph& graph,
                                           const PortfolioConfig& config) {
    static const Algorithm order[] = {Algorithm::Wca, Algorithm::Limbo, Algorithm::Acdc,
                                      Algorithm::Fca};
    std::vector<ModularSolution> solutions;
    for (Algorithm a : order) {
        if (std::find(config.enabled.begin(), config.enabled.end(), a) == config.enabled.end())
            continue;
        try {
            switch (a) {
                case Algorithm::Wca: solutions.push_back(wca(graph, config.k)); break;
                case Algorithm::Limbo: solutions.push_back(limbo(graph, config.k)); break;
                case Algorithm::Acdc: solutions.push_back(acdc(graph, config.acdc)); break;
                case Algorithm::Fca: solutions.push_back(fca(graph)); break;
            }
        } catch (const Error& e) {
            throw Error("portfolio aborted: tool '" + algorithm_name(a) + "' failed: " + e.what());
        }
    }
    return solutions;
}

std::string solution_to_json(const ModularSolution& solution) {
    nlohmann::json doc;
    doc["tool"] = solution.tool_tag;
    doc["variant"] = "pairsmell-variant";
    doc["modules"] = solution.modules();
    return doc.dump(2) + "\n";
}

}  // namespace pairsmell
