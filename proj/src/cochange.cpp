#include "pairsmell/cochange.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pairsmell/error.hpp"
#include "pairsmell/stats.hpp"

namespace pairsmell {

namespace {

// git numstat rename spellings: "old => new" and "pre{old => new}post".
std::string resolve_rename(const std::string& raw) {
    const std::size_t brace = raw.find('{');
    if (brace != std::string::npos) {
        const std::size_t arrow = raw.find(" => ", brace);
        const std::size_t close = raw.find('}', brace);
        if (arrow != std::string::npos && close != std::string::npos && arrow < close) {
            std::string out = raw.substr(0, brace) + raw.substr(arrow + 4, close - arrow - 4) +
                              raw.substr(close + 1);
            std::string collapsed;
            for (char c : out) {
                if (c == '/' && !collapsed.empty() && collapsed.back() == '/') continue;
                collapsed += c;
            }
            return collapsed;
        }
    }
    const std::size_t arrow = raw.find(" => ");
    if (arrow != std::string::npos) return raw.substr(arrow + 4);
    return raw;
}

bool parse_count(const std::string& field, std::int64_t& out) {
    if (field == "-") {  // binary file
        out = 0;
        return true;
    }
    try {
        std::size_t used = 0;
        out = std::stoll(field, &used);
        return used == field.size() && out >= 0;
    } catch (...) {
        return false;
    }
}

}  // namespace

std::vector<CommitRecord> ingest_log(std::istream& in) {
    std::vector<CommitRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '@') {
            const std::size_t p1 = line.find('|');
            const std::size_t p2 = p1 == std::string::npos ? p1 : line.find('|', p1 + 1);
            if (p1 == std::string::npos || p2 == std::string::npos)
                throw ParseError("log line " + std::to_string(line_no) +
                                 ": malformed commit header (expected @hash|author|timestamp)");
            CommitRecord rec;
            rec.hash = line.substr(1, p1 - 1);
            rec.author = line.substr(p1 + 1, p2 - p1 - 1);
            const std::string ts = line.substr(p2 + 1);
            try {
                rec.timestamp = std::stoll(ts);
            } catch (...) {
                throw ParseError("log line " + std::to_string(line_no) +
                                 ": commit timestamp is not a unix epoch value: " + ts);
            }
            if (rec.hash.empty())
                throw ParseError("log line " + std::to_string(line_no) + ": empty commit hash");
            records.push_back(std::move(rec));
        } else {
            if (records.empty())
                throw ParseError("log line " + std::to_string(line_no) +
                                 ": numstat entry before any commit header");
            const std::size_t t1 = line.find('\t');
            const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
            if (t1 == std::string::npos || t2 == std::string::npos)
                throw ParseError("log line " + std::to_string(line_no) +
                                 ": malformed numstat entry (expected added\\tdeleted\\tpath)");
            CommitRecord::FileChange fc;
            if (!parse_count(line.substr(0, t1), fc.lines_added) ||
                !parse_count(line.substr(t1 + 1, t2 - t1 - 1), fc.lines_deleted))
                throw ParseError("log line " + std::to_string(line_no) +
                                 ": malformed numstat counts");
            std::string raw = resolve_rename(line.substr(t2 + 1));
            try {
                fc.path = normalize_path(raw);
            } catch (const ValidationError&) {
                continue;  // paths outside the repo-relative contract are skipped
            }
            records.back().files.push_back(std::move(fc));
        }
    }
    return records;
}

std::vector<CommitRecord> ingest_log_text(const std::string& text) {
    std::istringstream in(text);
    return ingest_log(in);
}

std::vector<CommitRecord> ingest_log_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open log capture: " + path);
    return ingest_log(in);
}

std::int64_t ChangeHistory::churn_in_commit(int entity, int commit_index) const {
    const auto& m = lines_.at(entity);
    auto it = m.find(commit_index);
    return it == m.end() ? 0 : it->second;
}

ChangeHistory window(const std::vector<CommitRecord>& records, std::size_t delta,
                     const std::vector<Entity>& entities) {
    if (delta < 1) throw ParameterError("delta window must cover at least one commit");
    ChangeHistory h;
    h.delta_requested_ = delta;
    h.commits_used_ = std::min(delta, records.size());
    const int n = static_cast<int>(entities.size());
    h.commits_.assign(n, {});
    h.lines_.assign(n, {});
    h.churn_.assign(n, 0);
    h.developers_.assign(n, {});

    std::map<std::string, int> path_to_id;
    for (const Entity& e : entities) path_to_id[e.path] = e.id;

    for (std::size_t c = 0; c < h.commits_used_; ++c) {
        const CommitRecord& rec = records[c];
        for (const CommitRecord::FileChange& fc : rec.files) {
            auto it = path_to_id.find(fc.path);
            if (it == path_to_id.end()) continue;  // untracked entity
            const int id = it->second;
            h.commits_[id].insert(static_cast<int>(c));
            h.lines_[id][static_cast<int>(c)] += fc.lines_added + fc.lines_deleted;
            h.churn_[id] += fc.lines_added + fc.lines_deleted;
            h.developers_[id].insert(rec.author);
        }
    }
    return h;
}

namespace {

void check_pair(const ChangeHistory& history, int i, int j) {
    if (i == j) throw ParameterError("co-change metrics are undefined on the diagonal");
    if (i < 0 || j < 0 || i >= history.entity_count() || j >= history.entity_count())
        throw ParameterError("entity id out of range in co-change metric");
}

}  // namespace

double cor(const ChangeHistory& history, int i, int j) {
    check_pair(history, i, j);
    const auto& a = history.commit_set(i);
    const auto& b = history.commit_set(j);
    if (a.empty() && b.empty()) return 0.0;
    std::size_t shared = 0;
    for (int c : a) shared += b.count(c);
    return 2.0 * static_cast<double>(shared) / static_cast<double>(a.size() + b.size());
}

double cco(const ChangeHistory& history, int i, int j) {
    check_pair(history, i, j);
    const std::int64_t total = history.churn(i) + history.churn(j);
    if (total == 0) return 0.0;
    std::int64_t joint = 0;
    for (int c : history.commit_set(i)) {
        if (!history.commit_set(j).count(c)) continue;
        joint += history.churn_in_commit(i, c) + history.churn_in_commit(j, c);
    }
    return static_cast<double>(joint) / static_cast<double>(total);
}

double dor(const ChangeHistory& history, int i, int j) {
    check_pair(history, i, j);
    const auto& a = history.developers(i);
    const auto& b = history.developers(j);
    if (a.empty() && b.empty()) return 0.0;
    std::size_t shared = 0;
    for (const std::string& d : a) shared += b.count(d);
    return 2.0 * static_cast<double>(shared) / static_cast<double>(a.size() + b.size());
}

std::string pair_metric_name(PairMetric metric) {
    switch (metric) {
        case PairMetric::Cor: return "COR";
        case PairMetric::Cco: return "CCO";
        case PairMetric::Dor: return "DOR";
    }
    return "?";
}

PairMetric parse_pair_metric(const std::string& name) {
    if (name == "COR" || name == "cor") return PairMetric::Cor;
    if (name == "CCO" || name == "cco") return PairMetric::Cco;
    if (name == "DOR" || name == "dor") return PairMetric::Dor;
    throw ParameterError("unknown co-change metric: " + name);
}

double pair_metric(const ChangeHistory& history, PairMetric metric, int i, int j) {
    switch (metric) {
        case PairMetric::Cor: return cor(history, i, j);
        case PairMetric::Cco: return cco(history, i, j);
        case PairMetric::Dor: return dor(history, i, j);
    }
    return 0.0;
}

namespace {

bool pair_active(const ChangeHistory& history, PairMetric metric, int i, int j) {
    if (metric == PairMetric::Cco) return history.churn(i) + history.churn(j) > 0;
    return !history.commit_set(i).empty() || !history.commit_set(j).empty();
}

}  // namespace

KRatioReport k_ratio(const ChangeHistory& history, PairMetric metric,
                     const std::vector<EntityPair>& smelly_pairs,
                     const std::vector<EntityPair>& baseline_pairs) {
    KRatioReport report;
    report.metric = metric;
    report.smelly_pairs = smelly_pairs.size();
    report.baseline_pairs = baseline_pairs.size();

    std::vector<double> smelly, baseline, smelly_act, baseline_act;
    for (const auto& [i, j] : smelly_pairs) {
        const double v = pair_metric(history, metric, i, j);
        smelly.push_back(v);
        if (pair_active(history, metric, i, j)) smelly_act.push_back(v);
    }
    for (const auto& [i, j] : baseline_pairs) {
        const double v = pair_metric(history, metric, i, j);
        baseline.push_back(v);
        if (pair_active(history, metric, i, j)) baseline_act.push_back(v);
    }
    report.smelly_active = smelly_act.size();
    report.baseline_active = baseline_act.size();
    report.smelly_mean = stats::mean(smelly);
    report.baseline_mean = stats::mean(baseline);
    report.smelly_mean_active = stats::mean(smelly_act);
    report.baseline_mean_active = stats::mean(baseline_act);

    if (smelly.empty() || report.smelly_active == 0) {
        report.no_data = true;  // mirrors the missing data points of sparse projects
        return report;
    }
    if (report.baseline_mean > 0.0)
        report.k = report.smelly_mean / report.baseline_mean;
    if (!baseline.empty()) {
        report.p_value = stats::welch_t_test(smelly, baseline).p_value;
        report.cohens_d = stats::cohens_d_pooled(smelly, baseline);
    }
    return report;
}

}  // namespace pairsmell
