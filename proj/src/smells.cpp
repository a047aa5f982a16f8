#include "pairsmell/smells.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "pairsmell/error.hpp"

namespace pairsmell {

std::string smell_form_name(SmellForm form) {
    return form == SmellForm::InSep ? "InSep" : "InCol";
}

namespace {

struct SplitName {
    std::string dir_stem;  // directory + '/' + stem
    std::string ext;
};

SplitName split_name(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    const std::string dir = slash == std::string::npos ? std::string{} : path.substr(0, slash);
    const std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = base.find_last_of('.');
    const std::string stem = dot == std::string::npos ? base : base.substr(0, dot);
    return {dir + "/" + stem, dot == std::string::npos ? std::string{} : base.substr(dot)};
}

bool is_body_header_pair(const std::string& a, const std::string& b) {
    const SplitName sa = split_name(a), sb = split_name(b);
    const auto stem_a = sa.dir_stem.substr(sa.dir_stem.find_last_of('/') + 1);
    const auto stem_b = sb.dir_stem.substr(sb.dir_stem.find_last_of('/') + 1);
    if (stem_a != stem_b) return false;
    auto is_header = [](const std::string& e) { return e == ".h" || e == ".hpp"; };
    auto is_body = [](const std::string& e) { return e == ".c" || e == ".cc" || e == ".cpp"; };
    return (is_header(sa.ext) && is_body(sb.ext)) || (is_body(sa.ext) && is_header(sb.ext));
}

}  // namespace

DetectionResult detect(const AptClassification& classification, const ActualStructure& actual,
                       const std::vector<Entity>& entities, const DetectOptions& options) {
    const int n = classification.entity_count();
    if (static_cast<std::size_t>(n) != actual.solution.assignment.size() ||
        static_cast<std::size_t>(n) != entities.size())
        throw ValidationError("detect: consensus, actual structure, and entity set cover "
                              "different universes");

    DetectionResult result;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int act = actual_mr(actual, i, j);
            const AptMr apt = classification.of(i, j);
            PairSmellRecord rec;
            rec.first = i;
            rec.second = j;
            rec.actual = act;
            rec.coassoc = classification.value(i, j);
            if (act == 0 && apt == AptMr::Collocated) {
                rec.apt = 1;
                rec.form = SmellForm::InSep;
                if (options.suppress_body_header &&
                    is_body_header_pair(entities[i].path, entities[j].path))
                    result.suppressed.push_back(rec);
                else
                    result.records.push_back(rec);
            } else if (act == 1 && apt == AptMr::Separated) {
                rec.apt = 0;
                rec.form = SmellForm::InCol;
                result.records.push_back(rec);
            }
        }
    }
    return result;
}

UniverseStats compute_universe_stats(const AptClassification& classification,
                                     const ActualStructure& actual) {
    const int n = classification.entity_count();
    if (static_cast<std::size_t>(n) != actual.solution.assignment.size())
        throw ValidationError("universe stats: consensus and actual structure differ in size");
    UniverseStats u;
    u.entity_count = static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int act = actual_mr(actual, i, j);
            const AptMr apt = classification.of(i, j);
            if (act == 1)
                ++u.actual_collocated_pairs;
            else
                ++u.actual_separated_pairs;
            if (apt == AptMr::Collocated) {
                ++u.apt_collocated_pairs;
                if (act == 1) ++u.apt_collocated_and_actual_collocated;
            } else if (apt == AptMr::Separated) {
                ++u.apt_separated_pairs;
                if (act == 0) ++u.apt_separated_and_actual_separated;
            }
        }
    }
    return u;
}

PrevalenceStats prevalence(const std::vector<PairSmellRecord>& records,
                           const UniverseStats& universe) {
    PrevalenceStats stats;
    stats.venn = universe;
    std::set<int> insep_entities, incol_entities;
    for (const PairSmellRecord& rec : records) {
        if (rec.form == SmellForm::InSep) {
            ++stats.insep_pairs;
            insep_entities.insert(rec.first);
            insep_entities.insert(rec.second);
        } else {
            ++stats.incol_pairs;
            incol_entities.insert(rec.first);
            incol_entities.insert(rec.second);
        }
    }
    stats.insep_entities = insep_entities.size();
    stats.incol_entities = incol_entities.size();

    auto ratio = [](std::size_t num, std::size_t denom) {
        return denom == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(denom);
    };
    stats.insep_pair_pct = ratio(stats.insep_pairs, universe.actual_separated_pairs);
    stats.incol_pair_pct = ratio(stats.incol_pairs, universe.actual_collocated_pairs);
    stats.insep_entity_pct = ratio(stats.insep_entities, universe.entity_count);
    stats.incol_entity_pct = ratio(stats.incol_entities, universe.entity_count);
    stats.insep_density = ratio(2 * stats.insep_pairs, stats.insep_entities);
    stats.incol_density = ratio(2 * stats.incol_pairs, stats.incol_entities);
    return stats;
}

std::string render_dsm(const std::vector<int>& entity_subset,
                       const CoAssociationMatrix& coassociation,
                       const ActualStructure& actual, const std::vector<Entity>& entities,
                       const DsmOptions& options) {
    if (entity_subset.empty()) throw ParameterError("DSM rendering requires at least one entity");
    if (static_cast<int>(entity_subset.size()) > options.display_limit)
        throw ParameterError("DSM subset of " + std::to_string(entity_subset.size()) +
                             " entities exceeds the display limit of " +
                             std::to_string(options.display_limit) +
                             "; raise it with --limit");
    for (int id : entity_subset)
        if (id < 0 || id >= coassociation.entity_count())
            throw ParameterError("DSM subset references unknown entity id " + std::to_string(id));

    // Rows grouped by actual module, ascending ids inside each block.
    std::vector<int> order = entity_subset;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ma = actual.solution.assignment[a], mb = actual.solution.assignment[b];
        return ma != mb ? ma < mb : a < b;
    });

    auto basename = [&](int id) {
        const std::string& p = entities[id].path;
        const std::size_t slash = p.find_last_of('/');
        return slash == std::string::npos ? p : p.substr(slash + 1);
    };

    std::size_t label_width = 0;
    for (int id : order) label_width = std::max(label_width, basename(id).size());
    label_width = std::min<std::size_t>(label_width, 24);

    std::ostringstream out;
    auto pad_label = [&](const std::string& s) {
        std::string t = s.size() > label_width ? s.substr(0, label_width) : s;
        t.resize(label_width, ' ');
        return t;
    };

    // Header row of column basenames stacked as indices instead: columns are
    // numbered to keep the matrix narrow; a legend maps numbers to names.
    out << pad_label("") << " ";
    for (std::size_t c = 0; c < order.size(); ++c) {
        if (c > 0 && actual.solution.assignment[order[c]] !=
                         actual.solution.assignment[order[c - 1]])
            out << "| ";
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%5u ", static_cast<unsigned>(c + 1));
        out << buf;
    }
    out << "\n";

    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 &&
            actual.solution.assignment[order[r]] != actual.solution.assignment[order[r - 1]]) {
            out << std::string(label_width, '-') << "-";
            for (std::size_t c = 0; c < order.size(); ++c) {
                if (c > 0 && actual.solution.assignment[order[c]] !=
                                 actual.solution.assignment[order[c - 1]])
                    out << "+-";
                out << "------";
            }
            out << "\n";
        }
        out << pad_label(basename(order[r])) << " ";
        for (std::size_t c = 0; c < order.size(); ++c) {
            if (c > 0 && actual.solution.assignment[order[c]] !=
                             actual.solution.assignment[order[c - 1]])
                out << "| ";
            char buf[8];
            std::snprintf(buf, sizeof(buf), "%5.2f ", coassociation.value(order[r], order[c]));
            out << buf;
        }
        out << "\n";
    }

    out << "\n";
    for (std::size_t r = 0; r < order.size(); ++r)
        out << (r + 1) << ": " << entities[order[r]].path << "\n";
    return out.str();
}

}  // namespace pairsmell
