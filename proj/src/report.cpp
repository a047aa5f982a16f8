#include "pairsmell/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pairsmell/error.hpp"

namespace pairsmell {

using nlohmann::json;

double pin_decimals(double value, int places) {
    const double scale = std::pow(10.0, places);
    return std::round(value * scale) / scale;
}

namespace {

json record_to_json(const std::vector<Entity>& entities, const PairSmellRecord& rec) {
    return json{{"form", smell_form_name(rec.form)},
                {"a", entities[rec.first].path},
                {"b", entities[rec.second].path},
                {"actual", rec.actual},
                {"apt", rec.apt},
                {"coassoc", pin_decimals(rec.coassoc, 4)}};
}

json universe_to_json(const UniverseStats& u) {
    return json{{"entities", u.entity_count},
                {"actual_separated_pairs", u.actual_separated_pairs},
                {"actual_collocated_pairs", u.actual_collocated_pairs},
                {"apt_separated_pairs", u.apt_separated_pairs},
                {"apt_collocated_pairs", u.apt_collocated_pairs},
                {"apt_collocated_and_actual_collocated", u.apt_collocated_and_actual_collocated},
                {"apt_separated_and_actual_separated", u.apt_separated_and_actual_separated}};
}

}  // namespace

std::string smell_report_json(const std::vector<Entity>& entities,
                              const DetectionResult& detection, const PrevalenceStats& stats,
                              const DetectReportMeta& meta) {
    json doc;
    doc["schema"] = "pairsmell-report/1";
    doc["entities"] = json::array();
    for (const Entity& e : entities) doc["entities"].push_back(e.path);
    doc["records"] = json::array();
    for (const PairSmellRecord& rec : detection.records)
        doc["records"].push_back(record_to_json(entities, rec));
    doc["suppressed"] = json::array();
    for (const PairSmellRecord& rec : detection.suppressed)
        doc["suppressed"].push_back(record_to_json(entities, rec));
    doc["stats"] = {{"insep_pairs", stats.insep_pairs},
                    {"incol_pairs", stats.incol_pairs},
                    {"insep_entities", stats.insep_entities},
                    {"incol_entities", stats.incol_entities},
                    {"insep_pair_pct", pin_decimals(stats.insep_pair_pct)},
                    {"incol_pair_pct", pin_decimals(stats.incol_pair_pct)},
                    {"insep_entity_pct", pin_decimals(stats.insep_entity_pct)},
                    {"incol_entity_pct", pin_decimals(stats.incol_entity_pct)},
                    {"insep_density", pin_decimals(stats.insep_density)},
                    {"incol_density", pin_decimals(stats.incol_density)},
                    {"venn", universe_to_json(stats.venn)}};
    doc["meta"] = {{"tools", meta.tools},
                   {"variant", "pairsmell-variant"},
                   {"k", meta.k},
                   {"consensus", meta.consensus},
                   {"degenerate_tools", meta.degenerate},
                   {"body_header_suppression", meta.body_header_suppression}};
    return doc.dump(2) + "\n";
}

std::string smell_report_csv(const std::vector<Entity>& entities,
                             const DetectionResult& detection) {
    std::ostringstream out;
    out << "form,a,b,actual,apt,coassoc\n";
    char buf[32];
    for (const PairSmellRecord& rec : detection.records) {
        std::snprintf(buf, sizeof(buf), "%.4f", rec.coassoc);
        out << smell_form_name(rec.form) << ',' << entities[rec.first].path << ','
            << entities[rec.second].path << ',' << rec.actual << ',' << rec.apt << ',' << buf
            << "\n";
    }
    return out.str();
}

std::string coassociation_csv(const CoAssociationMatrix& matrix, bool full_dump) {
    std::ostringstream out;
    out << "i,j,apt_value\n";
    char buf[32];
    const int n = matrix.entity_count();
    const int m = matrix.solution_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int votes = matrix.votes(i, j);
            if (!full_dump && votes != 0 && votes != m) continue;
            std::snprintf(buf, sizeof(buf), "%.4f", matrix.value(i, j));
            out << i << ',' << j << ',' << buf << "\n";
        }
    }
    return out.str();
}

namespace {

json kratio_to_json(const KRatioReport& r) {
    json doc{{"metric", pair_metric_name(r.metric)},
             {"smelly_pairs", r.smelly_pairs},
             {"baseline_pairs", r.baseline_pairs},
             {"smelly_active", r.smelly_active},
             {"baseline_active", r.baseline_active},
             {"smelly_zero_denominator", r.smelly_pairs - r.smelly_active},
             {"baseline_zero_denominator", r.baseline_pairs - r.baseline_active},
             {"smelly_mean", pin_decimals(r.smelly_mean)},
             {"baseline_mean", pin_decimals(r.baseline_mean)},
             {"smelly_mean_active", pin_decimals(r.smelly_mean_active)},
             {"baseline_mean_active", pin_decimals(r.baseline_mean_active)}};
    doc["k"] = r.k.has_value() ? json(pin_decimals(*r.k)) : json(nullptr);
    doc["cohens_d"] = r.cohens_d.has_value() ? json(pin_decimals(*r.cohens_d)) : json(nullptr);
    doc["p_value"] = pin_decimals(r.p_value);
    doc["status"] = r.no_data ? "no_data_point" : "ok";
    return doc;
}

}  // namespace

std::string kratio_report_json(const std::vector<KRatioRun>& runs) {
    json doc;
    doc["schema"] = "pairsmell-kratio/1";
    doc["meta"] = {{"test", "welch-two-sample-t"},
                   {"effect_size", "cohens-d-pooled-sd"},
                   {"limitations", json::array({"renames are treated as new paths"})}};
    doc["deltas"] = json::array();
    for (const KRatioRun& run : runs) {
        json jr{{"delta", run.delta},
                {"commits_used", run.commits_used},
                {"shortfall", run.shortfall}};
        jr["forms"] = json::object();
        for (const auto& [form, reports] : run.forms) {
            json metrics = json::object();
            for (const KRatioReport& r : reports) metrics[pair_metric_name(r.metric)] = kratio_to_json(r);
            jr["forms"][smell_form_name(form)] = metrics;
        }
        doc["deltas"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

std::string series_csv(const SnapshotSeries& series) {
    std::ostringstream out;
    out << "snapshot_index,timestamp,insep_pair_pct,incol_pair_pct,insep_entity_pct,"
           "incol_entity_pct\n";
    char buf[160];
    for (const SnapshotPoint& p : series.points) {
        if (!p.present) continue;  // gaps keep their index but emit no row
        std::snprintf(buf, sizeof(buf), "%d,%lld,%.6f,%.6f,%.6f,%.6f\n", p.index,
                      static_cast<long long>(p.snapshot.timestamp), p.insep_pair_pct,
                      p.incol_pair_pct, p.insep_entity_pct, p.incol_entity_pct);
        out << buf;
    }
    return out.str();
}

std::string trends_json(const SnapshotSeries& series, double alpha) {
    std::vector<double> xs;
    std::vector<double> insep_pair, incol_pair, insep_entity, incol_entity;
    for (const SnapshotPoint& p : series.points) {
        if (!p.present) continue;
        xs.push_back(static_cast<double>(p.index));
        insep_pair.push_back(p.insep_pair_pct);
        incol_pair.push_back(p.incol_pair_pct);
        insep_entity.push_back(p.insep_entity_pct);
        incol_entity.push_back(p.incol_entity_pct);
    }

    json doc;
    doc["schema"] = "pairsmell-trends/1";
    doc["alpha"] = alpha;
    doc["snapshots_used"] = xs.size();
    doc["trends"] = json::object();
    auto emit = [&](const std::string& name, const std::vector<double>& ys) {
        const TrendResult t = fit_trend_points(xs, ys, alpha);
        doc["trends"][name] = {{"slope", pin_decimals(t.slope, 9)},
                               {"intercept", pin_decimals(t.intercept, 9)},
                               {"p_value", pin_decimals(t.p_value)},
                               {"classification", trend_class_name(t.classification)}};
    };
    emit("insep_pair", insep_pair);
    emit("incol_pair", incol_pair);
    emit("insep_entity", insep_entity);
    emit("incol_entity", incol_entity);
    return doc.dump(2) + "\n";
}

LoadedSmellReport load_smell_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open smell report: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("smell report parse error at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    if (!doc.contains("schema") || doc["schema"] != "pairsmell-report/1")
        throw ValidationError("not a pairsmell-report/1 document: " + path);

    LoadedSmellReport report;
    try {
        for (const json& p : doc.at("entities"))
            report.entity_paths.push_back(p.get<std::string>());
        std::map<std::string, int> id_of;
        for (std::size_t i = 0; i < report.entity_paths.size(); ++i)
            id_of[report.entity_paths[i]] = static_cast<int>(i);
        for (const json& jr : doc.at("records")) {
            PairSmellRecord rec;
            const std::string a = jr.at("a").get<std::string>();
            const std::string b = jr.at("b").get<std::string>();
            if (!id_of.count(a) || !id_of.count(b))
                throw ValidationError("smell report references unknown entity path");
            rec.first = id_of[a];
            rec.second = id_of[b];
            if (rec.first > rec.second) std::swap(rec.first, rec.second);
            rec.actual = jr.at("actual").get<int>();
            rec.apt = jr.at("apt").get<int>();
            rec.coassoc = jr.value("coassoc", 0.0);
            rec.form = jr.at("form").get<std::string>() == "InSep" ? SmellForm::InSep
                                                                   : SmellForm::InCol;
            report.records.push_back(rec);
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("smell report: ") + e.what());
    }
    return report;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write output file: " + path);
    out << content;
    if (!out) throw IoError("failed writing output file: " + path);
}

}  // namespace pairsmell
