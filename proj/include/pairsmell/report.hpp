#ifndef PAIRSMELL_REPORT_HPP_
#define PAIRSMELL_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pairsmell/cochange.hpp"
#include "pairsmell/consensus.hpp"
#include "pairsmell/evolution.hpp"
#include "pairsmell/smells.hpp"

namespace pairsmell {

// Rounding applied to every floating-point value before emission so output
// bytes are identical across runs and platforms.
double pin_decimals(double value, int places = 6);

struct DetectReportMeta {
    std::vector<std::string> tools;
    int k = 0;
    std::string consensus = "unanimity";
    std::vector<std::string> degenerate;
    bool body_header_suppression = false;
};

std::string smell_report_json(const std::vector<Entity>& entities,
                              const DetectionResult& detection, const PrevalenceStats& stats,
                              const DetectReportMeta& meta);
std::string smell_report_csv(const std::vector<Entity>& entities,
                             const DetectionResult& detection);

// CSV triples i,j,apt_value. Default: only unanimous pairs; full dump emits
// every pair.
std::string coassociation_csv(const CoAssociationMatrix& matrix, bool full_dump = false);

struct KRatioRun {
    std::size_t delta = 0;
    std::size_t commits_used = 0;
    bool shortfall = false;
    std::vector<std::pair<SmellForm, std::vector<KRatioReport>>> forms;
};

std::string kratio_report_json(const std::vector<KRatioRun>& runs);

std::string series_csv(const SnapshotSeries& series);
std::string trends_json(const SnapshotSeries& series, double alpha);

// Parsed smell report, enough to rebuild pair sets for co-change analysis.
struct LoadedSmellReport {
    std::vector<std::string> entity_paths;
    std::vector<PairSmellRecord> records;
};

LoadedSmellReport load_smell_report(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace pairsmell

#endif  // PAIRSMELL_REPORT_HPP_
