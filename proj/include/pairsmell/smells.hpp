#ifndef PAIRSMELL_SMELLS_HPP_
#define PAIRSMELL_SMELLS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pairsmell/consensus.hpp"
#include "pairsmell/structure.hpp"

namespace pairsmell {

enum class SmellForm { InSep, InCol };
std::string smell_form_name(SmellForm form);

// One detected smell: the pair, both modular relations, and the pair's
// co-association value.
struct PairSmellRecord {
    int first = 0;  // first < second
    int second = 0;
    int actual = 0;
    int apt = 0;
    SmellForm form = SmellForm::InSep;
    double coassoc = 0.0;
};

struct DetectOptions {
    // Drops InSep records whose pair is a C/C++ body-header split; the
    // dropped records are reported as suppressed, never silently removed.
    bool suppress_body_header = false;
};

struct DetectionResult {
    std::vector<PairSmellRecord> records;     // sorted by (first, second)
    std::vector<PairSmellRecord> suppressed;  // body-header InSep, when enabled
};

DetectionResult detect(const AptClassification& classification, const ActualStructure& actual,
                       const std::vector<Entity>& entities, const DetectOptions& options = {});

// Pair-universe totals feeding prevalence percentages and the set
// decomposition.
struct UniverseStats {
    std::size_t entity_count = 0;
    std::size_t actual_separated_pairs = 0;
    std::size_t actual_collocated_pairs = 0;
    std::size_t apt_separated_pairs = 0;
    std::size_t apt_collocated_pairs = 0;
    std::size_t apt_collocated_and_actual_collocated = 0;
    std::size_t apt_separated_and_actual_separated = 0;
};

UniverseStats compute_universe_stats(const AptClassification& classification,
                                     const ActualStructure& actual);

struct PrevalenceStats {
    std::size_t insep_pairs = 0;
    std::size_t incol_pairs = 0;
    std::size_t insep_entities = 0;  // involved in at least one InSep
    std::size_t incol_entities = 0;
    double insep_pair_pct = 0.0;  // vs all actually separated pairs
    double incol_pair_pct = 0.0;  // vs all actually collocated pairs
    double insep_entity_pct = 0.0;
    double incol_entity_pct = 0.0;
    double insep_density = 0.0;  // 2 * instances / involved entities
    double incol_density = 0.0;
    UniverseStats venn;
};

PrevalenceStats prevalence(const std::vector<PairSmellRecord>& records,
                           const UniverseStats& universe);

struct DsmOptions {
    int display_limit = 30;
};

// Square text matrix of co-association values (2 decimals) with actual
// module blocks delimited; rows labeled by file basenames.
std::string render_dsm(const std::vector<int>& entity_subset,
                       const CoAssociationMatrix& coassociation,
                       const ActualStructure& actual, const std::vector<Entity>& entities,
                       const DsmOptions& options = {});

}  // namespace pairsmell

#endif  // PAIRSMELL_SMELLS_HPP_
