#ifndef PAIRSMELL_CONSENSUS_HPP_
#define PAIRSMELL_CONSENSUS_HPP_

#include <cstdint>
#include <vector>

#include "pairsmell/modularize.hpp"

namespace pairsmell {

// Per-pair collocation frequency across m solutions. Stored triangularly as
// one vote-count byte per unordered pair; value(i,j) = votes / m. Diagonal
// is 1 by convention. Memory is O(n^2): ~1.25 GB at 50k entities, the
// practical ceiling.
class CoAssociationMatrix {
  public:
    CoAssociationMatrix() = default;
    CoAssociationMatrix(int n, int m);

    int entity_count() const { return n_; }
    int solution_count() const { return m_; }

    int votes(int i, int j) const;
    double value(int i, int j) const;

    void add_vote(int i, int j);

  private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint8_t> votes_;
};

// Modular relation of a pair in one solution: 1 iff both entities share a
// module. i == j is undefined.
int mr_of(const ModularSolution& solution, int i, int j);

// values[i][j] = (1/m) * sum over solutions of MR(i,j). Requires m >= 2 and
// a shared entity universe.
CoAssociationMatrix build_coassociation(const std::vector<ModularSolution>& solutions);

enum class AptMr { Separated, Collocated, NoConsensus };

// Unanimity by default; the relaxed mode treats value >= collocate_min as
// collocated and value <= 1 - collocate_min as separated.
struct ConsensusPolicy {
    bool unanimity = true;
    double collocate_min = 1.0;
};

// Pure pairwise classification view over a co-association matrix.
class AptClassification {
  public:
    AptClassification(const CoAssociationMatrix& matrix, ConsensusPolicy policy = {});

    AptMr of(int i, int j) const;
    double value(int i, int j) const { return matrix_->value(i, j); }
    int entity_count() const { return matrix_->entity_count(); }
    const CoAssociationMatrix& matrix() const { return *matrix_; }
    const ConsensusPolicy& policy() const { return policy_; }

  private:
    const CoAssociationMatrix* matrix_;
    ConsensusPolicy policy_;
};

AptClassification classify_apt(const CoAssociationMatrix& matrix, ConsensusPolicy policy = {});

// Tools whose solution collapsed to a single module (flagged in reports;
// unanimity still applies).
std::vector<std::string> degenerate_tools(const std::vector<ModularSolution>& solutions);

}  // namespace pairsmell

#endif  // PAIRSMELL_CONSENSUS_HPP_
