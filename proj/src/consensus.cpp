#include "pairsmell/consensus.hpp"

#include <algorithm>

#include "pairsmell/error.hpp"

namespace pairsmell {

CoAssociationMatrix::CoAssociationMatrix(int n, int m) : n_(n), m_(m) {
    votes_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

std::size_t CoAssociationMatrix::index(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw ParameterError("co-association lookup requires two distinct valid entity ids");
    const int lo = std::min(i, j), hi = std::max(i, j);
    return static_cast<std::size_t>(hi) * (hi - 1) / 2 + lo;
}

int CoAssociationMatrix::votes(int i, int j) const {
    if (i == j) return m_;
    return votes_[index(i, j)];
}

double CoAssociationMatrix::value(int i, int j) const {
    if (i == j) return 1.0;  // convention, never classified
    return static_cast<double>(votes_[index(i, j)]) / static_cast<double>(m_);
}

void CoAssociationMatrix::add_vote(int i, int j) { ++votes_[index(i, j)]; }

int mr_of(const ModularSolution& solution, int i, int j) {
    const int n = static_cast<int>(solution.assignment.size());
    if (i == j) throw ParameterError("MR is undefined on the diagonal (i == j)");
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw ParameterError("entity id out of range in mr_of");
    return solution.assignment[i] == solution.assignment[j] ? 1 : 0;
}

CoAssociationMatrix build_coassociation(const std::vector<ModularSolution>& solutions) {
    if (solutions.size() < 2)
        throw ParameterError("consensus requires at least two solutions (m >= 2)");
    const std::size_t n = solutions.front().assignment.size();
    for (const ModularSolution& s : solutions) {
        if (s.assignment.size() != n)
            throw ValidationError("solution '" + s.tool_tag +
                                  "' covers a different entity set (" +
                                  std::to_string(s.assignment.size()) + " vs " +
                                  std::to_string(n) + " entities)");
    }
    CoAssociationMatrix matrix(static_cast<int>(n), static_cast<int>(solutions.size()));
    for (const ModularSolution& s : solutions) {
        for (const std::vector<int>& members : s.modules()) {
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    matrix.add_vote(members[a], members[b]);
        }
    }
    return matrix;
}

AptClassification::AptClassification(const CoAssociationMatrix& matrix, ConsensusPolicy policy)
    : matrix_(&matrix), policy_(policy) {
    if (!policy_.unanimity && (policy_.collocate_min <= 0.5 || policy_.collocate_min > 1.0))
        throw ParameterError("relaxed consensus threshold must lie in (0.5, 1]");
}

AptMr AptClassification::of(int i, int j) const {
    const int v = matrix_->votes(i, j);
    if (policy_.unanimity) {
        if (v == 0) return AptMr::Separated;
        if (v == matrix_->solution_count()) return AptMr::Collocated;
        return AptMr::NoConsensus;
    }
    const double value = matrix_->value(i, j);
    if (value >= policy_.collocate_min) return AptMr::Collocated;
    if (value <= 1.0 - policy_.collocate_min) return AptMr::Separated;
    return AptMr::NoConsensus;
}

AptClassification classify_apt(const CoAssociationMatrix& matrix, ConsensusPolicy policy) {
    return AptClassification(matrix, policy);
}

std::vector<std::string> degenerate_tools(const std::vector<ModularSolution>& solutions) {
    std::vector<std::string> tags;
    for (const ModularSolution& s : solutions)
        if (s.assignment.size() > 1 && s.module_count == 1) tags.push_back(s.tool_tag);
    return tags;
}

}  // namespace pairsmell
