#ifndef PAIRSMELL_STRUCTURE_HPP_
#define PAIRSMELL_STRUCTURE_HPP_

#include <string>
#include <vector>

#include "pairsmell/depgraph.hpp"
#include "pairsmell/modularize.hpp"

namespace pairsmell {

// Modular structure recovered from the folder hierarchy: two entities share
// a module iff their paths have the same immediate parent directory.
struct ActualStructure {
    ModularSolution solution;          // tool_tag "actual"
    std::vector<std::string> folders;  // module id -> parent directory ("" = root)
};

ActualStructure recover_modules(const std::vector<Entity>& entities);

int actual_mr(const ActualStructure& structure, int i, int j);

// Same layout as solution_to_json plus a "folders" array.
std::string actual_to_json(const ActualStructure& structure);

}  // namespace pairsmell

#endif  // PAIRSMELL_STRUCTURE_HPP_
