#include "pairsmell/structure.hpp"

#include <map>

#include <json.hpp>

#include "pairsmell/consensus.hpp"

namespace pairsmell {

namespace {

std::string parent_dir(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string{} : path.substr(0, slash);
}

}  // namespace

ActualStructure recover_modules(const std::vector<Entity>& entities) {
    std::map<std::string, int> folder_label;
    std::vector<int> labels(entities.size(), -1);
    for (const Entity& e : entities) {
        const std::string dir = parent_dir(e.path);
        auto it = folder_label.emplace(dir, static_cast<int>(folder_label.size())).first;
        labels[e.id] = it->second;
    }
    ActualStructure structure;
    structure.solution = ModularSolution::from_labels(std::move(labels), "actual");
    structure.folders.assign(structure.solution.module_count, {});
    for (const Entity& e : entities)
        structure.folders[structure.solution.assignment[e.id]] = parent_dir(e.path);
    return structure;
}

int actual_mr(const ActualStructure& structure, int i, int j) {
    return mr_of(structure.solution, i, j);
}

std::string actual_to_json(const ActualStructure& structure) {
    nlohmann::json doc;
    doc["tool"] = structure.solution.tool_tag;
    doc["variant"] = "pairsmell-variant";
    doc["modules"] = structure.solution.modules();
    doc["folders"] = structure.folders;
    return doc.dump(2) + "\n";
}

}  // namespace pairsmell
