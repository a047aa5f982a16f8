#ifndef PAIRSMELL_REPO_HPP_
#define PAIRSMELL_REPO_HPP_

#include <string>
#include <vector>

namespace pairsmell {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

// Runs a command through the shell, capturing stdout. Arguments are quoted
// by the caller via shell_quote.
CommandResult run_command(const std::string& command);

std::string shell_quote(const std::string& arg);

// `git -C repo log --no-merges --numstat --date=unix
//  --pretty=format:@%H|%ae|%ad [anchor]`, the byte format ingest_log reads.
std::string git_log_capture(const std::string& repo_dir, const std::string& anchor = {});

std::string git_head_revision(const std::string& repo_dir);

// Clones repo_dir into a fresh temporary working copy (local clone, no
// network). The caller owns removal.
std::string git_clone_to_temp(const std::string& repo_dir);

void git_checkout(const std::string& work_dir, const std::string& revision);

}  // namespace pairsmell

#endif  // PAIRSMELL_REPO_HPP_
