#include "pairsmell/repo.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include "pairsmell/error.hpp"

namespace pairsmell {

namespace fs = std::filesystem;

std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw IoError("cannot spawn command: " + command);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = status == -1 ? -1 : WEXITSTATUS(status);
    return result;
}

std::string git_log_capture(const std::string& repo_dir, const std::string& anchor) {
    std::string cmd = "git -C " + shell_quote(repo_dir) +
                      " log --no-merges --numstat --date=unix " +
                      shell_quote("--pretty=format:@%H|%ae|%ad");
    if (!anchor.empty()) cmd += " " + shell_quote(anchor);
    const CommandResult res = run_command(cmd);
    if (res.exit_code != 0)
        throw IoError("git log failed (exit " + std::to_string(res.exit_code) + ") in " +
                      repo_dir);
    return res.output;
}

std::string git_head_revision(const std::string& repo_dir) {
    const CommandResult res = run_command("git -C " + shell_quote(repo_dir) + " rev-parse HEAD");
    if (res.exit_code != 0) throw IoError("git rev-parse HEAD failed in " + repo_dir);
    std::string rev = res.output;
    while (!rev.empty() && (rev.back() == '\n' || rev.back() == '\r')) rev.pop_back();
    return rev;
}

std::string git_clone_to_temp(const std::string& repo_dir) {
    std::error_code ec;
    const fs::path base = fs::temp_directory_path(ec);
    if (ec) throw IoError("no temporary directory available");
    fs::path dest;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        dest = base / ("pairsmell-worktree-" + std::to_string(::getpid()) + "-" +
                       std::to_string(attempt));
        if (!fs::exists(dest)) break;
    }
    const CommandResult res = run_command("git clone --quiet --no-hardlinks " +
                                          shell_quote(repo_dir) + " " +
                                          shell_quote(dest.string()));
    if (res.exit_code != 0)
        throw IoError("git clone of " + repo_dir + " failed (exit " +
                      std::to_string(res.exit_code) + ")");
    return dest.string();
}

void git_checkout(const std::string& work_dir, const std::string& revision) {
    const CommandResult res = run_command("git -C " + shell_quote(work_dir) +
                                          " checkout --quiet --detach " +
                                          shell_quote(revision));
    if (res.exit_code != 0)
        throw IoError("git checkout of " + revision + " failed in " + work_dir);
}

}  // namespace pairsmell
