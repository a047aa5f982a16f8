#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "pairsmell/depgraph.hpp"
#include "pairsmell/error.hpp"

namespace pairsmell {

namespace fs = std::filesystem;

LanguageProfile parse_language_profile(const std::string& name) {
    if (name == "java-imports") return LanguageProfile::JavaImports;
    if (name == "c-includes") return LanguageProfile::CIncludes;
    throw ParameterError("unknown language profile: " + name +
                         " (expected java-imports or c-includes)");
}

std::string language_profile_name(LanguageProfile profile) {
    return profile == LanguageProfile::JavaImports ? "java-imports" : "c-includes";
}

namespace {

const std::vector<std::string>& profile_extensions(LanguageProfile profile) {
    static const std::vector<std::string> java{".java"};
    static const std::vector<std::string> c{".c", ".cc", ".cpp", ".h", ".hpp"};
    return profile == LanguageProfile::JavaImports ? java : c;
}

bool has_extension(const std::string& path, const std::vector<std::string>& exts) {
    for (const std::string& ext : exts) {
        if (path.size() > ext.size() &&
            path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
            return true;
    }
    return false;
}

// Strips //, /* */ comments and string/char literals so commented-out
// imports and includes are not picked up.
std::string strip_comments(const std::string& src) {
    std::string out;
    out.reserve(src.size());
    enum { Code, Line, Block, Str, Chr } state = Code;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const char c = src[i];
        const char next = i + 1 < src.size() ? src[i + 1] : '\0';
        switch (state) {
            case Code:
                if (c == '/' && next == '/') {
                    state = Line;
                    ++i;
                } else if (c == '/' && next == '*') {
                    state = Block;
                    ++i;
                } else if (c == '"') {
                    state = Str;
                    out += c;
                } else if (c == '\'') {
                    state = Chr;
                    out += c;
                } else {
                    out += c;
                }
                break;
            case Line:
                if (c == '\n') {
                    state = Code;
                    out += c;
                }
                break;
            case Block:
                if (c == '*' && next == '/') {
                    state = Code;
                    ++i;
                } else if (c == '\n') {
                    out += c;  // keep line structure
                }
                break;
            case Str:
                out += c;
                if (c == '\\' && i + 1 < src.size()) {
                    out += src[++i];
                } else if (c == '"' || c == '\n') {
                    state = Code;
                }
                break;
            case Chr:
                out += c;
                if (c == '\\' && i + 1 < src.size()) {
                    out += src[++i];
                } else if (c == '\'' || c == '\n') {
                    state = Code;
                }
                break;
        }
    }
    return out;
}

std::string basename_of(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string dirname_of(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string{} : path.substr(0, slash);
}

std::string stem_of(const std::string& base) {
    const std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

std::vector<std::string> split_segments(const std::string& path) {
    std::vector<std::string> segs;
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t end = path.find('/', start);
        if (end == std::string::npos) end = path.size();
        if (end > start) segs.push_back(path.substr(start, end - start));
        start = end + 1;
    }
    return segs;
}

int common_prefix_segments(const std::string& a, const std::string& b) {
    const auto sa = split_segments(a);
    const auto sb = split_segments(b);
    int k = 0;
    while (k < static_cast<int>(std::min(sa.size(), sb.size())) && sa[k] == sb[k]) ++k;
    return k;
}

bool is_identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// "package a.b;" -> "a.b"; empty when absent.
std::string java_package(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find("package");
        if (pos == std::string::npos) continue;
        if (pos > 0 && is_identifier_char(line[pos - 1])) continue;
        pos += 7;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::string name;
        while (pos < line.size() && (is_identifier_char(line[pos]) || line[pos] == '.'))
            name += line[pos++];
        if (!name.empty()) return name;
    }
    return {};
}

// Fully qualified single-type imports; wildcard imports are skipped.
std::vector<std::string> java_imports(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find("import");
        if (pos == std::string::npos) continue;
        if (pos > 0 && is_identifier_char(line[pos - 1])) continue;
        pos += 6;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (line.compare(pos, 6, "static") == 0 && pos + 6 < line.size() &&
            !is_identifier_char(line[pos + 6])) {
            pos += 6;
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        }
        std::string name;
        while (pos < line.size() && (is_identifier_char(line[pos]) || line[pos] == '.'))
            name += line[pos++];
        if (name.empty() || name.back() == '.') continue;
        if (name.find('*') != std::string::npos) continue;
        result.push_back(name);
    }
    return result;
}

// Quoted includes only; angle brackets are assumed to be system headers.
std::vector<std::string> c_includes(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] != '#') continue;
        pos = line.find("include", pos);
        if (pos == std::string::npos) continue;
        pos = line.find('"', pos);
        if (pos == std::string::npos) continue;
        const std::size_t end = line.find('"', pos + 1);
        if (end == std::string::npos) continue;
        std::string target = line.substr(pos + 1, end - pos - 1);
        if (!target.empty()) result.push_back(std::move(target));
    }
    return result;
}

}  // namespace

DependencyGraph scan_sources(const std::string& root_dir, LanguageProfile profile,
                             const ScanOptions& options) {
    std::error_code ec;
    if (!fs::is_directory(root_dir, ec) || ec)
        throw IoError("scan root is not a readable directory: " + root_dir);

    const auto& exts = profile_extensions(profile);
    std::vector<std::string> paths;
    fs::recursive_directory_iterator it(root_dir, fs::directory_options::skip_permission_denied,
                                        ec);
    if (ec) throw IoError("cannot traverse " + root_dir + ": " + ec.message());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) throw IoError("cannot traverse " + root_dir + ": " + ec.message());
        if (it->is_directory() && it->path().filename() == ".git") {
            it.disable_recursion_pending();
            continue;
        }
        if (!it->is_regular_file()) continue;
        std::string rel = fs::relative(it->path(), root_dir).generic_string();
        if (!has_extension(rel, exts)) continue;
        if (!options.include_globs.empty()) {
            bool hit = false;
            for (const auto& g : options.include_globs) hit = hit || glob_match(g, rel);
            if (!hit) continue;
        }
        bool excluded = false;
        for (const auto& g : options.exclude_globs) excluded = excluded || glob_match(g, rel);
        if (excluded) continue;
        paths.push_back(std::move(rel));
    }
    if (paths.empty())
        throw ValidationError("empty graph: no " + language_profile_name(profile) +
                              " source files under " + root_dir);
    std::sort(paths.begin(), paths.end());

    std::vector<Entity> entities;
    entities.reserve(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i)
        entities.push_back({static_cast<int>(i), paths[i]});

    std::vector<std::string> contents(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::ifstream in(fs::path(root_dir) / paths[i], std::ios::binary);
        if (!in) throw IoError("cannot read source file: " + paths[i]);
        std::ostringstream buf;
        buf << in.rdbuf();
        contents[i] = strip_comments(buf.str());
    }

    std::vector<DependencyEdge> edges;
    if (profile == LanguageProfile::JavaImports) {
        std::unordered_map<std::string, int> by_fqn;  // package.Class -> entity
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const std::string pkg = java_package(contents[i]);
            const std::string cls = stem_of(basename_of(paths[i]));
            by_fqn.emplace(pkg.empty() ? cls : pkg + "." + cls, static_cast<int>(i));
        }
        for (std::size_t i = 0; i < paths.size(); ++i) {
            std::set<int> referenced;
            for (const std::string& imp : java_imports(contents[i])) {
                auto hit = by_fqn.find(imp);
                if (hit != by_fqn.end() && hit->second != static_cast<int>(i))
                    referenced.insert(hit->second);
            }
            for (int dst : referenced)
                edges.push_back({static_cast<int>(i), dst, "import", 1});
        }
    } else {
        std::unordered_map<std::string, std::vector<int>> by_basename;
        for (std::size_t i = 0; i < paths.size(); ++i)
            by_basename[basename_of(paths[i])].push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const std::string dir = dirname_of(paths[i]);
            std::set<int> referenced;
            for (const std::string& inc : c_includes(contents[i])) {
                auto hit = by_basename.find(basename_of(inc));
                if (hit == by_basename.end()) continue;
                int best = -1, best_score = -1;
                for (int cand : hit->second) {
                    if (cand == static_cast<int>(i)) continue;
                    const int score = common_prefix_segments(dir, dirname_of(paths[cand]));
                    if (score > best_score) {
                        best = cand;
                        best_score = score;
                    }
                }
                if (best >= 0) referenced.insert(best);
            }
            for (int dst : referenced)
                edges.push_back({static_cast<int>(i), dst, "include", 1});
        }
    }

    return DependencyGraph::from_parts(std::move(entities), std::move(edges),
                                       options.kind_weights);
}

}  // namespace pairsmell
