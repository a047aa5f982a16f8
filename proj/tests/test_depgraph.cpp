#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "helpers.hpp"
#include "pairsmell/depgraph.hpp"
#include "pairsmell/error.hpp"

using namespace pairsmell;

namespace {

std::string canonical_doc(const std::string& entities, const std::string& edges) {
    return R"({"schema":"pairsmell-depgraph/1","entities":[)" + entities + R"(],"edges":[)" +
           edges + "]}";
}

}  // namespace

TEST_CASE("load_canonical: direct schema echo") {
    const auto g = load_canonical_text(canonical_doc(
        R"({"id":0,"path":"src/A.java"},{"id":1,"path":"src/B.java"})",
        R"({"src":0,"dst":1,"kind":"call","weight":2})"));
    CHECK(g.entity_count() == 2);
    CHECK(g.weight(0, 1) == doctest::Approx(2.0));
    CHECK(g.weight(1, 0) == doctest::Approx(0.0));
}

TEST_CASE("load_canonical: self-edges are dropped") {
    const auto g = load_canonical_text(canonical_doc(
        R"({"id":0,"path":"a.java"},{"id":1,"path":"b.java"})",
        R"({"src":0,"dst":0,"kind":"call","weight":1})"));
    CHECK(g.edges().empty());
    CHECK(g.weight(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("load_canonical: kinds merge into the aggregated adjacency") {
    const auto g = load_canonical_text(canonical_doc(
        R"({"id":0,"path":"a.java"},{"id":1,"path":"b.java"})",
        R"({"src":0,"dst":1,"kind":"call","weight":1},{"src":0,"dst":1,"kind":"use","weight":3})"));
    CHECK(g.weight(0, 1) == doctest::Approx(4.0));
    CHECK(g.edges().size() == 2);  // kinds stay distinct in the edge list
}

TEST_CASE("load_canonical: duplicate (src,dst,kind) edges merge by weight sum") {
    const auto g = load_canonical_text(canonical_doc(
        R"({"id":0,"path":"a.java"},{"id":1,"path":"b.java"})",
        R"({"src":0,"dst":1,"kind":"call","weight":1},{"src":0,"dst":1,"kind":"call","weight":2})"));
    CHECK(g.edges().size() == 1);
    CHECK(g.edges()[0].weight == 3);
}

TEST_CASE("load_canonical: malformed JSON names the byte offset") {
    CHECK_THROWS_WITH_AS(load_canonical_text("{\"schema\": oops"),
                         doctest::Contains("byte"), ParseError);
}

TEST_CASE("load_canonical: dangling edge id is a validation error naming the edge") {
    CHECK_THROWS_WITH_AS(
        load_canonical_text(canonical_doc(R"({"id":0,"path":"a.java"})",
                                          R"({"src":0,"dst":7,"kind":"x","weight":1})")),
        doctest::Contains("edge #0"), ValidationError);
}

TEST_CASE("load_canonical: duplicate path rejected") {
    CHECK_THROWS_AS(load_canonical_text(canonical_doc(
                        R"({"id":0,"path":"a.java"},{"id":1,"path":"a.java"})", "")),
                    ValidationError);
}

TEST_CASE("load_canonical: schema marker required") {
    CHECK_THROWS_AS(load_canonical_text(R"({"entities":[],"edges":[]})"), ValidationError);
}

TEST_CASE("paths: '.'/'..' segments and empties rejected") {
    CHECK_THROWS_AS(normalize_path("a/../b.java"), ValidationError);
    CHECK_THROWS_AS(normalize_path(""), ValidationError);
    CHECK_THROWS_AS(normalize_path("a//b.java"), ValidationError);
    CHECK(normalize_path("./a/b.java") == "a/b.java");
    CHECK(normalize_path("a\\b.java") == "a/b.java");
}

TEST_CASE("entity ordering is stable under input permutation") {
    const std::string doc_a = canonical_doc(
        R"({"id":0,"path":"z.java"},{"id":1,"path":"a.java"})",
        R"({"src":0,"dst":1,"kind":"call","weight":1})");
    const std::string doc_b = canonical_doc(
        R"({"id":1,"path":"a.java"},{"id":0,"path":"z.java"})",
        R"({"src":0,"dst":1,"kind":"call","weight":1})");
    const auto ga = load_canonical_text(doc_a);
    const auto gb = load_canonical_text(doc_b);
    CHECK(export_canonical(ga) == export_canonical(gb));
    CHECK(ga.entities()[0].path == "a.java");  // sorted by path, ids reassigned
    CHECK(ga.weight(1, 0) == doctest::Approx(1.0));
}

TEST_CASE("round trip: load_canonical after export_canonical is the identity") {
    const auto g = testutil::make_graph(
        4, {{0, 1, 2, "call"}, {1, 2, 1, "use"}, {3, 0, 5, "include"}, {0, 1, 1, "use"}});
    const std::string once = export_canonical(g);
    const std::string twice = export_canonical(load_canonical_text(once));
    CHECK(once == twice);
}

TEST_CASE("aggregated adjacency equals a brute-force recount on random graphs") {
    std::mt19937 rng(20240717);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);  // up to 10 entities
        std::uniform_int_distribution<int> node(0, n - 1);
        std::uniform_int_distribution<int> w(1, 5);
        const char* kinds[] = {"call", "use", "contain"};
        std::vector<testutil::EdgeSpec> edges;
        const int m = static_cast<int>(rng() % 25);
        for (int e = 0; e < m; ++e)
            edges.push_back({node(rng), node(rng), w(rng), kinds[rng() % 3]});

        const auto g = testutil::make_graph(n, edges);
        // Independent recount over the raw inputs.
        std::map<std::pair<std::string, std::string>, std::int64_t> expected;
        for (const auto& e : edges) {
            if (e.src == e.dst) continue;
            expected[{g.entities()[e.src].path, g.entities()[e.dst].path}] += e.weight;
        }
        // Entity ids were reassigned by path sort; compare through paths.
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    CHECK(g.weight(i, j) == doctest::Approx(0.0));
                    continue;
                }
                const auto it = expected.find({g.entities()[i].path, g.entities()[j].path});
                const double want = it == expected.end() ? 0.0 : static_cast<double>(it->second);
                CHECK(g.weight(i, j) == doctest::Approx(want));
            }
        }
    }
}

TEST_CASE("per-kind weight table scales the aggregated adjacency only") {
    KindWeights kw{{"call", 2.0}, {"use", 0.5}};
    const auto g = load_canonical_text(
        canonical_doc(R"({"id":0,"path":"a.java"},{"id":1,"path":"b.java"})",
                      R"({"src":0,"dst":1,"kind":"call","weight":1},)"
                      R"({"src":0,"dst":1,"kind":"use","weight":2})"),
        kw);
    CHECK(g.weight(0, 1) == doctest::Approx(2.0 * 1 + 0.5 * 2));
    CHECK(g.edges()[0].weight == 1);  // raw counts unchanged
}

TEST_CASE("load_depends_json: variables/cells mapping") {
    const auto g = load_depends_json_text(
        R"({"variables":["a.java","b.java"],)"
        R"("cells":[{"src":0,"dest":1,"values":{"Call":2}}]})");
    CHECK(g.entity_count() == 2);
    CHECK(g.weight(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("load_depends_json: empty cells give an edgeless graph") {
    const auto g = load_depends_json_text(R"({"variables":["a.java","b.java"],"cells":[]})");
    CHECK(g.entity_count() == 2);
    CHECK(g.edges().empty());
}

TEST_CASE("load_depends_json: value map entries aggregate") {
    const auto g = load_depends_json_text(
        R"({"variables":["a.java","b.java"],)"
        R"("cells":[{"src":0,"dest":1,"values":{"Call":1,"Use":1}}]})");
    CHECK(g.weight(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("load_depends_json: missing keys and bad indices rejected") {
    CHECK_THROWS_AS(load_depends_json_text(R"({"cells":[]})"), ValidationError);
    CHECK_THROWS_AS(load_depends_json_text(R"({"variables":[]})"), ValidationError);
    CHECK_THROWS_AS(load_depends_json_text(
                        R"({"variables":["a.java"],)"
                        R"("cells":[{"src":0,"dest":3,"values":{"Call":1}}]})"),
                    ValidationError);
}

TEST_CASE("scan_sources: java imports resolve to scanned files") {
    testutil::TempDir dir("java");
    dir.write("src/a/A.java", "package a;\nimport b.B;\npublic class A {}\n");
    dir.write("src/b/B.java", "package b;\npublic class B {}\n");
    const auto g = scan_sources(dir.path().string(), LanguageProfile::JavaImports);
    REQUIRE(g.entity_count() == 2);
    const int a = g.entity_by_path("src/a/A.java");
    const int b = g.entity_by_path("src/b/B.java");
    CHECK(g.weight(a, b) == doctest::Approx(1.0));
    CHECK(g.weight(b, a) == doctest::Approx(0.0));
}

TEST_CASE("scan_sources: duplicate imports count once") {
    testutil::TempDir dir("javadup");
    dir.write("A.java", "import b.B;\nimport b.B;\nclass A {}\n");
    dir.write("b/B.java", "package b;\nclass B {}\n");
    const auto g = scan_sources(dir.path().string(), LanguageProfile::JavaImports);
    CHECK(g.weight(g.entity_by_path("A.java"), g.entity_by_path("b/B.java")) ==
          doctest::Approx(1.0));
}

TEST_CASE("scan_sources: static imports and package-less files resolve") {
    testutil::TempDir dir("javastatic");
    dir.write("Main.java", "import util.Helper;\nimport static util.Helper;\nclass Main {}\n");
    dir.write("util/Helper.java", "package util;\nclass Helper {}\n");
    const auto g = scan_sources(dir.path().string(), LanguageProfile::JavaImports);
    // Both spellings reference the same file: set semantics, weight 1.
    CHECK(g.weight(g.entity_by_path("Main.java"), g.entity_by_path("util/Helper.java")) ==
          doctest::Approx(1.0));
}

TEST_CASE("scan_sources: wildcard imports stay unresolved") {
    testutil::TempDir dir("javawild");
    dir.write("Main.java", "import util.*;\nclass Main {}\n");
    dir.write("util/Helper.java", "package util;\nclass Helper {}\n");
    CHECK(scan_sources(dir.path().string(), LanguageProfile::JavaImports).edges().empty());
}

TEST_CASE("scan_sources: includes with directory components match by basename") {
    testutil::TempDir dir("cdir");
    dir.write("app/main.c", "#include \"core/util.h\"\n");
    dir.write("core/util.h", "\n");
    const auto g = scan_sources(dir.path().string(), LanguageProfile::CIncludes);
    CHECK(g.weight(g.entity_by_path("app/main.c"), g.entity_by_path("core/util.h")) ==
          doctest::Approx(1.0));
}

TEST_CASE("scan_sources: commented-out imports are ignored") {
    testutil::TempDir dir("javacomment");
    dir.write("A.java", "// import b.B;\n/* import b.B; */\nclass A {}\n");
    dir.write("b/B.java", "package b;\nclass B {}\n");
    const auto g = scan_sources(dir.path().string(), LanguageProfile::JavaImports);
    CHECK(g.edges().empty());
}

TEST_CASE("scan_sources: quoted include resolves to the scanned header") {
    testutil::TempDir dir("c");
    dir.write("m.c", "#include \"m.h\"\n#include <stdio.h>\nint main() { return 0; }\n");
    dir.write("m.h", "#pragma once\n");
    const auto g = scan_sources(dir.path().string(), LanguageProfile::CIncludes);
    CHECK(g.weight(g.entity_by_path("m.c"), g.entity_by_path("m.h")) == doctest::Approx(1.0));
}

TEST_CASE("scan_sources: include resolution prefers the nearest path") {
    testutil::TempDir dir("cnear");
    dir.write("sub/m.c", "#include \"util.h\"\n");
    dir.write("sub/util.h", "\n");
    dir.write("other/util.h", "\n");
    const auto g = scan_sources(dir.path().string(), LanguageProfile::CIncludes);
    CHECK(g.weight(g.entity_by_path("sub/m.c"), g.entity_by_path("sub/util.h")) ==
          doctest::Approx(1.0));
    CHECK(g.weight(g.entity_by_path("sub/m.c"), g.entity_by_path("other/util.h")) ==
          doctest::Approx(0.0));
}

TEST_CASE("scan_sources: zero matching files is an empty-graph error") {
    testutil::TempDir dir("empty");
    dir.write("notes.txt", "nothing\n");
    CHECK_THROWS_WITH_AS(scan_sources(dir.path().string(), LanguageProfile::JavaImports),
                         doctest::Contains("empty graph"), ValidationError);
}

TEST_CASE("scan_sources: missing root directory is an I/O error") {
    CHECK_THROWS_AS(scan_sources("/nonexistent/pairsmell-root", LanguageProfile::CIncludes),
                    IoError);
}

TEST_CASE("scan_sources: exclude globs drop files") {
    testutil::TempDir dir("glob");
    dir.write("src/A.java", "class A {}\n");
    dir.write("test/ATest.java", "class ATest {}\n");
    ScanOptions opts;
    opts.exclude_globs = {"test/*"};
    const auto g = scan_sources(dir.path().string(), LanguageProfile::JavaImports, opts);
    CHECK(g.entity_count() == 1);
    CHECK(g.entities()[0].path == "src/A.java");
}

TEST_CASE("feature_vectors: single edge splits into out and in dimensions") {
    const auto g = testutil::make_graph(2, {{0, 1, 3}});
    const auto vecs = feature_vectors(g);
    REQUIRE(vecs.size() == 2);
    CHECK(vecs[0] == SparseVec{{1, 3.0}});      // outgoing to entity 1
    CHECK(vecs[1] == SparseVec{{2, 3.0}});      // incoming from entity 0 (dim n+0)
}

TEST_CASE("feature_vectors: isolated entity is all-zero") {
    const auto g = testutil::make_graph(3, {{0, 1, 1}});
    CHECK(feature_vectors(g)[2].empty());
}

TEST_CASE("feature_vectors: symmetric edges mirror and avoid own dimensions") {
    const auto g = testutil::make_graph(2, {{0, 1, 1}, {1, 0, 1}});
    const auto vecs = feature_vectors(g);
    CHECK(vecs[0] == SparseVec{{1, 1.0}, {3, 1.0}});
    CHECK(vecs[1] == SparseVec{{0, 1.0}, {2, 1.0}});
    for (int i = 0; i < 2; ++i)
        for (const auto& [dim, _] : vecs[i]) {
            CHECK(dim != i);
            CHECK(dim != 2 + i);
        }
}

TEST_CASE("glob_match basics") {
    CHECK(testutil::make_graph(1, {}).entity_count() == 1);
    CHECK(glob_match("*.java", "A.java"));
    CHECK(glob_match("src/*/A.java", "src/x/A.java"));
    CHECK(!glob_match("src/*.java", "other/A.java"));
    CHECK(glob_match("*", "anything/at/all.c"));
    CHECK(glob_match("a?c", "abc"));
}
