"""Smoke tests for the python bindings against known small fixtures."""

import json

import pytest

import pairsmell


def clique_graph_json():
    """Two 3-cliques joined by one edge, all files in one folder."""
    entities = [{"id": i, "path": f"core/f{i}.java"} for i in range(6)]
    edges = []
    for group in ([0, 1, 2], [3, 4, 5]):
        for a in group:
            for b in group:
                if a != b:
                    edges.append({"src": a, "dst": b, "kind": "dep", "weight": 1})
    edges.append({"src": 0, "dst": 3, "kind": "dep", "weight": 1})
    return json.dumps({"schema": "pairsmell-depgraph/1", "entities": entities, "edges": edges})


def test_graph_loading_and_export_round_trip():
    graph = pairsmell.load_canonical(clique_graph_json())
    assert graph.entity_count == 6
    assert graph.weight(0, 1) == 1.0
    again = pairsmell.load_canonical(pairsmell.export_canonical(graph))
    assert pairsmell.export_canonical(again) == pairsmell.export_canonical(graph)


def test_detect_pipeline_finds_incol():
    graph = pairsmell.load_canonical(clique_graph_json())
    result, stats = pairsmell.detect(graph, k=2)
    forms = {record.form for record in result.records}
    assert forms == {"InCol"}
    assert stats.incol_pairs == 9  # cross-clique pairs in one folder
    assert stats.insep_pairs == 0
    assert 0.0 <= stats.incol_pair_pct <= 1.0


def test_portfolio_runs_in_fixed_order():
    graph = pairsmell.load_canonical(clique_graph_json())
    solutions = pairsmell.run_portfolio(graph, k=2)
    assert [s.tool for s in solutions] == ["wca", "limbo", "acdc", "fca"]
    matrix = pairsmell.build_coassociation(solutions)
    assert matrix.value(0, 3) == 0.0  # cross-clique pair separated by all
    assert matrix.value(0, 1) == 1.0


def test_uenm_similarity_formula():
    assert pairsmell.uenm_similarity([(1, 1.0), (2, 1.0)], [(2, 1.0), (3, 1.0)]) == pytest.approx(
        0.2
    )


def test_cochange_metrics():
    log = (
        "@h1|ann@x|400\n1\t0\ta.java\n1\t0\tb.java\n"
        "@h2|ann@x|300\n1\t0\ta.java\n"
        "@h3|bob@x|200\n1\t0\tb.java\n"
    )
    records = pairsmell.ingest_log(log)
    assert len(records) == 3
    graph = pairsmell.load_canonical(
        json.dumps(
            {
                "schema": "pairsmell-depgraph/1",
                "entities": [{"id": 0, "path": "a.java"}, {"id": 1, "path": "b.java"}],
                "edges": [],
            }
        )
    )
    history = pairsmell.window(records, 10, graph)
    assert pairsmell.cor(history, 0, 1) == pytest.approx(0.5)  # |2|,|2| overlap 1
    assert pairsmell.dor(history, 0, 1) == pytest.approx(2 * 1 / 3)


def test_k_ratio_direction():
    log = "".join(
        f"@h{k}|dev@x|{1000000 - k}\n1\t0\ts0.java\n1\t0\ts1.java\n"
        + ("1\t0\tb0.java\n" if k < 10 else "1\t0\tb1.java\n")
        for k in range(20)
    )
    graph = pairsmell.load_canonical(
        json.dumps(
            {
                "schema": "pairsmell-depgraph/1",
                "entities": [
                    {"id": i, "path": p}
                    for i, p in enumerate(["b0.java", "b1.java", "s0.java", "s1.java"])
                ],
                "edges": [],
            }
        )
    )
    history = pairsmell.window(pairsmell.ingest_log(log), 20, graph)
    report = pairsmell.k_ratio(history, "COR", [(2, 3)], [(0, 1)])
    assert report.metric == "COR"
    assert report.smelly_mean == pytest.approx(1.0)
    assert report.baseline_mean == pytest.approx(0.0)
    assert report.k is None  # zero baseline leaves the ratio undefined
    assert not report.no_data


def test_fit_trend_classifications():
    increasing = pairsmell.fit_trend([0.01 * i for i in range(25)])
    assert increasing.classification == "increasing"
    assert increasing.slope == pytest.approx(0.01, abs=1e-9)
    stable = pairsmell.fit_trend([0.25] * 10)
    assert stable.classification == "stable"


def test_scan_sources(tmp_path):
    (tmp_path / "b").mkdir()
    (tmp_path / "A.java").write_text("import b.B;\nclass A {}\n")
    (tmp_path / "b" / "B.java").write_text("package b;\nclass B {}\n")
    graph = pairsmell.scan_sources(str(tmp_path), "java-imports")
    a = graph.entity_by_path("A.java")
    b = graph.entity_by_path("b/B.java")
    assert graph.weight(a, b) == 1.0


def test_validation_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        pairsmell.load_canonical("{}")
    graph = pairsmell.load_canonical(clique_graph_json())
    with pytest.raises(ValueError):
        pairsmell.wca(graph, 0)
