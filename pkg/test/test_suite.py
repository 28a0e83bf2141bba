import json
from io import StringIO

import pytest

from catalog.graph6 import parse_graph6
from families.recognizers import is_corollary_excluded
from harness import checks
from harness.checks import SpotBound
from harness.models import THEOREM_IDS
from harness.suite import SuiteSource, _init_worker, iter_source_graphs, run_suite
from utils.config import ToolkitConfig, get_config
from utils.logger import get_harness_logger, setup_logging


def _lines(stream: StringIO):
    return [json.loads(line) for line in stream.getvalue().splitlines()]


def test_enumeration_source_counts():
    assert sum(1 for _ in iter_source_graphs(SuiteSource(max_n=4, constructed=False))) == 18
    # B_3..B_12, десять графов с оценками и деревья на 5..10 вершинах
    assert sum(1 for _ in iter_source_graphs(SuiteSource(max_n=4))) == 18 + 10 + 10 + 196


def test_stream_layout_and_counts():
    out = StringIO()
    summary = run_suite(["T1", "T13"], SuiteSource(max_n=4, constructed=False), stream=out)
    records = _lines(out)
    assert records[0]["kind"] == "header"
    assert records[0]["theorems"] == ["T1", "T13"]
    assert records[0]["tolerances"]["inequality_slack"] == 1e-6
    assert len(records) == 1 + 36
    assert [r["theorem_id"] for r in records[1:3]] == ["T1", "T13"]
    assert summary.graphs == 18
    assert summary.checked == 36
    assert summary.per_theorem["T13"].checked == 18
    assert summary.ok


def test_failures_only_stream():
    out = StringIO()
    summary = run_suite(["T1"], SuiteSource(max_n=3, constructed=False), stream=out,
                        failures_only=True)
    assert len(out.getvalue().splitlines()) == 1
    assert summary.passed == summary.checked == 7


def test_parallel_run_preserves_order():
    source = SuiteSource(max_n=5, constructed=False)
    serial, parallel = StringIO(), StringIO()
    first = run_suite(["T1", "T8", "T11"], source, stream=serial, jobs=1)
    second = run_suite(["T1", "T8", "T11"], source, stream=parallel, jobs=2)
    assert serial.getvalue() == parallel.getvalue()
    assert first == second


def test_catalog_and_family_sources(tmp_path):
    path = tmp_path / "small.g6"
    path.write_text(">>graph6<<Bw\n# треугольник и цикл\n\nDhc\n", encoding="utf-8")
    source = SuiteSource(catalog=str(path), families=["family:B:4"])
    summary = run_suite(["T14"], source)
    assert summary.graphs == 3
    assert summary.per_theorem["T14"].passed == 1
    assert summary.hypothesis_skipped == 2
    assert "family:B:4" in source.label()


def test_counterexample_is_recorded(monkeypatch):
    monkeypatch.setitem(checks._SPOT_BOUNDS, "K_{1,3}", [SpotBound("energy", 0, ">", 3.5)])
    summary = run_suite(["T15"], SuiteSource(families=["family:S:3"]))
    assert not summary.ok
    assert summary.failed == 1
    assert summary.counterexamples == [{"theorem_id": "T15", "graph6": "Cs"}]


def test_complement_energy_shortfall_is_listed():
    # E(K_{1,3}) + E(K_3 ∪ K_1) = 2√3 + 4 < 8
    summary = run_suite(["T12"], SuiteSource(families=["family:S:3", "family:C:5"]))
    assert summary.per_theorem["T12"].hypothesis_skipped == 1
    assert summary.t12_empirical_exceptions == ["Cs"]
    assert summary.ok


@pytest.mark.slow
def test_exhaustive_run_up_to_eight_vertices():
    summary = run_suite(THEOREM_IDS, SuiteSource(max_n=8, constructed=False), jobs=2)
    assert summary.graphs == 1 + 2 + 4 + 11 + 34 + 156 + 1044 + 12346
    assert summary.failed == 0
    assert summary.counterexamples == []
    assert "Cs" in summary.t12_empirical_exceptions
    for graph6 in summary.t12_empirical_exceptions:
        assert is_corollary_excluded(parse_graph6(graph6)), graph6


def test_worker_initializer_sets_up_json_logging(tmp_path):
    _init_worker(ToolkitConfig(log_level="INFO", log_dir=str(tmp_path)))
    try:
        get_harness_logger().log_system_event("worker_ready", "harness", "worker started")
        records = [json.loads(line) for f in tmp_path.glob("graph_energy_json_*.log")
                   for line in f.read_text(encoding="utf-8").splitlines()]
        assert records[-1]["event_type"] == "worker_ready"
        assert get_config().log_dir == str(tmp_path)
    finally:
        setup_logging("WARNING", None)
