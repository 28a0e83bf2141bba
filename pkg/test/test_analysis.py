import math

import pytest

from catalog.graph6 import parse_graph6
from cores.graph_core import Graph
from families.constructors import cycle_graph, path_graph, petersen_graph
from harness import analysis
from harness.analysis import analyze
from harness.models import THEOREM_IDS
from utils.config import Limits, ToolkitConfig, configure
from utils.errors import CapacityError, ConsistencyError


def test_cycle_report():
    report = analyze(cycle_graph(5))
    assert report.graph6 == "Dhc"
    assert report.energy == pytest.approx(2 + 4 * math.cos(math.pi / 5) + 4 * math.cos(2 * math.pi / 5))
    assert report.energy_complement == pytest.approx(report.energy)
    assert report.rank == 5
    assert report.a_r_abs == 2
    assert (report.chi, report.chi_complement) == (3, 3)
    assert report.positive_count == 3
    assert report.matching.max_size == 2 and report.matching.max_count == 5
    assert report.nordhaus_gaddum.attains_equality
    assert report.classification.finck_type == "b"
    assert list(report.theorem_flags) == THEOREM_IDS
    assert report.theorem_flags["T3"] is None
    assert report.theorem_flags["T9"] is True


def test_edgeless_report():
    report = analyze(Graph.empty(3))
    assert report.a_r_abs is None
    assert report.energy == 0.0
    assert report.matching.max_size == 0
    assert report.classification.theorem_ab_exception.isolated == 2


def test_tree_report():
    report = analyze(path_graph(5))
    assert report.rank == 4
    assert report.matching.max_count == 3
    assert report.theorem_flags["T4"] is True
    assert report.theorem_flags["T5"] is True


def test_report_serialization():
    payload = analyze(parse_graph6("Cs")).model_dump()
    assert payload["kind"] == "analysis"
    assert payload["classification"]["theorem_ab_exception"]["family"] == "B_n"


def test_matching_over_capacity_is_omitted():
    configure(ToolkitConfig(limits=Limits(max_matching_n=4)))
    assert analyze(cycle_graph(5)).matching is None


def test_inconsistent_quantities_raise(monkeypatch):
    monkeypatch.setattr(analysis, "energy_identity_gap", lambda spectrum: 1.0)
    with pytest.raises(ConsistencyError):
        analyze(cycle_graph(5))


def test_coloring_budget_propagates():
    configure(ToolkitConfig(limits=Limits(coloring_node_budget=1)))
    with pytest.raises(CapacityError):
        analyze(petersen_graph())
