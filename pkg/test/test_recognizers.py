import pytest
from hypothesis import given, settings

from catalog.generator import EnumerationSpec, all_graphs
from catalog.graph6 import emit_graph6
from cores.coloring_core import nordhaus_gaddum
from cores.graph_core import Graph, complement, disjoint_union
from families.constructors import (a_family, b_family, complete_graph, complete_multipartite,
                                   cycle_graph, named_small_graph, path_graph, petersen_graph, star)
from families.recognizers import (classify, classify_theorem_ab, finck_type_a, finck_type_b,
                                  is_complete_multipartite, is_corollary_excluded,
                                  is_matching_union, is_union_of_complete_graphs,
                                  recognize_a_family, recognize_b_family, verify_finck_a,
                                  verify_finck_b)
from graph_helpers import graphs


def test_union_of_cliques():
    assert is_union_of_complete_graphs(disjoint_union(complete_graph(3), complete_graph(2)))
    assert is_union_of_complete_graphs(Graph.empty(4))
    assert not is_union_of_complete_graphs(path_graph(3))


def test_complete_multipartite_parts():
    assert sorted(is_complete_multipartite(complete_multipartite([1, 1, 3]))) == [1, 1, 3]
    assert sorted(is_complete_multipartite(cycle_graph(4))) == [2, 2]
    assert is_complete_multipartite(complete_graph(4)) == [1, 1, 1, 1]
    assert is_complete_multipartite(path_graph(4)) is None
    assert is_complete_multipartite(Graph.empty(0)) is None
    assert is_complete_multipartite(Graph.empty(3)) is None
    assert is_complete_multipartite(Graph.empty(1)) == [1]


def test_family_recognizers():
    assert recognize_a_family(a_family(6, 2)) == (6, 2)
    assert recognize_a_family(a_family(5, 4)) == (5, 4)
    assert recognize_a_family(complete_graph(5)) is None
    assert recognize_a_family(cycle_graph(5)) is None
    assert recognize_b_family(b_family(5)) == 5
    assert recognize_b_family(path_graph(3)) == 1
    assert recognize_b_family(path_graph(4)) is None


@pytest.mark.parametrize("g, family, params, isolated", [
    (complete_graph(4), "K_n", [4], 0),
    (b_family(4), "B_n", [4], 0),
    (b_family(2), "B_n", [2], 0),
    (a_family(4, 1), "A_nt", [4, 1], 0),
    (a_family(7, 3), "A_nt", [7, 3], 0),
    (a_family(9, 8), "A_nt", [9, 8], 0),
    (named_small_graph("H5"), "H5", [], 0),
    (disjoint_union(complete_graph(3), Graph.empty(2)), "K_n", [3], 2),
    (Graph.empty(3), "K_n", [1], 2),
])
def test_energy_chromatic_exceptions(g, family, params, isolated):
    record = classify_theorem_ab(g)
    assert record is not None
    assert (record.family, record.params, record.isolated) == (family, params, isolated)


@pytest.mark.parametrize("g", [
    a_family(7, 4), a_family(8, 3), cycle_graph(5), petersen_graph(), path_graph(4),
    disjoint_union(complete_graph(2), complete_graph(2)), Graph.empty(0),
])
def test_not_an_exception(g):
    assert classify_theorem_ab(g) is None


def test_finck_witnesses():
    w = finck_type_a(path_graph(3))
    assert w is not None and verify_finck_a(path_graph(3), w)
    assert finck_type_a(cycle_graph(5)) is None
    w = finck_type_b(cycle_graph(5))
    assert w is not None and sorted(w.cycle) == [0, 1, 2, 3, 4]
    assert verify_finck_b(cycle_graph(5), w)
    assert finck_type_a(cycle_graph(4)) is None and finck_type_b(cycle_graph(4)) is None


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_finck_type_iff_nordhaus_gaddum_equality(g):
    record = classify(g)
    assert (record.finck_type != "none") == nordhaus_gaddum(g).attains_equality
    if record.finck_type == "a":
        assert verify_finck_a(g, record.finck_witness)
    if record.finck_type == "b":
        assert verify_finck_b(g, record.finck_witness)


def test_corollary_exclusions():
    assert is_corollary_excluded(complete_graph(4))
    assert is_corollary_excluded(Graph.empty(4))
    assert is_corollary_excluded(a_family(5, 4))
    assert is_corollary_excluded(a_family(3, 1))
    assert is_corollary_excluded(star(3))
    assert not is_corollary_excluded(cycle_graph(5))
    assert not is_corollary_excluded(petersen_graph())


def test_matching_union():
    assert is_matching_union(Graph.from_edges(5, [(0, 1), (2, 3)]))
    assert not is_matching_union(path_graph(3))


def test_classification_record():
    record = classify(cycle_graph(5))
    assert record.graph6 == "Dhc"
    assert record.finck_type == "b"
    assert not record.is_union_of_cliques
    assert record.multipartite_parts is None
    assert record.theorem_ab_exception is None
    assert classify(complete_graph(3)).model_dump()["theorem_ab_exception"]["family"] == "K_n"


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 9))
def test_finck_types_closed_under_complement(n):
    for g in all_graphs(EnumerationSpec(n=n)):
        co = complement(g)
        assert (finck_type_a(g) is None) == (finck_type_a(co) is None), emit_graph6(g)
        assert (finck_type_b(g) is None) == (finck_type_b(co) is None), emit_graph6(g)
        finck = classify(g).finck_type != "none"
        assert finck == nordhaus_gaddum(g).attains_equality, emit_graph6(g)
