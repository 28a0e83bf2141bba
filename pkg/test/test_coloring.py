import pytest
from hypothesis import given, settings

from cores.coloring_core import (brute_force_chromatic_number, check_wilf, chromatic_number,
                                 greedy_clique, greedy_coloring, is_proper_coloring,
                                 nordhaus_gaddum)
from cores.graph_core import Graph, is_clique
from families.constructors import (b_family, c5_join_clique, complete_graph, cycle_graph,
                                   petersen_graph, star)
from graph_helpers import graphs
from utils.config import Limits, ToolkitConfig, configure
from utils.errors import CapacityError


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_matches_brute_force(g):
    result = chromatic_number(g)
    assert result.chi == brute_force_chromatic_number(g)
    if g.n:
        assert is_proper_coloring(g, result.witness)
        assert len(set(result.witness)) == result.chi
        assert result.lower_bound_clique <= result.chi


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_greedy_bounds(g):
    clique = greedy_clique(g)
    assert is_clique(g, clique)
    colors = greedy_coloring(g)
    assert is_proper_coloring(g, colors)
    assert len(clique) <= chromatic_number(g).chi <= max(colors) + 1


@pytest.mark.parametrize("g,chi", [
    (Graph.empty(0), 0),
    (Graph.empty(4), 1),
    (star(3), 2),
    (cycle_graph(5), 3),
    (cycle_graph(6), 2),
    (complete_graph(6), 6),
    (petersen_graph(), 3),
    (b_family(4), 4),
    (c5_join_clique(2), 5),
])
def test_known_values(g, chi):
    assert chromatic_number(g).chi == chi


def test_wilf_bound():
    assert check_wilf(cycle_graph(5))
    assert check_wilf(petersen_graph())


def test_nordhaus_gaddum_equality_for_cycle():
    result = nordhaus_gaddum(cycle_graph(5))
    assert (result.chi, result.chi_bar, result.sum) == (3, 3, 6)
    assert result.attains_equality


def test_node_budget_raises_capacity_error():
    configure(ToolkitConfig(limits=Limits(coloring_node_budget=1)))
    with pytest.raises(CapacityError):
        chromatic_number(petersen_graph())
