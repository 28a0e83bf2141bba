import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from catalog.generator import EnumerationSpec, all_graphs
from cores.exact_core import (_count_maximum_matchings, char_poly, matching_info, poly_multiply,
                              poly_power, product_nonzero_eigenvalues_abs, rank_exact,
                              tree_max_matching_count)
from cores.graph_core import Graph
from families.constructors import complete_graph, cycle_graph, named_small_graph, path_graph
from graph_helpers import from_networkx, graphs
from utils.errors import (CapacityError, ExactArithmeticCapacityError, InputError,
                          UndefinedProductError)


class TestCharPoly:
    def test_triangle(self):
        assert char_poly(complete_graph(3)).coeffs == [-2, -3, 0, 1]

    def test_path_on_four_vertices(self):
        assert char_poly(path_graph(4)).coeffs == [1, 0, -3, 0, 1]

    def test_h1_factorisation(self):
        # λ^2 (λ^4 - 6λ^2 - 2λ + 5)
        poly = char_poly(named_small_graph("H1"))
        assert poly.coeffs == [0, 0, 5, -2, -6, 0, 1]
        assert poly.multiplicity_of_zero == 2
        assert poly.rank == 4
        assert poly.a_r_abs == 5

    def test_empty_graph(self):
        poly = char_poly(Graph.empty(3))
        assert poly.coeffs == [0, 0, 0, 1]
        assert poly.rank == 0

    @settings(max_examples=50, deadline=None)
    @given(graphs(min_n=1, max_n=8))
    def test_matches_numpy_poly(self, g):
        expected = [int(round(c)) for c in reversed(np.poly(g.adjacency_matrix()))]
        assert char_poly(g).coeffs == expected

    def test_size_guard(self):
        with pytest.raises(ExactArithmeticCapacityError):
            char_poly(Graph.empty(41))

    def test_poly_helpers(self):
        assert poly_multiply([1, 1], [-1, 1]) == [-1, 0, 1]
        assert poly_power([1, 1], 3) == [1, 3, 3, 1]
        assert poly_power([5, 7], 0) == [1]


class TestRank:
    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=10))
    def test_matches_numpy_rank(self, g):
        expected = int(np.linalg.matrix_rank(g.adjacency_matrix())) if g.n else 0
        assert rank_exact(g) == expected
        assert char_poly(g).rank == expected

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(2, 9))
    def test_low_coefficients_and_rank_on_all_graphs(self, n):
        for g in all_graphs(EnumerationSpec(n=n)):
            poly = char_poly(g)
            assert poly.coeffs[n] == 1
            assert poly.coeffs[n - 1] == 0
            assert poly.coeffs[n - 2] == -g.m
            assert rank_exact(g) == poly.rank == n - poly.multiplicity_of_zero

    def test_cycles(self):
        assert rank_exact(cycle_graph(4)) == 2
        assert rank_exact(cycle_graph(5)) == 5
        assert rank_exact(cycle_graph(8)) == 6


class TestProduct:
    def test_triangle_product(self):
        assert product_nonzero_eigenvalues_abs(complete_graph(3)) == 2

    def test_path_on_five_vertices(self):
        # собственные значения ±√3, ±1, 0
        assert product_nonzero_eigenvalues_abs(path_graph(5)) == 3

    def test_edgeless_is_undefined(self):
        with pytest.raises(UndefinedProductError):
            product_nonzero_eigenvalues_abs(Graph.empty(4))


class TestMatchings:
    def test_small_graphs(self):
        info = matching_info(complete_graph(4))
        assert (info.max_size, info.max_count, info.has_perfect) == (2, 3, True)
        info = matching_info(cycle_graph(5))
        assert (info.max_size, info.max_count, info.has_perfect) == (2, 5, False)
        info = matching_info(path_graph(5))
        assert (info.max_size, info.max_count, info.has_perfect) == (2, 3, False)
        assert tree_max_matching_count(path_graph(3)) == 2

    def test_tree_dp_requires_tree(self):
        with pytest.raises(InputError):
            tree_max_matching_count(cycle_graph(4))

    def test_non_tree_size_guard(self):
        with pytest.raises(CapacityError):
            matching_info(cycle_graph(17))

    @pytest.mark.parametrize("n", range(2, 11))
    def test_tree_dp_agrees_with_memo_and_eigenvalue_product(self, n):
        for tree in nx.nonisomorphic_trees(n):
            g = from_networkx(tree)
            dp = tree_max_matching_count(g)
            assert dp == _count_maximum_matchings(g)[1]
            assert dp == char_poly(g).a_r_abs
