from functools import cached_property
from typing import Optional

from catalog.graph6 import emit_graph6
from cores.canonical import canonical_labeling
from cores.coloring_core import ColoringResult, chromatic_number
from cores.exact_core import CharPoly, MatchingInfo, char_poly, matching_info, rank_exact
from cores.graph_core import Graph, complement, is_bipartite, is_connected, is_tree
from cores.spectrum_core import SpectrumResult, eigenvalues
from families.recognizers import (FinckWitness, TheoremAbException, classify_theorem_ab,
                                  finck_type_a, finck_type_b)


class GraphProfile:
    """Кэш величин одного графа, общий для всех проверок"""

    def __init__(self, graph: Graph):
        self.graph = graph

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def graph6(self) -> str:
        return emit_graph6(self.graph)

    @cached_property
    def certificate(self) -> int:
        return canonical_labeling(self.graph)[1]

    @cached_property
    def spectrum(self) -> SpectrumResult:
        return eigenvalues(self.graph)

    @cached_property
    def complement(self) -> Graph:
        return complement(self.graph)

    @cached_property
    def complement_spectrum(self) -> SpectrumResult:
        return eigenvalues(self.complement)

    @cached_property
    def char_poly(self) -> CharPoly:
        return char_poly(self.graph)

    @cached_property
    def rank(self) -> int:
        return rank_exact(self.graph)

    @cached_property
    def coloring(self) -> ColoringResult:
        return chromatic_number(self.graph)

    @cached_property
    def complement_coloring(self) -> ColoringResult:
        return chromatic_number(self.complement)

    @property
    def chi(self) -> int:
        return self.coloring.chi

    @property
    def chi_complement(self) -> int:
        return self.complement_coloring.chi

    @cached_property
    def theorem_ab_exception(self) -> Optional[TheoremAbException]:
        return classify_theorem_ab(self.graph)

    @cached_property
    def finck(self) -> Optional[FinckWitness]:
        return finck_type_a(self.graph) or finck_type_b(self.graph)

    @cached_property
    def complement_finck(self) -> Optional[FinckWitness]:
        return finck_type_a(self.complement) or finck_type_b(self.complement)

    @cached_property
    def matching(self) -> MatchingInfo:
        return matching_info(self.graph)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.graph)

    @cached_property
    def tree(self) -> bool:
        return is_tree(self.graph)
