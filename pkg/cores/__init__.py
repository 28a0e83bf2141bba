from .graph_core import Graph, complement, induced_subgraph
from .spectrum_core import SpectrumResult, eigenvalues
from .exact_core import CharPoly, char_poly, rank_exact
from .coloring_core import ColoringResult, chromatic_number

__all__ = [
    'Graph', 'complement', 'induced_subgraph',
    'SpectrumResult', 'eigenvalues',
    'CharPoly', 'char_poly', 'rank_exact',
    'ColoringResult', 'chromatic_number',
]
