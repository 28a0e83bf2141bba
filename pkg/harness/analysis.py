import math
from typing import Optional

from cores.coloring_core import NordhausGaddumResult, is_proper_coloring
from cores.exact_core import MatchingInfo
from cores.graph_core import Graph
from cores.spectrum_core import energy_identity_gap
from families.recognizers import classify
from harness.checks import CHECKS, run_check
from harness.models import AnalysisReport
from harness.profile import GraphProfile
from utils.config import get_limits, get_tolerances
from utils.errors import CapacityError, ConsistencyError
from utils.logger import get_harness_logger, log_execution


def _consistency(p: GraphProfile):
    """Перекрестные проверки: ранг, тождество энергии, |a_r|, раскраски"""
    tol = get_tolerances()
    numeric_rank = p.spectrum.nonzero_count()
    if numeric_rank != p.rank:
        raise ConsistencyError(
            f"exact rank {p.rank} != numeric nonzero count {numeric_rank} for {p.graph6}")
    gap = energy_identity_gap(p.spectrum)
    if gap > tol.inequality_slack:
        raise ConsistencyError(f"energy identity gap {gap:.3e} for {p.graph6}")
    if p.n <= get_limits().max_charpoly_n:
        if p.char_poly.rank != p.rank:
            raise ConsistencyError(
                f"char_poly rank {p.char_poly.rank} != Bareiss rank {p.rank} for {p.graph6}")
        if p.graph.m > 0:
            product = math.prod(abs(v) for v in p.spectrum.eigenvalues
                                if abs(v) > tol.zero_eigenvalue)
            if abs(product - p.char_poly.a_r_abs) > 1e-6 * max(1.0, p.char_poly.a_r_abs):
                raise ConsistencyError(
                    f"|a_r|={p.char_poly.a_r_abs} but eigenvalue product {product:.9f} for {p.graph6}")
    for coloring, graph in ((p.coloring, p.graph), (p.complement_coloring, p.complement)):
        if graph.n and (not is_proper_coloring(graph, coloring.witness)
                        or len(set(coloring.witness)) != coloring.chi
                        or coloring.chi < coloring.lower_bound_clique):
            raise ConsistencyError(f"coloring witness does not certify chi for {p.graph6}")


@log_execution(get_harness_logger, "analyze")
def analyze(g: Graph) -> AnalysisReport:
    """Полный отчет по графу; несогласованность величин - ConsistencyError"""
    p = GraphProfile(g)
    _consistency(p)

    a_r_abs: Optional[int] = None
    if g.m > 0 and g.n <= get_limits().max_charpoly_n:
        a_r_abs = p.char_poly.a_r_abs
    matching: Optional[MatchingInfo] = None
    try:
        matching = p.matching
    except CapacityError:
        matching = None

    flags = {}
    for tid in CHECKS:
        check = run_check(tid, p)
        flags[tid] = check.passed
    total = p.chi + p.chi_complement
    return AnalysisReport(
        graph6=p.graph6,
        n=g.n,
        m=g.m,
        spectrum=p.spectrum.eigenvalues,
        energy=p.spectrum.energy,
        energy_complement=p.complement_spectrum.energy,
        rank=p.rank,
        a_r_abs=a_r_abs,
        chi=p.chi,
        chi_complement=p.chi_complement,
        positive_count=p.spectrum.positive_count,
        matching=matching,
        nordhaus_gaddum=NordhausGaddumResult(chi=p.chi, chi_bar=p.chi_complement, sum=total,
                                             attains_equality=total == g.n + 1),
        classification=classify(g),
        theorem_flags=flags,
    )
