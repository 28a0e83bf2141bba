"""Проверки утверждений об энергии графа.

Каждая проверка получает GraphProfile и возвращает TheoremCheck. Гипотеза
вычисляется внутри проверки; если она не выполнена, статус "skipped".
Нестрогие неравенства проверяются с допуском inequality_slack, строгие
обязаны выполняться с запасом не меньше strict_margin.
"""

import math
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple, Union

from cores.canonical import canonical_labeling
from cores.exact_core import poly_multiply, poly_power
from cores.graph_core import Graph
from cores.spectrum_core import top_k_eigenvalue_sum
from families.constructors import spot_graphs
from families.recognizers import (is_corollary_excluded, is_matching_union,
                                  is_union_of_complete_graphs, recognize_b_family)
from harness.models import THEOREM_IDS, TheoremCheck
from harness.profile import GraphProfile
from utils.config import get_tolerances
from utils.errors import InputError, ToolkitError
from utils.logger import get_harness_logger


class Verdict(NamedTuple):
    hypothesis_holds: bool
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    passed: Optional[bool] = None
    detail: str = ""


SKIP = Verdict(False)


def _at_least(lhs: float, rhs: float) -> bool:
    return lhs >= rhs - get_tolerances().inequality_slack


def _strictly_less(lhs: float, rhs: float) -> bool:
    return lhs < rhs - get_tolerances().strict_margin


def _strictly_greater(lhs: float, rhs: float) -> bool:
    return lhs > rhs + get_tolerances().strict_margin


def _is_small_star(g: Graph) -> bool:
    # K_{1,i}, 1 <= i <= 3
    return 2 <= g.n <= 4 and g.m == g.n - 1 and max(g.degrees()) == g.n - 1


def check_energy_rank(p: GraphProfile) -> Verdict:
    """E(G) >= rank(G); равенство только для (r/2)K_2 ∪ (n-r)K_1"""
    energy, rank = p.spectrum.energy, p.rank
    equal = abs(energy - rank) <= get_tolerances().inequality_slack
    matching = is_matching_union(p.graph)
    passed = _at_least(energy, rank) and equal == matching
    return Verdict(True, energy, float(rank), passed,
                   f"equality={equal} matching_union={matching}")


def check_energy_at_least_four(p: GraphProfile) -> Verdict:
    g = p.graph
    if g.n < 2 or not p.connected or _is_small_star(g):
        return SKIP
    return Verdict(True, p.spectrum.energy, 4.0, _at_least(p.spectrum.energy, 4.0))


def check_bipartite_rank_bound(p: GraphProfile) -> Verdict:
    """E >= sqrt((r+1)^2 - 5) и промежуточная оценка sqrt(4m + r(r-2)k^(2/r))"""
    g = p.graph
    if g.m == 0 or not p.connected or not p.bipartite:
        return SKIP
    r = p.rank
    k = p.char_poly.a_r_abs
    energy = p.spectrum.energy
    inner = math.sqrt(4 * g.m + r * (r - 2) * k ** (2.0 / r))
    outer = math.sqrt((r + 1) ** 2 - 5)
    passed = _at_least(energy, inner) and _at_least(inner, outer)
    return Verdict(True, energy, outer, passed, f"rank={r} k={k} inner_bound={inner:.9f}")


def check_tree_two_matchings(p: GraphProfile) -> Verdict:
    """Дерево без совершенного паросочетания: не меньше двух максимальных паросочетаний"""
    if p.n < 2 or not p.tree or p.matching.has_perfect:
        return SKIP
    count = p.matching.max_count
    return Verdict(True, float(count), 2.0, count >= 2, f"max_matching={p.matching.max_size}")


def check_tree_matching_product(p: GraphProfile) -> Verdict:
    """Число максимальных паросочетаний дерева = |a_r| (точное равенство целых)"""
    if p.n < 2 or not p.tree:
        return SKIP
    count = p.matching.max_count
    product = p.char_poly.a_r_abs
    return Verdict(True, float(count), float(product), count == product)


def check_bipartite_rank_plus_one(p: GraphProfile) -> Verdict:
    if p.n < 4 or not p.connected or not p.bipartite or p.rank >= p.n:
        return SKIP
    energy = p.spectrum.energy
    return Verdict(True, energy, 1.0 + p.rank, _at_least(energy, 1.0 + p.rank))


def check_top_eigenvalue_sum(p: GraphProfile) -> Verdict:
    """n - χ(Ḡ) <= λ_1 + ... + λ_χ(Ḡ)"""
    if p.n == 0:
        return SKIP
    k = p.chi_complement
    total = top_k_eigenvalue_sum(p.graph, k, p.spectrum)
    rhs = float(p.n - k)
    return Verdict(True, total, rhs, _at_least(total, rhs), f"chi_complement={k}")


def check_energy_complement_chromatic(p: GraphProfile) -> Verdict:
    """E(G) >= 2(n - χ(Ḡ))"""
    if p.n == 0:
        return SKIP
    rhs = 2.0 * (p.n - p.chi_complement)
    return Verdict(True, p.spectrum.energy, rhs, _at_least(p.spectrum.energy, rhs))


def check_nordhaus_gaddum(p: GraphProfile) -> Verdict:
    """χ + χ̄ <= n + 1; равенство ⟺ тип Финка (a) или (b); замкнутость относительно дополнения"""
    if p.n == 0:
        return SKIP
    total = p.chi + p.chi_complement
    equality = total == p.n + 1
    finck = p.finck is not None
    closed = finck == (p.complement_finck is not None)
    passed = total <= p.n + 1 and equality == finck and closed
    kind = p.finck.kind if p.finck else "none"
    return Verdict(True, float(total), float(p.n + 1), passed,
                   f"finck_type={kind} complement_closed={closed}")


def check_wilf(p: GraphProfile) -> Verdict:
    """χ(G) <= λ_1(G) + 1"""
    if p.n == 0:
        return SKIP
    rhs = p.spectrum.largest + 1
    return Verdict(True, float(p.chi), rhs, _at_least(rhs, float(p.chi)))


def check_energy_chromatic_iff(p: GraphProfile) -> Verdict:
    """E(G) < 2χ(G) ⟺ G - изолированные вершины плюс K_n, B_n, допустимый A_{n,t} или H5"""
    energy = p.spectrum.energy
    rhs = 2.0 * p.chi
    gap = energy - rhs
    below = gap < -get_tolerances().inequality_slack
    exception = p.theorem_ab_exception
    passed = below == (exception is not None)
    tag = exception.family if exception else "none"
    return Verdict(True, energy, rhs, passed, f"gap={gap:.9f} exception={tag}")


def check_energy_sum_complement(p: GraphProfile) -> Verdict:
    """E(G) + E(Ḡ) >= 2n вне списка исключений следствия"""
    if p.n < 3 or is_corollary_excluded(p.graph):
        return SKIP
    total = p.spectrum.energy + p.complement_spectrum.energy
    return Verdict(True, total, 2.0 * p.n, _at_least(total, 2.0 * p.n))


def check_least_eigenvalue_cliques(p: GraphProfile) -> Verdict:
    """λ_min >= -1 ⟺ G - объединение полных графов"""
    if p.n == 0:
        return SKIP
    least = p.spectrum.least
    bounded = least >= -1 - get_tolerances().inequality_slack
    union = is_union_of_complete_graphs(p.graph)
    return Verdict(True, least, -1.0, bounded == union, f"union_of_cliques={union}")


def b_family_char_poly(n: int) -> List[int]:
    """λ(λ+1)^(n-2)(λ^3 + (2-n)λ^2 - (1+n)λ + 2n - 4), младшая степень первой"""
    if n < 2:
        raise InputError(f"closed form holds for n >= 2, got {n}")
    f = [2 * n - 4, -(1 + n), 2 - n, 1]
    return poly_multiply(poly_multiply([0, 1], poly_power([1, 1], n - 2)), f)


def check_b_family(p: GraphProfile) -> Verdict:
    """Характеристический многочлен B_n, E(B_n) = -2(λ_min - n + 2), λ_min > -2"""
    b = recognize_b_family(p.graph)
    if b is None or not 2 <= b <= 12:
        return SKIP
    # многочлен инвариантен относительно нумерации
    poly_ok = p.char_poly.coeffs == b_family_char_poly(b)
    least = p.spectrum.least
    identity = -2 * (least - b + 2)
    identity_ok = abs(p.spectrum.energy - identity) <= get_tolerances().inequality_slack
    above = _strictly_greater(least, -2.0)
    return Verdict(True, p.spectrum.energy, identity, poly_ok and identity_ok and above,
                   f"n={b} char_poly_match={poly_ok} least={least:.9f}")


class SpotBound(NamedTuple):
    """Оценка: kind - 'eig' (λ_index по убыванию), 'energy' или 'energy_sum' (E + Ē)"""

    kind: str
    index: int
    op: str
    value: float


_SPOT_BOUNDS: Dict[str, List[SpotBound]] = {
    "H1": [SpotBound("eig", 6, "<", -1.8), SpotBound("eig", 5, "<", -1.3)],
    "H2": [SpotBound("eig", 6, "<", -1.7), SpotBound("eig", 5, "<", -1.6)],
    "K_{1,1,3}": [SpotBound("eig", 5, "=", -2.0)],
    "H_aux": [SpotBound("eig", 5, "<", -1.74), SpotBound("eig", 4, "<", -1.27)],
    "H3": [SpotBound("eig", 5, "<", -1.39), SpotBound("eig", 6, "<", -1.61)],
    "H4": [SpotBound("eig", 5, "<", -1.3), SpotBound("eig", 6, "<", -1.7)],
    "A_{4,1}": [SpotBound("eig", 5, "<", -1.5)],
    "A_{4,2}": [SpotBound("eig", 5, "<", -1.68)],
    "B_4": [SpotBound("eig", 6, "<", -1.8)],
    "K_{1,3}": [SpotBound("energy", 0, ">", 3.4)],
    "K_{1,2}": [SpotBound("energy", 0, ">", 2.8)],
    "K_{1,1,2}": [SpotBound("energy", 0, ">", 5.0)],
    "H5": [SpotBound("energy", 0, "<", 6.0), SpotBound("energy_sum", 0, ">", 10.0)],
}


@lru_cache(maxsize=1)
def _spot_index() -> Dict[Tuple[int, int], str]:
    return {(g.n, canonical_labeling(g)[1]): name for name, g in spot_graphs().items()}


def spot_name(p: GraphProfile) -> Optional[str]:
    if p.n > 6:
        return None
    return _spot_index().get((p.n, p.certificate))


def _evaluate_bound(p: GraphProfile, bound: SpotBound) -> Tuple[float, bool, float]:
    """(значение, выполнена ли оценка, запас)"""
    if bound.kind == "eig":
        value = p.spectrum.eigenvalues[bound.index - 1]
    elif bound.kind == "energy":
        value = p.spectrum.energy
    else:
        value = p.spectrum.energy + p.complement_spectrum.energy
    if bound.op == "=":
        error = abs(value - bound.value)
        return value, error <= get_tolerances().spot_equality, -error
    if bound.op == "<":
        return value, _strictly_less(value, bound.value), bound.value - value
    return value, _strictly_greater(value, bound.value), value - bound.value


def check_spot_bounds(p: GraphProfile) -> Verdict:
    name = spot_name(p)
    if name is None:
        return SKIP
    results = [(bound, *_evaluate_bound(p, bound)) for bound in _SPOT_BOUNDS[name]]
    tightest = min(results, key=lambda item: item[3])
    bound, value = tightest[0], tightest[1]
    failed = [f"{b.kind}{b.index or ''}{b.op}{b.value}" for b, _, ok, _ in results if not ok]
    detail = f"{name}: " + ("all bounds hold" if not failed else "violated " + ", ".join(failed))
    return Verdict(True, value, bound.value, not failed, detail)


def check_combined_chromatic(p: GraphProfile) -> Verdict:
    """E(G) >= 2·max(χ(G), n - χ(Ḡ)) для графов вне списка исключений"""
    if p.n == 0 or p.theorem_ab_exception is not None:
        return SKIP
    rhs = 2.0 * max(p.chi, p.n - p.chi_complement)
    return Verdict(True, p.spectrum.energy, rhs, _at_least(p.spectrum.energy, rhs))


CHECKS: Dict[str, Callable[[GraphProfile], Verdict]] = {
    "T1": check_energy_rank,
    "T2": check_energy_at_least_four,
    "T3": check_bipartite_rank_bound,
    "T4": check_tree_two_matchings,
    "T5": check_tree_matching_product,
    "T6": check_bipartite_rank_plus_one,
    "T7": check_top_eigenvalue_sum,
    "T8": check_energy_complement_chromatic,
    "T9": check_nordhaus_gaddum,
    "T10": check_wilf,
    "T11": check_energy_chromatic_iff,
    "T12": check_energy_sum_complement,
    "T13": check_least_eigenvalue_cliques,
    "T14": check_b_family,
    "T15": check_spot_bounds,
    "T16": check_combined_chromatic,
}


def parse_theorem_ids(text: str) -> List[str]:
    """'all' или список через запятую: 'T1,T8,t11'"""
    if text.strip().lower() == "all":
        return list(THEOREM_IDS)
    ids = []
    for part in text.split(","):
        tid = part.strip().upper()
        if not tid:
            continue
        if tid not in CHECKS:
            raise InputError(f"unknown theorem id {part.strip()!r}; expected T1..T16 or 'all'")
        if tid not in ids:
            ids.append(tid)
    if not ids:
        raise InputError("no theorem ids given")
    return ids


def run_check(theorem_id: str, graph: Union[Graph, GraphProfile]) -> TheoremCheck:
    """Одна проверка; ошибки емкости и численные сбои дают статус 'error', не 'passed'"""
    if theorem_id not in CHECKS:
        raise InputError(f"unknown theorem id {theorem_id!r}")
    profile = graph if isinstance(graph, GraphProfile) else GraphProfile(graph)
    try:
        verdict = CHECKS[theorem_id](profile)
    except ToolkitError as e:
        get_harness_logger().log_error("check_error", str(e), graph6=profile.graph6,
                                       exception=e, context={"theorem_id": theorem_id})
        return TheoremCheck(theorem_id=theorem_id, graph=profile.graph6, hypothesis_holds=False,
                            status="error", detail=f"{type(e).__name__}: {e}")

    if not verdict.hypothesis_holds:
        return TheoremCheck(theorem_id=theorem_id, graph=profile.graph6,
                            hypothesis_holds=False, status="skipped")
    status = "passed" if verdict.passed else "failed"
    if status == "failed":
        get_harness_logger().log_check_failure(theorem_id, profile.graph6, verdict.lhs,
                                               verdict.rhs, verdict.detail)
    return TheoremCheck(theorem_id=theorem_id, graph=profile.graph6, hypothesis_holds=True,
                        lhs=verdict.lhs, rhs=verdict.rhs, passed=bool(verdict.passed),
                        status=status, detail=verdict.detail)
