from itertools import product
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from cores.graph_core import Graph, bits_of, complement
from cores.spectrum_core import SpectrumResult, eigenvalues
from utils.config import get_limits, get_tolerances
from utils.errors import CapacityError
from utils.logger import get_core_logger


class ColoringResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    chi: int
    witness: List[int]
    lower_bound_clique: int


class NordhausGaddumResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    chi: int
    chi_bar: int
    sum: int
    attains_equality: bool


def greedy_clique(g: Graph) -> List[int]:
    """Жадная клика: старт с каждой вершины, расширение по наибольшей степени"""
    degrees = g.degrees()
    best: List[int] = []
    for start in range(g.n):
        clique = [start]
        candidates = g.rows[start]
        while candidates:
            v = max(bits_of(candidates), key=lambda u: (degrees[u], -u))
            clique.append(v)
            candidates &= g.rows[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def _dsatur_pick(g: Graph, colors: List[int], saturation: List[int], degrees: List[int]) -> int:
    # насыщенность, затем степень, затем меньший индекс
    best_v = -1
    best_key: Tuple[int, int] = (-1, -1)
    for v in range(g.n):
        if colors[v] != -1:
            continue
        key = (saturation[v].bit_count(), degrees[v])
        if key > best_key:
            best_key = key
            best_v = v
    return best_v


def greedy_coloring(g: Graph) -> List[int]:
    """DSATUR без возвратов - верхняя оценка"""
    colors = [-1] * g.n
    saturation = [0] * g.n
    degrees = g.degrees()
    for _ in range(g.n):
        v = _dsatur_pick(g, colors, saturation, degrees)
        c = 0
        while (saturation[v] >> c) & 1:
            c += 1
        colors[v] = c
        for u in bits_of(g.rows[v]):
            saturation[u] |= 1 << c
    return colors


def chromatic_number(g: Graph) -> ColoringResult:
    """Точное хроматическое число: DSATUR branch-and-bound"""
    if g.n == 0:
        return ColoringResult(chi=0, witness=[], lower_bound_clique=0)
    if g.m == 0:
        return ColoringResult(chi=1, witness=[0] * g.n, lower_bound_clique=1)

    budget = get_limits().coloring_node_budget
    lower = len(greedy_clique(g))
    best_colors = greedy_coloring(g)
    best = [max(best_colors) + 1, best_colors]
    degrees = g.degrees()
    nodes = [0]

    colors = [-1] * g.n
    saturation = [0] * g.n

    def branch(colored: int, used: int):
        if best[0] == lower:
            return
        if colored == g.n:
            if used < best[0]:
                best[0] = used
                best[1] = list(colors)
            return
        nodes[0] += 1
        if nodes[0] > budget:
            raise CapacityError(
                f"chromatic number search exceeded {budget} nodes (n={g.n})")
        v = _dsatur_pick(g, colors, saturation, degrees)
        # новый цвет разрешен только как used (симметрия цветов)
        for c in range(min(used + 1, best[0] - 1)):
            if (saturation[v] >> c) & 1:
                continue
            colors[v] = c
            touched = []
            for u in bits_of(g.rows[v]):
                if colors[u] == -1 and not (saturation[u] >> c) & 1:
                    saturation[u] |= 1 << c
                    touched.append(u)
            branch(colored + 1, max(used, c + 1))
            for u in touched:
                saturation[u] &= ~(1 << c)
            colors[v] = -1
            if best[0] == lower:
                return

    branch(0, 0)
    get_core_logger().debug(f"chi={best[0]} after {nodes[0]} search nodes", n=g.n, nodes=nodes[0])
    return ColoringResult(chi=best[0], witness=best[1], lower_bound_clique=lower)


def is_proper_coloring(g: Graph, colors: List[int]) -> bool:
    return all(colors[i] != colors[j] for i, j in g.edges())


def brute_force_chromatic_number(g: Graph) -> int:
    """Оракул для тестов: перебор всех раскрасок в k цветов"""
    if g.n > 7:
        raise CapacityError("brute-force coloring is limited to n <= 7")
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if is_proper_coloring(g, list(colors)):
                return k
    return g.n


def check_wilf(g: Graph, spectrum: Optional[SpectrumResult] = None,
               coloring: Optional[ColoringResult] = None) -> bool:
    """Лемма Уилфа: χ(G) <= λ1(G) + 1"""
    spectrum = spectrum or eigenvalues(g)
    coloring = coloring or chromatic_number(g)
    return coloring.chi <= spectrum.largest + 1 + get_tolerances().zero_eigenvalue


def nordhaus_gaddum(g: Graph) -> NordhausGaddumResult:
    chi = chromatic_number(g).chi
    chi_bar = chromatic_number(complement(g)).chi
    total = chi + chi_bar
    return NordhausGaddumResult(chi=chi, chi_bar=chi_bar, sum=total,
                                attains_equality=total == g.n + 1)
