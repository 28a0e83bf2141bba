import math
from typing import Callable, Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from catalog.graph6 import parse_graph6
from cores.graph_core import Graph, disjoint_union
from utils.errors import InputError


class FamilySpec(BaseModel):
    """Именованное параметрическое семейство: family_id + параметры"""

    model_config = ConfigDict(frozen=True)

    family_id: str
    params: List[int] = []
    base_graph6: str = ""

    def label(self) -> str:
        parts = ["family", FAMILY_ALIASES_REVERSE.get(self.family_id, self.family_id)]
        if self.base_graph6:
            parts.append(self.base_graph6)
        if self.params or self.family_id in _PARAMETRIC:
            parts.append(",".join(str(p) for p in self.params))
        return ":".join(parts)


def empty_graph(n: int) -> Graph:
    return Graph.empty(n)


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise InputError(f"K_n requires n >= 0, got {n}")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << i) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"P_n requires n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"C_n requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{r1,...,rt}: вершины сгруппированы по частям в заданном порядке"""
    if not parts or any(p < 1 for p in parts):
        raise InputError(f"complete multipartite parts must be positive, got {list(parts)}")
    n = sum(parts)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in parts:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph(n, rows)


def star(t: int) -> Graph:
    """K_{1,t}, центр - вершина 0"""
    if t < 0:
        raise InputError(f"star requires t >= 0, got {t}")
    return Graph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


def cocktail_party(n: int) -> Graph:
    """CP(n): K_{2n} без совершенного паросочетания {2i, 2i+1}"""
    if n < 1:
        raise InputError(f"CP(n) requires n >= 1, got {n}")
    size = 2 * n
    full = (1 << size) - 1
    rows = [full & ~(1 << v) & ~(1 << (v ^ 1)) for v in range(size)]
    return Graph(size, rows)


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    return Graph.from_edges(
        len(edges),
        [(a, b) for a in range(len(edges)) for b in range(a + 1, len(edges))
         if set(edges[a]) & set(edges[b])])


def generalized_line_graph(g: Graph, a: Sequence[int]) -> Graph:
    """L(G; a_1..a_n): сначала вершины L(G), затем блоки CP(a_i) по порядку"""
    if len(a) != g.n:
        raise InputError(f"expected {g.n} multiplicities, got {len(a)}")
    if any(x < 0 for x in a):
        raise InputError("multiplicities must be non-negative")
    edges = g.edges()
    result = line_graph(g)
    blocks: List[Tuple[int, int]] = []
    for i, count in enumerate(a):
        if count == 0:
            continue
        start = result.n
        result = disjoint_union(result, cocktail_party(count))
        blocks.append((i, start))
    rows = list(result.rows)
    for i, start in blocks:
        block = range(start, start + 2 * a[i])
        for e, (u, v) in enumerate(edges):
            if i in (u, v):
                for w in block:
                    rows[e] |= 1 << w
                    rows[w] |= 1 << e
    return Graph(result.n, rows)


def a_family(n: int, t: int) -> Graph:
    """A_{n,t}: K_n на 0..n-1 и вершина n, смежная с 0..t-1 (t = n дает K_{n+1})"""
    if n < 2:
        raise InputError(f"A_(n,t) requires n >= 2, got n={n}")
    if not 1 <= t <= n:
        raise InputError(f"A_(n,t) requires 1 <= t <= n, got t={t}")
    clique = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edges(n + 1, clique + [(i, n) for i in range(t)])


def b_family(n: int) -> Graph:
    """B_n: K_n на 0..n-1 и висячие вершины n, n+1 при вершине 0"""
    if n < 1:
        raise InputError(f"B_n requires n >= 1, got {n}")
    clique = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edges(n + 2, clique + [(0, n), (0, n + 1)])


def matching_union(r_pairs: int, s_isolated: int) -> Graph:
    """(r/2)K_2 ∪ sK_1"""
    if r_pairs < 0 or s_isolated < 0:
        raise InputError("matching_union parameters must be non-negative")
    n = 2 * r_pairs + s_isolated
    return Graph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(r_pairs)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def c5_join_clique(k: int) -> Graph:
    """C_5, полностью соединенный с K_k (вершины 5..4+k)"""
    if k < 0:
        raise InputError(f"clique size must be non-negative, got {k}")
    cycle = [(i, (i + 1) % 5) for i in range(5)]
    clique = [(5 + i, 5 + j) for i in range(k) for j in range(i + 1, k)]
    join = [(c, 5 + i) for c in range(5) for i in range(k)]
    return Graph.from_edges(5 + k, cycle + clique + join)


# Рисунки: вершины пронумерованы в порядке их перечисления на рисунке.
_NAMED_EDGES: Dict[str, Tuple[int, List[Tuple[int, int]]]] = {
    # треугольник 1-3-4, висячие 0 и 5 при 1, висячая 2 при 3
    "H1": (6, [(0, 1), (1, 4), (1, 3), (2, 3), (3, 4), (5, 1)]),
    # H1 и ребро 5-3
    "H2": (6, [(0, 1), (1, 4), (1, 3), (2, 3), (3, 4), (5, 1), (5, 3)]),
    # K_4 на 1,2,4,5; висячая 0 при 1, висячая 3 при 4
    "H3": (6, [(1, 2), (1, 4), (1, 5), (0, 1), (4, 5), (3, 4), (4, 2), (5, 2)]),
    # K_4 на 1,2,3,4; висячая 0 при 1; вершина 5 смежна с 2 и 4
    "H4": (6, [(1, 2), (1, 3), (1, 4), (0, 1), (3, 4), (3, 2), (4, 2), (5, 2), (5, 4)]),
    # треугольник 1-3-4 с висячими 0 при 1 и 2 при 3
    "H5": (5, [(0, 1), (1, 4), (1, 3), (2, 3), (3, 4)]),
    # H2 без висячей вершины 0, перенумерованный 0..4
    "H_aux": (5, [(0, 3), (0, 2), (1, 2), (2, 3), (4, 0), (4, 2)]),
}


def named_small_graph(name: str) -> Graph:
    key = "H_aux" if name.upper() in ("HAUX", "H_AUX") else name.upper()
    if key not in _NAMED_EDGES:
        raise InputError(f"unknown named graph {name!r}")
    n, edges = _NAMED_EDGES[key]
    return Graph.from_edges(n, edges)


def spot_graphs() -> Dict[str, Graph]:
    """Графы, для которых в доказательствах приведены численные оценки спектра"""
    return {
        "H1": named_small_graph("H1"),
        "H2": named_small_graph("H2"),
        "H3": named_small_graph("H3"),
        "H4": named_small_graph("H4"),
        "H5": named_small_graph("H5"),
        "H_aux": named_small_graph("H_aux"),
        "K_{1,1,3}": complete_multipartite([1, 1, 3]),
        "K_{1,1,2}": complete_multipartite([1, 1, 2]),
        "A_{4,1}": a_family(4, 1),
        "A_{4,2}": a_family(4, 2),
        "B_4": b_family(4),
        "K_{1,3}": star(3),
        "K_{1,2}": star(2),
    }


def _expect(params: Sequence[int], count: int, family: str) -> Sequence[int]:
    if len(params) != count:
        raise InputError(f"family {family} takes {count} parameter(s), got {len(params)}")
    return params


def _from_base(spec: FamilySpec) -> Graph:
    if not spec.base_graph6:
        raise InputError(f"family {spec.family_id} needs a base graph in graph6")
    return parse_graph6(spec.base_graph6)


_BUILDERS: Dict[str, Callable[[FamilySpec], Graph]] = {
    "K_n": lambda s: complete_graph(*_expect(s.params, 1, "K_n")),
    "P_n": lambda s: path_graph(*_expect(s.params, 1, "P_n")),
    "C_n": lambda s: cycle_graph(*_expect(s.params, 1, "C_n")),
    "CompleteMultipartite": lambda s: complete_multipartite(s.params),
    "Star_K1t": lambda s: star(*_expect(s.params, 1, "Star_K1t")),
    "CP": lambda s: cocktail_party(*_expect(s.params, 1, "CP")),
    "A_nt": lambda s: a_family(*_expect(s.params, 2, "A_nt")),
    "B_n": lambda s: b_family(*_expect(s.params, 1, "B_n")),
    "H1": lambda s: named_small_graph("H1"),
    "H2": lambda s: named_small_graph("H2"),
    "H3": lambda s: named_small_graph("H3"),
    "H4": lambda s: named_small_graph("H4"),
    "H5": lambda s: named_small_graph("H5"),
    "H_aux": lambda s: named_small_graph("H_aux"),
    "LineGraph": lambda s: line_graph(_from_base(s)),
    "GeneralizedLineGraph": lambda s: generalized_line_graph(_from_base(s), s.params),
    "rK2_plus_sK1": lambda s: matching_union(*_expect(s.params, 2, "rK2_plus_sK1")),
    "Petersen": lambda s: petersen_graph(),
}

_PARAMETRIC = {"K_n", "P_n", "C_n", "CompleteMultipartite", "Star_K1t", "CP", "A_nt",
               "B_n", "GeneralizedLineGraph", "rK2_plus_sK1"}

FAMILY_ALIASES = {
    "K": "K_n", "P": "P_n", "C": "C_n", "KM": "CompleteMultipartite", "S": "Star_K1t",
    "CP": "CP", "A": "A_nt", "B": "B_n", "H1": "H1", "H2": "H2", "H3": "H3", "H4": "H4",
    "H5": "H5", "HAUX": "H_aux", "L": "LineGraph", "GL": "GeneralizedLineGraph",
    "M": "rK2_plus_sK1", "PETERSEN": "Petersen",
}
FAMILY_ALIASES_REVERSE = {v: k for k, v in FAMILY_ALIASES.items()}


def parse_family_spec(text: str) -> FamilySpec:
    """'family:A:7,4', 'A:7,4', 'family:L:Bw', 'family:GL:Bw:1,0,0'"""
    parts = text.strip().split(":")
    if parts and parts[0].lower() == "family":
        parts = parts[1:]
    if not parts or not parts[0]:
        raise InputError(f"empty family spec {text!r}")
    raw_id = parts[0]
    family_id = FAMILY_ALIASES.get(raw_id.upper(), raw_id)
    if family_id not in _BUILDERS:
        raise InputError(f"unknown family {raw_id!r}; known: {', '.join(sorted(FAMILY_ALIASES))}")
    rest = parts[1:]
    base = ""
    if family_id in ("LineGraph", "GeneralizedLineGraph"):
        if not rest:
            raise InputError(f"family {raw_id} needs a base graph6 string")
        base, rest = rest[0], rest[1:]
    if len(rest) > 1:
        raise InputError(f"too many ':' sections in family spec {text!r}")
    params: List[int] = []
    if rest and rest[0]:
        try:
            params = [int(p) for p in rest[0].split(",")]
        except ValueError as e:
            raise InputError(f"family parameters must be integers: {rest[0]!r}") from e
    if params and family_id not in _PARAMETRIC:
        raise InputError(f"family {raw_id} takes no parameters, got {rest[0]!r}")
    return FamilySpec(family_id=family_id, params=params, base_graph6=base)


def build_family(spec: FamilySpec) -> Graph:
    return _BUILDERS[spec.family_id](spec)


def expected_edge_count(spec: FamilySpec) -> int:
    """Замкнутые формулы числа ребер (для проверки конструкторов)"""
    p = spec.params
    if spec.family_id == "K_n":
        return math.comb(p[0], 2)
    if spec.family_id == "P_n":
        return p[0] - 1
    if spec.family_id == "C_n":
        return p[0]
    if spec.family_id == "CompleteMultipartite":
        return (sum(p) ** 2 - sum(x * x for x in p)) // 2
    if spec.family_id == "Star_K1t":
        return p[0]
    if spec.family_id == "CP":
        return 2 * p[0] * (p[0] - 1)
    if spec.family_id == "A_nt":
        return math.comb(p[0], 2) + p[1]
    if spec.family_id == "B_n":
        return math.comb(p[0], 2) + 2
    if spec.family_id == "rK2_plus_sK1":
        return p[0]
    return build_family(spec).m
