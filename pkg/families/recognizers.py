from itertools import combinations
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from catalog.graph6 import emit_graph6
from cores.canonical import is_isomorphic
from cores.graph_core import (Graph, bits_of, complement, connected_components, induced_subgraph,
                              is_clique, is_complete, is_connected, is_independent,
                              isolated_vertices, mask_of)
from families.constructors import named_small_graph


class FinckWitness(BaseModel):
    """Свидетель равенства Нордхауса–Гаддума: вершина v (тип a) или 5-цикл C (тип b)"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["a", "b"]
    v: Optional[int] = None
    cycle: Optional[List[int]] = None
    clique: List[int]
    independent: List[int]


class TheoremAbException(BaseModel):
    """Граф с E(G) < 2χ(G): семейство, параметры, число изолированных вершин"""

    model_config = ConfigDict(frozen=True)

    family: Literal["K_n", "B_n", "A_nt", "H5"]
    params: List[int]
    isolated: int


class ClassificationRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph6: str
    is_union_of_cliques: bool
    is_complete_multipartite: bool
    multipartite_parts: Optional[List[int]] = None
    finck_type: Literal["none", "a", "b"]
    finck_witness: Optional[FinckWitness] = None
    theorem_ab_exception: Optional[TheoremAbException] = None


def is_union_of_complete_graphs(g: Graph) -> bool:
    return all(is_clique(g, component) for component in connected_components(g))


def is_complete_multipartite(g: Graph) -> Optional[List[int]]:
    """Размеры долей, если дополнение - объединение клик; иначе None

    Пустой граф на n > 1 вершинах несвязен и долей не имеет.
    """
    if g.n == 0 or (g.n > 1 and g.m == 0):
        return None
    co = complement(g)
    components = connected_components(co)
    if not all(is_clique(co, component) for component in components):
        return None
    return [len(component) for component in components]


def finck_type_a(g: Graph) -> Optional[FinckWitness]:
    for v in range(g.n):
        clique = g.neighbors(v)
        independent = [u for u in range(g.n) if u != v and not g.adj(u, v)]
        if is_clique(g, clique) and is_independent(g, independent):
            return FinckWitness(kind="a", v=v, clique=clique, independent=independent)
    return None


def _induces_c5(g: Graph, cycle: Tuple[int, ...]) -> bool:
    mask = mask_of(cycle)
    return all((g.rows[v] & mask).bit_count() == 2 for v in cycle)


def finck_type_b(g: Graph) -> Optional[FinckWitness]:
    """Перебор всех 5-подмножеств; при n <= 8 их не больше 56"""
    if g.n < 5:
        return None
    for cycle in combinations(range(g.n), 5):
        if not _induces_c5(g, cycle):
            continue
        mask = mask_of(cycle)
        clique, independent = [], []
        for u in range(g.n):
            if (mask >> u) & 1:
                continue
            touching = g.rows[u] & mask
            if touching == mask:
                clique.append(u)
            elif touching == 0:
                independent.append(u)
            else:
                break
        else:
            if is_clique(g, clique) and is_independent(g, independent):
                return FinckWitness(kind="b", cycle=list(cycle), clique=clique,
                                    independent=independent)
    return None


def verify_finck_a(g: Graph, witness: FinckWitness) -> bool:
    """Независимая перепроверка свидетеля типа (a) по определению"""
    if witness.kind != "a" or witness.v is None:
        return False
    v = witness.v
    parts = sorted(witness.clique + witness.independent)
    if parts != [u for u in range(g.n) if u != v]:
        return False
    return (is_clique(g, witness.clique + [v])
            and is_independent(g, witness.independent + [v]))


def verify_finck_b(g: Graph, witness: FinckWitness) -> bool:
    if witness.kind != "b" or not witness.cycle or len(set(witness.cycle)) != 5:
        return False
    cycle = witness.cycle
    if sorted(cycle + witness.clique + witness.independent) != list(range(g.n)):
        return False
    h = induced_subgraph(g, cycle)
    if h.m != 5 or any(d != 2 for d in h.degrees()):
        return False
    if not (is_clique(g, witness.clique) and is_independent(g, witness.independent)):
        return False
    return (all(g.adj(c, k) for c in cycle for k in witness.clique)
            and not any(g.adj(c, s) for c in cycle for s in witness.independent))


def recognize_a_family(g: Graph) -> Optional[Tuple[int, int]]:
    """(n, t), если g ≅ A_{n,t} с 1 <= t <= n-1"""
    total = g.n
    if total < 3:
        return None
    full = (1 << total) - 1
    for x in range(total):
        degree = g.degree(x)
        if not 1 <= degree <= total - 2:
            continue
        rest = full & ~(1 << x)
        if is_clique(g, bits_of(rest)):
            return total - 1, degree
    return None


def recognize_b_family(g: Graph) -> Optional[int]:
    """n, если g ≅ B_n: две висячие вершины при общей вершине клики K_n"""
    total = g.n
    if total < 3:
        return None
    leaves = [v for v in range(total) if g.degree(v) == 1]
    full = (1 << total) - 1
    for a, b in combinations(leaves, 2):
        if g.rows[a] != g.rows[b]:
            continue
        rest = full & ~(1 << a) & ~(1 << b)
        if is_clique(g, bits_of(rest)):
            return total - 2
    return None


def is_matching_union(g: Graph) -> bool:
    """g ≅ (r/2)K_2 ∪ sK_1: все степени не больше 1"""
    return all(d <= 1 for d in g.degrees())


def _in_corollary_list(h: Graph) -> bool:
    if is_complete(h):
        return True
    a = recognize_a_family(h)
    if a is not None and (a[1] == a[0] - 1 or a == (3, 1)):
        return True
    return recognize_b_family(h) in (1, 2)


def is_corollary_excluded(g: Graph) -> bool:
    """G или его дополнение - полный граф, A_{k,k-1}, B_1, B_2 или A_{3,1}"""
    return _in_corollary_list(g) or _in_corollary_list(complement(g))


def _admissible_a(n: int, t: int) -> bool:
    if n <= 7:
        return (n, t) != (7, 4)
    return t in (1, 2, n - 1)


def classify_theorem_ab(g: Graph) -> Optional[TheoremAbException]:
    """Исключения теоремы E(G) < 2χ(G): изолированные вершины плюс K_n, B_n, A_{n,t} или H5"""
    if g.n == 0:
        return None
    isolated = set(isolated_vertices(g))
    kept = [v for v in range(g.n) if v not in isolated]
    if not kept:
        return TheoremAbException(family="K_n", params=[1], isolated=g.n - 1)
    h = induced_subgraph(g, kept)
    extra = len(isolated)
    if not is_connected(h):
        return None
    if is_complete(h):
        return TheoremAbException(family="K_n", params=[h.n], isolated=extra)
    b = recognize_b_family(h)
    if b is not None:
        return TheoremAbException(family="B_n", params=[b], isolated=extra)
    a = recognize_a_family(h)
    if a is not None and _admissible_a(*a):
        return TheoremAbException(family="A_nt", params=list(a), isolated=extra)
    if h.n == 5 and is_isomorphic(h, named_small_graph("H5")):
        return TheoremAbException(family="H5", params=[], isolated=extra)
    return None


def classify(g: Graph) -> ClassificationRecord:
    parts = is_complete_multipartite(g)
    witness = finck_type_a(g) or finck_type_b(g)
    return ClassificationRecord(
        graph6=emit_graph6(g),
        is_union_of_cliques=is_union_of_complete_graphs(g),
        is_complete_multipartite=parts is not None,
        multipartite_parts=parts,
        finck_type=witness.kind if witness else "none",
        finck_witness=witness,
        theorem_ab_exception=classify_theorem_ab(g),
    )
