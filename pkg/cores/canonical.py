from itertools import permutations
from typing import List, Optional, Tuple

from catalog.graph6 import emit_graph6
from cores.graph_core import Graph, bits_of, mask_of, relabel
from utils.config import get_limits
from utils.errors import CapacityError


def _refine(rows: Tuple[int, ...], cells: List[List[int]]) -> List[List[int]]:
    """Уточнение упорядоченного разбиения до эквитабельного"""
    while True:
        masks = [mask_of(cell) for cell in cells]
        refined = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                split = True
                for signature in sorted(groups):
                    refined.append(groups[signature])
            else:
                refined.append(cell)
        cells = refined
        if not split:
            return cells


def _certificate(rows: Tuple[int, ...], order: List[int]) -> int:
    # биты в порядке graph6: x01, x02, x12, x03, ...; первый бит старший
    cert = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            cert = (cert << 1) | ((row >> order[i]) & 1)
    return cert


def _twins(rows: Tuple[int, ...], u: int, v: int) -> bool:
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def canonical_labeling(g: Graph,
                       partition: Optional[List[List[int]]] = None) -> Tuple[List[int], int]:
    """Каноническая нумерация: (порядок вершин, сертификат).

    Сертификат минимален среди листьев дерева индивидуализации; ветви по
    вершинам-двойникам отсекаются, так как их транспозиция - автоморфизм.
    partition - упорядоченное начальное разбиение (раскраска вершин); по
    умолчанию одна клетка.
    """
    limit = get_limits().max_isomorphism_n
    if g.n > limit:
        raise CapacityError(f"canonical labelling supports n <= {limit}, got n={g.n}")
    if g.n == 0:
        return [], 0

    rows = g.rows
    best: List[Optional[Tuple[int, List[int]]]] = [None]

    def search(cells: List[List[int]]):
        target = next((k for k, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            cert = _certificate(rows, order)
            if best[0] is None or cert < best[0][0]:
                best[0] = (cert, order)
            return
        cell = cells[target]
        tried: List[int] = []
        for v in cell:
            if any(_twins(rows, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(rows, branch))

    cells = [list(cell) for cell in partition if cell] if partition else [list(range(g.n))]
    search(_refine(rows, cells))
    cert, order = best[0]
    return order, cert


def canonical_form(g: Graph) -> Graph:
    order, _ = canonical_labeling(g)
    return relabel(g, order)


def canonical_graph6(g: Graph) -> str:
    return emit_graph6(canonical_form(g))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_labeling(a)[1] == canonical_labeling(b)[1]


def brute_force_isomorphic(a: Graph, b: Graph) -> bool:
    """Оракул для тестов: перебор всех биекций"""
    if a.n != b.n or a.m != b.m:
        return False
    if a.n > 8:
        raise CapacityError("brute-force isomorphism is limited to n <= 8")
    target = b.rows
    for perm in permutations(range(a.n)):
        if all(mask_of(perm[u] for u in bits_of(a.rows[v])) == target[perm[v]]
               for v in range(a.n)):
            return True
    return False
