from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from catalog.graph6 import emit_graph6
from cores.canonical import canonical_labeling
from cores.graph_core import Graph, is_bipartite, is_connected, relabel
from utils.config import get_limits
from utils.errors import CapacityError, InputError
from utils.logger import get_catalog_logger, log_execution


class EnumerationSpec(BaseModel):
    """Параметры исчерпывающего перебора"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    connected_only: bool = False
    bipartite_only: bool = False
    trees_only: bool = False


def _canonical(g: Graph) -> Tuple[int, Graph]:
    order, cert = canonical_labeling(g)
    return cert, relabel(g, order)


def _deletion_vertex(child: Graph, order: List[int]) -> int:
    """Каноническая вершина удаления: среди вершин минимальной степени - последняя в канонической нумерации"""
    degrees = child.degrees()
    low = min(degrees)
    return next(v for v in reversed(order) if degrees[v] == low)


def _same_orbit(child: Graph, v: int, w: int) -> bool:
    rest_v = [u for u in range(child.n) if u != v]
    rest_w = [u for u in range(child.n) if u != w]
    return (canonical_labeling(child, [[v], rest_v])[1]
            == canonical_labeling(child, [[w], rest_w])[1])


def _accept(child: Graph, new_vertex: int) -> Tuple[bool, int, List[int]]:
    order, cert = canonical_labeling(child)
    w = _deletion_vertex(child, order)
    if w == new_vertex or _same_orbit(child, new_vertex, w):
        return True, cert, order
    return False, cert, order


def _extend(parent: Graph, neighborhood: int) -> Graph:
    v = parent.n
    rows = [row | (((neighborhood >> u) & 1) << v) for u, row in enumerate(parent.rows)]
    rows.append(neighborhood)
    return Graph(v + 1, rows)


def _children(parent: Graph, neighborhoods) -> List[Graph]:
    """Дети одного родителя, принятые правилом канонического удаления (без повторов)"""
    degrees = parent.degrees()
    seen: Dict[int, Graph] = {}
    v = parent.n
    for neighborhood in neighborhoods:
        size = neighborhood.bit_count()
        # новая вершина обязана иметь минимальную степень в ребенке
        if any(degrees[u] + ((neighborhood >> u) & 1) < size for u in range(parent.n)):
            continue
        child = _extend(parent, neighborhood)
        accepted, cert, order = _accept(child, v)
        if accepted and cert not in seen:
            seen[cert] = relabel(child, order)
    return list(seen.values())


@log_execution(get_catalog_logger, "enumerate_level")
def _next_level(parents: List[Graph], leaves_only: bool) -> List[Graph]:
    result: List[Graph] = []
    for parent in parents:
        if leaves_only:
            neighborhoods = [1 << u for u in range(parent.n)] if parent.n else [0]
        else:
            neighborhoods = range(1 << parent.n)
        result.extend(_children(parent, neighborhoods))
    return result


@lru_cache(maxsize=None)
def _levels(n: int, leaves_only: bool) -> List[Graph]:
    level = [Graph.empty(0)] if not leaves_only else [Graph.empty(1)]
    start = 0 if not leaves_only else 1
    for size in range(start, n):
        level = _next_level(level, leaves_only)
        get_catalog_logger().debug(f"Level n={size + 1}: {len(level)} graphs",
                                   n=size + 1, count=len(level))
    return level


def _sorted_by_graph6(graphs: List[Graph]) -> List[Graph]:
    return sorted(graphs, key=emit_graph6)


def all_trees(n: int) -> Iterator[Graph]:
    """Все деревья на n вершинах с точностью до изоморфизма (наращивание листьями)"""
    limit = get_limits().max_tree_n
    if not 1 <= n <= limit:
        raise CapacityError(f"tree enumeration supports 1 <= n <= {limit}, got n={n}")
    yield from _sorted_by_graph6(_levels(n, leaves_only=True))


def all_graphs(spec: EnumerationSpec) -> Iterator[Graph]:
    """Один представитель на класс изоморфизма; порядок - по каноническому graph6"""
    if spec.trees_only:
        yield from all_trees(spec.n)
        return
    limit = get_limits().max_enumeration_n
    if spec.n > limit:
        raise CapacityError(f"exhaustive enumeration supports n <= {limit}, got n={spec.n}")
    graphs = _levels(spec.n, leaves_only=False)
    if spec.connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    if spec.bipartite_only:
        graphs = [g for g in graphs if is_bipartite(g)]
    yield from _sorted_by_graph6(graphs)


def naive_graphs(n: int) -> List[Graph]:
    """Оракул: все помеченные графы на n вершинах и отбор по сертификату"""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    limit = get_limits().naive_oracle_n
    if n > limit:
        raise CapacityError(f"naive enumeration supports n <= {limit}, got n={n}")
    pairs = list(combinations(range(n), 2))
    seen: Dict[int, Graph] = {}
    for mask in range(1 << len(pairs)):
        edges = [pair for k, pair in enumerate(pairs) if (mask >> k) & 1]
        cert, form = _canonical(Graph.from_edges(n, edges))
        seen.setdefault(cert, form)
    return _sorted_by_graph6(list(seen.values()))
