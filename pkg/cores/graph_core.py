from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from utils.errors import InputError


class Graph:
    """Неизменяемый простой неориентированный граф; строки смежности - битовые маски"""

    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        if len(rows) != n:
            raise InputError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        degree_sum = 0
        for i, row in enumerate(rows):
            if row & ~full or (row >> i) & 1:
                raise InputError(f"row {i} has a self-loop or out-of-range bit")
            degree_sum += row.bit_count()
        for i, row in enumerate(rows):
            rest = row
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not (rows[j] >> i) & 1:
                    raise InputError(f"adjacency is not symmetric at ({i}, {j})")
                rest ^= low
        self._n = n
        self._rows = tuple(rows)
        self._m = degree_sum // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise InputError(f"self-loop at {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, [0] * n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    def adj(self, i: int, j: int) -> bool:
        return bool((self._rows[i] >> j) & 1)

    def neighbors(self, v: int) -> List[int]:
        return bits_of(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self._rows]

    def edges(self) -> List[Tuple[int, int]]:
        """Ребра (i, j), i < j, в лексикографическом порядке"""
        result = []
        for i, row in enumerate(self._rows):
            for j in bits_of(row >> (i + 1)):
                result.append((i, i + 1 + j))
        return result

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = 1
            a[j, i] = 1
        return a

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def bits_of(mask: int) -> List[int]:
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << i) for i, row in enumerate(g.rows)])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Подграф на подмножестве вершин, перенумерованный в порядке подмножества"""
    order = list(vertices)
    if len(set(order)) != len(order):
        raise InputError(f"subset has repeated vertices: {order}")
    for v in order:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
    rows = []
    for v in order:
        row = 0
        for k, u in enumerate(order):
            if (g.rows[v] >> u) & 1:
                row |= 1 << k
        rows.append(row)
    return Graph(len(order), rows)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Новая вершина k - это старая вершина order[k]"""
    if sorted(order) != list(range(g.n)):
        raise InputError("relabel order must be a permutation of all vertices")
    return induced_subgraph(g, order)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.n
    return Graph(a.n + b.n, list(a.rows) + [row << shift for row in b.rows])


def connected_components(g: Graph) -> List[List[int]]:
    """Компоненты связности: вершины по возрастанию, компоненты по минимальной вершине"""
    seen = 0
    components = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        component = 1 << start
        frontier = component
        while frontier:
            reach = 0
            for v in bits_of(frontier):
                reach |= g.rows[v]
            frontier = reach & ~component
            component |= frontier
        seen |= component
        components.append(bits_of(component))
    return components


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def isolated_vertices(g: Graph) -> List[int]:
    return [v for v, row in enumerate(g.rows) if row == 0]


def bipartition(g: Graph) -> Optional[List[int]]:
    """Правильная 2-раскраска (вершина-корень компоненты получает цвет 0) или None"""
    color = [-1] * g.n
    for component in connected_components(g):
        root = component[0]
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits_of(g.rows[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    mask = mask_of(vs)
    return all((g.rows[v] | (1 << v)) & mask == mask for v in vs)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    mask = mask_of(vs)
    return all(g.rows[v] & mask == 0 for v in vs)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2
