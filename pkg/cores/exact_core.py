from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from cores.graph_core import Graph, bits_of, is_tree
from utils.config import get_limits
from utils.errors import (CapacityError, ExactArithmeticCapacityError, InputError,
                          UndefinedProductError)


class CharPoly(BaseModel):
    """Характеристический многочлен det(λI - A) = λ^(n-r)(λ^r + a_1λ^(r-1) + ... + a_r).

    coeffs[k] - коэффициент при λ^k (целые, младшая степень первой).
    """

    model_config = ConfigDict(frozen=True)

    coeffs: List[int]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def multiplicity_of_zero(self) -> int:
        return next(k for k, c in enumerate(self.coeffs) if c != 0)

    @property
    def rank(self) -> int:
        return self.n - self.multiplicity_of_zero

    @property
    def a_r_abs(self) -> int:
        return abs(self.coeffs[self.multiplicity_of_zero])

    def evaluate(self, x: float) -> float:
        result = 0.0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result


def poly_multiply(p: Sequence[int], q: Sequence[int]) -> List[int]:
    result = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                result[i + j] += a * b
    return result


def poly_power(p: Sequence[int], k: int) -> List[int]:
    result = [1]
    for _ in range(k):
        result = poly_multiply(result, p)
    return result


def char_poly(g: Graph) -> CharPoly:
    """Фаддеев–Леверье в точной целой арифметике (numpy object-массивы)"""
    limit = get_limits().max_charpoly_n
    if g.n > limit:
        raise ExactArithmeticCapacityError(f"char_poly supports n <= {limit}, got n={g.n}")
    n = g.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return CharPoly(coeffs=coeffs)

    a = np.array([[int((row >> j) & 1) for j in range(n)] for row in g.rows], dtype=object)
    identity = np.eye(n, dtype=int).astype(object)
    m = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[n - k + 1] * identity
        trace = int(np.trace(a.dot(m)))
        if trace % k:
            raise ExactArithmeticCapacityError(
                f"inexact division in Faddeev-LeVerrier at step {k}")
        coeffs[n - k] = -trace // k
    return CharPoly(coeffs=[int(c) for c in coeffs])


def rank_exact(g: Graph) -> int:
    """Ранг над Q методом Барейса (без дробей)"""
    matrix = [[(row >> j) & 1 for j in range(g.n)] for row in g.rows]
    n = g.n
    rank = 0
    previous = 1
    for col in range(n):
        pivot = next((r for r in range(rank, n) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        p = matrix[rank][col]
        for r in range(rank + 1, n):
            lead = matrix[r][col]
            for c in range(col + 1, n):
                matrix[r][c] = (p * matrix[r][c] - lead * matrix[rank][c]) // previous
            matrix[r][col] = 0
        previous = p
        rank += 1
    return rank


def product_nonzero_eigenvalues_abs(g: Graph, poly: Optional[CharPoly] = None) -> int:
    """|произведение ненулевых собственных значений| = |a_r|"""
    if g.m == 0:
        raise UndefinedProductError("product of nonzero eigenvalues is undefined for an edgeless graph")
    return (poly or char_poly(g)).a_r_abs


class MatchingInfo(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_size: int
    max_count: int
    has_perfect: bool


def _combine(first: Tuple[int, int], second: Tuple[int, int]) -> Tuple[int, int]:
    # непересекающиеся семейства паросочетаний: максимум размера, сумма на равенстве
    if first[0] != second[0]:
        return max(first, second)
    return first[0], first[1] + second[1]


def _count_maximum_matchings(g: Graph) -> Tuple[int, int]:
    memo: Dict[int, Tuple[int, int]] = {}
    rows = g.rows

    def best(mask: int) -> Tuple[int, int]:
        if mask == 0:
            return 0, 1
        if mask in memo:
            return memo[mask]
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        result = best(rest)
        for u in bits_of(rows[v] & rest):
            size, count = best(rest & ~(1 << u))
            result = _combine(result, (size + 1, count))
        memo[mask] = result
        return result

    return best((1 << g.n) - 1)


def tree_max_matching_count(g: Graph) -> int:
    return _tree_matching(g)[1]


def _tree_matching(g: Graph) -> Tuple[int, int]:
    """ДП по корневому дереву: (размер, число) для «v свободна» и «v покрыта ребром к ребенку»"""
    if not is_tree(g):
        raise InputError("tree_max_matching_count requires a tree")
    parent = [-1] * g.n
    order = [0]
    seen = 1
    for v in order:
        for u in bits_of(g.rows[v] & ~seen):
            seen |= 1 << u
            parent[u] = v
            order.append(u)

    free: List[Tuple[int, int]] = [(0, 1)] * g.n
    covered: List[Optional[Tuple[int, int]]] = [None] * g.n
    for v in reversed(order):
        children = [u for u in bits_of(g.rows[v]) if parent[u] == v]
        best_children = []
        for u in children:
            best_u = free[u] if covered[u] is None else _combine(free[u], covered[u])
            best_children.append(best_u)
        size = sum(b[0] for b in best_children)
        count = 1
        for b in best_children:
            count *= b[1]
        free[v] = (size, count)
        option = None
        for index, u in enumerate(children):
            match_size = 1 + free[u][0]
            match_count = free[u][1]
            for other, b in enumerate(best_children):
                if other != index:
                    match_size += b[0]
                    match_count *= b[1]
            candidate = (match_size, match_count)
            option = candidate if option is None else _combine(option, candidate)
        covered[v] = option
    root = free[0] if covered[0] is None else _combine(free[0], covered[0])
    return root


def matching_info(g: Graph) -> MatchingInfo:
    if g.n >= 1 and is_tree(g):
        size, count = _tree_matching(g)
    else:
        limit = get_limits().max_matching_n
        if g.n > limit:
            raise CapacityError(f"exact matching counter supports n <= {limit} for non-trees, got n={g.n}")
        size, count = _count_maximum_matchings(g)
    return MatchingInfo(max_size=size, max_count=count, has_perfect=2 * size == g.n)
