from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from cores.graph_core import Graph, induced_subgraph
from utils.config import get_tolerances
from utils.errors import InputError, NumericalFailure


class SpectrumResult(BaseModel):
    """Спектр по убыванию, энергия, число положительных собственных значений"""

    model_config = ConfigDict(frozen=True)

    eigenvalues: List[float]
    energy: float
    positive_count: int
    max_residual: Optional[float] = None

    @property
    def least(self) -> float:
        return self.eigenvalues[-1] if self.eigenvalues else 0.0

    @property
    def largest(self) -> float:
        return self.eigenvalues[0] if self.eigenvalues else 0.0

    def nonzero_count(self, threshold: Optional[float] = None) -> int:
        tol = get_tolerances().zero_eigenvalue if threshold is None else threshold
        return sum(1 for lam in self.eigenvalues if abs(lam) > tol)

    def multiplicity(self, value: float, tol: Optional[float] = None) -> int:
        tol = get_tolerances().multiplicity if tol is None else tol
        return sum(1 for lam in self.eigenvalues if abs(lam - value) <= tol)


def eigenvalues(g: Graph, certify: bool = False) -> SpectrumResult:
    """Спектр матрицы смежности.

    Без сертификации - только собственные значения (eigvalsh). С сертификацией
    считаются и векторы (eigh), и каждая пара проверяется по невязке
    ||Av - λv|| <= residual * max(1, ||A||_2).
    """
    tolerances = get_tolerances()
    if g.n == 0:
        return SpectrumResult(eigenvalues=[], energy=0.0, positive_count=0,
                              max_residual=0.0 if certify else None)

    a = g.adjacency_matrix()
    max_residual = None
    try:
        if certify:
            values, vectors = np.linalg.eigh(a)
        else:
            values = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as e:
        raise NumericalFailure(f"eigensolver did not converge for n={g.n}: {e}") from e

    if certify:
        residuals = np.linalg.norm(a @ vectors - vectors * values, axis=0)
        max_residual = float(residuals.max())
        norm = max(1.0, float(np.abs(values).max()))
        if max_residual > tolerances.residual * norm:
            raise NumericalFailure(
                f"eigenpair residual {max_residual:.3e} exceeds {tolerances.residual:.0e}*{norm:.3f}")

    ordered = sorted((float(v) for v in values), reverse=True)
    energy = float(sum(abs(v) for v in ordered))
    positive = sum(1 for v in ordered if v > tolerances.zero_eigenvalue)
    return SpectrumResult(eigenvalues=ordered, energy=energy,
                          positive_count=positive, max_residual=max_residual)


def energy(g: Graph) -> float:
    return eigenvalues(g).energy


def energy_identity_gap(spectrum: SpectrumResult) -> float:
    """|E - 2·(сумма положительных)| и |E + 2·(сумма отрицательных)|, максимум"""
    positive = sum(v for v in spectrum.eigenvalues if v > 0)
    negative = sum(v for v in spectrum.eigenvalues if v < 0)
    return max(abs(spectrum.energy - 2 * positive), abs(spectrum.energy + 2 * negative))


def top_k_eigenvalue_sum(g: Graph, k: int, spectrum: Optional[SpectrumResult] = None) -> float:
    if not 0 <= k <= g.n:
        raise InputError(f"k must lie in 0..{g.n}, got {k}")
    spectrum = spectrum or eigenvalues(g)
    return float(sum(spectrum.eigenvalues[:k]))


def least_eigenvalue(g: Graph) -> float:
    return eigenvalues(g).least


def eigenvalue_multiplicity(g: Graph, value: float, tol: Optional[float] = None) -> int:
    return eigenvalues(g).multiplicity(value, tol)


def check_interlacing(g: Graph, h_vertices: Sequence[int]) -> bool:
    """Теорема о перемежаемости для индуцированного подграфа на p вершинах"""
    tol = get_tolerances().interlacing
    h = induced_subgraph(g, h_vertices)
    host = eigenvalues(g, certify=True).eigenvalues
    sub = eigenvalues(h, certify=True).eigenvalues
    shift = g.n - h.n
    for i, mu in enumerate(sub):
        if not (host[i + shift] - tol <= mu <= host[i] + tol):
            return False
    return True
