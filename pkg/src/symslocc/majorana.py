"""Conversion between Dicke amplitudes and Majorana points."""

from __future__ import annotations

from math import comb, sqrt

import numpy as np

from . import kernels
from .roots import polynomial_roots
from .state_model import (
    DEFAULT_TOL,
    ComplexPolynomial,
    DickeVector,
    MajoranaDecomposition,
    SpinorPoint,
    chordal_distance,
)


def dicke_to_polynomial(state: DickeVector) -> ComplexPolynomial:
    """Majorana polynomial with coefficients ``(-1)^k sqrt(C(N,k)) d_k``."""
    n = state.n_qubits
    return ComplexPolynomial(
        tuple((-1) ** k * sqrt(comb(n, k)) * d for k, d in enumerate(state.coeffs))
    )


def _centroid(members: list[tuple[SpinorPoint, int]]) -> SpinorPoint:
    first = members[0][0]
    if all(p == first for p, _ in members):
        return first
    v = sum(m * p.bloch() for p, m in members)
    return SpinorPoint.from_bloch(v)


def cluster_points(
    points: list[tuple[SpinorPoint, int]], tol: float
) -> list[tuple[SpinorPoint, int]]:
    """Merge points closer than ``tol`` (single linkage) until representatives separate."""
    groups = [[pm] for pm in points]
    while True:
        reps = [(_centroid(g), sum(m for _, m in g)) for g in groups]
        merged = False
        for i in range(len(reps)):
            for j in range(i):
                if chordal_distance(reps[i][0], reps[j][0]) <= tol:
                    groups[j].extend(groups[i])
                    del groups[i]
                    merged = True
                    break
            if merged:
                break
        if not merged:
            return reps


def majorana_points(state: DickeVector, tol: float = DEFAULT_TOL) -> MajoranaDecomposition:
    """Distinct Majorana points of ``state`` with multiplicities.

    The ``N - K`` points missing from a degree-``K`` polynomial sit at
    infinity (``|1>``). Points within chordal distance ``tol`` are merged.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = state.n_qubits
    poly = dicke_to_polynomial(state)
    roots = polynomial_roots(poly)
    pts = [(SpinorPoint.from_ratio(r), 1) for r in roots]
    if n - len(roots):
        pts.append((SpinorPoint.infinity(), n - len(roots)))
    # exact duplicates first: cheap and keeps representatives exact
    exact: dict[SpinorPoint, int] = {}
    for p, m in pts:
        exact[p] = exact.get(p, 0) + m
    merged = cluster_points(list(exact.items()), tol)
    return MajoranaDecomposition(n, tuple(merged))


def points_to_dicke(decomp: MajoranaDecomposition) -> DickeVector:
    """Dicke amplitudes of the symmetrized product of the Majorana points.

    Expands ``prod_i (alpha_i + beta_i t)``; the coefficient of ``t^k``
    divided by ``sqrt(C(N,k))`` is ``d_k`` up to normalization.
    """
    n = decomp.n_qubits
    sp = decomp.spinors()
    alpha = np.array([p.alpha for p in sp], dtype=complex)
    beta = np.array([p.beta for p in sp], dtype=complex)
    e = kernels.spinor_product(alpha, beta)
    raw = [e[k] / sqrt(comb(n, k)) for k in range(n + 1)]
    return DickeVector(n, tuple(raw))
