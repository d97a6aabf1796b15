"""Invertible local operations acting on symmetric states through their Majorana points.

Applying ``A`` to every qubit moves each Majorana point by the Mobius map
``z -> (a z + b) / (c z + d)`` and keeps multiplicities, so two states are
SLOCC equivalent iff one Mobius map carries one point multiset onto the
other.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .classification import ANCHORS
from .errors import (
    DegenerateImage,
    DegeneratePoints,
    DegenerateTriple,
    SymsloccError,
    TooFewPoints,
    WitnessVerificationError,
)
from .majorana import majorana_points, points_to_dicke
from .state_model import (
    DEFAULT_TOL,
    DegeneracyConfiguration,
    DickeVector,
    LocalOperation,
    MajoranaDecomposition,
    SpinorPoint,
    bracket,
    chordal_distance,
)

_TRIPLE_EPS = 1e-10
_COINCIDENT_EPS = 1e-12

# Spare points used to complete a triple when a state has fewer than three
# distinct Majorana points.
_SPARES = ANCHORS + (
    SpinorPoint(1 / math.sqrt(2), -1 / math.sqrt(2)),
    SpinorPoint(1 / math.sqrt(2), 1j / math.sqrt(2)),
    SpinorPoint(1 / math.sqrt(2), -1j / math.sqrt(2)),
)


def mobius_apply(op: LocalOperation, p: SpinorPoint) -> SpinorPoint:
    """Image ``A (alpha, beta)`` of a point, renormalized and gauge-fixed."""
    a = op.a * p.alpha + op.b * p.beta
    b = op.c * p.alpha + op.d * p.beta
    if math.hypot(abs(a), abs(b)) < 1e-14:
        raise DegenerateImage("image vector vanishes; operation is not invertible")
    return SpinorPoint(a, b)


def apply_ilo_points(op: LocalOperation, decomp: MajoranaDecomposition) -> MajoranaDecomposition:
    return MajoranaDecomposition(
        decomp.n_qubits, tuple((mobius_apply(op, p), m) for p, m in decomp.points)
    )


def apply_ilo_symmetric(
    op: LocalOperation, state: DickeVector, tol: float = DEFAULT_TOL
) -> DickeVector:
    """``A^{(x)N} |psi>`` computed by moving the Majorana points of ``state``."""
    return points_to_dicke(apply_ilo_points(op, majorana_points(state, tol)))


def _to_reference(p1: SpinorPoint, p2: SpinorPoint, p3: SpinorPoint) -> np.ndarray:
    # Matrix sending p1 -> inf, p2 -> 0, p3 -> 1.
    lam = bracket(p3, p1) / bracket(p3, p2)
    return np.array(
        [[lam * p2.beta, -lam * p2.alpha], [p1.beta, -p1.alpha]], dtype=complex
    )


def _check_triple(pts: Sequence[SpinorPoint], which: str):
    if len(pts) != 3:
        raise DegenerateTriple(f"{which} must contain exactly three points")
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if chordal_distance(pts[i], pts[j]) <= _TRIPLE_EPS:
            raise DegenerateTriple(f"{which} points {i} and {j} coincide")


def mobius_from_pairs(
    src: Sequence[SpinorPoint],
    dst: Sequence[SpinorPoint],
    multiplicities: Optional[Sequence[int]] = None,
) -> LocalOperation:
    """The Mobius map sending ``src[i]`` to ``dst[i]`` for ``i = 0, 1, 2``.

    Built as ``M_dst^{-1} M_src`` through the reference triple
    ``(inf, 0, 1)`` and normalized to unit determinant. With
    ``multiplicities`` ``(n1, n2, n3)`` the matrix is rescaled so that
    ``A src_i = s_i dst_i`` with ``prod s_i^{n_i} = 1`` (principal root),
    which makes ``A^{(x)N}`` map the unnormalized symmetrized products onto
    each other exactly.
    """
    _check_triple(src, "src")
    _check_triple(dst, "dst")
    m = np.linalg.solve(_to_reference(*dst), _to_reference(*src))
    m = m / cmath.sqrt(np.linalg.det(m))
    op = LocalOperation.from_matrix(m)
    if multiplicities is not None:
        if len(multiplicities) != 3 or any(k < 1 for k in multiplicities):
            raise SymsloccError("multiplicities must be three positive integers")
        n = sum(multiplicities)
        prod = 1 + 0j
        for p, q, k in zip(src, dst, multiplicities):
            img = op.matrix @ p.as_array()
            prod *= complex(np.vdot(q.as_array(), img)) ** k
        op = op.scaled(prod ** (-1.0 / n))
    return op


def _sort_key(item: tuple[SpinorPoint, int]):
    p, m = item
    if p.is_infinity:
        return (-m, math.inf, 0.0)
    z = p.ratio
    return (-m, abs(z), cmath.phase(z))


def ordered_points(decomp: MajoranaDecomposition) -> list[tuple[SpinorPoint, int]]:
    """Distinct points by multiplicity (desc), then ``|z|`` and phase (asc)."""
    return sorted(decomp.points, key=_sort_key)


def cross_ratio(p1: SpinorPoint, p2: SpinorPoint, p3: SpinorPoint, p4: SpinorPoint) -> complex:
    """``(z1-z3)(z2-z4) / ((z1-z4)(z2-z3))`` in homogeneous form (valid at infinity)."""
    pts = (p1, p2, p3, p4)
    for i in range(4):
        for j in range(i):
            if chordal_distance(pts[i], pts[j]) <= _COINCIDENT_EPS:
                raise DegeneratePoints(f"points {j} and {i} coincide")
    return (bracket(p1, p3) * bracket(p2, p4)) / (bracket(p1, p4) * bracket(p2, p3))


def projective_residual(a: DickeVector, b: DickeVector) -> float:
    """Max coefficient difference after aligning the global phase of ``b`` to ``a``."""
    va, vb = a.as_array(), b.as_array()
    ov = np.vdot(vb, va)
    phase = ov / abs(ov) if abs(ov) > 0 else 1.0
    return float(np.abs(va - phase * vb).max())


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witness: Optional[LocalOperation]
    configuration: Optional[DegeneracyConfiguration]
    residual: Optional[float] = None
    reason: str = ""

    def __bool__(self):
        return self.equivalent


def _match(images, targets, tol) -> bool:
    # Greedy nearest neighbour; every image must claim a distinct target of
    # equal multiplicity closer than tol.
    used = [False] * len(targets)
    for p, m in images:
        best, best_d = -1, math.inf
        for j, (q, k) in enumerate(targets):
            if used[j] or k != m:
                continue
            dist = chordal_distance(p, q)
            if dist < best_d:
                best, best_d = j, dist
        if best < 0 or best_d >= tol:
            return False
        used[best] = True
    return all(used)


def _spare(avoid: Sequence[SpinorPoint]) -> SpinorPoint:
    return max(_SPARES, key=lambda s: min(chordal_distance(s, a) for a in avoid))


def _antipode(p: SpinorPoint) -> SpinorPoint:
    return SpinorPoint(-p.beta.conjugate(), p.alpha.conjugate())


def _complete(pts: list[SpinorPoint]) -> list[SpinorPoint]:
    pts = list(pts)
    if len(pts) == 1:
        pts.append(_antipode(pts[0]))
    if len(pts) == 2:
        pts.append(_spare(pts))
    return pts


def _witness_residual(op, d1: MajoranaDecomposition, s2: DickeVector) -> float:
    return projective_residual(s2, points_to_dicke(apply_ilo_points(op, d1)))


def slocc_equivalent(s1: DickeVector, s2: DickeVector, tol: float = DEFAULT_TOL) -> EquivalenceResult:
    """Decide whether one symmetric ILO maps ``s1`` onto ``s2``.

    Families with at most three distinct points are single classes, so any
    multiplicity-respecting assignment gives a witness. For four or more
    points the map fixed by three anchors is tested against the remaining
    points. Every returned witness reproduces ``s2`` within ``10 * tol``.
    """
    if s1.n_qubits != s2.n_qubits:
        raise SymsloccError(f"qubit numbers differ: {s1.n_qubits} vs {s2.n_qubits}")
    d1 = majorana_points(s1, tol)
    d2 = majorana_points(s2, tol)
    c1, c2 = d1.configuration, d2.configuration
    if c1 != c2:
        return EquivalenceResult(False, None, None, reason=f"configurations differ: {c1} vs {c2}")
    pts1 = ordered_points(d1)
    pts2 = ordered_points(d2)
    d = len(pts1)
    limit = 10 * tol

    if d <= 3:
        src = _complete([p for p, _ in pts1])
        best = math.inf
        for perm in itertools.permutations(range(d)):
            if any(pts2[perm[i]][1] != pts1[i][1] for i in range(d)):
                continue
            dst = _complete([pts2[perm[i]][0] for i in range(d)])
            op = mobius_from_pairs(src, dst)
            res = _witness_residual(op, d1, s2)
            best = min(best, res)
            if res <= limit:
                return EquivalenceResult(True, op, c1, res, reason=f"single-class family (d={d})")
        raise WitnessVerificationError(
            f"no witness verified for single-class family {c1}; best residual {best:.3g}"
        )

    anchors = pts1[:3]
    rest1 = pts1[3:]
    for triple in itertools.permutations(range(d), 3):
        if any(pts2[triple[i]][1] != anchors[i][1] for i in range(3)):
            continue
        op = mobius_from_pairs([p for p, _ in anchors], [pts2[t][0] for t in triple])
        images = [(mobius_apply(op, p), m) for p, m in rest1]
        targets = [pts2[j] for j in range(d) if j not in triple]
        if not _match(images, targets, tol):
            continue
        res = _witness_residual(op, d1, s2)
        if res <= limit:
            return EquivalenceResult(True, op, c1, res, reason="anchor map matches all points")
    return EquivalenceResult(False, None, c1, reason="no anchor map matches the remaining points")


def canonical_form(state: DickeVector, tol: float = DEFAULT_TOL) -> MajoranaDecomposition:
    """Move the three leading points (see :func:`ordered_points`) to ``inf, 0, 1``.

    The images of the other ``d - 3`` points are the continuous class
    coordinates.
    """
    decomp = majorana_points(state, tol)
    pts = ordered_points(decomp)
    if len(pts) < 3:
        raise TooFewPoints(f"canonical form needs d >= 3, state has d = {len(pts)}")
    op = mobius_from_pairs([p for p, _ in pts[:3]], ANCHORS)
    out = [(a, m) for a, (_, m) in zip(ANCHORS, pts[:3])]
    out += [(mobius_apply(op, p), m) for p, m in pts[3:]]
    return MajoranaDecomposition(decomp.n_qubits, tuple(out))


def canonical_coordinates(form: MajoranaDecomposition) -> list[complex]:
    """Ratio coordinates of the points of a canonical form beyond the three anchors."""
    return [p.ratio for p, _ in form.points[3:]]
