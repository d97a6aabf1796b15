"""Degeneracy configurations, entanglement families and canonical representatives."""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .errors import ContinuousFamily, SymsloccError
from .state_model import DegeneracyConfiguration, MajoranaDecomposition, SpinorPoint


def degeneracy_configuration(decomp: MajoranaDecomposition) -> DegeneracyConfiguration:
    return decomp.configuration


def diversity_degree(config: DegeneracyConfiguration) -> int:
    """Number of distinct Majorana points."""
    return len(config.parts)


@lru_cache(maxsize=None)
def _partition_table(n: int) -> tuple[int, ...]:
    # Euler's pentagonal number recurrence.
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def partition_count(n: int) -> int:
    """Number of integer partitions of ``n``, i.e. of entanglement families."""
    if n < 1:
        raise SymsloccError(f"n must be >= 1, got {n}")
    return _partition_table(n)[n]


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_configurations(n: int) -> list[DegeneracyConfiguration]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 1:
        raise SymsloccError(f"n must be >= 1, got {n}")
    return [DegeneracyConfiguration(p) for p in _partitions(n, n)]


def continuous_parameter_count(config: DegeneracyConfiguration) -> int:
    """Continuous parameters labelling the classes of a family: ``max(0, d - 3)``."""
    return max(0, config.diversity - 3)


def family_label(config: DegeneracyConfiguration) -> str:
    """``"S"``, ``"W_k"``, or ``"D_{n1,...,nd}"``; all-distinct families get ``" [GHZ]"``."""
    parts = config.parts
    n = config.n
    if len(parts) == 1:
        label = "S"
    elif len(parts) == 2:
        label = f"W_{parts[1]}"
    else:
        label = "D_{" + ",".join(str(p) for p in parts) + "}"
    if n > 1 and all(p == 1 for p in parts):
        label += " [GHZ]"
    return label


# Fixed anchors for the d <= 3 representatives: infinity, 0 and 1 on the sphere.
ANCHORS = (
    SpinorPoint.infinity(),
    SpinorPoint.zero(),
    SpinorPoint(1 / math.sqrt(2), 1 / math.sqrt(2)),
)


def canonical_representative(config: DegeneracyConfiguration) -> MajoranaDecomposition:
    """Majorana points of the canonical state of a single-class family (d <= 3).

    d = 1 gives ``|1...1>``, d = 2 the Dicke state ``|D_N^(k)>``, d = 3 the
    points ``(inf, 0, 1)`` carrying multiplicities ``(n1, n2, n3)``.
    """
    d = config.diversity
    if d > 3:
        raise ContinuousFamily(
            f"family {family_label(config)} contains a continuum of SLOCC classes"
        )
    return MajoranaDecomposition(config.n, tuple(zip(ANCHORS[:d], config.parts)))


def ghz_points(n: int) -> MajoranaDecomposition:
    """Majorana points of ``(|1...1> + |0...0>)/sqrt(2)``.

    The spinors are ``e^{-i theta_j}|1> + e^{i theta_j}|0>`` with
    ``theta_j = j pi / n``, shifted by ``pi / (2n)`` when ``n`` is even.
    """
    if n < 2:
        raise SymsloccError(f"GHZ points need n >= 2, got {n}")
    offset = math.pi / (2 * n) if n % 2 == 0 else 0.0
    pts = []
    for j in range(n):
        theta = offset + j * math.pi / n
        pts.append(
            (SpinorPoint(cmath.exp(-1j * theta) / math.sqrt(2), cmath.exp(1j * theta) / math.sqrt(2)), 1)
        )
    return MajoranaDecomposition(n, tuple(pts))
