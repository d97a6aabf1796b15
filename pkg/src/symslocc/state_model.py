"""Immutable value types for symmetric N-qubit states.

Conventions used throughout the package:

* A single-qubit vector is written ``alpha |1> + beta |0>`` and stored as
  ``(alpha, beta)``; ``|1>`` is local index 0.
* ``DickeVector.coeffs[k]`` multiplies the Dicke state with ``k`` qubits in
  ``|0>``.
* Global phases are fixed by making the first significant component real and
  non-negative, so two equal states compare equal coefficient-wise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import LengthMismatch, NotInvertible, SymsloccError, ZeroState

#: Magnitude below which a component counts as zero when fixing the gauge.
GAUGE_EPS = 1e-12
#: Default clustering / equivalence tolerance.
DEFAULT_TOL = 1e-8
#: Relative threshold deciding the polynomial degree (and hence the number of
#: Majorana points at infinity).
DEGREE_EPS = 1e-12
INVERTIBILITY_FLOOR = 1e-10

_ZERO_NORM = 1e-14
_UNIT_SLACK = 8 * np.finfo(float).eps


def _fix_gauge(values: list[complex]) -> list[complex]:
    for i, v in enumerate(values):
        mag = abs(v)
        if mag > GAUGE_EPS:
            if v.imag == 0.0 and v.real > 0.0:
                return values
            phase = v.conjugate() / mag
            out = [w * phase for w in values]
            out[i] = complex(mag, 0.0)
            return out
    return values


def _normalized(values: list[complex]) -> list[complex]:
    norm2 = math.fsum(abs(v) ** 2 for v in values)
    if abs(norm2 - 1.0) <= _UNIT_SLACK:
        return values
    norm = math.sqrt(norm2)
    return [v / norm for v in values]


@dataclass(frozen=True)
class DickeVector:
    """Symmetric state as N+1 Dicke amplitudes, normalized and gauge-fixed."""

    n_qubits: int
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        n = self.n_qubits
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise SymsloccError(f"n_qubits must be a positive integer, got {n!r}")
        vals = [complex(c) for c in self.coeffs]
        if len(vals) != n + 1:
            raise LengthMismatch(f"expected {n + 1} Dicke coefficients, got {len(vals)}")
        if not all(cmath.isfinite(v) for v in vals):
            raise SymsloccError("Dicke coefficients must be finite")
        if max(abs(v) for v in vals) < _ZERO_NORM:
            raise ZeroState("all Dicke coefficients vanish")
        vals = _fix_gauge(_normalized(vals))
        object.__setattr__(self, "n_qubits", int(n))
        object.__setattr__(self, "coeffs", tuple(vals))

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)

    def __len__(self):
        return len(self.coeffs)


def normalize_state(raw: Sequence[complex], n: int) -> DickeVector:
    """Normalize raw Dicke amplitudes for ``n`` qubits.

    Raises :class:`ZeroState` for a (numerically) zero vector and
    :class:`LengthMismatch` if ``len(raw) != n + 1``.
    """
    return DickeVector(n, tuple(complex(c) for c in raw))


@dataclass(frozen=True)
class SpinorPoint:
    """A single-qubit state ``alpha|1> + beta|0>`` up to scalar: a point of the sphere."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        a, b = complex(self.alpha), complex(self.beta)
        norm = math.hypot(abs(a), abs(b))
        if norm < _ZERO_NORM or not math.isfinite(norm):
            raise ZeroState("spinor must be a finite nonzero vector")
        if abs(norm - 1.0) > _UNIT_SLACK:
            a, b = a / norm, b / norm
        a, b = _fix_gauge([a, b])
        if abs(a) <= GAUGE_EPS:
            a, b = 0j, 1 + 0j
        elif abs(b) <= GAUGE_EPS:
            a, b = 1 + 0j, 0j
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @classmethod
    def infinity(cls) -> "SpinorPoint":
        return cls(1.0, 0.0)

    @classmethod
    def zero(cls) -> "SpinorPoint":
        return cls(0.0, 1.0)

    @classmethod
    def from_ratio(cls, z: complex) -> "SpinorPoint":
        """Point with ``alpha / beta == z``; ``math.inf`` gives the point at infinity."""
        if isinstance(z, float) and math.isinf(z):
            return cls.infinity()
        z = complex(z)
        if cmath.isinf(z):
            return cls.infinity()
        return cls(z, 1.0)

    @classmethod
    def from_bloch(cls, v: Sequence[float]) -> "SpinorPoint":
        x, y, z = (float(t) for t in v)
        r = math.sqrt(x * x + y * y + z * z)
        if r < _ZERO_NORM:
            raise ZeroState("Bloch vector has zero length")
        x, y, z = x / r, y / r, z / r
        if z >= 0:
            a = math.sqrt((1.0 + z) / 2.0)
        else:
            # avoids cancellation in 1 + z near the south pole
            a = math.hypot(x, y) / (2.0 * math.sqrt((1.0 - z) / 2.0))
        if a <= GAUGE_EPS:
            return cls(0.0, 1.0)
        return cls(a, complex(x, y) / (2.0 * a))

    @property
    def is_infinity(self) -> bool:
        return self.beta == 0

    @property
    def ratio(self) -> complex:
        """``alpha / beta`` (complex infinity for the point at infinity)."""
        if self.beta == 0:
            return complex(math.inf, 0.0)
        return self.alpha / self.beta

    def bloch(self) -> np.ndarray:
        """Bloch vector with ``|1>`` at the north pole."""
        ab = self.alpha.conjugate() * self.beta
        return np.array(
            [2 * ab.real, 2 * ab.imag, abs(self.alpha) ** 2 - abs(self.beta) ** 2]
        )

    def as_array(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=complex)


def bracket(p: SpinorPoint, q: SpinorPoint) -> complex:
    """Determinant ``alpha_p beta_q - alpha_q beta_p``."""
    return p.alpha * q.beta - q.alpha * p.beta


def chordal_distance(p: SpinorPoint, q: SpinorPoint) -> float:
    """``|alpha_p beta_q - alpha_q beta_p|``; zero iff the points coincide."""
    return min(1.0, abs(bracket(p, q)))


@dataclass(frozen=True)
class DegeneracyConfiguration:
    """Weakly decreasing multiplicity list; a partition of N."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise SymsloccError(f"parts must be positive integers, got {self.parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise SymsloccError(f"parts must be weakly decreasing, got {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_multiplicities(cls, mults: Iterable[int]) -> "DegeneracyConfiguration":
        return cls(tuple(sorted(mults, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def diversity(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class MajoranaDecomposition:
    """Distinct Majorana points with multiplicities summing to N."""

    n_qubits: int
    points: tuple[tuple[SpinorPoint, int], ...]

    def __post_init__(self):
        pts = tuple((p, int(m)) for p, m in self.points)
        if any(m < 1 for _, m in pts):
            raise SymsloccError("multiplicities must be positive")
        if sum(m for _, m in pts) != self.n_qubits:
            raise SymsloccError(
                f"multiplicities sum to {sum(m for _, m in pts)}, expected {self.n_qubits}"
            )
        for i in range(len(pts)):
            for j in range(i):
                if chordal_distance(pts[i][0], pts[j][0]) <= _ZERO_NORM:
                    raise SymsloccError("Majorana points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    @property
    def configuration(self) -> DegeneracyConfiguration:
        return DegeneracyConfiguration.from_multiplicities(m for _, m in self.points)

    @property
    def diversity(self) -> int:
        return len(self.points)

    def spinors(self) -> list[SpinorPoint]:
        """All N points, repeated according to multiplicity."""
        return [p for p, m in self.points for _ in range(m)]

    def multiplicity_of_infinity(self) -> int:
        return sum(m for p, m in self.points if p.is_infinity)


@dataclass(frozen=True)
class LocalOperation:
    """Invertible 2x2 matrix ``[[a, b], [c, d]]`` in the (|1>, |0>) basis."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        vals = [complex(v) for v in (self.a, self.b, self.c, self.d)]
        if not all(cmath.isfinite(v) for v in vals):
            raise NotInvertible("matrix entries must be finite")
        scale = max(abs(v) for v in vals)
        det = vals[0] * vals[3] - vals[1] * vals[2]
        if scale == 0 or abs(det) < INVERTIBILITY_FLOOR * scale * scale:
            raise NotInvertible(f"determinant {det!r} too small for entries of size {scale:g}")
        for name, v in zip("abcd", vals):
            object.__setattr__(self, name, v)

    @classmethod
    def from_matrix(cls, m) -> "LocalOperation":
        m = np.asarray(m, dtype=complex)
        if m.shape != (2, 2):
            raise SymsloccError(f"expected a 2x2 matrix, got shape {m.shape}")
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def identity(cls) -> "LocalOperation":
        return cls(1, 0, 0, 1)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def condition(self) -> float:
        return float(np.linalg.cond(self.matrix))

    def inverse(self) -> "LocalOperation":
        return LocalOperation(self.d, -self.b, -self.c, self.a)

    def scaled(self, s: complex) -> "LocalOperation":
        return LocalOperation(s * self.a, s * self.b, s * self.c, s * self.d)

    def __matmul__(self, other: "LocalOperation") -> "LocalOperation":
        return LocalOperation.from_matrix(self.matrix @ other.matrix)


@dataclass(frozen=True)
class ComplexPolynomial:
    """Coefficients lowest degree first."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        """Index of the highest coefficient above ``DEGREE_EPS * max|c|``."""
        mags = [abs(c) for c in self.coeffs]
        top = max(mags, default=0.0)
        if top == 0.0:
            return 0
        for k in range(len(mags) - 1, -1, -1):
            if mags[k] > DEGREE_EPS * top:
                return k
        return 0

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)
