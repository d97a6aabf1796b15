"""Brute-force ground truth over the full 2^N amplitude space.

Basis index bit ``q`` (most significant first) is the state of qubit ``q``,
with 0 meaning ``|1>`` and 1 meaning ``|0>``; the number of ``|0>``
components of a basis string is therefore its popcount.
"""

from __future__ import annotations

import itertools
import math
from math import comb, sqrt

import numpy as np

from .errors import NotInvertible, NotSymmetric, TooLarge
from .majorana import points_to_dicke
from .state_model import (
    DegeneracyConfiguration,
    DickeVector,
    LocalOperation,
    MajoranaDecomposition,
    SpinorPoint,
    chordal_distance,
)

MAX_QUBITS = 14
_MIN_SEPARATION = 1e-2


def _check_size(n: int):
    if n > MAX_QUBITS:
        raise TooLarge(f"full vectors are limited to {MAX_QUBITS} qubits, got {n}")


def _n_from_length(v: np.ndarray) -> int:
    n = int(round(math.log2(len(v))))
    if 2**n != len(v) or n < 1:
        raise ValueError(f"length {len(v)} is not a power of two")
    _check_size(n)
    return n


def hamming_weights(n: int) -> np.ndarray:
    idx = np.arange(2**n)
    return np.array([bin(i).count("1") for i in idx])


def symmetric_to_full(state: DickeVector) -> np.ndarray:
    n = state.n_qubits
    _check_size(n)
    w = hamming_weights(n)
    amps = np.array([d / sqrt(comb(n, k)) for k, d in enumerate(state.coeffs)])
    return amps[w]


def kron_apply(op: LocalOperation, v: np.ndarray) -> np.ndarray:
    """``A^{(x)N} v`` by contracting ``A`` into each tensor axis in turn."""
    v = np.asarray(v, dtype=complex)
    n = _n_from_length(v)
    t = v.reshape((2,) * n)
    a = op.matrix
    for axis in range(n):
        t = np.moveaxis(np.tensordot(a, t, axes=([1], [axis])), 0, axis)
    return t.reshape(-1)


def product_state(spinors) -> np.ndarray:
    """``eps_1 (x) ... (x) eps_N`` as a full vector."""
    out = np.ones(1, dtype=complex)
    for p in spinors:
        out = np.kron(out, p.as_array())
    return out


def symmetrize(v: np.ndarray) -> np.ndarray:
    """Average of ``v`` over all qubit permutations (explicit axis permutations)."""
    v = np.asarray(v, dtype=complex)
    n = _n_from_length(v)
    t = v.reshape((2,) * n)
    acc = np.zeros_like(t)
    count = 0
    for perm in itertools.permutations(range(n)):
        acc += np.transpose(t, perm)
        count += 1
    return (acc / count).reshape(-1)


def full_to_symmetric(v: np.ndarray, tol: float = 1e-8) -> DickeVector:
    v = np.asarray(v, dtype=complex)
    n = _n_from_length(v)
    w = hamming_weights(n)
    scale = np.abs(v).max()
    coeffs = []
    for k in range(n + 1):
        cls = v[w == k]
        if np.abs(cls - cls[0]).max() > tol * max(scale, 1e-300):
            raise NotSymmetric(f"amplitudes with {k} zeros differ")
        coeffs.append(sqrt(comb(n, k)) * cls.mean())
    return DickeVector(n, tuple(coeffs))


def project_dicke(v: np.ndarray) -> DickeVector:
    """Orthogonal projection of ``v`` onto the Dicke basis: ``d_k = <D_k|v>``."""
    v = np.asarray(v, dtype=complex)
    n = _n_from_length(v)
    w = hamming_weights(n)
    return DickeVector(n, tuple(v[w == k].sum() / sqrt(comb(n, k)) for k in range(n + 1)))


def proportional(v: np.ndarray, w: np.ndarray, tol: float) -> bool:
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    ov = abs(np.vdot(v, w)) ** 2
    return bool(ov >= (1 - tol) * np.vdot(v, v).real * np.vdot(w, w).real)


def oracle_points_to_dicke(decomp: MajoranaDecomposition, explicit: bool = False) -> DickeVector:
    """Dicke vector of the symmetrized tensor product of the points, brute force.

    ``explicit`` sums over all N! qubit permutations; otherwise the product
    state is projected onto the Dicke basis, which gives the same result.
    """
    v = product_state(decomp.spinors())
    if explicit:
        return full_to_symmetric(symmetrize(v))
    return project_dicke(v)


def random_sphere_point(rng: np.random.Generator) -> SpinorPoint:
    cos_t = rng.uniform(-1.0, 1.0)
    phi = rng.uniform(0.0, 2 * math.pi)
    sin_t = math.sqrt(max(0.0, 1 - cos_t * cos_t))
    return SpinorPoint.from_bloch((sin_t * math.cos(phi), sin_t * math.sin(phi), cos_t))


def random_points(
    config: DegeneracyConfiguration, seed: int, min_separation: float = _MIN_SEPARATION
) -> MajoranaDecomposition:
    rng = np.random.default_rng(seed)
    pts: list[SpinorPoint] = []
    while len(pts) < config.diversity:
        p = random_sphere_point(rng)
        if all(chordal_distance(p, q) >= min_separation for q in pts):
            pts.append(p)
    return MajoranaDecomposition(config.n, tuple(zip(pts, config.parts)))


def random_state(config: DegeneracyConfiguration, seed: int) -> DickeVector:
    """State with sphere-uniform distinct points carrying the multiplicities of ``config``."""
    return points_to_dicke(random_points(config, seed))


def random_ilo(seed: int, max_condition: float = 100.0) -> LocalOperation:
    """Complex Gaussian 2x2 matrix, resampled until ``cond <= max_condition``."""
    rng = np.random.default_rng(seed)
    while True:
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        if np.linalg.cond(m) > max_condition:
            continue
        try:
            return LocalOperation.from_matrix(m)
        except NotInvertible:
            continue
