"""Polynomial root finding with numerical multiplicity resolution.

Aberth-Ehrlich iteration locates all roots at once. A root of multiplicity m
computed from floating-point coefficients splits into a disc of m roots of
radius roughly ``eps**(1/m)``, far wider than any sensible clustering
tolerance. Candidate groups, formed by single linkage at shrinking chordal
radii, are therefore tested against the polynomial itself: a group is
accepted as one m-fold root when ``P`` and its first ``m - 1`` derivatives
vanish at the refined centre to within the Horner rounding-error bound.
Once the multiplicities are settled, all distinct roots are fitted jointly
to the coefficients and each is returned as many times as it occurs.
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .errors import NoConvergence
from .state_model import ComplexPolynomial

MAX_SWEEPS = 1000
#: Relative backward-error level at which a group of roots is accepted as one
#: multiple root. Zero disables multiplicity resolution.
MULTIPLICITY_TOL = 5e-14
RESIDUAL_TOL = 1e-10

# Single-linkage radii (chordal) tried from coarse to fine when looking for
# multiple roots.
_LADDER = tuple(10.0 ** (-0.5 * i) for i in range(1, 25))
_NEWTON_STEPS = 12
_ECHO_FACTOR = 100.0
_EPS = np.finfo(float).eps


def chordal(z: complex, w: complex) -> float:
    return abs(z - w) / math.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


def _components(idx: list[int], z: np.ndarray, radius: float) -> list[list[int]]:
    parent = {i: i for i in idx}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in range(len(idx)):
        for b in range(a):
            i, j = idx[a], idx[b]
            if chordal(z[i], z[j]) <= radius:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in idx:
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _refine_multiple(coeffs: np.ndarray, z: complex, m: int, eta: float, reach: float):
    """Return the m-fold root near ``z`` or None if the group is not one.

    Works on the reversed polynomial outside the unit disc so that Taylor
    bounds stay well scaled.
    """
    if abs(z) > 1.0:
        w = _refine_multiple(coeffs[::-1].copy(), 1.0 / z, m, eta, reach)
        return None if w is None or w == 0 else 1.0 / w
    start = z
    for _ in range(_NEWTON_STEPS):
        t, bound = kernels.taylor_shift(coeffs, z, m)
        if abs(t[m - 1]) <= _EPS * bound[m - 1]:
            break
        if t[m] == 0:
            return None
        step = t[m - 1] / (m * t[m])
        z = z - step
        if abs(step) <= 4 * _EPS * (1.0 + abs(z)):
            break
    if chordal(z, start) > reach:
        return None
    t, bound = kernels.taylor_shift(coeffs, z, m - 1)
    for j in range(m):
        if abs(t[j]) > eta * bound[j]:
            return None
    return z


def _polish(coeffs: np.ndarray, z: complex) -> complex:
    """One guarded Newton step, on the reversed polynomial outside the unit disc."""
    if abs(z) > 1.0:
        w = _polish(coeffs[::-1].copy(), 1.0 / z)
        return z if w == 0 else 1.0 / w
    t, bound = kernels.taylor_shift(coeffs, z, 1)
    if t[1] == 0 or abs(t[0]) <= _EPS * bound[0]:
        return z
    cand = z - t[0] / t[1]
    tc, _ = kernels.taylor_shift(coeffs, cand, 0)
    return cand if abs(tc[0]) < abs(t[0]) else z


def _is_echo(coeffs, raw, found, root, m, members) -> bool:
    """Whether an m-fold candidate near an accepted root is only its shadow.

    ``P`` is flat around an accepted multiple root, so a lower-order candidate
    can verify there without being real. The whole polynomial is fitted twice,
    with the candidate as one m-fold root and with its members kept simple; a
    real root costs almost nothing in residual, a shadow forces distinct roots
    together and costs a great deal.
    """
    used = {i for *_, idx in found for i in idx} | set(members)
    others = [complex(raw[i]) for i in range(len(raw)) if i not in used]
    base = [w for w, *_ in found]
    base_m = [k for _, k, *_ in found]
    _, merged = _joint_refine(coeffs, base + [root] + others, base_m + [m] + [1] * len(others))
    loose = [complex(raw[i]) for i in members]
    _, split = _joint_refine(coeffs, base + loose + others, base_m + [1] * (m + len(others)))
    return merged > _ECHO_FACTOR * max(split, _EPS)


def _split_multiple(coeffs, raw, comp, eta, radius, found) -> list[int]:
    """Peel one multiple root off ``comp``; return the members left over.

    The whole group is tried first. On failure the member farthest from the
    centroid is dropped and the rest retried, so that an m-fold ring fused
    with a nearby outlier is found before the ring falls apart at finer radii.
    ``found`` collects ``(root, multiplicity, spread, member indices)``.
    """
    members = list(comp)
    while len(members) > 1:
        centre = complex(np.mean(raw[members]))
        root = _refine_multiple(coeffs, centre, len(members), eta, radius)
        if root is not None:
            m = len(members)
            # a sub-ring of a higher-order root also verifies; climb to the top
            while m < len(comp):
                up = _refine_multiple(coeffs, root, m + 1, eta, radius)
                if up is None:
                    break
                root, m = up, m + 1
            order = sorted(comp, key=lambda i: chordal(raw[i], root))
            near = any(chordal(root, w) <= 2 * r for w, _, r, _ in found)
            if not (near and _is_echo(coeffs, raw, found, root, m, order[:m])):
                found.append((root, m, max(chordal(raw[i], root) for i in order[:m]), order[:m]))
                return order[m:]
        members.remove(max(members, key=lambda i: chordal(raw[i], centre)))
    return comp


def _cofactor_roots(coeffs: np.ndarray, multiple: list[complex], count: int):
    """Roots of the least-squares cofactor ``Q`` in ``P ~ prod (t - w) * Q``.

    Once the multiple roots are fixed, the remaining simple roots are much
    better conditioned as roots of ``Q`` than of ``P`` itself, which is flat
    near a high-order root. Returns None if ``Q`` cannot be solved.
    """
    f = np.ones(1, dtype=complex)
    for w in multiple:
        f = np.convolve(f, np.array([-w, 1.0]))
    a = np.zeros((len(coeffs), count + 1), dtype=complex)
    for k in range(count + 1):
        a[k : k + len(f), k] = f
    q = np.linalg.lstsq(a, coeffs, rcond=None)[0]
    if q[0] == 0 or q[-1] == 0:
        return None
    if count == 1:
        return [complex(-q[0] / q[1])]
    r, _, ok = kernels.aberth(q, MAX_SWEEPS)
    return [_polish(q, complex(z)) for z in r] if ok else None


def _expand(roots, mults) -> np.ndarray:
    """Coefficients of ``prod (t - w)**m``, lowest degree first."""
    alpha = -np.repeat(np.asarray(roots, dtype=complex), mults)
    return kernels.spinor_product(alpha, np.ones(len(alpha), dtype=complex))


def _joint_refine(coeffs: np.ndarray, roots: list[complex], mults: list[int]):
    """Gauss-Newton on ``a * prod (t - w_j)**m_j`` with the multiplicities fixed.

    Close multiple roots are badly determined one at a time; fitting them
    together against the coefficients gives the configuration that best
    reproduces the polynomial. Steps that do not lower the residual stop it.
    Returns the fitted roots and the relative coefficient residual.
    """
    w = np.array(roots, dtype=complex)
    f = _expand(list(w), mults)
    a = np.vdot(f, coeffs) / np.vdot(f, f)
    best = np.linalg.norm(coeffs - a * f)
    for _ in range(_NEWTON_STEPS):
        if best <= _EPS * np.linalg.norm(coeffs):
            break
        cols = [f]
        for j, (wj, mj) in enumerate(zip(w, mults)):
            reduced = list(mults)
            reduced[j] -= 1
            cols.append(-mj * a * np.append(_expand(w, reduced), 0.0))
        jac = np.stack(cols, axis=1)
        step = np.linalg.lstsq(jac, coeffs - a * f, rcond=None)[0]
        w_new = w + step[1:]
        f_new = _expand(list(w_new), mults)
        a_new = np.vdot(f_new, coeffs) / np.vdot(f_new, f_new)
        res = np.linalg.norm(coeffs - a_new * f_new)
        if not res < best:
            break
        w, f, a, best = w_new, f_new, a_new, res
    return [complex(x) for x in w], best / np.linalg.norm(coeffs)


def _resolve(coeffs: np.ndarray, raw: np.ndarray, eta: float) -> list[complex]:
    found: list[tuple[complex, int, float, list[int]]] = []
    simple: list[int] = []
    pending = [list(range(len(raw)))]
    for radius in _LADDER:
        nxt = []
        for group in pending:
            for comp in _components(group, raw, radius):
                rest = comp
                if len(comp) > 1 and eta > 0:
                    rest = _split_multiple(coeffs, raw, comp, eta, radius, found)
                if len(rest) == 1:
                    simple.append(rest[0])
                elif rest:
                    nxt.append(rest)
        pending = nxt
        if not pending:
            break
    for group in pending:
        simple.extend(group)
    if not found:
        return [_polish(coeffs, raw[i]) for i in simple]
    out = [w for w, m, *_ in found for _ in range(m)]
    est = _cofactor_roots(coeffs, out, len(simple)) if simple else []
    if est is None:
        est = [_polish(coeffs, raw[i]) for i in simple]
    mults = [m for _, m, *_ in found] + [1] * len(est)
    fitted, _ = _joint_refine(coeffs, [w for w, *_ in found] + est, mults)
    return [w for w, m in zip(fitted, mults) for _ in range(m)]


def residual(poly: ComplexPolynomial, r: complex) -> float:
    """``|P(r)|`` relative to ``sum_k |c_k| |r|^k`` (reversed outside the unit disc)."""
    c = poly.as_array()[: poly.degree + 1]
    if abs(r) > 1.0:
        c, r = c[::-1], 1.0 / r
    t, bound = kernels.taylor_shift(c, r, 0)
    return abs(t[0]) / bound[0] if bound[0] else 0.0


def polynomial_roots(
    poly: ComplexPolynomial,
    max_sweeps: int = MAX_SWEEPS,
    multiplicity_tol: float = MULTIPLICITY_TOL,
) -> list[complex]:
    """All ``poly.degree`` roots with multiplicity.

    Low-order coefficients at rounding level (``eps * max|c|``) are treated as
    exact zeros. The much coarser degree threshold is not mirrored here: a
    tight cluster near 0 legitimately has tiny low-order coefficients. Raises
    :class:`NoConvergence` if Aberth iteration has not settled after
    ``max_sweeps`` sweeps.
    """
    deg = poly.degree
    c = poly.as_array()[: deg + 1]
    if deg == 0:
        return []
    scale = np.abs(c).max()
    low = 0
    while low < deg and abs(c[low]) <= _EPS * scale:
        low += 1
    work = c[low:]
    rest = deg - low
    zeros = [0j] * low
    if rest == 0:
        return zeros
    if rest == 1:
        return zeros + [complex(-work[0] / work[1])]
    raw, sweeps, ok = kernels.aberth(work, int(max_sweeps))
    if not ok:
        raise NoConvergence(f"Aberth iteration did not converge in {sweeps} sweeps")
    return zeros + [complex(r) for r in _resolve(work, np.asarray(raw), multiplicity_tol)]
