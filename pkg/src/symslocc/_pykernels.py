"""Pure-Python kernels. Reference implementation and fallback for ``_ckernels``."""

import math

import numpy as np

_EPS = np.finfo(float).eps
_START_ANGLE = 0.4


def spinor_product(alpha, beta):
    """Coefficients of ``prod_i (alpha_i + beta_i t)``, lowest degree first."""
    n = len(alpha)
    out = [0j] * (n + 1)
    out[0] = 1 + 0j
    for i in range(n):
        a = complex(alpha[i])
        b = complex(beta[i])
        for k in range(i + 1, 0, -1):
            out[k] = a * out[k] + b * out[k - 1]
        out[0] = a * out[0]
    return np.array(out, dtype=complex)


def taylor_shift(coeffs, z, m):
    """Return ``(t, bound)`` with ``t[j] = P^(j)(z)/j!`` for ``j <= m``.

    ``bound[j]`` is the same Taylor coefficient computed from ``|c_k|`` and
    ``|z|``, the natural scale for rounding errors in ``t[j]``.
    """
    work = [complex(c) for c in coeffs]
    babs = [abs(c) for c in work]
    az = abs(z)
    deg = len(work) - 1
    t = np.zeros(m + 1, dtype=complex)
    bnd = np.zeros(m + 1)
    for j in range(min(m, deg) + 1):
        acc = work[deg]
        accb = babs[deg]
        for k in range(deg - 1, j - 1, -1):
            acc = acc * z + work[k]
            work[k] = acc
            accb = accb * az + babs[k]
            babs[k] = accb
        t[j] = work[j]
        bnd[j] = babs[j]
    return t, bnd


def aberth(coeffs, max_sweeps):
    """Aberth-Ehrlich simultaneous iteration.

    ``coeffs`` must have nonzero constant and leading terms. Returns
    ``(roots, sweeps, converged)``. A root is frozen once ``|P(z)|`` falls
    under the Horner rounding-error bound.
    """
    c = [complex(x) for x in coeffs]
    deg = len(c) - 1
    cabs = [abs(x) for x in c]
    radius = (cabs[0] / cabs[deg]) ** (1.0 / deg)
    z = [
        radius * complex(math.cos(2 * math.pi * j / deg + _START_ANGLE),
                         math.sin(2 * math.pi * j / deg + _START_ANGLE))
        for j in range(deg)
    ]
    done = [False] * deg
    stop = (4 * deg + 1) * _EPS
    sweeps = 0
    while sweeps < max_sweeps and not all(done):
        sweeps += 1
        for i in range(deg):
            if done[i]:
                continue
            zi = z[i]
            azi = abs(zi)
            p = c[deg]
            dp = 0j
            bound = cabs[deg]
            for k in range(deg - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + c[k]
                bound = bound * azi + cabs[k]
            if abs(p) <= stop * bound:
                done[i] = True
                continue
            s = 0j
            for j in range(deg):
                if j != i:
                    diff = zi - z[j]
                    if diff == 0:
                        diff = _EPS * (1.0 + azi)
                    s += 1.0 / diff
            if dp == 0:
                w = (1.0 + azi) * 1e-3 * complex(math.cos(i), math.sin(i))
            else:
                ratio = p / dp
                denom = 1.0 - ratio * s
                w = ratio / denom if denom != 0 else ratio
            z[i] = zi - w
    return np.array(z, dtype=complex), sweeps, all(done)
