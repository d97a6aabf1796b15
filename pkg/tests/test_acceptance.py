"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -s`` or
``python tests/test_acceptance.py``. The summary lines are also printed at
the end of any pytest session that collects this module.
"""

import itertools
import math
import sys
import time

import numpy as np
import pytest

from symslocc import (
    DegeneracyConfiguration,
    DickeVector,
    apply_ilo_symmetric,
    canonical_representative,
    cross_ratio,
    degeneracy_configuration,
    dicke_state,
    enumerate_configurations,
    ghz_points,
    majorana_points,
    normalize_state,
    partition_count,
    points_to_dicke,
    slocc_equivalent,
)
from symslocc import classification, oracle
from symslocc.slocc import apply_ilo_points, mobius_apply
from symslocc.state_model import chordal_distance

RESULTS: dict[str, tuple[bool, str]] = {}


def record(key: str, ok: bool, line: str) -> None:
    RESULTS[key] = (ok, line)
    print(f"[{'PASS' if ok else 'FAIL'}] {line}")
    assert ok, line


def mu_state(mu):
    return normalize_state([1 / math.sqrt(2), 0, mu, 0, 1 / math.sqrt(2)], 4)


def parts(state, **kw):
    return majorana_points(state, **kw).configuration.parts


def min_separation(decomp) -> float:
    pts = [p for p, _ in decomp.points]
    return min((chordal_distance(a, b) for i, a in enumerate(pts) for b in pts[:i]), default=1.0)


def witness_checks_out(result, s1, s2, tol=1e-7) -> bool:
    """Verify a witness through the full tensor-product action, not the point map."""
    if not result.equivalent or result.witness is None:
        return False
    image = oracle.kron_apply(result.witness, oracle.symmetric_to_full(s1))
    return oracle.proportional(image, oracle.symmetric_to_full(s2), tol)


def test_01_partition_table():
    classification._partition_table.cache_clear()
    start = time.perf_counter()
    got = [partition_count(n) for n in range(2, 11)]
    elapsed = time.perf_counter() - start
    want = [2, 3, 5, 7, 11, 15, 22, 30, 42]
    ok = got == want and elapsed < 1e-3
    record("01", ok, f"01 partition table p(2..10)={got}, {elapsed * 1e3:.3f} ms (< 1 ms)")


def test_02_family_counts():
    got = {n: len(enumerate_configurations(n)) for n in (4, 5, 6)}
    record("02", got == {4: 5, 5: 7, 6: 11}, f"02 family counts {got}")


def test_03_two_point_families():
    bad = [n for n in range(2, 13)
           if sum(1 for c in enumerate_configurations(n) if c.diversity == 2) != n // 2]
    record("03", not bad, f"03 d=2 families equal floor(N/2) for N=2..12, mismatches {bad}")


def test_04_ghz_reconstruction():
    start = time.perf_counter()
    worst = 0.0
    for n in range(2, 11):
        got = points_to_dicke(ghz_points(n)).as_array()
        want = np.zeros(n + 1, dtype=complex)
        want[0] = want[n] = 1 / math.sqrt(2)
        worst = max(worst, np.abs(got - want).max())
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-10 and elapsed < 1e-2
    record("04", ok, f"04 GHZ reconstruction N=2..10, max error {worst:.2e}, {elapsed * 1e3:.2f} ms (< 10 ms)")


def test_05_dicke_classification():
    failures = []
    worst = 0.0
    for n in range(1, 11):
        for k in range(n // 2 + 1):
            want = (n,) if k == 0 else (n - k, k)
            if parts(dicke_state(n, k)) != want:
                failures.append(("config", n, k))
        for k in range(n + 1):
            for j in range(k, n + 1):
                s1, s2 = dicke_state(n, k), dicke_state(n, j)
                res = slocc_equivalent(s1, s2)
                if j in (k, n - k):
                    worst = max(worst, res.residual)
                    if not (witness_checks_out(res, s1, s2) and res.residual <= 1e-7):
                        failures.append(("equiv", n, k, j))
                elif res.equivalent:
                    failures.append(("inequiv", n, k, j))
    record("05", not failures,
           f"05 Dicke classification N<=10, failures {failures[:5]}, worst witness residual {worst:.1e}")


def test_06_worked_example():
    s = normalize_state([1, 0, 1, 0, 0], 4)
    rep = points_to_dicke(canonical_representative(DegeneracyConfiguration((2, 1, 1))))
    config = parts(s)
    res = slocc_equivalent(s, rep)
    ok = config == (2, 1, 1) and witness_checks_out(res, s, rep)
    record("06", ok, f"06 (D0+D2)/sqrt2 classifies to {list(config)}, equivalent to representative: {res.equivalent}")


def test_07_mu_exclusion():
    generic = {mu: parts(mu_state(mu)) for mu in (0, 0.3, 2j)}
    special = {mu: parts(mu_state(mu), tol=1e-8) for mu in (1 / math.sqrt(3), -1 / math.sqrt(3))}
    ok = all(p == (1, 1, 1, 1) for p in generic.values()) and all(p == (2, 2) for p in special.values())
    record("07", ok, f"07 mu-family configurations generic {list(generic.values())}, "
                     f"mu=+-1/sqrt3 {list(special.values())}")


def test_08_mu_inequivalence():
    a = slocc_equivalent(mu_state(0.2), mu_state(0.5))
    b = slocc_equivalent(mu_state(0.2), mu_state(-0.2))
    ok = not a.equivalent and witness_checks_out(b, mu_state(0.2), mu_state(-0.2))
    record("08", ok, f"08 mu 0.2 vs 0.5 equivalent={a.equivalent}, 0.2 vs -0.2 equivalent={b.equivalent}")


def test_09_configuration_invariance():
    start = time.perf_counter()
    failures = []
    resampled = 0
    for n in range(4, 9):
        configs = enumerate_configurations(n)
        rng = np.random.default_rng(900 + n)
        done = 0
        while done < 200:
            c = configs[rng.integers(len(configs))]
            decomp = oracle.random_points(c, int(rng.integers(2**31)), min_separation=1e-3)
            op = oracle.random_ilo(int(rng.integers(2**31)))
            if min_separation(apply_ilo_points(op, decomp)) < 1e-3:
                resampled += 1
                continue
            state = points_to_dicke(decomp)
            before = degeneracy_configuration(majorana_points(state))
            after = degeneracy_configuration(majorana_points(apply_ilo_symmetric(op, state)))
            if before != c or after != c:
                failures.append((n, c.parts, before.parts, after.parts))
            done += 1
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    record("09", ok, f"09 configuration invariance 5x200 pairs, failures {len(failures)} {failures[:3]}, "
                     f"{resampled} resampled, {elapsed:.1f} s (< 30 s)")


def test_10_oracle_equivalence():
    start = time.perf_counter()
    failures = []
    for n in range(2, 9):
        rng = np.random.default_rng(1000 + n)
        for _ in range(100):
            v = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
            state = DickeVector(n, tuple(v))
            op = oracle.random_ilo(int(rng.integers(2**31)))
            fast = oracle.symmetric_to_full(apply_ilo_symmetric(op, state))
            slow = oracle.kron_apply(op, oracle.symmetric_to_full(state))
            if not oracle.proportional(fast, slow, 1e-8):
                failures.append(n)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    record("10", ok, f"10 point action vs tensor-product action 7x100 cases, failures {len(failures)}, "
                     f"{elapsed:.1f} s (< 60 s)")


def _points_match(a, b, tol) -> bool:
    if a.configuration != b.configuration:
        return False
    left = [p for p, m in a.points for _ in range(m)]
    right = [p for p, m in b.points for _ in range(m)]
    for p in left:
        j = min(range(len(right)), key=lambda i: chordal_distance(p, right[i]))
        if chordal_distance(p, right[j]) > tol:
            return False
        right.pop(j)
    return True


def test_11_round_trip():
    start = time.perf_counter()
    rng = np.random.default_rng(1100)
    worst_state = 0.0
    point_failures = 0
    for _ in range(500):
        n = int(rng.integers(1, 11))
        v = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
        state = DickeVector(n, tuple(v))
        worst_state = max(worst_state, np.abs(points_to_dicke(majorana_points(state)).as_array()
                                              - state.as_array()).max())
        configs = enumerate_configurations(n)
        decomp = oracle.random_points(configs[rng.integers(len(configs))], int(rng.integers(2**31)))
        if not _points_match(majorana_points(points_to_dicke(decomp)), decomp, 1e-9):
            point_failures += 1
    elapsed = time.perf_counter() - start
    ok = worst_state <= 1e-9 and point_failures == 0 and elapsed < 30
    record("11", ok, f"11 round trips 500+500 N<=10, worst coefficient error {worst_state:.1e}, "
                     f"point mismatches {point_failures}, {elapsed:.1f} s (< 30 s)")


def test_12_single_class_families():
    failures = []
    count = 0
    for n in range(1, 7):
        for c in enumerate_configurations(n):
            if c.diversity > 3:
                continue
            for i in range(100):
                s1 = oracle.random_state(c, 12000 + 2 * i)
                s2 = oracle.random_state(c, 12001 + 2 * i)
                count += 1
                if not witness_checks_out(slocc_equivalent(s1, s2), s1, s2):
                    failures.append((c.parts, i))
    record("12", not failures, f"12 d<=3 families N<=6, {count} pairs, failures {failures[:3]}")


def test_13_cross_ratio():
    rng = np.random.default_rng(1300)
    worst = 0.0
    for _ in range(500):
        pts = [oracle.random_sphere_point(rng) for _ in range(4)]
        op = oracle.random_ilo(int(rng.integers(2**31)))
        before = cross_ratio(*pts)
        after = cross_ratio(*[mobius_apply(op, p) for p in pts])
        worst = max(worst, abs(after - before) / max(1.0, abs(before)))
    ghz = [p for p, _ in ghz_points(4).points]
    values = set()
    ghz_ok = True
    for perm in itertools.permutations(ghz):
        cr = cross_ratio(*perm)
        hit = [t for t in (-1.0, 2.0, 0.5) if abs(cr - t) <= 1e-12]
        ghz_ok &= bool(hit)
        values.update(hit)
    ok = worst <= 1e-9 and ghz_ok
    record("13", ok, f"13 cross-ratio invariance 500 cases, worst deviation {worst:.1e}; "
                     f"GHZ_4 orderings give {sorted(values)}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
