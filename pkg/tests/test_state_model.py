import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from symslocc import (
    ComplexPolynomial,
    DegeneracyConfiguration,
    LengthMismatch,
    LocalOperation,
    MajoranaDecomposition,
    NotInvertible,
    SpinorPoint,
    SymsloccError,
    ZeroState,
    chordal_distance,
    normalize_state,
)

S = 1 / math.sqrt(2)

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)
raw_vectors = st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(cplx, min_size=n + 1, max_size=n + 1))
).filter(lambda t: max(abs(c) for c in t[1]) > 1e-6)
spinors = st.tuples(cplx, cplx).filter(lambda t: abs(t[0]) + abs(t[1]) > 1e-6).map(
    lambda t: SpinorPoint(*t)
)


def test_normalize_ghz3():
    s = normalize_state([1, 0, 0, 1], 3)
    assert s.coeffs == pytest.approx([S, 0, 0, S], abs=1e-15)


def test_normalize_zero_state():
    with pytest.raises(ZeroState):
        normalize_state([0, 0, 0, 0], 3)


def test_normalize_length_mismatch():
    with pytest.raises(LengthMismatch):
        normalize_state([1, 0, 0], 3)


def test_normalize_fixes_global_phase():
    s = normalize_state([2j, 0, 0, 2j], 3)
    assert s.coeffs[0] == complex(S, 0)
    assert s.coeffs == pytest.approx([S, 0, 0, S], abs=1e-15)


def test_gauge_skips_negligible_leading_coefficients():
    s = normalize_state([1e-14, 1j, 0], 2)
    assert s.coeffs[1].imag == 0 and s.coeffs[1].real > 0


@given(raw_vectors)
def test_normalize_idempotent(t):
    n, raw = t
    once = normalize_state(raw, n)
    twice = normalize_state(once.coeffs, n)
    assert once.coeffs == twice.coeffs


@given(raw_vectors, st.floats(0, 2 * math.pi))
def test_gauge_stability(t, phi):
    n, raw = t
    a = normalize_state(raw, n).as_array()
    b = normalize_state([cmath.exp(1j * phi) * c for c in raw], n).as_array()
    assert np.abs(a - b).max() <= 1e-12


@given(raw_vectors)
def test_stored_normalized(t):
    n, raw = t
    s = normalize_state(raw, n)
    assert abs(sum(abs(c) ** 2 for c in s.coeffs) - 1) <= 1e-12


def test_chordal_examples():
    one, zero = SpinorPoint.infinity(), SpinorPoint.zero()
    plus = SpinorPoint(S, S)
    assert chordal_distance(one, zero) == 1.0
    assert chordal_distance(plus, plus) == 0.0
    assert chordal_distance(one, plus) == pytest.approx(1 / math.sqrt(2), abs=1e-15)


@given(spinors, spinors)
def test_chordal_symmetric_and_bounded(p, q):
    d = chordal_distance(p, q)
    assert d == chordal_distance(q, p)
    assert 0.0 <= d <= 1.0


@given(spinors)
def test_spinor_invariants(p):
    assert abs(abs(p.alpha) ** 2 + abs(p.beta) ** 2 - 1) <= 1e-12
    lead = p.alpha if abs(p.alpha) > 1e-12 else p.beta
    assert lead.imag == 0 and lead.real >= 0


@given(spinors)
def test_bloch_round_trip(p):
    q = SpinorPoint.from_bloch(p.bloch())
    assert chordal_distance(p, q) <= 1e-12


def test_infinity_is_exact():
    assert SpinorPoint.infinity() == SpinorPoint(1, 0)
    assert SpinorPoint.from_ratio(complex("inf")) == SpinorPoint(1, 0)
    assert SpinorPoint(3j, 0) == SpinorPoint(1, 0)
    assert SpinorPoint.from_bloch((0, 0, 1)) == SpinorPoint(1, 0)
    assert SpinorPoint.from_bloch((0, 0, -1)) == SpinorPoint(0, 1)


def test_from_ratio():
    p = SpinorPoint.from_ratio(2 - 1j)
    assert p.ratio == pytest.approx(2 - 1j)


def test_configuration_validation():
    c = DegeneracyConfiguration((3, 1, 1))
    assert c.n == 5 and c.diversity == 3
    assert DegeneracyConfiguration.from_multiplicities([1, 3, 1]) == c
    with pytest.raises(SymsloccError):
        DegeneracyConfiguration((1, 2))
    with pytest.raises(SymsloccError):
        DegeneracyConfiguration((2, 0))


def test_decomposition_validation():
    inf = SpinorPoint.infinity()
    with pytest.raises(SymsloccError):
        MajoranaDecomposition(3, ((inf, 2),))
    with pytest.raises(SymsloccError):
        MajoranaDecomposition(3, ((inf, 2), (SpinorPoint(1, 0), 1)))
    d = MajoranaDecomposition(3, ((inf, 2), (SpinorPoint.zero(), 1)))
    assert d.configuration.parts == (2, 1)
    assert d.multiplicity_of_infinity() == 2


def test_local_operation_invertibility():
    with pytest.raises(NotInvertible):
        LocalOperation(1, 1, 1, 1)
    with pytest.raises(NotInvertible):
        LocalOperation(1e6, 0, 0, 1e-6)
    op = LocalOperation(2, 1, 0, 1)
    assert np.allclose((op @ op.inverse()).matrix, op.det * np.eye(2))


def test_polynomial_degree_threshold():
    assert ComplexPolynomial((1, 2, 1e-13)).degree == 1
    assert ComplexPolynomial((1, 2, 1e-11)).degree == 2
    assert ComplexPolynomial((0, 0, 0)).degree == 0


def test_types_are_immutable():
    s = normalize_state([1, 0], 1)
    with pytest.raises(Exception):
        s.coeffs = (0, 1)
