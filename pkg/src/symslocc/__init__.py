"""SLOCC classification of symmetric N-qubit states via Majorana points."""

__version__ = "0.1.0"

from .classification import (
    canonical_representative,
    continuous_parameter_count,
    degeneracy_configuration,
    diversity_degree,
    enumerate_configurations,
    family_label,
    ghz_points,
    partition_count,
)
from .errors import (
    ContinuousFamily,
    DegenerateImage,
    DegeneratePoints,
    DegenerateTriple,
    LengthMismatch,
    NoConvergence,
    NotInvertible,
    NotSymmetric,
    SymsloccError,
    TooFewPoints,
    TooLarge,
    WitnessVerificationError,
    ZeroState,
)
from .majorana import dicke_to_polynomial, majorana_points, points_to_dicke
from .roots import polynomial_roots
from .slocc import (
    EquivalenceResult,
    apply_ilo_symmetric,
    canonical_form,
    cross_ratio,
    mobius_apply,
    mobius_from_pairs,
    slocc_equivalent,
)
from .state_model import (
    DEFAULT_TOL,
    ComplexPolynomial,
    DegeneracyConfiguration,
    DickeVector,
    LocalOperation,
    MajoranaDecomposition,
    SpinorPoint,
    chordal_distance,
    normalize_state,
)


def dicke_state(n: int, k: int) -> DickeVector:
    """``|D_n^(k)>``: equal superposition of all strings with ``k`` qubits in ``|0>``."""
    coeffs = [0.0] * (n + 1)
    coeffs[k] = 1.0
    return DickeVector(n, tuple(coeffs))


def ghz_state(n: int) -> DickeVector:
    """``(|1...1> + |0...0>)/sqrt(2)``."""
    coeffs = [0.0] * (n + 1)
    coeffs[0] = coeffs[n] = 1.0
    return DickeVector(n, tuple(coeffs))
