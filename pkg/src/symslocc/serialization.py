"""JSON file formats.

States are written either as Dicke amplitudes::

    {"n": 3, "dicke": [[0.7071, 0.0], [0.0, 0.0], [0.0, 0.0], [0.7071, 0.0]]}

where entry ``k`` multiplies the Dicke state with ``k`` qubits in ``|0>``,
or as Majorana points::

    {"n": 3, "points": [{"alpha": [1, 0], "beta": [0, 0], "mult": 3}]}

with each point ``alpha|1> + beta|0>``. Local operations are
``{"matrix": [[a, b], [c, d]]}`` in the ``(|1>, |0>)`` basis. Every complex
number is a two-element ``[re, im]`` array. ``"-"`` as a path means
stdin/stdout.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Union

from .errors import SymsloccError
from .majorana import cluster_points, majorana_points, points_to_dicke
from .state_model import (
    DEFAULT_TOL,
    DickeVector,
    LocalOperation,
    MajoranaDecomposition,
    SpinorPoint,
)


class FormatError(SymsloccError):
    pass


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def complex_from_json(obj: Any) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return complex(float(obj[0]), float(obj[1]))
    raise FormatError(f"expected [re, im], got {obj!r}")


def state_to_json(state: DickeVector) -> dict:
    return {"n": state.n_qubits, "dicke": [complex_to_json(c) for c in state.coeffs]}


def point_to_json(p: SpinorPoint, mult: int) -> dict:
    return {"alpha": complex_to_json(p.alpha), "beta": complex_to_json(p.beta), "mult": mult}


def decomposition_to_json(decomp: MajoranaDecomposition) -> dict:
    return {"n": decomp.n_qubits, "points": [point_to_json(p, m) for p, m in decomp.points]}


def decomposition_from_json(obj: dict) -> MajoranaDecomposition:
    try:
        n = int(obj["n"])
        raw = [
            (
                SpinorPoint(complex_from_json(e["alpha"]), complex_from_json(e["beta"])),
                int(e.get("mult", 1)),
            )
            for e in obj["points"]
        ]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed points record: {exc}") from exc
    # identical entries listed separately are one point
    return MajoranaDecomposition(n, tuple(cluster_points(raw, 1e-14)))


def state_from_json(obj: dict) -> DickeVector:
    if not isinstance(obj, dict) or "n" not in obj:
        raise FormatError("state record needs an 'n' field")
    if "dicke" in obj:
        return DickeVector(int(obj["n"]), tuple(complex_from_json(c) for c in obj["dicke"]))
    if "points" in obj:
        return points_to_dicke(decomposition_from_json(obj))
    raise FormatError("state record needs 'dicke' or 'points'")


def points_from_json(obj: dict, tol: float = DEFAULT_TOL) -> MajoranaDecomposition:
    """Majorana points of a record in either format."""
    if isinstance(obj, dict) and "points" in obj:
        return decomposition_from_json(obj)
    return majorana_points(state_from_json(obj), tol)


def ilo_to_json(op: LocalOperation) -> dict:
    return {
        "matrix": [
            [complex_to_json(op.a), complex_to_json(op.b)],
            [complex_to_json(op.c), complex_to_json(op.d)],
        ]
    }


def ilo_from_json(obj: dict) -> LocalOperation:
    try:
        rows = obj["matrix"]
        (a, b), (c, d) = rows
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed matrix record: {exc}") from exc
    return LocalOperation(*(complex_from_json(x) for x in (a, b, c, d)))


def read_json(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def _render(obj: Any, depth: int) -> str:
    pad = "  " * (depth + 1)
    end = "  " * depth
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_render(obj[k], depth + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj))
        if all(isinstance(x, (list, tuple)) and len(x) == 2
               and not any(isinstance(y, (dict, list, tuple)) for y in x) for x in obj):
            return json.dumps([list(x) for x in obj])
        items = [pad + _render(x, depth + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return json.dumps(obj)


def dumps(obj: Any) -> str:
    """Deterministic JSON text; numeric arrays and ``[re, im]`` lists stay on one line."""
    return _render(obj, 0) + "\n"


def write_json(obj: Any, path: Union[str, None]) -> None:
    text = dumps(obj)
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
