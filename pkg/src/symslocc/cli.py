"""Command-line interface: ``symslocc <command> ...``.

Exit status is 0 on success, 2 on any error. ``equiv`` additionally exits 1
when the two states are not SLOCC equivalent.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__, dicke_state, ghz_state
from .classification import (
    canonical_representative,
    continuous_parameter_count,
    enumerate_configurations,
    family_label,
    partition_count,
)
from .errors import SymsloccError
from .majorana import majorana_points, points_to_dicke
from .oracle import random_state
from .serialization import (
    complex_to_json,
    decomposition_from_json,
    decomposition_to_json,
    ilo_from_json,
    ilo_to_json,
    point_to_json,
    read_json,
    state_from_json,
    state_to_json,
    write_json,
)
from .slocc import (
    apply_ilo_points,
    canonical_coordinates,
    canonical_form,
    cross_ratio,
    ordered_points,
    slocc_equivalent,
)
from .state_model import DEFAULT_TOL, DegeneracyConfiguration, DickeVector

EXIT_OK, EXIT_INEQUIVALENT, EXIT_ERROR = 0, 1, 2


def default_tol() -> float:
    env = os.environ.get("MAJORANA_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            raise SymsloccError(f"MAJORANA_TOL is not a number: {env!r}") from None
    return DEFAULT_TOL


def _fmt_complex(z: complex) -> str:
    if z.imag == float("inf") or abs(z) == float("inf"):
        return "inf"
    return f"{z.real:+.6f}{z.imag:+.6f}j"


def _records(obj):
    return obj if isinstance(obj, list) else [obj]


def _classify_one(source: str, state: DickeVector, tol: float) -> dict:
    decomp = majorana_points(state, tol)
    pts = ordered_points(decomp)
    config = decomp.configuration
    return {
        "source": source,
        "n": state.n_qubits,
        "configuration": list(config.parts),
        "diversity": config.diversity,
        "family": family_label(config),
        "n_mu": continuous_parameter_count(config),
        "points": [point_to_json(p, m) for p, m in pts],
    }


def cmd_classify(args) -> int:
    reports = []
    for path in args.files:
        obj = read_json(path)
        for i, rec in enumerate(_records(obj)):
            source = f"{path}#{i}" if isinstance(obj, list) else path
            reports.append(_classify_one(source, state_from_json(rec), args.tol))
    if args.format == "json":
        write_json(reports, "-")
        return EXIT_OK
    print(f"{'source':<24} {'config':<16} {'d':>3} {'family':<20} {'n_mu':>4}  points (alpha/beta x mult)")
    for r in reports:
        ratios = []
        for e in r["points"]:
            a = complex(*e["alpha"])
            b = complex(*e["beta"])
            z = complex("inf") if b == 0 else a / b
            ratios.append(f"{_fmt_complex(z)}x{e['mult']}")
        cfg = "[" + ",".join(map(str, r["configuration"])) + "]"
        print(f"{r['source']:<24} {cfg:<16} {r['diversity']:>3} {r['family']:<20} {r['n_mu']:>4}  {' '.join(ratios)}")
    return EXIT_OK


def cmd_equiv(args) -> int:
    s1 = state_from_json(read_json(args.a))
    s2 = state_from_json(read_json(args.b))
    res = slocc_equivalent(s1, s2, args.tol)
    report = {
        "equivalent": res.equivalent,
        "configuration": list(res.configuration.parts) if res.configuration else None,
        "reason": res.reason,
        "residual": res.residual,
        "witness": ilo_to_json(res.witness) if res.witness is not None else None,
    }
    if args.format == "json":
        write_json(report, "-")
    else:
        print("equivalent" if res.equivalent else "not equivalent", f"({res.reason})")
        if res.witness is not None:
            m = res.witness.matrix
            print(f"witness: [[{_fmt_complex(m[0, 0])}, {_fmt_complex(m[0, 1])}],"
                  f" [{_fmt_complex(m[1, 0])}, {_fmt_complex(m[1, 1])}]]  residual {res.residual:.3e}")
    if args.witness and res.witness is not None:
        write_json(ilo_to_json(res.witness), args.witness)
    return EXIT_OK if res.equivalent else EXIT_INEQUIVALENT


def cmd_families(args) -> int:
    n = args.n
    rows = []
    for config in enumerate_configurations(n):
        row = {
            "configuration": list(config.parts),
            "family": family_label(config),
            "diversity": config.diversity,
            "n_mu": continuous_parameter_count(config),
        }
        if config.diversity <= 3:
            row["canonical"] = state_to_json(points_to_dicke(canonical_representative(config)))
        rows.append(row)
    if args.format == "json":
        write_json({"n": n, "p": partition_count(n), "families": rows}, "-")
        return EXIT_OK
    print(f"p({n}) = {partition_count(n)}")
    for row in rows:
        cfg = "[" + ",".join(map(str, row["configuration"])) + "]"
        line = f"{cfg:<24} {row['family']:<28} d={row['diversity']:<3} n_mu={row['n_mu']}"
        if "canonical" in row:
            coeffs = ", ".join(
                f"{c[0]:.6g}" if c[1] == 0 else _fmt_complex(complex(*c)) for c in row["canonical"]["dicke"]
            )
            line += f"  canonical d = [{coeffs}]"
        else:
            line += "  continuous family"
        print(line)
    return EXIT_OK


def cmd_convert(args) -> int:
    rec = read_json(args.file)
    if args.to == "dicke":
        out = state_to_json(state_from_json(rec))
    else:
        out = decomposition_to_json(
            decomposition_from_json(rec) if "points" in rec
            else majorana_points(state_from_json(rec), args.tol)
        )
    write_json(out, args.output)
    return EXIT_OK


def cmd_apply(args) -> int:
    state = state_from_json(read_json(args.state))
    op = ilo_from_json(read_json(args.ilo))
    out = points_to_dicke(apply_ilo_points(op, majorana_points(state, args.tol)))
    write_json(state_to_json(out), args.output)
    return EXIT_OK


def _parse_config(text: str) -> DegeneracyConfiguration:
    try:
        parts = [int(t) for t in text.replace("[", "").replace("]", "").split(",") if t.strip()]
    except ValueError:
        raise SymsloccError(f"bad configuration {text!r}; expected e.g. 2,1,1") from None
    return DegeneracyConfiguration.from_multiplicities(parts)


def cmd_random(args) -> int:
    state = random_state(_parse_config(args.config), args.seed)
    write_json(state_to_json(state), args.output)
    return EXIT_OK


def cmd_ghz(args) -> int:
    write_json(state_to_json(ghz_state(args.n)), args.output)
    return EXIT_OK


def cmd_dicke(args) -> int:
    if not 0 <= args.k <= args.n:
        raise SymsloccError(f"k must lie in 0..{args.n}")
    write_json(state_to_json(dicke_state(args.n, args.k)), args.output)
    return EXIT_OK


def cmd_canon(args) -> int:
    state = state_from_json(read_json(args.file))
    form = canonical_form(state, args.tol)
    out = decomposition_to_json(form)
    out["coordinates"] = [complex_to_json(z) for z in canonical_coordinates(form)]
    anchors = [p for p, _ in form.points[:3]]
    out["cross_ratios"] = [complex_to_json(cross_ratio(*anchors, p)) for p, _ in form.points[3:]]
    write_json(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    tol_default = None
    parser = argparse.ArgumentParser(prog="symslocc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tol(p):
        p.add_argument("--tol", type=float, default=tol_default,
                       help="clustering/equivalence tolerance (default 1e-8 or $MAJORANA_TOL)")

    def add_out(p):
        p.add_argument("-o", "--output", default="-", help="output file ('-' for stdout)")

    p = sub.add_parser("classify", help="degeneracy configuration and family of states")
    p.add_argument("files", nargs="+")
    p.add_argument("--format", choices=("json", "table"), default="table")
    add_tol(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equiv", help="decide SLOCC equivalence of two states")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", help="write the witness operation to this file")
    p.add_argument("--format", choices=("json", "table"), default="table")
    add_tol(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("families", help="atlas of the entanglement families for N qubits")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("convert", help="convert between Dicke and points formats")
    p.add_argument("file")
    p.add_argument("--to", choices=("dicke", "points"), required=True)
    add_tol(p)
    add_out(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("apply", help="apply a symmetric local operation to a state")
    p.add_argument("state")
    p.add_argument("ilo")
    add_tol(p)
    add_out(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("canon", help="canonical form of a state with d >= 3")
    p.add_argument("file")
    add_tol(p)
    add_out(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("random", help="random state with a given configuration")
    p.add_argument("--config", required=True, help="multiplicities, e.g. 2,1,1")
    p.add_argument("--seed", type=int, default=0)
    add_out(p)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("ghz", help="GHZ state")
    p.add_argument("n", type=int)
    add_out(p)
    p.set_defaults(func=cmd_ghz)

    p = sub.add_parser("dicke", help="Dicke state with k qubits in |0>")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    add_out(p)
    p.set_defaults(func=cmd_dicke)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "tol", "absent") is None:
            args.tol = default_tol()
        if getattr(args, "tol", 1.0) <= 0:
            raise SymsloccError("--tol must be positive")
        return args.func(args)
    except (SymsloccError, ArithmeticError, OSError) as exc:
        print(f"symslocc: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
