"""Command-line front end.

Subcommands: member, member-real, hecke, cosets, reduce, domain, volume,
zeta.  All output is deterministic: JSON objects keep insertion order and
floats print with 12 significant digits.  Exit codes: 0 success, 1 invalid
input, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import covol, domains, lattice, zi
from .halfspace import H2Point, H3Point
from .quadrature import QuadratureError
from .spin import Mat2


def _fmt(x: float) -> float:
    return float(f"{x:.12g}")


def _parse_matrix(text: str) -> Mat2:
    obj = json.loads(text)
    entries = []
    for key in ("a", "b", "c", "d"):
        if key not in obj:
            raise ValueError(f"matrix JSON must provide entry {key!r}")
        entries.append(zi.Cyc8.from_json(obj[key]))
    return Mat2(*entries)


def _parse_gauss_matrix(text: str):
    obj = json.loads(text)
    rows = []
    for key in ("a", "b", "c", "d"):
        if key not in obj:
            raise ValueError(f"matrix JSON must provide entry {key!r}")
        rows.append(zi.GaussInt.parse(obj[key]))
    return ((rows[0], rows[1]), (rows[2], rows[3]))


def _parse_point(text: str, dim: int):
    parts = text.split(",")
    if len(parts) != dim:
        raise ValueError(f"expected {dim} comma-separated coordinates")
    vals = [float(p) for p in parts]
    if dim == 3:
        return H3Point(complex(vals[0], vals[1]), vals[2])
    return H2Point(vals[0], vals[1])


def _point_str(z) -> str:
    if isinstance(z, H3Point):
        return f"{_fmt(z.x.real)},{_fmt(z.x.imag)},{_fmt(z.y)}"
    return f"{_fmt(z.x)},{_fmt(z.y)}"


_DOMAINS = {
    "gamma-h3": domains.GAMMA_H3,
    "picard-h3": domains.PICARD_H3,
    "gamma-int-h2": domains.GAMMA_INT_H2,
    "sl2z-h2": domains.SL2Z_H2,
}


def _element_json(elem):
    if isinstance(elem, lattice.LatticeElem):
        return elem.to_json()
    if isinstance(elem, lattice.RealLatticeElem):
        return elem.to_json()
    return [[str(e) for e in row] for row in elem]


def _cmd_member(args) -> int:
    m = _parse_matrix(args.matrix)
    elem = lattice.classify(m)
    if elem is None:
        print("not a member")
    else:
        print(f"member, i={elem.i}, delta={elem.delta}")
    return 0


def _cmd_member_real(args) -> int:
    obj = json.loads(args.matrix)
    pow2 = int(obj.get("sqrt2_pow", 0))
    rows = tuple(
        tuple(int(obj[k]) for k in pair)
        for pair in (("a", "b"), ("c", "d"))
    )
    m = lattice.real_from_ints(rows, pow2)
    elem = lattice.is_member_real(m)
    if elem is None:
        print("not a member")
    else:
        print(f"member, delta={elem.delta}")
    return 0


def _cmd_hecke(args) -> int:
    m = _parse_gauss_matrix(args.matrix)
    xi, m0, x = lattice.hecke_decompose(m)
    out = {
        "xi": [[str(e) for e in row] for row in xi],
        "m": str(m0),
        "x": str(x),
    }
    print(json.dumps(out))
    return 0


def _cmd_cosets(_args) -> int:
    for elem in lattice.coset_reps():
        label = lattice.coset_of(elem)
        obj = {"label": [label.i, label.delta]}
        if label.epsilon is not None:
            obj["label"].append(label.epsilon)
        obj.update(elem.to_json())
        print(json.dumps(obj))
    return 0


def _cmd_reduce(args) -> int:
    spec = _DOMAINS[args.domain]
    z = _parse_point(args.point, 3 if spec.is_h3 else 2)
    result = domains.reduce(spec, z)
    out = {
        "input": _point_str(z),
        "word": result.word,
        "element": _element_json(result.element),
        "point": _point_str(result.point),
        "iterations": result.iterations,
    }
    if args.self_check:
        out["self_check"] = "ok"       # reduce() verifies element/point agreement
    print(json.dumps(out))
    return 0


def _boundary_rows(kind: str, count: int) -> list[tuple[float, float, float]]:
    rows: list[tuple[float, float, float]] = []
    if kind == "gamma-h3":
        levels = 2
        while levels * (levels + 1) // 2 < count:
            levels += 1
        v0, v1, v2 = domains.TRIANGLE
        for p in range(levels):
            for q in range(levels - p):
                u, v = p / (levels - 1), q / (levels - 1)
                x = v0 * (1 - u - v) + v1 * u + v2 * v
                y2 = 2.0 - abs(x - 1) ** 2
                rows.append((x.real, x.imag, math.sqrt(max(y2, 0.0))))
                if len(rows) == count:
                    return rows
    elif kind == "picard-h3":
        side = 2
        while side * side < count:
            side += 1
        for p in range(side):
            for q in range(side):
                x = complex(-0.5 + p / (side - 1), 0.5 * q / (side - 1))
                y2 = 1.0 - abs(x) ** 2
                rows.append((x.real, x.imag, math.sqrt(max(y2, 0.0))))
                if len(rows) == count:
                    return rows
    elif kind == "gamma-int-h2":
        for p in range(count):
            x = 2.0 * p / (count - 1) if count > 1 else 1.0
            rows.append((x, 0.0, math.sqrt(max(2.0 - (x - 1.0) ** 2, 0.0))))
    elif kind == "sl2z-h2":
        for p in range(count):
            x = -0.5 + p / (count - 1) if count > 1 else 0.0
            rows.append((x, 0.0, math.sqrt(max(1.0 - x * x, 0.0))))
    else:
        raise ValueError(f"unknown domain kind {kind!r}")
    return rows


def _cmd_domain(args) -> int:
    if args.emit_boundary < 1:
        raise ValueError("sample count must be >= 1")
    rows = _boundary_rows(args.kind, args.emit_boundary)
    print("x1,x2,y")
    for x1, x2, y in rows:
        print(f"{_fmt(x1)},{_fmt(x2)},{_fmt(y)}")
    if args.plot:
        from .plotting import render_boundary
        render_boundary(rows, args.kind, args.plot)
    return 0


def _cmd_volume(args) -> int:
    if args.kind == "covolumes":
        zv = covol.zeta_qi(2, args.tol)
        out = {
            "zeta_qi_2": _fmt(zv.value),
            "V2": _fmt(covol.covolume_sl_n(2, args.tol)),
            "covol_gamma": _fmt(covol.covolume_gamma(args.tol)),
            "covol_gamma_int": _fmt(covol.covolume_gamma_int()),
        }
        print(json.dumps(out))
        return 0
    report = covol.hyp_volume(_DOMAINS[args.kind])
    out = {
        "domain": args.kind,
        "volume": _fmt(report.volume),
        "error": _fmt(report.error),
    }
    print(json.dumps(out))
    return 0


def _cmd_zeta(args) -> int:
    zv = covol.zeta_qi(args.s, args.tol)
    out = {"s": _fmt(zv.s), "value": _fmt(zv.value), "tail_bound": _fmt(zv.tail_bound)}
    print(json.dumps(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="so3zi",
        description="Exact lattice arithmetic, fundamental domains, and covolumes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", help="classify an exact 2x2 matrix")
    p.add_argument("matrix", help='JSON {"a":..,"b":..,"c":..,"d":..}')
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("member-real", help="classify a real exact 2x2 matrix")
    p.add_argument("matrix", help='JSON with integer entries and "sqrt2_pow"')
    p.set_defaults(func=_cmd_member_real)

    p = sub.add_parser("hecke", help="upper-triangular orbit factorization")
    p.add_argument("matrix", help="JSON with Gaussian-integer entries")
    p.set_defaults(func=_cmd_hecke)

    p = sub.add_parser("cosets", help="print the six coset representatives")
    p.set_defaults(func=_cmd_cosets)

    p = sub.add_parser("reduce", help="reduce a point into a fundamental domain")
    p.add_argument("--domain", required=True, choices=sorted(_DOMAINS))
    p.add_argument("--point", required=True, help='"x1,x2,y" (or "x,y" in the plane)')
    p.add_argument("--self-check", action="store_true", dest="self_check")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("domain", help="emit CSV samples of a domain boundary")
    p.add_argument("--kind", required=True, choices=sorted(_DOMAINS))
    p.add_argument("--emit-boundary", required=True, type=int, metavar="N")
    p.add_argument("--plot", metavar="FILE", help="also save a figure to FILE")
    p.set_defaults(func=_cmd_domain)

    p = sub.add_parser("volume", help="numerical volume / covolume report")
    p.add_argument("--kind", required=True, choices=sorted(_DOMAINS) + ["covolumes"])
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_volume)

    p = sub.add_parser("zeta", help="zeta partial sum with tail bound")
    p.add_argument("--s", required=True, type=float)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_zeta)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (domains.ReductionError, QuadratureError, lattice.LatticeError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
