"""Command-line front end.

Every command writes one JSON document to standard output; complex numbers
are serialized as ``{"re": ..., "im": ...}``. Exit codes: 0 success,
1 verification failure, 2 invalid map or arguments, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .adjoint import adjoint_coeffs, adjoint_eval, branch_solve, classify_map
from .config import DEFAULT_SEED, AdjointConfig
from .errors import InvalidMapError, NumericalError
from .parser import format_map, parse_complex, parse_map
from .rational import INFINITY, is_self_map_of_disk
from .verification import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_INVALID, EXIT_NUMERIC = 0, 1, 2, 3


def cplx(c) -> dict:
    c = complex(c)
    return {"re": c.real, "im": c.imag}


def _real(x: float):
    return x if np.isfinite(x) else "infinity"


def _extended(v):
    return "infinity" if v is INFINITY else cplx(v)


def _config(args) -> AdjointConfig:
    return AdjointConfig(
        n_terms=args.n_terms,
        samples=args.samples,
        radius=args.radius,
        tol_root=args.tol_root,
        tol_branch=args.tol_branch,
        coprime_tol=args.tol_coprime,
        seed=args.seed,
    )


def cmd_classify(args) -> tuple[dict, int]:
    phi = parse_map(args.map, args.tol_coprime)
    rep = is_self_map_of_disk(phi)
    doc = {
        "map": format_map(phi),
        "self_map": {
            "ok": rep.ok,
            "max_boundary_modulus": _real(rep.max_boundary_modulus),
            "min_pole_modulus": _real(rep.min_pole_modulus),
        },
    }
    mc = classify_map(phi)  # raises NotSelfMapError -> exit 2
    doc.update({"class": mc.name, "phi_inf": _extended(mc.phi_inf)})
    return doc, EXIT_OK


def cmd_branches(args) -> tuple[dict, int]:
    phi = parse_map(args.map, args.tol_coprime)
    cfg = _config(args)
    classify_map(phi)
    out = []
    for text in args.at:
        bs = branch_solve(phi, parse_complex(text), cfg)
        out.append({
            "z": cplx(bs.z),
            "branches": [
                {"sigma": cplx(b.sigma), "psi": cplx(b.psi), "multiplicity": b.multiplicity,
                 "residual": b.residual}
                for b in bs.branches
            ],
            "degree_deficit": bs.degree_deficit,
        })
    return {"map": format_map(phi), "points": out}, EXIT_OK


def cmd_adjoint(args) -> tuple[dict, int]:
    phi = parse_map(args.map, args.tol_coprime)
    f = parse_map(args.f, args.tol_coprime)
    doc = {"map": format_map(phi), "f": format_map(f)}
    if args.coeffs is not None:
        cfg = _config(args).with_(n_terms=args.coeffs)
        c = adjoint_coeffs(phi, f, cfg)
        doc["coeffs"] = [cplx(x) for x in c.coeffs]
    else:
        cfg = _config(args)
        doc["values"] = [
            {"z": cplx(z), "value": cplx(adjoint_eval(phi, f, z, cfg))}
            for z in (parse_complex(t) for t in args.at)
        ]
    return doc, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    cfg = _config(args)
    names = list(SUITES) if args.all else [args.suite]
    reports = []
    for name in names:
        rep = run_suite(name, cfg, args.seed)
        print(rep.summary(), file=sys.stderr)
        reports.append(rep)
    ok = all(r.passed for r in reports)
    doc = {"pass": ok, "seed": args.seed, "reports": [r.to_dict() for r in reports]}
    return doc, EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-terms", type=int, default=64, help="Taylor coefficients kept")
    common.add_argument("--samples", type=int, default=512, help="points on the sampling circle")
    common.add_argument("--radius", type=float, default=0.5, help="coefficient-extraction radius")
    common.add_argument("--tol-root", type=float, default=1e-12)
    common.add_argument("--tol-branch", type=float, default=1e-9)
    common.add_argument("--tol-coprime", type=float, default=1e-9,
                        help="residual for cancelling common roots of num/denom")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", help="also write the JSON report to this file")

    parser = argparse.ArgumentParser(
        prog="hardy-adjoint",
        description="Adjoints of composition operators with rational symbol on H^2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a map by phi(inf)")
    p.add_argument("map")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("branches", parents=[common], help="branch values sigma_j and weights psi_j")
    p.add_argument("map")
    p.add_argument("--at", action="append", required=True, help="evaluation point (repeatable)")
    p.set_defaults(func=cmd_branches)

    p = sub.add_parser("adjoint", parents=[common], help="evaluate C_phi^* f")
    p.add_argument("map")
    p.add_argument("--f", required=True, help="test function, rational in z")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--at", action="append", help="evaluation point (repeatable)")
    g.add_argument("--coeffs", type=int, metavar="N", help="first N Taylor coefficients")
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--suite", choices=sorted(SUITES))
    g.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except InvalidMapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INVALID
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_NUMERIC
    text = json.dumps(doc, indent=2, default=_json_default)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return code


def _json_default(o):
    if isinstance(o, (complex, np.complexfloating)):
        return cplx(o)
    if isinstance(o, np.generic):
        return o.item()
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


if __name__ == "__main__":
    sys.exit(main())
