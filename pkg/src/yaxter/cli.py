"""Command-line front end.

Commands: catalog, build, check {braid, qybe, unitarity, inverse-unitarity},
classify, hamiltonian, evolve, cnot, suite. JSON goes to stdout (floats with
17 significant digits, so identical argv + seed give byte-identical output),
diagnostics to stderr. Exit codes: 0 all checks pass, 1 a residual or
classification check failed, 2 usage or domain error.

The default tolerance is 1e-10, overridable per run with --tol or globally
with the YAXTER_TOL environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .baxterize import EigOrdering, SpectralPoint, build_R, degeneracy_note, family_x, formula_R
from .catalog import (
    BoltzmannWeights,
    DomainError,
    Family,
    FamilySpec,
    Sign,
    build_b,
    eight_vertex_residuals,
)
from .dynamics import (
    evolve,
    hamiltonian_closed,
    hamiltonian_fd,
    pauli_decompose,
)
from .entangle import Classification, classify, nonentangling_locus_check
from .gates import cnot_via_evolution, theorem1_decomposition
from .linalg import hermiticity_defect, mat_to_json
from .suite import run_suite
from .verify import (
    conjugate_partner,
    family_inverse_unitarity,
    matrix_norm_factor,
    rho_formula,
    scan_braid,
    scan_qybe,
    scan_unitarity,
    unitarity_residual,
)

DEFAULT_TOLS = {"braid": 1e-11, "qybe": 1e-9, "unitarity": 1e-10, "inverse-unitarity": 1e-9}


def dumps_17g(obj) -> str:
    """Deterministic compact JSON with floats at 17 significant digits."""
    pieces: list[str] = []
    _write_json(obj, pieces)
    return "".join(pieces)


def _write_json(obj, out: list[str]) -> None:
    if obj is None or isinstance(obj, bool):
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        if not np.isfinite(obj):
            raise ValueError(f"cannot serialize non-finite float {obj}")
        out.append(f"{obj:.17g}")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)) + ":")
            _write_json(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _write_json(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj)}")


def _emit(args, payload: dict) -> None:
    if args.output == "pretty":
        print(_pretty(payload))
    else:
        print(dumps_17g(payload))


def _pretty(payload, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(_pretty(v, indent) for v in payload)
    return f"{pad}{payload}"


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--q", type=float, default=None, help="real deformation parameter")
    p.add_argument("--q-re", type=float, default=None)
    p.add_argument("--q-im", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None, help="q = exp(gamma)")
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--t-re", type=float, default=None)
    p.add_argument("--t-im", type=float, default=None)
    p.add_argument("--phi", type=float, default=None, help="q = exp(-i phi)")
    p.add_argument("--sign", choices=["plus", "minus"], default="plus")


def _add_point_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--x", type=float, default=None, help="real spectral parameter")
    p.add_argument("--x-re", type=float, default=None)
    p.add_argument("--x-im", type=float, default=None)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--u", type=float, default=None)
    p.add_argument("--u-re", type=float, default=None)
    p.add_argument("--u-im", type=float, default=None)
    p.add_argument("--ordering", choices=[o.value for o in EigOrdering], default=None)
    p.add_argument("--form", choices=["canonical", "g"], default="canonical")


def _add_run_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--output", choices=["json", "pretty"], default="json")


def _complex_arg(args, name: str):
    whole = getattr(args, name)
    re = getattr(args, f"{name}_re")
    im = getattr(args, f"{name}_im")
    if whole is not None:
        if re is not None or im is not None:
            raise DomainError(f"give --{name} or --{name}-re/--{name}-im, not both")
        return complex(whole)
    if re is None and im is None:
        return None
    return complex(re or 0.0, im or 0.0)


def _spec_from_args(args) -> FamilySpec:
    family = Family(args.family)
    q = _complex_arg(args, "q")
    t = _complex_arg(args, "t")
    if args.gamma is not None:
        if q is not None:
            raise DomainError("give --q or --gamma, not both")
        q = float(np.exp(args.gamma))
    phi = args.phi
    if phi is not None:
        if q is not None:
            raise DomainError("give --q or --phi, not both")
        q = complex(np.exp(-1j * phi))
    if q is None:
        q = 1.0
        phi = 0.0
    if phi is None:
        phi = -float(np.angle(complex(q)))
    return FamilySpec(
        family,
        q=q,
        t=t if t is not None else 2.0,
        phi=float(phi),
        sign=Sign(args.sign),
    )


def _point_from_args(args, required: bool = True) -> SpectralPoint | None:
    x = _complex_arg(args, "x")
    u = _complex_arg(args, "u")
    theta = args.theta
    given = [p for p in (("x", x), ("theta", theta), ("u", u)) if p[1] is not None]
    if len(given) > 1:
        raise DomainError("give exactly one of --x, --theta, --u")
    if not given:
        if required:
            raise DomainError("a spectral point is required: give --x, --theta or --u")
        return None
    kind, value = given[0]
    return SpectralPoint(kind, complex(value))


def _tol(args, check: str | None = None) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("YAXTER_TOL")
    if env:
        return float(env)
    if check is not None:
        return DEFAULT_TOLS[check]
    return 1e-10


def _report_payload(kind: str, family: str, report) -> dict:
    rho = None
    if isinstance(report.worst_case, dict):
        rho = report.worst_case.get("rho")
    return {
        "check": kind,
        "family": family,
        "residual": float(report.residual),
        "rho": rho,
        "tolerance": float(report.tolerance),
        "pass": bool(report.passed),
        "worst_case": report.worst_case,
    }


def _cmd_catalog(args) -> int:
    spec = _spec_from_args(args)
    b = build_b(spec)
    if args.weights:
        if spec.family not in (Family.EIGHT_I, Family.EIGHT_II,
                               Family.EIGHT_III, Family.EIGHT_IV):
            raise DomainError("--weights reads the eight-vertex ansatz entries")
        w = BoltzmannWeights.from_matrix(b)
        res = eight_vertex_residuals(w)
        payload = {
            "matrix": mat_to_json(b),
            "weights": {f"w{i}": [getattr(w, f"w{i}").real, getattr(w, f"w{i}").imag]
                        for i in range(1, 9)},
            "residuals": [[z.real, z.imag] for z in res],
            "max_residual": float(np.abs(res).max()),
        }
        _emit(args, payload)
        return 0
    _emit(args, mat_to_json(b))
    return 0


def _cmd_build(args) -> int:
    spec = _spec_from_args(args)
    point = _point_from_args(args)
    ordering = EigOrdering(args.ordering) if args.ordering else None
    if args.via == "formula":
        r = formula_R(spec, family_x(spec, point), ordering=ordering)
    else:
        r = build_R(spec, point, ordering=ordering, form=args.form)
    payload = mat_to_json(r)
    note = degeneracy_note(spec, point)
    if note:
        payload["degenerate"] = note
    _emit(args, payload)
    return 0


def _cmd_check(args) -> int:
    spec = _spec_from_args(args)
    family = Family(args.family)
    kind = args.what
    tol = _tol(args, kind)
    if kind == "braid":
        report = scan_braid(family, samples=args.samples, seed=args.seed, tol=tol)
        _emit(args, _report_payload(kind, family.value, report))
        return 0 if report.passed else 1
    if kind == "qybe":
        ordering = EigOrdering(args.ordering) if args.ordering else None
        report = scan_qybe(spec, kind=args.parametrization, samples=args.samples,
                           seed=args.seed, tol=tol, ordering=ordering)
        _emit(args, _report_payload(kind, family.value, report))
        return 0 if report.passed else 1
    if kind == "unitarity":
        point = _point_from_args(args, required=False)
        if point is not None:
            x = family_x(spec, point)
            violation = spec.domain_violation(x)
            if violation is not None:
                raise DomainError(violation)
            r = build_R(spec, point)
            rho_est, residual = unitarity_residual(r, conjugate_partner(spec, point))
            rho_ref = matrix_norm_factor(spec, point)
            gap = residual / rho_est + abs(rho_est - rho_ref) / rho_ref
            payload = {
                "check": kind,
                "family": family.value,
                "residual": float(gap),
                "rho": float(rho_est),
                "rho_formula": float(rho_formula(spec, point).rho),
                "tolerance": tol,
                "pass": bool(gap < tol),
                "worst_case": None,
            }
            _emit(args, payload)
            return 0 if payload["pass"] else 1
        report = scan_unitarity(family, samples=args.samples, seed=args.seed, tol=tol)
        _emit(args, _report_payload(kind, family.value, report))
        return 0 if report.passed else 1
    if kind == "inverse-unitarity":
        point = _point_from_args(args, required=False)
        if point is None:
            raise DomainError("inverse-unitarity needs a spectral point (--x)")
        x = complex(point.x())
        measured, expected = family_inverse_unitarity(spec, x)
        gap = abs(measured - expected)
        payload = {
            "check": kind,
            "family": family.value,
            "residual": float(gap),
            "rho": float(measured.real),
            "tolerance": tol,
            "pass": bool(gap < tol),
            "worst_case": None,
        }
        _emit(args, payload)
        return 0 if payload["pass"] else 1
    raise DomainError(f"unknown check {kind!r}")


def _cmd_classify(args) -> int:
    spec = _spec_from_args(args)
    point = _point_from_args(args)
    if args.locus is not None:
        vals = [float(v) for v in args.locus.split(",")]
        if len(vals) != 8:
            raise DomainError("--locus takes 8 comma-separated floats: re,im per factor")
        factors = tuple(complex(vals[2 * k], vals[2 * k + 1]) for k in range(4))
        on_locus = nonentangling_locus_check(spec, point, factors)
        _emit(args, {"family": spec.family.value, "on_nonentangling_locus": bool(on_locus)})
        return 0
    result = classify(spec, point, probes=args.probes, seed=args.seed,
                      tol=_tol(args) if args.tol is not None else 1e-8)
    witness = None
    if result.witness is not None:
        witness = [[float(z.real), float(z.imag)] for z in result.witness]
    payload = {
        "classification": result.classification.value,
        "witness": witness,
        "det": [float(result.det.real), float(result.det.imag)],
    }
    _emit(args, payload)
    return 0 if result.classification is not Classification.UNKNOWN else 1


def _cmd_hamiltonian(args) -> int:
    spec = _spec_from_args(args)
    if args.method == "closed":
        if args.theta is None:
            raise DomainError("closed-form Hamiltonians are parametrized by --theta")
        ham = hamiltonian_closed(spec, args.theta)
    else:
        point = _point_from_args(args)
        ham = hamiltonian_fd(spec, point, h=args.step)
    decomp = pauli_decompose(ham.matrix)
    payload = {
        "family": spec.family.value,
        "source": ham.source.value,
        "matrix": mat_to_json(ham.matrix),
        "pauli": decomp.to_json(),
        "hermiticity_defect": float(hermiticity_defect(ham.matrix)),
    }
    _emit(args, payload)
    return 0


def _cmd_evolve(args) -> int:
    spec = _spec_from_args(args)
    theta = args.theta if args.theta is not None else 0.0
    ham = hamiltonian_closed(spec, theta)
    u = evolve(ham, args.time)
    _emit(args, mat_to_json(u))
    return 0


def _cmd_cnot(args) -> int:
    if args.route == "theorem1":
        dec = theorem1_decomposition()
        tol = 1e-12
    else:
        dec = cnot_via_evolution(args.phi)
        tol = 1e-11
    payload = {
        "route": args.route,
        "residual": float(dec.residual),
        "residual_phase_aligned": float(dec.residual_phase_aligned),
        "pass": bool(dec.residual < tol),
        "factors": [{"label": label, "matrix": mat_to_json(m)} for label, m in dec.factors],
    }
    _emit(args, payload)
    return 0 if payload["pass"] else 1


def _cmd_suite(args) -> int:
    result = run_suite(seed=args.seed)
    _emit(args, result)
    return 0 if result["all_pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yaxter",
        description="Braid matrices, Yang-Baxterized R(x) families, and their gate theory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="emit a braid matrix")
    _add_family_args(p)
    _add_run_args(p)
    p.add_argument("--weights", action="store_true",
                   help="also report the eight-vertex weights and their constraint residuals")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("build", help="emit an R-matrix at a spectral point")
    _add_family_args(p)
    _add_point_args(p)
    _add_run_args(p)
    p.add_argument("--via", choices=["closed", "formula"], default="closed",
                   help="conventional closed form or the raw eigenvalue formula")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("check", help="run a residual check")
    p.add_argument("what", choices=["braid", "qybe", "unitarity", "inverse-unitarity"])
    _add_family_args(p)
    _add_point_args(p)
    _add_run_args(p)
    p.add_argument("--parametrization", choices=["x", "theta", "u"], default="x")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("classify", help="Brylinski classification of the gate at a point")
    _add_family_args(p)
    _add_point_args(p)
    _add_run_args(p)
    p.add_argument("--probes", type=int, default=1000)
    p.add_argument("--locus", default=None,
                   help="8 comma-separated floats (re,im per one-qubit factor): "
                        "test the non-entangling locus instead of searching")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("hamiltonian", help="extract the evolution generator")
    _add_family_args(p)
    _add_point_args(p)
    _add_run_args(p)
    p.add_argument("--method", choices=["fd", "closed"], default="closed")
    p.add_argument("--step", type=float, default=1e-5)
    p.set_defaults(func=_cmd_hamiltonian)

    p = sub.add_parser("evolve", help="time-evolution operator exp(-i H time)")
    _add_family_args(p)
    _add_point_args(p)
    _add_run_args(p)
    p.add_argument("--time", type=float, required=True)
    p.set_defaults(func=_cmd_evolve)

    p = sub.add_parser("cnot", help="CNOT synthesis routes")
    p.add_argument("--route", choices=["theorem1", "evolution"], default="theorem1")
    p.add_argument("--phi", type=float, default=0.0)
    _add_run_args(p)
    p.set_defaults(func=_cmd_cnot)

    p = sub.add_parser("suite", help="run the full verification battery")
    _add_run_args(p)
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
