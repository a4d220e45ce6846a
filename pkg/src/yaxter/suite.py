"""The full verification battery behind ``yaxter suite``.

Each criterion is evaluated at a fixed tolerance with seeded sampling and
reported as one entry; the CLI serializes the result deterministically, so
identical seeds give byte-identical output.
"""

from __future__ import annotations

import numpy as np

from . import dynamics, entangle, gates, verify
from .baxterize import RZERO_EQUALS_B, EigOrdering, SpectralPoint, build_R
from .catalog import Family, FamilySpec, Sign, build_b
from .dynamics import (
    braiding_evolution_residual,
    hamiltonian_closed,
    hamiltonian_fd,
    six_vertex_erratum_report,
)
from .entangle import Classification, classify, concurrence_det, det_b_closed
from .gates import SIGMA_MINUS, SIGMA_PLUS, SX, SY, tensor
from .linalg import expm_hermitian, frobenius, hermiticity_defect, identity
from .verify import (
    family_inverse_unitarity,
    rho_formula,
    sample_domain_point,
    scan_braid,
    scan_qybe,
    scan_unitarity,
    unitarity_residual,
)

I4 = identity(4)

R_FAMILIES = (
    Family.SIX_NONSTD,
    Family.SIX_STD,
    Family.EIGHT_I,
    Family.EIGHT_II,
    Family.EIGHT_III,
    Family.EIGHT_IV,
)


def representative_spec(family: Family) -> FamilySpec:
    """A fixed generic parameter point per family, inside the unitary domain."""
    return {
        Family.SIX_NONSTD: FamilySpec.six_nonstd(gamma=0.3),
        Family.SIX_STD: FamilySpec.six_std(gamma=0.45),
        Family.EIGHT_I: FamilySpec.eight1(phi=0.9),
        Family.EIGHT_II: FamilySpec.eight2(t=1.7, q=np.exp(-0.4j), sign=Sign.MINUS),
        Family.EIGHT_III: FamilySpec.eight3(t=2.1, q=np.exp(0.33j)),
        Family.EIGHT_IV: FamilySpec.eight4(t=1.6, q=np.exp(0.25j)),
        Family.BELL_PHI: FamilySpec.bell(phi=0.9, sign=Sign.MINUS),
    }[family]


QYBE_PARAMETRIZATIONS = {
    Family.SIX_NONSTD: ("x", "theta"),
    Family.SIX_STD: ("x", "theta"),
    Family.EIGHT_I: ("x", "u"),
    Family.EIGHT_II: ("x", "theta", "u"),
    Family.EIGHT_III: ("x", "theta", "u"),
    Family.EIGHT_IV: ("x", "theta", "u"),
}


def _entry(cid: int, name: str, passed: bool, **detail) -> dict:
    out = {"id": cid, "name": name, "pass": bool(passed)}
    out.update(detail)
    return out


def criterion_braid(seed: int) -> dict:
    tol = 1e-11
    worst, worst_family = -1.0, None
    for k, family in enumerate(Family):
        report = scan_braid(family, samples=100, seed=seed + k, tol=tol)
        if report.residual > worst:
            worst, worst_family = report.residual, family.value
    return _entry(1, "braid relation over 7 families x 100 points", worst < tol,
                  max_residual=worst, tolerance=tol, worst_family=worst_family)


def criterion_qybe(seed: int) -> dict:
    tol = 1e-9
    worst, worst_case = -1.0, None
    jobs = []
    for family in R_FAMILIES:
        spec = representative_spec(family)
        for kind in QYBE_PARAMETRIZATIONS[family]:
            jobs.append((spec, kind, None))
    jobs.append((representative_spec(Family.EIGHT_III), "x", EigOrdering.SECOND))
    for k, (spec, kind, ordering) in enumerate(jobs):
        report = scan_qybe(spec, kind=kind, samples=50, seed=seed + 100 + k,
                           tol=tol, ordering=ordering)
        if report.residual > worst:
            worst = report.residual
            worst_case = {"family": spec.family.value, "kind": kind}
    return _entry(2, "QYBE in every applicable parametrization", worst < tol,
                  max_residual=worst, tolerance=tol, worst_case=worst_case)


def criterion_asymptotics(seed: int) -> dict:
    tol = 1e-12
    zero = SpectralPoint.from_x(0.0)
    worst = -1.0
    for family in RZERO_EQUALS_B:
        spec = representative_spec(family)
        worst = max(worst, frobenius(build_R(spec, zero) - build_b(spec)))
    for family in (Family.EIGHT_II, Family.EIGHT_III, Family.EIGHT_IV):
        spec = representative_spec(family)
        r0, b = build_R(spec, zero), build_b(spec)
        idx = np.unravel_index(np.abs(r0).argmax(), r0.shape)
        worst = max(worst, frobenius(r0 - (r0[idx] / b[idx]) * b))
    # third-ordering family at x = 1: proportional to the identity
    spec = representative_spec(Family.EIGHT_IV)
    r1 = build_R(spec, SpectralPoint.from_x(1.0))
    worst = max(worst, frobenius(r1 - (np.trace(r1) / 4.0) * I4))
    return _entry(3, "asymptotics R(0) = b and R(1) prop. identity", worst < tol,
                  max_residual=worst, tolerance=tol)


def criterion_unitarity(seed: int) -> dict:
    tol = 1e-10
    worst, worst_family = -1.0, None
    for k, family in enumerate(R_FAMILIES):
        report = scan_unitarity(family, samples=100, seed=seed + 200 + k, tol=tol)
        if report.residual > worst:
            worst, worst_family = report.residual, family.value
    report = scan_unitarity(Family.EIGHT_IV, samples=100, seed=seed + 250,
                            tol=tol, imaginary_t=True)
    if report.residual > worst:
        worst, worst_family = report.residual, "eight4 (imaginary t)"
    # one deliberately off-domain point per family must fail hard
    off = [
        (FamilySpec.six_nonstd(gamma=0.3), SpectralPoint.from_x(1.5)),
        (FamilySpec.six_std(q=1.1 + 0.4j), SpectralPoint.from_x(np.exp(0.9j))),
        (FamilySpec.eight1(phi=0.8), SpectralPoint.from_x(np.exp(0.5j))),
        (FamilySpec.eight2(t=1.9, q=np.exp(0.33j)), SpectralPoint.from_x(0.5)),
        (FamilySpec.eight3(t=1.9, q=np.exp(0.33j)), SpectralPoint.from_x(0.5)),
        (FamilySpec.eight4(t=1.9, q=np.exp(0.33j)), SpectralPoint.from_x(0.5)),
    ]
    min_off = np.inf
    for spec, p in off:
        _, res = unitarity_residual(build_R(spec, p), verify.conjugate_partner(spec, p))
        min_off = min(min_off, res)
    passed = worst < tol and min_off > 1e-3
    return _entry(4, "unitarity of rho^{-1/2} R(x) on stated domains", passed,
                  max_residual=worst, tolerance=tol, worst_family=worst_family,
                  min_off_domain_residual=float(min_off))


def criterion_inverse_unitarity(seed: int) -> dict:
    tol = 1e-9
    rng = np.random.default_rng(seed + 300)
    worst = -1.0
    for family in (Family.EIGHT_II, Family.EIGHT_III, Family.EIGHT_IV):
        spec = representative_spec(family)
        for _ in range(10):
            p = sample_domain_point(spec, rng)
            measured, _ = family_inverse_unitarity(spec, p.value)
            rho = rho_formula(spec, p).rho
            worst = max(worst, abs(measured - rho))
    spec1 = representative_spec(Family.EIGHT_I)
    measured, expected = family_inverse_unitarity(spec1, 2.0)
    rho_at_2 = rho_formula(spec1, SpectralPoint.from_x(2.0)).rho
    gap_eight1 = abs(measured - rho_at_2)
    passed = worst < tol and abs(measured - expected) < tol and gap_eight1 > 1e-3
    return _entry(5, "inverse-unitarity scalar vs rho (compatibility)", passed,
                  max_gap_compatible=worst, eight1_gap_at_x2=float(gap_eight1),
                  tolerance=tol)


def _universality_points():
    th = SpectralPoint.from_theta
    return [
        (representative_spec(Family.SIX_NONSTD), th(0.6)),
        (FamilySpec.six_nonstd(q=1.0), th(0.6)),
        (representative_spec(Family.SIX_STD), th(0.6)),
        (representative_spec(Family.EIGHT_I), SpectralPoint.from_x(0.5)),
        (representative_spec(Family.EIGHT_II), th(0.8)),
        (representative_spec(Family.EIGHT_III), th(0.8)),
        (representative_spec(Family.EIGHT_IV), th(0.8)),
    ]


def _excluded_points():
    th = SpectralPoint.from_theta
    return [
        (representative_spec(Family.SIX_NONSTD), th(0.0)),
        (representative_spec(Family.SIX_STD), th(0.0)),
        (FamilySpec.six_std(q=1.0), th(0.6)),
        (representative_spec(Family.EIGHT_I), SpectralPoint.from_x(1.0)),
        (representative_spec(Family.EIGHT_II), th(0.0)),
        (FamilySpec.eight3(t=0.0, q=np.exp(0.33j)), th(0.8)),
        (representative_spec(Family.EIGHT_III), th(0.0)),
        (representative_spec(Family.EIGHT_IV), th(0.0)),
    ]


def criterion_universality(seed: int) -> dict:
    det_tol = 1e-12
    ok = True
    for spec, p in _universality_points():
        result = classify(spec, p, seed=seed + 400)
        ok = ok and result.classification is Classification.ENTANGLING
    for spec, p in _excluded_points():
        result = classify(spec, p, seed=seed + 401)
        ok = ok and result.classification is Classification.NOT_ENTANGLING
    rng = np.random.default_rng(seed + 402)
    worst = -1.0
    for family in R_FAMILIES:
        spec = representative_spec(family)
        p = SpectralPoint.from_theta(0.7) if family is not Family.EIGHT_I \
            else SpectralPoint.from_x(0.6)
        r = entangle.classification_gauge_R(spec, p)
        for k in range(20):
            if k % 2 == 0:
                f = rng.standard_normal(8)
                psi = entangle.product_state(f[0] + 1j * f[1], f[2] + 1j * f[3],
                                             f[4] + 1j * f[5], f[6] + 1j * f[7])
            else:
                g = rng.standard_normal(8)
                psi = entangle.state(g[0] + 1j * g[1], g[2] + 1j * g[3],
                                     g[4] + 1j * g[5], g[6] + 1j * g[7])
            gap = abs(concurrence_det(r @ psi) - det_b_closed(spec, p, psi))
            worst = max(worst, gap)
    passed = ok and worst < det_tol
    return _entry(6, "Brylinski universality classification and closed-form dets",
                  passed, classification_ok=ok, max_det_gap=worst, tolerance=det_tol)


def criterion_hamiltonians(seed: int) -> dict:
    herm_tol, close_tol = 1e-9, 1e-7
    worst_herm, worst_close = -1.0, -1.0
    th = SpectralPoint.from_theta
    for family in (Family.SIX_NONSTD, Family.SIX_STD, Family.EIGHT_II,
                   Family.EIGHT_III, Family.EIGHT_IV):
        spec = representative_spec(family)
        for theta in (0.25, 0.8, 1.3):
            fd = hamiltonian_fd(spec, th(theta))
            worst_herm = max(worst_herm, hermiticity_defect(fd.matrix))
            closed = hamiltonian_closed(spec, theta)
            worst_close = max(worst_close, frobenius(fd.matrix - closed.matrix))
    # eight1: closed form is -(i/2) b(phi)^2, theta-independent
    spec1 = representative_spec(Family.EIGHT_I)
    b = build_b(FamilySpec.bell(phi=spec1.phi, sign=spec1.sign))
    target = -0.5j * (b @ b)
    eight1_exact = frobenius(hamiltonian_closed(spec1, 0.3).matrix - target)
    fd_x1 = hamiltonian_fd(spec1, SpectralPoint.from_x(1.0))
    worst_herm = max(worst_herm, hermiticity_defect(fd_x1.matrix))
    eight1_fd_gap = frobenius(fd_x1.matrix - target)
    theta_probes = [hamiltonian_fd(spec1, th(t)).matrix for t in (0.2, 0.7, 1.1)]
    theta_indep = max(frobenius(theta_probes[i] - theta_probes[0]) for i in range(3))
    theta_scale = max(frobenius(hm - 2.0 * target) for hm in theta_probes)
    # theta = 0 and t = 1 special forms for eight2/3/4
    q = np.exp(-0.4j)
    v2h1 = 0.5 * (-I4 + q * tensor(SIGMA_PLUS, SIGMA_PLUS)
                  + tensor(SIGMA_MINUS, SIGMA_MINUS) / q
                  + tensor(SIGMA_PLUS, SIGMA_MINUS) + tensor(SIGMA_MINUS, SIGMA_PLUS))
    worst_special = -1.0
    for family in (Family.EIGHT_II, Family.EIGHT_III, Family.EIGHT_IV):
        spec_t1 = FamilySpec(family, q=q, t=1.0, sign=Sign.PLUS)
        closed_t1 = hamiltonian_closed(spec_t1, 0.9).matrix
        worst_special = max(worst_special, frobenius(closed_t1 - v2h1))
        worst_special = max(
            worst_special,
            frobenius(hamiltonian_fd(spec_t1, th(0.9)).matrix - closed_t1),
        )
        spec0 = representative_spec(family)
        worst_special = max(
            worst_special,
            frobenius(hamiltonian_fd(spec0, th(0.0)).matrix
                      - hamiltonian_closed(spec0, 0.0).matrix),
        )
    # six-vertex closed forms: confirmed-or-reported per the erratum protocol
    reports = [
        six_vertex_erratum_report(representative_spec(Family.SIX_NONSTD), 0.3),
        six_vertex_erratum_report(representative_spec(Family.SIX_STD), 0.7),
    ]
    six_ok = all(r["cosh_variant_confirmed"] and r["coth_variant_discrepant"]
                 for r in reports)
    passed = (worst_herm < herm_tol and eight1_exact < 1e-12
              and eight1_fd_gap < close_tol and theta_indep < close_tol
              and theta_scale < close_tol and worst_special < close_tol
              and worst_close < close_tol and six_ok)
    return _entry(7, "Hamiltonian extraction (FD oracle, closed forms, erratum report)",
                  passed, max_hermiticity_defect=worst_herm,
                  max_closed_vs_fd=worst_close, eight1_exact_gap=eight1_exact,
                  eight1_theta_independence=theta_indep,
                  max_special_form_gap=worst_special,
                  six_vertex_coth_printed_deviation=reports[0]["deviation_coth_variant"],
                  six_vertex_cosh_confirmed=six_ok)


def criterion_evolution(seed: int) -> dict:
    tol = 1e-10
    rng = np.random.default_rng(seed + 500)
    worst = -1.0
    for _ in range(50):
        phi = float(rng.uniform(0, 2 * np.pi))
        theta = float(rng.uniform(-1.2, 1.2))
        sign = Sign.PLUS if rng.integers(2) == 0 else Sign.MINUS
        spec = FamilySpec.eight1(phi=phi, sign=sign)
        worst = max(worst, braiding_evolution_residual(spec, theta))
    spec0 = FamilySpec.eight1(phi=0.0, sign=Sign.MINUS)
    r0 = dynamics.gauge_unitary(spec0, SpectralPoint.from_theta(0.0))
    gap0 = frobenius(r0 - expm_hermitian(tensor(SX, SY), -np.pi / 4.0))
    passed = worst < tol and gap0 < 1e-12
    return _entry(8, "braiding evolution identity R(theta) = exp(i(pi/2-2theta)H)",
                  passed, max_residual=worst, tolerance=tol, theta_zero_gap=gap0)


def criterion_cnot(seed: int) -> dict:
    dec1 = gates.theorem1_decomposition()
    dec2 = gates.cnot_via_evolution(0.0)
    agree = frobenius(dec1.product() - dec2.product())
    passed = dec1.residual < 1e-12 and dec2.residual < 1e-11 and agree < 1e-11
    return _entry(9, "CNOT synthesis via both routes", passed,
                  theorem1_residual=dec1.residual, evolution_residual=dec2.residual,
                  route_agreement=agree)


def criterion_bell(seed: int) -> dict:
    tol = 1e-12
    worst = -1.0
    for sign in (Sign.PLUS, Sign.MINUS):
        s = sign.factor
        for phi in (0.0, 0.9):
            states = gates.bell_basis(phi, sign)
            e_m, e_p = np.exp(-1j * phi), np.exp(1j * phi)
            expected = [
                np.array([1, 0, 0, -e_p], dtype=complex) / np.sqrt(2),
                np.array([0, 1, -s, 0], dtype=complex) / np.sqrt(2),
                np.array([0, s, 1, 0], dtype=complex) / np.sqrt(2),
                np.array([e_m, 0, 0, 1], dtype=complex) / np.sqrt(2),
            ]
            for got, want in zip(states, expected):
                worst = max(worst, float(np.linalg.norm(got - want)))
            gram = np.array([[np.vdot(u, v) for v in states] for u in states])
            worst = max(worst, frobenius(gram - I4))
            if phi == 0.0:
                for psi in states:
                    worst = max(worst, abs(abs(concurrence_det(psi)) - 0.5))
    return _entry(10, "Bell basis from b(phi) with |Det| = 1/2 at phi = 0",
                  worst < tol, max_residual=worst, tolerance=tol)


CRITERIA = [
    criterion_braid,
    criterion_qybe,
    criterion_asymptotics,
    criterion_unitarity,
    criterion_inverse_unitarity,
    criterion_universality,
    criterion_hamiltonians,
    criterion_evolution,
    criterion_cnot,
    criterion_bell,
]


def run_suite(seed: int = 42) -> dict:
    """Evaluate criteria 1-10; determinism (11) is checked by re-running the CLI."""
    criteria = [fn(seed) for fn in CRITERIA]
    return {
        "seed": int(seed),
        "criteria": criteria,
        "all_pass": all(c["pass"] for c in criteria),
    }
