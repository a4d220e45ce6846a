import numpy as np
import pytest

from yaxter.baxterize import (
    EigOrdering,
    SpectralPoint,
    ThetaConvention,
    build_R,
    compose_u,
    degeneracy_note,
    eight4_g_factors,
    formula_R,
    ordered_eigenvalues,
    reparam,
    u_to_x,
    x_to_u,
    yb_three,
    yb_two,
)
from yaxter.catalog import DomainError, Family, FamilySpec, Sign, build_b, eigenvalues_of
from yaxter.linalg import frobenius, identity, inverse
from yaxter.verify import sample_spec

X = SpectralPoint.from_x
TH = SpectralPoint.from_theta
U = SpectralPoint.from_u

R_FAMILIES = [Family.SIX_NONSTD, Family.SIX_STD, Family.EIGHT_I,
              Family.EIGHT_II, Family.EIGHT_III, Family.EIGHT_IV]


# --- spectral point algebra ---------------------------------------------------

def test_u_at_x_one_is_zero():
    assert X(1.0).u() == 0


def test_u_on_unit_circle_is_minus_i_tan_half():
    theta = 0.8
    u = X(np.exp(1j * theta)).u()
    assert abs(u - (-1j * np.tan(theta / 2))) < 1e-15
    # with the angle-doubling convention the same x corresponds to theta/2
    u2 = TH(theta / 2).u(ThetaConvention.HALF)
    assert abs(u2 - u) < 1e-15


def test_reparam_round_trips():
    p = X(0.3 + 0.4j)
    for conv in ThetaConvention:
        back = reparam(reparam(p, "theta", conv), "x", conv)
        assert abs(back.value - p.value) < 1e-14
    back = reparam(reparam(p, "u"), "x")
    assert abs(back.value - p.value) < 1e-14


def test_u_composition_law():
    x, y = 0.5, 2.0
    u, v = x_to_u(x), x_to_u(y)
    assert u == pytest.approx(1 / 3) and v == pytest.approx(-1 / 3)
    assert x_to_u(x * y) == 0
    assert compose_u(u, v) == 0
    rng = np.random.default_rng(4)
    for _ in range(20):
        x, y = rng.uniform(0.2, 3, 2)
        assert abs(compose_u(x_to_u(x), x_to_u(y)) - x_to_u(x * y)) < 1e-14


def test_u_undefined_at_minus_one():
    with pytest.raises(DomainError):
        x_to_u(-1.0)
    with pytest.raises(DomainError):
        u_to_x(-1.0)


# --- the two baxterization formulas -------------------------------------------

def test_yb_two_at_zero_returns_b():
    spec = FamilySpec.six_nonstd(gamma=0.4)
    b = build_b(spec)
    assert np.array_equal(yb_two(b, *eigenvalues_of(spec), 0.0), b)


def test_yb_two_eight1_display_and_x_one():
    q = np.exp(-0.6j)
    spec = FamilySpec.eight1(q=q, sign=Sign.MINUS)
    b = build_b(spec)
    x = 0.37 + 0.21j
    got = yb_two(b, 1 - 1j, 1 + 1j, x)
    want = np.array(
        [
            [1 + x, 0, 0, q * (1 - x)],
            [0, 1 + x, -(1 - x), 0],
            [0, (1 - x), 1 + x, 0],
            [-(1 - x) / q, 0, 0, 1 + x],
        ]
    )
    assert frobenius(got - want) < 1e-14
    assert frobenius(yb_two(b, 1 - 1j, 1 + 1j, 1.0) - 2 * identity(4)) < 1e-14


def test_yb_two_affine_in_x():
    spec = FamilySpec.eight2(t=1.8, q=np.exp(0.2j))
    b = build_b(spec)
    l1, l2 = eigenvalues_of(spec)
    x1, x2 = 0.3 + 0.1j, -0.7 + 0.4j
    lhs = yb_two(b, l1, l2, x1) + yb_two(b, l1, l2, x2)
    rhs = yb_two(b, l1, l2, x1 + x2) + b
    # the identity is entrywise-algebraic; only rounding separates the sides
    assert frobenius(lhs - rhs) < 1e-14 * max(1.0, frobenius(rhs))


def test_yb_three_validations():
    b = build_b(FamilySpec.eight3(t=2.0))
    with pytest.raises(ValueError, match="lambda2"):
        yb_three(b, (3.0, 0.0, 1.0), 0.5)
    with pytest.raises(ValueError, match="distinct"):
        yb_three(b, (3.0, 3.0, 1.0), 0.5)


def test_yb_three_first_ordering_collapses_to_two_eigenvalue_form():
    t = 2.2
    spec = FamilySpec.eight3(t=t, q=np.exp(0.2j))
    b = build_b(spec)
    x = 0.4 + 0.3j
    got = yb_three(b, ordered_eigenvalues(spec, EigOrdering.FIRST), x)
    want = -(x - 1) * (b + x * (1 - t * t) * inverse(b))
    assert frobenius(got - want) < 1e-12


def test_yb_three_second_ordering_flips_the_sign():
    t = 2.2
    spec = FamilySpec.eight3(t=t, q=np.exp(0.2j))
    b = build_b(spec)
    x = 0.4 + 0.3j
    got = yb_three(b, ordered_eigenvalues(spec, EigOrdering.SECOND), x)
    want = -(x - 1) * (b - x * (1 - t * t) * inverse(b))
    assert frobenius(got - want) < 1e-12


def test_yb_three_third_ordering_matches_eight4_scaled():
    t = 1.8
    spec = FamilySpec.eight4(t=t, q=np.exp(0.33j))
    b = build_b(spec)
    x = 0.4 + 0.3j
    got = yb_three(b, ordered_eigenvalues(spec, EigOrdering.THIRD), x)
    want = build_R(spec, X(x))
    assert frobenius((1 + t) * got - want) < 1e-12


def test_yb_three_proportional_to_identity_at_x_one():
    spec = FamilySpec.eight4(t=1.8)
    lams = ordered_eigenvalues(spec, EigOrdering.THIRD)
    assert abs(sum(lams) + lams[0] * lams[2] / lams[1]) > 0.1  # nonvanishing sum term
    r1 = yb_three(build_b(spec), lams, 1.0)
    scalar = np.trace(r1) / 4
    assert frobenius(r1 - scalar * identity(4)) < 1e-13


# --- closed forms --------------------------------------------------------------

def test_six_nonstd_x_form_display():
    q, x = 1.4, 0.3 + 0.2j
    r = build_R(FamilySpec.six_nonstd(q=q), X(x))
    want = np.array(
        [
            [q - x / q, 0, 0, 0],
            [0, (q - 1 / q) * x, 1 - x, 0],
            [0, 1 - x, q - 1 / q, 0],
            [0, 0, 0, q * x - 1 / q],
        ]
    )
    assert frobenius(r - want) < 1e-14


def test_six_nonstd_theta_form_display():
    g, th = 0.5, 0.7
    r = build_R(FamilySpec.six_nonstd(gamma=g), TH(th))
    sh = np.sinh(g)
    want = 2 * np.exp(1j * th) * np.array(
        [
            [np.sinh(g - 1j * th), 0, 0, 0],
            [0, np.exp(1j * th) * sh, -1j * np.sin(th), 0],
            [0, -1j * np.sin(th), np.exp(-1j * th) * sh, 0],
            [0, 0, 0, np.sinh(g + 1j * th)],
        ]
    )
    assert frobenius(r - want) < 1e-13
    # same matrix as the x-form at x = e^{2 i theta}
    assert frobenius(r - build_R(FamilySpec.six_nonstd(gamma=g), X(np.exp(2j * th)))) < 1e-13


def test_eight2_x_form_display():
    t, q, x = 1.6, np.exp(0.3j), np.exp(0.9j)
    z = np.sqrt(t * t - 2 * t + 2)
    r = build_R(FamilySpec.eight2(t=t, q=q), X(x))
    assert abs(r[0, 0] - (2 - t * (1 - x))) < 1e-14
    assert abs(r[3, 3] - (2 * x + t * (1 - x))) < 1e-14
    assert abs(r[0, 3] - q * (1 - x)) < 1e-14
    assert abs(r[3, 0] - (1 - x) / q) < 1e-14
    assert abs(r[1, 1] - (1 + x)) < 1e-14
    assert abs(r[1, 2] - z * (1 - x)) < 1e-14


@pytest.mark.parametrize("family", R_FAMILIES)
def test_closed_form_agrees_with_baxterization_up_to_scalar(family):
    rng = np.random.default_rng(31)
    for _ in range(5):
        spec = sample_spec(family, rng)
        x = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
        b = build_b(spec)
        lams = eigenvalues_of(spec)
        if family is Family.EIGHT_IV:
            ref = yb_three(b, ordered_eigenvalues(spec, EigOrdering.THIRD), x)
        elif family is Family.EIGHT_III:
            ref = yb_three(b, ordered_eigenvalues(spec, EigOrdering.FIRST), x)
        else:
            ref = yb_two(b, lams[0], lams[1], x)
        got = build_R(spec, X(x))
        idx = np.unravel_index(np.abs(got).argmax(), got.shape)
        scalar = got[idx] / ref[idx]
        assert frobenius(got - scalar * ref) < 1e-10 * max(1.0, frobenius(got))


def test_asymptotic_r_zero():
    for family in (Family.SIX_NONSTD, Family.SIX_STD, Family.EIGHT_I):
        spec = sample_spec(family, np.random.default_rng(8))
        assert frobenius(build_R(spec, X(0.0)) - build_b(spec)) < 1e-12
    for family in (Family.EIGHT_II, Family.EIGHT_III, Family.EIGHT_IV):
        spec = sample_spec(family, np.random.default_rng(8))
        r0, b = build_R(spec, X(0.0)), build_b(spec)
        idx = np.unravel_index(np.abs(r0).argmax(), r0.shape)
        assert frobenius(r0 - (r0[idx] / b[idx]) * b) < 1e-12


def test_eight1_theta_form_is_unitary_combination():
    phi, th = 0.9, 0.4
    spec = FamilySpec.eight1(phi=phi)
    r = build_R(spec, TH(th))
    b = build_b(FamilySpec.bell(phi=phi))
    want = np.cos(th) * b + np.sin(th) * inverse(b)
    assert frobenius(r - want) < 1e-14
    assert frobenius(r @ r.conj().T - identity(4)) < 1e-12
    # equals the x-form rescaled by its normalization at x = tan(theta)
    x = np.tan(th)
    assert frobenius(r - build_R(spec, X(x)) / np.sqrt(2 * (1 + x * x))) < 1e-13


def test_eight4_g_form_is_canonical_divided_by_g1():
    spec = FamilySpec.eight4(t=1.7, q=np.exp(0.4j))
    x = np.exp(0.8j)
    g1, _ = eight4_g_factors(spec, x)
    canonical = build_R(spec, X(x))
    gform = build_R(spec, X(x), form="g")
    assert frobenius(canonical - g1 * gform) < 1e-12


@pytest.mark.parametrize(
    "family,power", [(Family.EIGHT_I, 1), (Family.EIGHT_II, 1),
                     (Family.EIGHT_III, 1), (Family.EIGHT_IV, 2)]
)
def test_u_forms_are_x_forms_rescaled(family, power):
    spec = sample_spec(family, np.random.default_rng(13))
    x = 0.6 + 0.3j
    u = x_to_u(x)
    got = build_R(spec, U(u))
    want = build_R(spec, X(x)) / (1 + x) ** power
    assert frobenius(got - want) < 1e-13


def test_ordering_validation():
    with pytest.raises(ValueError, match="eight4"):
        build_R(FamilySpec.eight3(t=2.0), X(0.5), ordering=EigOrdering.THIRD)
    with pytest.raises(ValueError, match="third-ordering"):
        build_R(FamilySpec.eight4(t=2.0), X(0.5), ordering=EigOrdering.FIRST)
    with pytest.raises(ValueError, match="two eigenvalues"):
        build_R(FamilySpec.six_nonstd(q=2.0), X(0.5), ordering=EigOrdering.FIRST)
    with pytest.raises(ValueError, match="braid-matrix family"):
        build_R(FamilySpec.bell(), X(0.5))


def test_six_vertex_u_point_falls_back_to_the_x_form():
    spec = FamilySpec.six_nonstd(q=1.4)
    u = 0.25
    got = build_R(spec, U(u))
    assert frobenius(got - build_R(spec, X(u_to_x(u)))) == 0.0


def test_formula_R_matches_closed_forms_up_to_scalar():
    rng = np.random.default_rng(41)
    for family in R_FAMILIES:
        spec = sample_spec(family, rng)
        x = 0.4 + 0.2j
        got = formula_R(spec, x)
        ref = build_R(spec, X(x))
        idx = np.unravel_index(np.abs(ref).argmax(), ref.shape)
        assert frobenius(ref - (ref[idx] / got[idx]) * got) < 1e-11


def test_formula_R_rejects_collapsed_eigenvalues():
    for t in (0.0, 1.0, -1.0):
        with pytest.raises(DomainError, match="collapse"):
            formula_R(FamilySpec.eight3(t=t), 0.5)


def test_degeneracy_note_at_x_one():
    spec = FamilySpec.six_nonstd(gamma=0.3)
    assert "identity" in degeneracy_note(spec, X(1.0))
    assert degeneracy_note(spec, X(0.5)) is None
