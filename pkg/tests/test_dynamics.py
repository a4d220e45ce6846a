import numpy as np
import pytest

from yaxter.baxterize import SpectralPoint
from yaxter.catalog import DomainError, Family, FamilySpec, Sign
from yaxter.dynamics import (
    HamiltonianSource,
    braiding_evolution_residual,
    eight1_x_hamiltonian,
    evolve,
    gauge_unitary,
    hamiltonian_closed,
    hamiltonian_fd,
    pauli_decompose,
    schroedinger_residual,
    six_vertex_erratum_report,
    six_vertex_hamiltonian_coth_variant,
)
from yaxter.gates import PAULI, SIGMA_MINUS, SIGMA_PLUS, SX, SZ, sigma_xy, tensor
from yaxter.linalg import expm_hermitian, frobenius, hermiticity_defect, identity

X = SpectralPoint.from_x
TH = SpectralPoint.from_theta
I4 = identity(4)

THETA_FAMILIES = [
    FamilySpec.six_nonstd(gamma=0.5),
    FamilySpec.six_std(gamma=0.45),
    FamilySpec.eight2(t=1.7, q=np.exp(-0.4j), sign=Sign.MINUS),
    FamilySpec.eight3(t=2.1, q=np.exp(0.33j)),
    FamilySpec.eight4(t=1.6, q=np.exp(0.25j)),
]


def central_difference_generator(curve, s0, h=1e-5):
    """Plain O(h^2) oracle without Richardson acceleration."""
    du = (curve(s0 + h) - curve(s0 - h)) / (2 * h)
    return 1j * du @ curve(s0).conj().T


# --- finite differences -----------------------------------------------------------

@pytest.mark.parametrize("spec", THETA_FAMILIES, ids=lambda s: s.family.value)
def test_fd_hamiltonians_are_hermitian(spec):
    for theta in (0.2, 0.9):
        h = hamiltonian_fd(spec, TH(theta))
        assert hermiticity_defect(h.matrix) < 10 * 1e-5 ** 2 + 1e-10


def test_fd_of_constant_curve_vanishes():
    u0 = expm_hermitian(tensor(SZ, SX), 0.7)
    h = central_difference_generator(lambda s: u0, 0.3)
    assert frobenius(h) < 1e-11


def test_fd_step_guard():
    with pytest.raises(ValueError, match="cancellation"):
        hamiltonian_fd(FamilySpec.six_nonstd(gamma=0.5), TH(0.3), h=1e-9)


def test_fd_degenerate_normalization():
    with pytest.raises(DomainError):
        hamiltonian_fd(FamilySpec.six_nonstd(q=1.0), TH(0.0))


def test_fd_richardson_is_second_order():
    spec = FamilySpec.eight2(t=1.7, q=np.exp(-0.4j))
    exact = hamiltonian_closed(spec, 0.8).matrix
    errs = []
    for h in (1e-3, 5e-4):
        fd = hamiltonian_fd(spec, TH(0.8), h=h, richardson=False).matrix
        errs.append(frobenius(fd - exact))
    ratio = errs[0] / errs[1]
    assert 3.0 < ratio < 5.0  # halving h divides an O(h^2) error by ~4


# --- six-vertex closed forms and the printed-variant discrepancy -------------------

def test_six_nonstd_closed_matches_fd():
    spec = FamilySpec.six_nonstd(gamma=0.5)
    fd = hamiltonian_fd(spec, TH(0.3)).matrix
    closed = hamiltonian_closed(spec, 0.3).matrix
    assert frobenius(fd - closed) < 1e-9


def test_six_std_closed_matches_fd():
    spec = FamilySpec.six_std(gamma=0.45)
    fd = hamiltonian_fd(spec, TH(0.7)).matrix
    closed = hamiltonian_closed(spec, 0.7).matrix
    assert frobenius(fd - closed) < 1e-9
    # the standard family flips the lower-corner sign relative to the other one
    assert np.isclose(closed[3, 3], closed[0, 0])


def test_six_vertex_coth_variant_is_discrepant():
    spec = FamilySpec.six_nonstd(gamma=0.5)
    report = six_vertex_erratum_report(spec, 0.3)
    assert report["cosh_variant_confirmed"]
    assert report["coth_variant_discrepant"]
    assert report["deviation_coth_variant"] > 1e-1
    fd = hamiltonian_fd(spec, TH(0.3)).matrix
    assert frobenius(fd - six_vertex_hamiltonian_coth_variant(spec, 0.3)) > 1e-1


def test_six_vertex_matrix_is_theta_independent_up_to_rho():
    # only the overall 1/rho factor moves with theta
    spec = FamilySpec.six_nonstd(gamma=0.5)
    h1 = hamiltonian_closed(spec, 0.3).matrix
    h2 = hamiltonian_closed(spec, 1.1).matrix
    rho1 = np.sinh(0.5) ** 2 + np.sin(0.3) ** 2
    rho2 = np.sinh(0.5) ** 2 + np.sin(1.1) ** 2
    assert frobenius(rho1 * h1 - rho2 * h2) < 1e-12


# --- eight1 -----------------------------------------------------------------------

def test_eight1_time_independent_hamiltonian_display():
    phi = 0.9
    spec = FamilySpec.eight1(phi=phi, sign=Sign.PLUS)
    h = hamiltonian_closed(spec, 0.4).matrix
    want = 0.5j * np.array(
        [
            [0, 0, 0, -np.exp(-1j * phi)],
            [0, 0, -1, 0],
            [0, 1, 0, 0],
            [np.exp(1j * phi), 0, 0, 0],
        ]
    )
    assert frobenius(h - want) < 1e-14
    # equal at every theta
    assert frobenius(h - hamiltonian_closed(spec, 1.2).matrix) == 0.0


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_eight1_x_curve_hamiltonian(x):
    spec = FamilySpec.eight1(phi=0.9, sign=Sign.MINUS)
    fd = hamiltonian_fd(spec, X(x)).matrix
    assert frobenius(fd - eight1_x_hamiltonian(spec, x)) < 1e-9
    if x == 1.0:
        assert frobenius(fd - hamiltonian_closed(spec, 0.0).matrix) < 1e-9


def test_eight1_theta_curve_generator_is_twice_the_closed_form():
    spec = FamilySpec.eight1(phi=0.9)
    target = 2 * hamiltonian_closed(spec, 0.0).matrix
    for theta in (0.2, 0.7, 1.1):
        fd = hamiltonian_fd(spec, TH(theta)).matrix
        assert frobenius(fd - target) < 1e-9


def test_eight1_hamiltonian_is_projected_pauli_pair():
    phi = 0.9
    hplus = hamiltonian_closed(FamilySpec.eight1(phi=phi, sign=Sign.PLUS), 0.0).matrix
    assert frobenius(hplus - tensor(sigma_xy((np.pi + phi) / 2), sigma_xy(phi / 2)) / 2) < 1e-13
    hminus = hamiltonian_closed(FamilySpec.eight1(phi=phi, sign=Sign.MINUS), 0.0).matrix
    assert frobenius(hminus - tensor(sigma_xy(phi / 2), sigma_xy((np.pi + phi) / 2)) / 2) < 1e-13


# --- eight2/3/4 closed forms --------------------------------------------------------

@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec.eight2(t=1.7, q=np.exp(-0.4j), sign=Sign.MINUS),
        FamilySpec.eight3(t=2.1, q=np.exp(0.33j)),
        FamilySpec.eight4(t=1.6, q=np.exp(0.25j)),
    ],
    ids=lambda s: s.family.value,
)
def test_eight_vertex_closed_forms_match_fd(spec):
    for theta in (0.0, 0.4, 1.1):
        fd = hamiltonian_fd(spec, TH(theta)).matrix
        closed = hamiltonian_closed(spec, theta).matrix
        assert frobenius(fd - closed) < 1e-7


def v2h1_matrix(q):
    return 0.5 * (
        -I4
        + q * tensor(SIGMA_PLUS, SIGMA_PLUS)
        + tensor(SIGMA_MINUS, SIGMA_MINUS) / q
        + tensor(SIGMA_PLUS, SIGMA_MINUS)
        + tensor(SIGMA_MINUS, SIGMA_PLUS)
    )


@pytest.mark.parametrize("family", [Family.EIGHT_II, Family.EIGHT_III, Family.EIGHT_IV])
def test_t_equals_one_collapses_to_the_shared_form(family):
    q = np.exp(-0.4j)
    spec = FamilySpec(family, q=q, t=1.0, sign=Sign.PLUS)
    for theta in (0.3, 0.9):
        closed = hamiltonian_closed(spec, theta).matrix
        assert frobenius(closed - v2h1_matrix(q)) < 1e-13
        assert frobenius(hamiltonian_fd(spec, TH(theta)).matrix - closed) < 1e-7


def test_eight2_t_one_is_projected_pair():
    phi = 0.4
    q = np.exp(-1j * phi)
    h = hamiltonian_closed(FamilySpec.eight2(t=1.0, q=q, sign=Sign.PLUS), 0.0).matrix
    n1 = sigma_xy(phi / 2)
    assert frobenius(h - 0.5 * (-I4 + tensor(n1, n1))) < 1e-13


def test_eight4_theta_zero_display():
    t, q = 1.6, np.exp(0.25j)
    spec = FamilySpec.eight4(t=t, q=q)
    closed = hamiltonian_closed(spec, 0.0).matrix
    want = -I4 + (1 / (4 * t)) * (
        (t * t + 1) * I4
        + (t * t - 1) * tensor(SZ, SZ)
        + 2 * (q * tensor(SIGMA_PLUS, SIGMA_PLUS) + tensor(SIGMA_MINUS, SIGMA_MINUS) / q)
        + 2 * t * t * (tensor(SIGMA_PLUS, SIGMA_MINUS) + tensor(SIGMA_MINUS, SIGMA_PLUS))
    )
    assert frobenius(closed - want) < 1e-13


# --- Pauli decomposition -------------------------------------------------------------

def test_pauli_decompose_single_term():
    d = pauli_decompose(tensor(SZ, PAULI["i"]))
    assert d.coeff("zi") == pytest.approx(1.0)
    assert d.nonzero_keys() == ["zi"]


def test_pauli_reconstruction_round_trip():
    rng = np.random.default_rng(41)
    h = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    d = pauli_decompose(h)
    assert frobenius(d.reconstruct() - h) < 1e-13


def test_six_nonstd_pauli_content():
    spec = FamilySpec.six_nonstd(gamma=0.5)
    d = pauli_decompose(hamiltonian_closed(spec, 0.3).matrix)
    assert set(d.nonzero_keys(tol=1e-10)) == {"iz", "zi", "xx", "yy"}
    g = 0.5
    rho = np.sinh(g) ** 2 + np.sin(0.3) ** 2
    pref = np.sinh(g) / (2 * rho)
    assert d.coeff("xx") == pytest.approx(pref)
    assert d.coeff("yy") == pytest.approx(pref)
    assert d.coeff("iz") == pytest.approx(pref * (np.cosh(g) + np.sinh(g)))
    assert d.coeff("zi") == pytest.approx(pref * (np.cosh(g) - np.sinh(g)))


def test_eight1_pauli_content_lives_in_the_xy_plane():
    spec = FamilySpec.eight1(phi=0.9)
    d = pauli_decompose(hamiltonian_closed(spec, 0.0).matrix)
    assert set(d.nonzero_keys(tol=1e-12)) <= {"xx", "xy", "yx", "yy"}
    for key in d.nonzero_keys():
        assert abs(d.coeff(key).imag) < 1e-14


def test_pauli_json_keys():
    blob = pauli_decompose(tensor(SZ, SX)).to_json()
    assert len(blob["coeffs"]) == 16
    assert blob["coeffs"]["zx"] == [1.0, 0.0]


# --- evolution ------------------------------------------------------------------------

def test_evolve_at_zero_is_identity():
    h = hamiltonian_closed(FamilySpec.eight1(phi=0.3), 0.0)
    assert frobenius(evolve(h, 0.0) - I4) < 1e-14


def test_eight1_evolution_operator_closed_form():
    phi, theta = 0.9, 1.1
    spec = FamilySpec.eight1(phi=phi, sign=Sign.PLUS)
    u = evolve(hamiltonian_closed(spec, 0.0), theta)
    big = tensor(sigma_xy((np.pi + phi) / 2), sigma_xy(phi / 2))
    want = np.cos(theta / 2) * I4 - 1j * np.sin(theta / 2) * big
    assert frobenius(u - want) < 1e-13


def test_eight2_t_one_evolution_phase_form():
    phi, theta = 0.4, 0.8
    q = np.exp(-1j * phi)
    u = evolve(hamiltonian_closed(FamilySpec.eight2(t=1.0, q=q, sign=Sign.PLUS), 0.0), theta)
    n1 = sigma_xy(phi / 2)
    want = np.exp(1j * theta / 2) * (np.cos(theta / 2) * I4 - 1j * np.sin(theta / 2) * tensor(n1, n1))
    assert frobenius(u - want) < 1e-13


def test_braiding_evolution_identity():
    rng = np.random.default_rng(43)
    assert braiding_evolution_residual(FamilySpec.eight1(phi=0.3), np.pi / 4) < 1e-12
    for _ in range(50):
        phi = float(rng.uniform(0, 2 * np.pi))
        theta = float(rng.uniform(-1.2, 1.2))
        sign = Sign.PLUS if rng.integers(2) == 0 else Sign.MINUS
        assert braiding_evolution_residual(FamilySpec.eight1(phi=phi, sign=sign), theta) < 1e-10


def test_theta_zero_minus_branch_is_the_xy_exponential():
    spec = FamilySpec.eight1(phi=0.0, sign=Sign.MINUS)
    r0 = gauge_unitary(spec, TH(0.0))
    assert frobenius(r0 - expm_hermitian(tensor(SX, PAULI["y"]), -np.pi / 4)) < 1e-12


def test_braiding_evolution_requires_eight1():
    with pytest.raises(ValueError, match="eight1"):
        braiding_evolution_residual(FamilySpec.eight2(t=1.5), 0.3)


@pytest.mark.parametrize(
    "spec", THETA_FAMILIES + [FamilySpec.eight1(phi=0.9)], ids=lambda s: s.family.value
)
def test_schroedinger_consistency(spec):
    rng = np.random.default_rng(47)
    for _ in range(10):
        psi0 = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        psi0 /= np.linalg.norm(psi0)
        assert schroedinger_residual(spec, TH(0.6), psi0) < 1e-6


def test_closed_form_source_tags():
    ham = hamiltonian_closed(FamilySpec.eight2(t=1.3, q=1.0), 0.2)
    assert ham.source is HamiltonianSource.CLOSED_FORM
    ham = hamiltonian_fd(FamilySpec.eight2(t=1.3, q=1.0), TH(0.2))
    assert ham.source is HamiltonianSource.FINITE_DIFFERENCE
