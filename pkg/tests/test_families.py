import math

import numpy as np
import pytest

from diskmean import (
    FamilySpec,
    FamilyVariant,
    InvalidFamilyParams,
    a_theta,
    a_theta_grid,
    a_theta_reduced,
    boundary_image,
    build,
    critical_points,
    d_prime_theta,
    d_theta,
    ex31_a_factored_m3,
    ex32_tail_by_coefficients,
    ex32_tail_by_integral,
    ex33_functional_modulus,
    ex33_re_at_1,
    extend_table1,
    identity_function,
    table1,
    table1_angle,
    zeta_constant,
)

EX31, EX32, EX33, EX34 = (FamilyVariant.EX31, FamilyVariant.EX32,
                          FamilyVariant.EX33, FamilyVariant.EX34)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def test_build_ex31_n1():
    fn = build(FamilySpec(EX31, n=1))
    c = fn.phi.coeffs
    assert c[0] == 1.0 and c[1] == 0.75 and c[3] == 0.25
    assert np.all(c[4:] == 0)


def test_build_ex34_n1():
    fn = build(FamilySpec(EX34, n=1))
    c = fn.phi.coeffs
    assert abs(c[1] - 2 / 3) <= 1e-15
    assert abs(c[3] - 1 / 3) <= 1e-15


def test_build_ex32_leading_coefficients():
    fn = build(FamilySpec(EX32, order=4096))
    c = fn.phi.coeffs
    assert abs(c[2] - 0.8319073) <= 1e-6  # 1/zeta(3)
    assert abs(c[1] - (1 - zeta_constant(5) / zeta_constant(3))) <= 1e-15
    # quadratic-weight partial sums telescope toward 1
    k = np.arange(2, c.size, dtype=float)
    partial = np.sum((k - 1) ** 2 * np.abs(c[2:]))
    assert partial < 1.0
    assert abs(partial - 1.0) <= 1e-6


def test_build_ex33():
    fn = build(FamilySpec(EX33, n=3, b=0.5, beta=0.3))
    c = fn.phi.coeffs
    assert c[1] == 0.5j
    assert abs(c[3] - np.exp(0.6j) / 2) <= 1e-15


@pytest.mark.parametrize("spec", [
    FamilySpec(EX31, n=0),
    FamilySpec(EX34, n=0),
    FamilySpec(EX31, n=5, order=7),       # cannot hold z^11
    FamilySpec(EX33, n=2),
    FamilySpec(EX33, n=3, b=0.9),         # |b| > (n-2)/(n-1) = 1/2
    FamilySpec(EX32, order=1),
])
def test_build_rejects_bad_params(spec):
    with pytest.raises(InvalidFamilyParams):
        build(spec)


# ---------------------------------------------------------------------------
# zeta
# ---------------------------------------------------------------------------

def test_zeta_2_classical_identity():
    assert abs(zeta_constant(2) - math.pi ** 2 / 6) <= 1e-12


def test_zeta_3():
    assert abs(zeta_constant(3) - 1.2020569031596) <= 1e-12


def test_zeta_5():
    assert abs(zeta_constant(5) - 1.0369277551434) <= 1e-12


def test_zeta_rejects_small_s():
    with pytest.raises(ValueError):
        zeta_constant(1)


# ---------------------------------------------------------------------------
# A(theta) and D(theta)
# ---------------------------------------------------------------------------

def test_a_theta_ex31_endpoints():
    assert abs(a_theta(EX31, 1, math.pi)) <= 1e-15
    assert abs(a_theta(EX31, 1, 0.0) - 1.0) <= 1e-15


def test_a_theta_ex34_rational_anchor():
    theta = math.acos(-8.0 / 9.0)
    assert abs(a_theta(EX34, 1, theta) - (-55.0 / 2187.0)) <= 1e-12


def test_a_theta_ex34_reference_angle():
    theta = 6 * math.pi / 7
    assert abs(table1_angle(1) - theta) <= 1e-15
    assert abs(a_theta(EX34, 1, theta) - (-0.0258011)) <= 5e-7


def test_d_theta_values():
    assert abs(d_theta(EX31, 1, 0.0) - (-1 / 6)) <= 1e-15
    assert abs(d_theta(EX31, 1, math.pi) - (7 / 6)) <= 1e-15
    assert abs(d_theta(EX34, 1, 0.0) - (-1 / 3)) <= 1e-15


def test_d_prime_zeros():
    for n in (1, 2, 5, 9):
        assert d_prime_theta(n, 0.0) == 0.0
        assert abs(d_prime_theta(n, math.pi)) <= 1e-12
    assert abs(d_prime_theta(2, math.pi / 2)) <= 1e-12


def test_d_prime_matches_finite_difference():
    rng = np.random.default_rng(31)
    h = 1e-5
    for n in (1, 2, 3, 7, 12):
        for theta in rng.uniform(0, math.pi, 40):
            fd = (d_theta(EX31, n, theta + h)
                  - d_theta(EX31, n, theta - h)) / (2 * h)
            assert abs(d_prime_theta(n, theta) - fd) <= 1e-6


def test_d_prime_matches_sine_sum():
    # product form == sin t - sin(mt) - sin((m-1)t)
    t = np.linspace(0.01, math.pi, 200)
    for n in (2, 4, 8):
        m = 2 * n + 1
        direct = np.sin(t) - np.sin(m * t) - np.sin((m - 1) * t)
        assert np.max(np.abs(d_prime_theta(n, t) - direct)) <= 1e-12


# ---------------------------------------------------------------------------
# formula cross-validation
# ---------------------------------------------------------------------------

def test_ex31_three_forms_agree():
    t = np.linspace(0.0, math.pi, 1000)
    for n in (1, 2, 5, 10):
        dev = np.max(np.abs(a_theta(EX31, n, t) - a_theta_reduced(EX31, n, t)))
        assert dev <= 1e-12
    dev = np.max(np.abs(a_theta(EX31, 1, t) - ex31_a_factored_m3(t)))
    assert dev <= 1e-12


def test_ex34_forms_agree_at_probe_angles():
    for n, theta, value in table1(1, 15):
        assert abs(value - a_theta(EX34, n, theta)) <= 1e-12
        assert abs(value - a_theta_reduced(EX34, n, theta)) <= 1e-12


def test_a_pi_zero_for_ex31():
    for n in range(1, 21):
        assert abs(a_theta(EX31, n, math.pi)) <= 1e-12


def test_d_below_value_at_pi():
    t = 2 * np.pi * np.arange(4096) / 4096
    mask = t <= math.pi
    for n in range(2, 11):
        d = d_theta(EX31, n, t[mask])
        assert np.max(d) <= d_theta(EX31, n, math.pi) + 1e-12


# ---------------------------------------------------------------------------
# critical points
# ---------------------------------------------------------------------------

def test_critical_points_n2():
    first, second = critical_points(2)
    assert np.allclose(first, [math.pi / 5, 3 * math.pi / 5], atol=1e-15)
    assert np.allclose(second, [math.pi / 2], atol=1e-15)


def test_critical_points_n3():
    first, second = critical_points(3)
    assert np.allclose(first, [math.pi / 7, 3 * math.pi / 7, 5 * math.pi / 7])
    assert np.allclose(second, [math.pi / 3, 2 * math.pi / 3])


@pytest.mark.parametrize("n", [2, 3, 5, 8, 12])
def test_critical_points_are_zeros_and_interlace(n):
    first, second = critical_points(n)
    for x in first + second:
        assert abs(d_prime_theta(n, x)) <= 1e-10
    merged = []
    for j in range(n - 1):
        merged += [first[j], second[j]]
    merged += [first[-1], math.pi]
    assert all(a < b for a, b in zip(merged, merged[1:]))


def test_critical_points_rejects_n1():
    with pytest.raises(InvalidFamilyParams):
        critical_points(1)


# ---------------------------------------------------------------------------
# reference table
# ---------------------------------------------------------------------------

REFERENCE_ROWS = [
    (1, "-0.0258011"), (2, "-0.0103986"), (3, "-0.00437311"),
    (4, "-0.00211511"), (5, "-0.00113174"), (6, "-0.00064961"),
    (7, "-0.00039145"), (8, "-0.000243709"), (9, "-0.000154718"),
    (10, "-0.0000989276"), (11, "-0.0000628326"), (12, "-0.0000388937"),
    (13, "-0.000022708"), (14, "-0.0000116051"),
]


def test_table_matches_reference_values():
    rows = table1(1, 14)
    for (n, theta, value), (n_ref, text) in zip(rows, REFERENCE_ROWS):
        assert n == n_ref
        ref = float(text)
        decimals = len(text.split(".")[1])
        assert abs(value - ref) <= 5 * 10.0 ** -decimals, (n, value, text)


def test_table_tight_rows():
    rows = dict((n, v) for n, _, v in table1(1, 14))
    assert abs(rows[1] - (-0.0258011)) <= 5e-7
    assert abs(rows[7] - (-0.00039145)) <= 5e-9
    assert abs(rows[8] - (-0.000243709)) <= 5e-10
    assert abs(rows[14] - (-0.0000116051)) <= 5e-11


def test_table_rejects_bad_range():
    with pytest.raises(ValueError):
        table1(3, 2)
    with pytest.raises(ValueError):
        table1(0, 4)


def test_extended_rows_negative():
    rows = extend_table1(15, 16)
    for n, theta, value in rows:
        assert value < 0, (n, theta, value)
        assert 0 < theta <= math.pi


# ---------------------------------------------------------------------------
# ex33 closed forms
# ---------------------------------------------------------------------------

def test_ex33_modulus_origin():
    assert ex33_functional_modulus(3, 0.5, 0.3, 0j) == 0.0


def test_ex33_modulus_at_half():
    assert abs(ex33_functional_modulus(3, 0.5, 0.3, 0.5 + 0j) - 0.125) <= 1e-12


def test_ex33_modulus_angle_independent():
    for arg in (0.0, 1.0, 2.5, 4.0):
        z = 0.9 * np.exp(1j * arg)
        assert abs(ex33_functional_modulus(4, 0.4, 0.7, z) - 0.9 ** 4) <= 1e-12


def test_ex33_re_at_1_zero_beta():
    assert ex33_re_at_1(3, 0.5, 0.0) == 0.0


def test_ex33_re_at_1_sign():
    assert ex33_re_at_1(3, 0.5, 0.3) < 0  # 0.3 < arctan(1) = pi/4
    assert ex33_re_at_1(3, 0.5, math.pi / 4 + 0.05) > 0


def test_ex33_re_at_1_rejects_small_n():
    with pytest.raises(InvalidFamilyParams):
        ex33_re_at_1(2, 0.1, 0.1)


# ---------------------------------------------------------------------------
# ex32 integral representation
# ---------------------------------------------------------------------------

def test_ex32_integral_identity():
    fn = build(FamilySpec(EX32, order=4096))
    rng = np.random.default_rng(90)
    for _ in range(20):
        z = 0.9 * math.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
        lhs = ex32_tail_by_coefficients(fn, z)
        rhs = ex32_tail_by_integral(z)
        assert abs(lhs - rhs) <= 1e-8


# ---------------------------------------------------------------------------
# boundary images
# ---------------------------------------------------------------------------

def test_boundary_identity_circle():
    pts = boundary_image(identity_function(8), 0.5, 64)
    assert len(pts) == 65
    assert np.max(np.abs(np.abs(pts) - 0.5)) <= 1e-14


def test_boundary_near_origin_looks_like_circle():
    fn = build(FamilySpec(EX31, n=2))
    pts = boundary_image(fn, 0.01, 128)
    assert np.max(np.abs(np.abs(pts) - 0.01)) <= 0.02 * 0.01


def test_boundary_closed_curve():
    fn = build(FamilySpec(EX32, order=4096))
    pts = boundary_image(fn, 0.999, 512)
    assert abs(pts[0] - pts[-1]) <= 1e-9 * max(1.0, abs(pts[0]))


def test_angle_grid_result():
    res = a_theta_grid(EX34, 1, grid=512)
    assert len(res.thetas) == len(res.values) == 512
    assert res.min_value == min(res.values)
    assert res.min_value < 0
