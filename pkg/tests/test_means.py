import json

import numpy as np
import pytest

from diskmean import (
    ComplexSeries,
    DenominatorVanishes,
    FamilySpec,
    FamilyVariant,
    FunctionalKind,
    build,
    check_membership,
    from_phi,
    harmonic_mean,
    identity_function,
    koebe_function,
    verify_closure,
)

U, M = FunctionalKind.U, FunctionalKind.M


def test_idempotence():
    f = koebe_function(32)
    out = harmonic_mean(f, f)
    assert np.array_equal(out.mean.phi.coeffs, f.phi.coeffs)


def test_symmetric_cancellation():
    f = from_phi(ComplexSeries([1, 1]))
    g = from_phi(ComplexSeries([1, -1]))
    out = harmonic_mean(f, g)
    assert np.array_equal(out.mean.phi.coeffs, np.array([1.0 + 0j, 0.0 + 0j]))


def test_average_with_identity():
    # mean of f = z and phi_g = 1 + z is phi = 1 + z/2, i.e. F = 2z/(2+z)
    f = identity_function(1)
    g = from_phi(ComplexSeries([1, 1]))
    out = harmonic_mean(f, g)
    assert np.array_equal(out.mean.phi.coeffs, np.array([1.0 + 0j, 0.5 + 0j]))


def test_commutativity():
    rng = np.random.default_rng(9)
    from diskmean import ball_coefficients
    f = from_phi(ball_coefficients(rng, 24, mass=0.4))
    g = from_phi(ball_coefficients(rng, 24, mass=0.4))
    ab = harmonic_mean(f, g).mean.phi.coeffs
    ba = harmonic_mean(g, f).mean.phi.coeffs
    assert np.array_equal(ab, ba)


def test_min_denominator_reported():
    f = identity_function(16)
    out = harmonic_mean(f, f)
    assert abs(out.min_denominator_modulus - 1.0) <= 1e-12


def test_denominator_vanishes_refused():
    # averaged phi = 1 - z/0.999 vanishes at the probe grid point theta = 0
    bad = from_phi(ComplexSeries([1, -1 / 0.999, 0, 0]))
    with pytest.raises(DenominatorVanishes):
        harmonic_mean(bad, bad)


def test_closure_residual_trivial():
    f = koebe_function(32)
    assert verify_closure(U, f, f) == 0.0


def test_closure_residual_budget_pair():
    f = build(FamilySpec(FamilyVariant.EX31, n=1))
    g = build(FamilySpec(FamilyVariant.EX31, n=2))
    assert verify_closure(M, f, g) <= 1e-10


def test_closure_U_pair_and_membership():
    f = from_phi(ComplexSeries([1, 1, 0, 0]))
    g = from_phi(ComplexSeries([1, 0, 0.25, 0]))
    assert verify_closure(U, f, g) <= 1e-10
    mean = harmonic_mean(f, g).mean
    assert check_membership(U, mean).is_member


def test_averaging_identity_coefficientwise():
    rng = np.random.default_rng(17)
    from diskmean import ball_coefficients, functional_series
    f = from_phi(ball_coefficients(rng, 32, mass=0.5))
    g = from_phi(ball_coefficients(rng, 32, mass=0.5))
    mean = harmonic_mean(f, g).mean
    for kind in FunctionalKind:
        lhs = functional_series(kind, mean).coeffs
        rhs = 0.5 * (functional_series(kind, f).coeffs
                     + functional_series(kind, g).coeffs)
        assert np.max(np.abs(lhs - rhs)) <= 1e-15


def test_mean_result_json():
    out = harmonic_mean(identity_function(2), identity_function(2))
    data = json.loads(out.to_json())
    assert list(data.keys()) == ["phi_coefficients", "min_denominator_modulus"]
    assert data["phi_coefficients"][0] == [1.0, 0.0]
