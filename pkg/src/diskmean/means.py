"""Harmonic means of normalized functions and the averaging identities.

For F(z) = 2 f(z) g(z) / (f(z) + g(z)) one has

    1/F - 1/z = ((1/f - 1/z) + (1/g - 1/z)) / 2,

so phi_F = (phi_f + phi_g)/2 coefficientwise.  All four functionals are
linear in the phi tail, hence

    kind_F(z) = (kind_f(z) + kind_g(z)) / 2

exactly, and membership of F in a class follows from membership of f and g
by the triangle inequality whenever (f + g)/z does not vanish on the disk.
That hypothesis is probed numerically on a boundary grid; construction is
refused when it fails.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DenominatorVanishes
from .functionals import (
    FunctionalKind,
    NormalizedFunction,
    circle_grid,
    functional_series,
)

#: Below this min |phi_f + phi_g| / 2 on the probe grid, recovering F from
#: phi_F is numerically meaningless near the offending point.
EPS_DENOM = 1e-6

PROBE_RADIUS = 0.999
PROBE_GRID = 4096


@dataclass(frozen=True)
class MeanResult:
    mean: NormalizedFunction
    min_denominator_modulus: float

    def to_dict(self) -> dict:
        c = self.mean.phi.coeffs
        return {
            "phi_coefficients": [[float(v.real), float(v.imag)] for v in c],
            "min_denominator_modulus": self.min_denominator_modulus,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def harmonic_mean(f: NormalizedFunction, g: NormalizedFunction) -> MeanResult:
    """F = 2fg/(f+g), built as the coefficientwise average of the phis.

    The nonvanishing hypothesis on (f+g)/z is checked on a finite grid only
    (radius 0.999, 4096 angles); this is a numerical surrogate, not a proof.

    Raises:
        DenominatorVanishes: if min |phi_f + phi_g|/2 on the probe grid is
            at or below 1e-6.
    """
    _, pts = circle_grid(PROBE_RADIUS, PROBE_GRID)
    denom = 0.5 * np.abs(f.phi.eval(pts) + g.phi.eval(pts))
    md = float(np.min(denom))
    if md <= EPS_DENOM:
        raise DenominatorVanishes(
            f"min |phi_f + phi_g|/2 = {md:.3e} on the probe grid")
    phi_mean = (f.phi + g.phi).scale(0.5)
    label = f"mean({f.label or 'f'},{g.label or 'g'})"
    return MeanResult(mean=NormalizedFunction(phi_mean, label),
                      min_denominator_modulus=md)


def verify_closure(kind: FunctionalKind, f: NormalizedFunction,
                   g: NormalizedFunction, samples: int = 500,
                   seed: int = 0) -> float:
    """Max residual of the averaging identity at random points.

    Draws ``samples`` points uniformly from the disk of radius 0.95 and
    returns max |kind_F(z) - (kind_f(z) + kind_g(z))/2| with every value
    taken from the exact coefficient path.  The identity is linear-exact,
    so anything above rounding level indicates an implementation error.

    Raises:
        DenominatorVanishes: propagated from harmonic_mean.
    """
    result = harmonic_mean(f, g)
    rng = np.random.default_rng(seed)
    r = 0.95 * np.sqrt(rng.random(samples))
    t = 2.0 * np.pi * rng.random(samples)
    pts = r * np.exp(1j * t)
    vf = functional_series(kind, f).eval(pts)
    vg = functional_series(kind, g).eval(pts)
    vm = functional_series(kind, result.mean).eval(pts)
    return float(np.max(np.abs(vm - 0.5 * (vf + vg))))
