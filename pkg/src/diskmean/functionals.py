"""The four differential functionals and boundary sup-modulus scans.

A normalized analytic function f (f(0) = 0, f'(0) = 1) is carried by the
series of phi(z) = z/f(z) = 1 + b_1 z + b_2 z^2 + ...  Writing
h(z) = 1/f(z) - 1/z = (phi(z) - 1)/z, the four functionals are

    U_f(z) = f'(z) (z/f(z))^2 - 1            (= -z^2 h'(z))
    P_f(z) = (z/f(z))''                       (= phi''(z))
    M_f(z) = z^2 (z/f(z))'' + f'(z)(z/f(z))^2 - 1
    N_f(z) = -z^3 (z/f(z))''' + f'(z)(z/f(z))^2 - 1

Each is linear in the b-coefficients, which gives exact closed coefficient
forms (the primary computation path):

    U: -sum_{k>=2} (k-1)   b_k z^k       bound 1
    M:  sum_{k>=2} (k-1)^2 b_k z^k       bound 1
    N: -sum_{k>=2} (k-1)^3 b_k z^k       bound 1
    P:  sum_{k>=2} k(k-1)  b_k z^{k-2}   bound 2

``functional_eval_direct`` instead evaluates the defining expressions
literally through series reciprocal/derivative/eval and serves as the
independent cross-check of the coefficient forms.
"""

from __future__ import annotations

import json
import numbers
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotNormalized, PhiVanishes
from .series import ComplexSeries

#: |phi(z)| at or below this is treated as a zero of phi (pole of 1/f).
PHI_EPS = 1e-9

#: Numerical membership: pass iff margin >= -MARGIN_TOL at every radius.
MARGIN_TOL = 1e-9

# Tolerance for breaking extremum ties toward the smallest angle; mirror
# pairs theta and 2*pi - theta of real-coefficient functions land within
# rounding of each other and must resolve deterministically.
_TIE_TOL = 1e-12


class FunctionalKind(Enum):
    """Selector for which differential functional is meant."""

    U = "U"
    P = "P"
    M = "M"
    N = "N"

    @property
    def bound(self) -> float:
        """The defining bound: 2 for P, 1 for the others."""
        return 2.0 if self is FunctionalKind.P else 1.0


class NormalizedFunction:
    """Element of the normalized class, stored via its phi = z/f series."""

    __slots__ = ("phi", "label")

    def __init__(self, phi: ComplexSeries, label: str = "") -> None:
        if abs(phi.coeffs[0] - 1.0) > 1e-12:
            raise NotNormalized(
                f"phi(0) = {phi.coeffs[0]} but must be 1 (within 1e-12)")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("NormalizedFunction is immutable")

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"NormalizedFunction(order={self.phi.order}{tag})"

    def f_series(self) -> ComplexSeries:
        """f itself, recovered as z * reciprocal(phi) at phi's order."""
        return self.phi.reciprocal().shift_up()


def from_phi(phi: ComplexSeries, label: str = "") -> NormalizedFunction:
    """Wrap a phi-series; requires phi(0) = 1 within 1e-12."""
    return NormalizedFunction(phi, label)


def identity_function(order: int = 128) -> NormalizedFunction:
    """f(z) = z, i.e. phi identically 1."""
    return NormalizedFunction(ComplexSeries.one(order), "identity")


def koebe_function(order: int = 128) -> NormalizedFunction:
    """f(z) = z/(1-z)^2, i.e. phi = (1 - z)^2."""
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0], c[1], c[2] = 1.0, -2.0, 1.0
    return NormalizedFunction(ComplexSeries(c), "koebe")


# ---------------------------------------------------------------------------
# coefficient path
# ---------------------------------------------------------------------------

def functional_series(kind: FunctionalKind, f: NormalizedFunction) -> ComplexSeries:
    """Exact truncated series of the selected functional.

    For U, M and N the constant and linear coefficients are zero; for P the
    result is phi'' (order drops by two).
    """
    phi = f.phi
    if kind is FunctionalKind.P:
        return phi.derivative().derivative()
    b = phi.coeffs
    k = np.arange(b.size, dtype=np.float64)
    c = np.zeros_like(b)
    if b.size > 2:
        w = k[2:] - 1.0
        if kind is FunctionalKind.U:
            c[2:] = -w * b[2:]
        elif kind is FunctionalKind.M:
            c[2:] = w * w * b[2:]
        else:  # N
            c[2:] = -(w ** 3) * b[2:]
    return ComplexSeries(c)


# ---------------------------------------------------------------------------
# literal-definition path
# ---------------------------------------------------------------------------

def functional_eval_direct(kind: FunctionalKind, f: NormalizedFunction, z):
    """Evaluate the defining expression of the functional at z (|z| < 1).

    Goes through the series plumbing on purpose: f is reconstructed as
    z * reciprocal(phi), differentiated and evaluated, and the z/f powers
    come from dividing z by the evaluated f.  Accepts a scalar or an array
    of points.

    Raises:
        PhiVanishes: if |phi(z)| <= 1e-9 at any requested point.
    """
    scalar = isinstance(z, numbers.Number)
    pts = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    phi = f.phi
    phiv = phi.eval(pts)
    if np.min(np.abs(phiv)) <= PHI_EPS:
        raise PhiVanishes("phi(z) is numerically zero at a requested point")

    if kind is FunctionalKind.P:
        out = phi.derivative().derivative().eval(pts)
        return complex(out[0]) if scalar else out

    fser = f.f_series()
    fv = fser.eval(pts)
    fpv = fser.derivative().eval(pts)
    # z/f(z) -> 1 as z -> 0; avoid the 0/0 at the origin.
    ratio = np.ones_like(pts)
    nz = pts != 0
    ratio[nz] = pts[nz] / fv[nz]
    core = fpv * ratio * ratio - 1.0

    if kind is FunctionalKind.U:
        out = core
    elif kind is FunctionalKind.M:
        out = pts * pts * phi.derivative().derivative().eval(pts) + core
    else:  # N
        d3 = phi.derivative().derivative().derivative().eval(pts)
        out = -(pts ** 3) * d3 + core
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# boundary scans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanReport:
    """Result of one sup-modulus scan over a circle |z| = radius."""

    kind: FunctionalKind
    radius: float
    grid_size: int
    extremal_value: float
    extremal_angle: float
    margin: float

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "radius": self.radius,
            "grid_size": self.grid_size,
            "extremal_value": self.extremal_value,
            "extremal_angle": self.extremal_angle,
            "margin": self.margin,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def circle_grid(radius: float, grid: int) -> tuple[np.ndarray, np.ndarray]:
    """Uniform closed-open angle grid on [0, 2*pi) and the circle points."""
    theta = 2.0 * np.pi * np.arange(grid) / grid
    return theta, radius * np.exp(1j * theta)


def _check_phi_nonvanishing(f: NormalizedFunction, pts: np.ndarray) -> None:
    if np.min(np.abs(f.phi.eval(pts))) <= PHI_EPS:
        raise PhiVanishes(
            "phi vanishes on the scan set; the function has a pole there")


def sup_on_circle(kind: FunctionalKind, f: NormalizedFunction,
                  r: float, grid: int) -> ScanReport:
    """Max of |functional| over z = r e^{i theta} on a uniform angle grid.

    Ties (within 1e-12) break toward the smallest angle, so the result does
    not depend on evaluation order.

    Raises:
        PhiVanishes: if phi vanishes at a grid point (degenerate input).
    """
    if not 0.0 < r < 1.0:
        raise ValueError("radius must lie in (0, 1)")
    if grid < 16:
        raise ValueError("grid must be at least 16")
    theta, pts = circle_grid(r, grid)
    _check_phi_nonvanishing(f, pts)
    vals = np.abs(functional_series(kind, f).eval(pts))
    best = float(np.max(vals))
    idx = int(np.nonzero(vals >= best - _TIE_TOL)[0][0])
    return ScanReport(
        kind=kind,
        radius=float(r),
        grid_size=int(grid),
        extremal_value=best,
        extremal_angle=float(theta[idx]),
        margin=float(kind.bound - best),
    )
