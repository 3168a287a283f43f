"""Constructors and closed-form boundary math for the built-in families.

Four one-parameter families exercise the class machinery (grammar tokens in
parentheses match the CLI):

* ``ex31`` -- phi = 1 + (1-a) z + a z^m with m = 2n+1 and a (m-1)^2 = 1.
  Sits exactly on the M-class coefficient budget and is starlike.
* ``ex32`` -- phi = 1 + (1 - zeta(5)/zeta(3)) z
  + (1/zeta(3)) sum_{k>=2} z^k/(k-1)^5.  M-class member with slowly
  decaying coefficients; its tail admits an integral representation used
  as an independent cross-check.
* ``ex33`` -- phi = 1 + i b z + e^{2 i beta} z^n/(n-1), n >= 3,
  |b| <= (n-2)/(n-1).  U-class member whose functional has modulus |z|^n
  exactly; fails starlikeness for suitable (b, beta).
* ``ex34`` -- phi = 1 + (1-a) z + a z^m with a m (m-1) = 2.  Sits exactly
  on the P-class coefficient budget and is *not* starlike: the boundary
  quantity A(theta) dips negative near theta = pi.

For the two polynomial families, writing z = e^{i theta},

    Re(z f'(z)/f(z)) = A(theta) / |phi(e^{i theta})|^2,

and A has the closed forms implemented below, together with the helper
D(theta), its critical points, and the reference table of A values at
theta_n = 2(2n+1) pi / (4n+3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import InvalidFamilyParams, PhiVanishes
from .functionals import (
    PHI_EPS,
    FunctionalKind,
    NormalizedFunction,
    functional_eval_direct,
)
from .series import DEFAULT_ORDER, ComplexSeries

#: Truncation used for ex32.  Its quadratic-weight coefficient sum
#: converges like a p-series with p = 3, leaving a tail of roughly
#: 0.42/order**2; one million terms keep the stored sum within 1e-12 of
#: the limit value 1.  Evaluation cost stays low because the evaluator
#: skips the analytically negligible tail inside the unit disk.
EX32_ORDER = 1_000_000

_GAUSS_LAGUERRE_NODES = 64


class FamilyVariant(Enum):
    EX31 = "ex31"
    EX32 = "ex32"
    EX33 = "ex33"
    EX34 = "ex34"


@dataclass(frozen=True)
class FamilySpec:
    """Parameter record for one member of a built-in family."""

    variant: FamilyVariant
    n: int = 1
    b: float = 0.0
    beta: float = 0.0
    order: int | None = None

    def validate(self) -> None:
        v = self.variant
        if v in (FamilyVariant.EX31, FamilyVariant.EX34):
            if self.n < 1:
                raise InvalidFamilyParams(f"{v.value} requires n >= 1")
            if self.order is not None and self.order < 2 * self.n + 1:
                raise InvalidFamilyParams(
                    f"{v.value} needs order >= {2 * self.n + 1} to hold z^m")
        elif v is FamilyVariant.EX33:
            if self.n < 3:
                raise InvalidFamilyParams("ex33 requires n >= 3")
            if abs(self.b) > (self.n - 2) / (self.n - 1) + 1e-12:
                raise InvalidFamilyParams(
                    f"ex33 requires |b| <= (n-2)/(n-1) = {(self.n - 2) / (self.n - 1)}")
            if self.order is not None and self.order < self.n:
                raise InvalidFamilyParams("ex33 needs order >= n")
        else:  # EX32
            if self.order is not None and self.order < 2:
                raise InvalidFamilyParams("ex32 needs order >= 2")

    def effective_order(self) -> int:
        if self.order is not None:
            return self.order
        if self.variant is FamilyVariant.EX32:
            return EX32_ORDER
        if self.variant is FamilyVariant.EX33:
            return max(DEFAULT_ORDER, self.n)
        return max(DEFAULT_ORDER, 2 * self.n + 1)


def _alpha(variant: FamilyVariant, n: int) -> float:
    if variant is FamilyVariant.EX31:
        return 1.0 / (4 * n * n)
    if variant is FamilyVariant.EX34:
        return 1.0 / (n * (2 * n + 1))
    raise InvalidFamilyParams(f"{variant.value} has no alpha parameter")


def _budget_exact(alpha: float, weight: float, target: float) -> float:
    # alpha is irrational in binary for most n; pick the representable
    # neighbour (within a few ulps) whose weighted product rounds exactly
    # to the class budget, so the defining normalization survives floats.
    cand = alpha
    for _ in range(6):
        if weight * cand == target:
            return cand
        cand = np.nextafter(cand, 2.0 * alpha)
    cand = alpha
    for _ in range(6):
        if weight * cand == target:
            return cand
        cand = np.nextafter(cand, 0.0)
    return alpha


@lru_cache(maxsize=64)
def _build_cached(spec: FamilySpec) -> NormalizedFunction:
    spec.validate()
    order = spec.effective_order()
    v = spec.variant
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    if v in (FamilyVariant.EX31, FamilyVariant.EX34):
        n = spec.n
        m = 2 * n + 1
        if v is FamilyVariant.EX31:
            a = _budget_exact(_alpha(v, n), float((m - 1) ** 2), 1.0)
        else:
            a = _budget_exact(_alpha(v, n), float(m * (m - 1)), 2.0)
        c[1] = 1.0 - a
        c[m] = a
        label = f"{v.value}:n={n}"
    elif v is FamilyVariant.EX33:
        n = spec.n
        c[1] = 1j * spec.b
        c[n] = np.exp(2j * spec.beta) / (n - 1)
        label = f"ex33:n={n},b={spec.b},beta={spec.beta}"
    else:
        z3 = zeta_constant(3)
        z5 = zeta_constant(5)
        c[1] = 1.0 - z5 / z3
        k = np.arange(2, order + 1, dtype=np.float64)
        c[2:] = 1.0 / (z3 * (k - 1.0) ** 5)
        label = "ex32"
    return NormalizedFunction(ComplexSeries(c), label)


def build(spec: FamilySpec) -> NormalizedFunction:
    """Construct the phi-series for a family member.

    Raises:
        InvalidFamilyParams: if the spec violates its parameter ranges.
    """
    return _build_cached(spec)


# ---------------------------------------------------------------------------
# zeta constants
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def zeta_constant(s: int) -> float:
    """sum_{k>=1} k^-s for integer s >= 2, absolute error below 1e-14.

    Partial sum up to the first term below 1e-17 (capped at 1e5 terms) plus
    an Euler-Maclaurin tail through the z^-(s+3) correction; the correction
    makes the cap loss-free.
    """
    if s < 2:
        raise ValueError("zeta_constant requires s >= 2")
    cutoff = int(math.ceil(1e17 ** (1.0 / s)))
    head_end = min(cutoff, 100_000)
    ks = np.arange(1, head_end, dtype=np.float64)
    head = math.fsum((ks ** -float(s)).tolist())
    a = float(head_end)
    tail = (a ** (1 - s) / (s - 1) + 0.5 * a ** -s
            + s * a ** (-s - 1) / 12.0
            - s * (s + 1) * (s + 2) * a ** (-s - 3) / 720.0)
    return head + tail


# ---------------------------------------------------------------------------
# boundary angle functions for ex31 / ex34
# ---------------------------------------------------------------------------

def a_theta(variant: FamilyVariant, n: int, theta):
    """Boundary numerator A(theta) of Re(zf'/f) for ex31/ex34.

    Full form, valid for both variants (only alpha differs):

        A = 1 + (1-a) cos t - a(m-2) cos(mt)
              - a(1-a)(m-1) cos((m-1)t) - a^2 (m-1).

    Accepts a scalar or an array of angles.
    """
    if n < 1:
        raise InvalidFamilyParams("n must be >= 1")
    a = _alpha(variant, n)
    m = 2 * n + 1
    t = np.asarray(theta, dtype=np.float64)
    out = (1.0 + (1.0 - a) * np.cos(t) - a * (m - 2) * np.cos(m * t)
           - a * (1.0 - a) * (m - 1) * np.cos((m - 1) * t)
           - a * a * (m - 1))
    return float(out) if np.isscalar(theta) else out


def a_theta_reduced(variant: FamilyVariant, n: int, theta):
    """A(theta) through the D-form; must agree with :func:`a_theta`.

    ex31:  A = 1 - 1/(m-1)^3 - (m(m-2)/(m-1)^2) D(theta)
    ex34:  A = 1 - 2/(n(2n+1)^2) + ((2n-1)/(n(2n+1))) D(theta)
    """
    if n < 1:
        raise InvalidFamilyParams("n must be >= 1")
    m = 2 * n + 1
    d = d_theta(variant, n, theta)
    if variant is FamilyVariant.EX31:
        out = 1.0 - 1.0 / (m - 1) ** 3 - (m * (m - 2) / (m - 1) ** 2) * d
    elif variant is FamilyVariant.EX34:
        out = (1.0 - 2.0 / (n * (2 * n + 1) ** 2)
               + ((2 * n - 1) / (n * (2 * n + 1))) * d)
    else:
        raise InvalidFamilyParams(f"{variant.value} has no A(theta) form")
    return float(out) if np.isscalar(theta) else out


def ex31_a_factored_m3(theta):
    """Degree-3 special case of the ex31 boundary numerator:
    A(theta) = (1 + cos t)^2 (5 - 4 cos t) / 4."""
    ct = np.cos(np.asarray(theta, dtype=np.float64))
    out = 0.25 * (1.0 + ct) ** 2 * (5.0 - 4.0 * ct)
    return float(out) if np.isscalar(theta) else out


def d_theta(variant: FamilyVariant, n: int, theta):
    """The oscillatory part D(theta) entering the reduced A forms.

    ex31:  D = -cos t + cos(mt)/m + cos((m-1)t)/(m-1)
    ex34:  D = (n+1) cos t - cos((2n+1)t) - (2(n+1)/(2n+1)) cos(2nt)
    """
    if n < 1:
        raise InvalidFamilyParams("n must be >= 1")
    m = 2 * n + 1
    t = np.asarray(theta, dtype=np.float64)
    if variant is FamilyVariant.EX31:
        out = -np.cos(t) + np.cos(m * t) / m + np.cos((m - 1) * t) / (m - 1)
    elif variant is FamilyVariant.EX34:
        out = ((n + 1) * np.cos(t) - np.cos((2 * n + 1) * t)
               - (2.0 * (n + 1) / (2 * n + 1)) * np.cos(2 * n * t))
    else:
        raise InvalidFamilyParams(f"{variant.value} has no D(theta) form")
    return float(out) if np.isscalar(theta) else out


def d_prime_theta(n: int, theta):
    """Derivative of the ex31 D(theta) in product form.

    D'(t) = sin t - sin(mt) - sin((m-1)t)
          = -4 cos(t/2) cos((2n+1)t/2) sin(nt).

    The leading sign of the product form was pinned by validating against
    central finite differences of d_theta; see the tests.
    """
    if n < 1:
        raise InvalidFamilyParams("n must be >= 1")
    m = 2 * n + 1
    t = np.asarray(theta, dtype=np.float64)
    out = -4.0 * np.cos(t / 2.0) * np.cos(m * t / 2.0) * np.sin(n * t)
    return float(out) if np.isscalar(theta) else out


def critical_points(n: int) -> tuple[list[float], list[float]]:
    """Zeros of D'(theta) for ex31 in (0, pi), as two interlacing lists.

        theta_j  = (2j-1) pi / (2n+1),  j = 1..n     (cosine factor)
        theta'_j = j pi / n,            j = 1..n-1   (sine factor)

    With theta'_n = pi appended, theta_1 < theta'_1 < ... < theta_n < pi.

    Raises:
        InvalidFamilyParams: for n < 2.
    """
    if n < 2:
        raise InvalidFamilyParams("critical_points requires n >= 2")
    first = [(2 * j - 1) * math.pi / (2 * n + 1) for j in range(1, n + 1)]
    second = [j * math.pi / n for j in range(1, n)]
    return first, second


# ---------------------------------------------------------------------------
# the reference A(theta_n) table for ex34
# ---------------------------------------------------------------------------

def table1_angle(n: int) -> float:
    """The probe angle theta_n = 2(2n+1) pi / (4n+3)."""
    return 2.0 * (2 * n + 1) * math.pi / (4 * n + 3)


def _a_sinphi(n: int) -> float:
    # Reduced expression at theta_n in terms of s = sin(pi / (2(4n+3))):
    # the three cosines collapse to 2s^2-1, -s and 3s-4s^3 there.
    s = math.sin(math.pi / (2.0 * (4 * n + 3)))
    return (1.0 - 2.0 / (n * (2 * n + 1) ** 2)
            - 2.0 * (2 * n - 1) * (n + 1) / (2.0 * n * (2 * n + 1))
            + ((2 * n - 1) / (n * (2 * n + 1)))
            * (2.0 * (n + 1) * s * s
               - ((4 * n + 5) / (2 * n + 1)) * s
               + (8.0 * (n + 1) / (2 * n + 1)) * s ** 3))


def table1(n_from: int = 1, n_to: int = 14) -> list[tuple[int, float, float]]:
    """Rows (n, theta_n, A(theta_n)) for the ex34 family.

    A is computed from the reduced sine expression and cross-checked
    against the full formula to 1e-12.

    Raises:
        ArithmeticError: if the two forms disagree (internal inconsistency).
    """
    if not 1 <= n_from <= n_to:
        raise ValueError("need 1 <= n_from <= n_to")
    rows = []
    for n in range(n_from, n_to + 1):
        theta = table1_angle(n)
        value = _a_sinphi(n)
        general = a_theta(FamilyVariant.EX34, n, theta)
        if abs(value - general) > 1e-12:
            raise ArithmeticError(
                f"A(theta_{n}) forms disagree: {value} vs {general}")
        rows.append((n, theta, value))
    return rows


def extend_table1(n_from: int, n_to: int) -> list[tuple[int, float, float]]:
    """Golden-section minimum of A near theta_n for larger n.

    Past n = 15 the fixed probe angle theta_n stops exhibiting the negative
    dip, but a local minimization seeded there still finds it.  Each row is
    (n, located angle, A at that angle); no claim beyond the numbers found.
    """
    if not 1 <= n_from <= n_to:
        raise ValueError("need 1 <= n_from <= n_to")
    rows = []
    for n in range(n_from, n_to + 1):
        seed = table1_angle(n)
        half = math.pi / (4 * n + 3)
        lo, hi = seed - half, min(seed + half, math.pi)
        theta = _golden_min(lambda t: a_theta(FamilyVariant.EX34, n, t), lo, hi)
        rows.append((n, theta, a_theta(FamilyVariant.EX34, n, theta)))
    return rows


def _golden_min(fn, lo: float, hi: float, iters: int = 120) -> float:
    g = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - g * (hi - lo)
    d = lo + g * (hi - lo)
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - g * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + g * (hi - lo)
            fd = fn(d)
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# ex33 closed forms
# ---------------------------------------------------------------------------

def ex33_functional_modulus(n: int, b: float, beta: float, z: complex) -> float:
    """|U-functional| of the ex33 member at z, which is exactly |z|^n.

    The closed value is cross-checked against the literal evaluation of the
    defining expression through the series plumbing.

    Raises:
        InvalidFamilyParams: on bad (n, b).
        ArithmeticError: if the cross-check misses 1e-9 (internal error).
    """
    fn = build(FamilySpec(FamilyVariant.EX33, n=n, b=b, beta=beta))
    closed = abs(z) ** n
    direct = functional_eval_direct(FunctionalKind.U, fn, complex(z))
    if abs(abs(direct) - closed) > 1e-9:
        raise ArithmeticError(
            f"|U| cross-check failed at z={z}: {abs(direct)} vs {closed}")
    return closed


def ex33_re_at_1(n: int, b: float, beta: float) -> float:
    """Re(z f'/f) of the ex33 member at the boundary point z = 1.

        [ (2(n-2)/(n-1)) sin(beta) - 2 b cos(beta) ] sin(beta)
        -----------------------------------------------------
               | 1 + i b + e^{2 i beta}/(n-1) |^2

    Negative for 0 < b <= (n-2)/(n-1) and 0 < beta < arctan(b(n-1)/(n-2)),
    which is how the family fails starlikeness.
    """
    if n < 3:
        raise InvalidFamilyParams("ex33_re_at_1 requires n >= 3")
    num = ((2.0 * (n - 2) / (n - 1)) * math.sin(beta)
           - 2.0 * b * math.cos(beta)) * math.sin(beta)
    den = abs(1.0 + 1j * b + np.exp(2j * beta) / (n - 1)) ** 2
    return num / den


# ---------------------------------------------------------------------------
# ex32 integral representation
# ---------------------------------------------------------------------------

def ex32_tail_by_integral(z: complex, nodes: int = _GAUSS_LAGUERRE_NODES) -> complex:
    """sum_{k>=2} z^k/(k-1)^5 via its integral representation.

    Substituting u = log(1/t) turns the weighted interval integral into
    (z^2/4!) * int_0^inf u^4 e^-u / (1 - z e^-u) du, which Gauss-Laguerre
    handles without any endpoint singularity.  Independent of the stored
    coefficients; used to cross-check the ex32 construction.
    """
    x, w = np.polynomial.laguerre.laggauss(nodes)
    g = x ** 4 / (1.0 - complex(z) * np.exp(-x))
    return complex(z) ** 2 / 24.0 * complex(np.sum(w * g))


def ex32_tail_by_coefficients(fn: NormalizedFunction, z: complex) -> complex:
    """Same tail sum read off the stored ex32 coefficients:
    zeta(3) * (phi(z) - 1 - b_1 z)."""
    z3 = zeta_constant(3)
    b1 = fn.phi.coeffs[1]
    return z3 * (fn.phi.eval(complex(z)) - 1.0 - b1 * complex(z))


# ---------------------------------------------------------------------------
# boundary images
# ---------------------------------------------------------------------------

def boundary_image(f: NormalizedFunction, r: float, grid: int) -> np.ndarray:
    """Points f(r e^{i theta}) on a closed uniform angle grid.

    Returns grid + 1 points with theta from 0 to 2*pi inclusive, so the
    polyline closes on itself (last point equals first up to rounding).

    Raises:
        PhiVanishes: if phi vanishes on the circle.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("radius must lie in (0, 1)")
    if grid < 3:
        raise ValueError("grid must be at least 3")
    theta = 2.0 * np.pi * np.arange(grid + 1) / grid
    pts = r * np.exp(1j * theta)
    phiv = f.phi.eval(pts)
    if np.min(np.abs(phiv)) <= PHI_EPS:
        raise PhiVanishes("phi vanishes on the image circle")
    return pts / phiv


# ---------------------------------------------------------------------------
# angle-grid sampling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AngleGridResult:
    thetas: list[float]
    values: list[float]
    min_value: float
    argmin: float


def a_theta_grid(variant: FamilyVariant, n: int, grid: int = 4096) -> AngleGridResult:
    """Sample A(theta) on the uniform closed-open grid [0, 2*pi)."""
    thetas = 2.0 * np.pi * np.arange(grid) / grid
    values = a_theta(variant, n, thetas)
    lo = float(np.min(values))
    idx = int(np.nonzero(values <= lo + 1e-12)[0][0])
    return AngleGridResult(
        thetas=[float(t) for t in thetas],
        values=[float(v) for v in values],
        min_value=lo,
        argmin=float(thetas[idx]),
    )
