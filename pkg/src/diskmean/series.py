"""Truncated power series with complex coefficients.

A :class:`ComplexSeries` holds coefficients c_0..c_N of a polynomial that
stands in for a Taylor series truncated at degree N.  Arithmetic never
extends the truncation degree: every binary operation returns a series of
order ``min(a.order, b.order)``, so the caller picks the error budget once,
up front, by choosing N.

Values are immutable after construction and every operation is a pure
function, so instances can be shared freely between threads.
"""

from __future__ import annotations

import numbers

import numpy as np

from .errors import LeadingCoefficientNearZero

#: Default truncation degree.  The functions treated by this package are
#: either polynomials of modest degree or have coefficients decaying at
#: least like k**-5, so 128 terms keep tails far below every tolerance used
#: on |z| <= 0.999.
DEFAULT_ORDER = 128

#: Reciprocal refuses to run below this leading-coefficient modulus; the
#: inversion recurrence amplifies noise past any useful tolerance there.
EPS_LEAD = 1e-12

# Evaluation of very long series drops the part of the tail whose triangle
# mass is below this fraction of the total; only kicks in past _FAST_LEN
# coefficients and only strictly inside the unit disk.
_FAST_LEN = 4096
_TAIL_CUT = 1e-20


class ComplexSeries:
    """Coefficients of a truncated complex power series, degree 0 first."""

    __slots__ = ("coeffs",)

    coeffs: np.ndarray

    def __init__(self, coeffs) -> None:
        arr = np.array(coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("ComplexSeries is immutable")

    # ------------------------------------------------------------------
    # basics
    # ------------------------------------------------------------------
    @property
    def order(self) -> int:
        """Truncation degree N; the series has N + 1 stored coefficients."""
        return self.coeffs.size - 1

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "ComplexSeries":
        return cls(np.zeros(order + 1))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "ComplexSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = 1.0
        return cls(c)

    @classmethod
    def monomial(cls, degree: int, coefficient: complex = 1.0,
                 order: int | None = None) -> "ComplexSeries":
        """c * z**degree stored at the given truncation order (>= degree)."""
        order = degree if order is None else order
        if order < degree:
            raise ValueError("order must be at least the monomial degree")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[degree] = coefficient
        return cls(c)

    def truncate(self, order: int) -> "ComplexSeries":
        """Copy of the series cut down to the given order (no extension)."""
        if order >= self.order:
            return self
        return ComplexSeries(self.coeffs[: order + 1])

    def __repr__(self) -> str:
        head = np.array2string(self.coeffs[:4], precision=6, separator=", ")
        more = "" if self.order < 4 else f", ... ({self.order + 1} coeffs)"
        return f"ComplexSeries({head}{more})"

    # ------------------------------------------------------------------
    # ring operations (result order = min of operand orders)
    # ------------------------------------------------------------------
    def add(self, other: "ComplexSeries") -> "ComplexSeries":
        n = min(self.coeffs.size, other.coeffs.size)
        return ComplexSeries(self.coeffs[:n] + other.coeffs[:n])

    def sub(self, other: "ComplexSeries") -> "ComplexSeries":
        n = min(self.coeffs.size, other.coeffs.size)
        return ComplexSeries(self.coeffs[:n] - other.coeffs[:n])

    def mul(self, other: "ComplexSeries") -> "ComplexSeries":
        """Cauchy product truncated at the smaller operand order."""
        n = min(self.coeffs.size, other.coeffs.size)
        full = np.convolve(self.coeffs, other.coeffs)
        return ComplexSeries(full[:n])

    def scale(self, factor: complex) -> "ComplexSeries":
        return ComplexSeries(self.coeffs * complex(factor))

    def __add__(self, other):
        if isinstance(other, ComplexSeries):
            return self.add(other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, ComplexSeries):
            return self.sub(other)
        return NotImplemented

    def __neg__(self):
        return self.scale(-1.0)

    def __mul__(self, other):
        if isinstance(other, ComplexSeries):
            return self.mul(other)
        if isinstance(other, numbers.Number):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    # ------------------------------------------------------------------
    # calculus and inversion
    # ------------------------------------------------------------------
    def derivative(self) -> "ComplexSeries":
        """Termwise derivative; the order drops by one."""
        c = self.coeffs
        if c.size == 1:
            return ComplexSeries([0.0])
        return ComplexSeries(c[1:] * np.arange(1, c.size))

    def shift_up(self) -> "ComplexSeries":
        """Multiply by z without extending the order (top coefficient drops)."""
        c = np.empty_like(self.coeffs)
        c[0] = 0.0
        c[1:] = self.coeffs[:-1]
        return ComplexSeries(c)

    def reciprocal(self) -> "ComplexSeries":
        """Multiplicative inverse, same order.

        Standard recurrence: r_0 = 1/a_0 and
        r_k = -(1/a_0) * sum_{j=1..k} a_j r_{k-j}.

        Raises:
            LeadingCoefficientNearZero: if ``|a_0| <= 1e-12``.
        """
        a = self.coeffs
        if abs(a[0]) <= EPS_LEAD:
            raise LeadingCoefficientNearZero(
                f"|a_0| = {abs(a[0]):.3e} <= {EPS_LEAD}")
        inv = 1.0 / a[0]
        r = np.zeros(a.size, dtype=np.complex128)
        r[0] = inv
        for k in range(1, a.size):
            r[k] = -inv * np.dot(a[1: k + 1], r[k - 1:: -1])
        return ComplexSeries(r)

    # ------------------------------------------------------------------
    # evaluation
    # ------------------------------------------------------------------
    def eval(self, z):
        """Horner evaluation at a complex point or an array of points.

        Truncation error grows quickly outside |z| <= 1.  For very long
        series evaluated strictly inside the unit disk the analytically
        negligible tail (triangle mass below 1e-20 of the total) is skipped.
        """
        if isinstance(z, numbers.Number):
            c = self._eval_coeffs(abs(complex(z)))
            acc = complex(c[-1])
            zz = complex(z)
            for k in range(c.size - 2, -1, -1):
                acc = acc * zz + c[k]
            return acc
        pts = np.asarray(z, dtype=np.complex128)
        c = self._eval_coeffs(float(np.max(np.abs(pts))) if pts.size else 0.0)
        acc = np.full(pts.shape, c[-1], dtype=np.complex128)
        for k in range(c.size - 2, -1, -1):
            acc *= pts
            acc += c[k]
        return acc

    __call__ = eval

    def _eval_coeffs(self, rmax: float) -> np.ndarray:
        c = self.coeffs
        if c.size <= _FAST_LEN or rmax >= 1.0:
            return c
        mass = np.abs(c) * np.power(rmax, np.arange(c.size))
        tail = np.cumsum(mass[::-1])[::-1]
        keep = np.nonzero(tail > _TAIL_CUT * (tail[0] + 1.0))[0]
        n = int(keep[-1]) + 1 if keep.size else 1
        return c[:n]


def ball_coefficients(rng: np.random.Generator, order: int,
                      decay: float = 0.3, mass: float = 0.3) -> ComplexSeries:
    """Random series 1 + b_1 z + ... with geometrically decaying tail.

    The coefficients satisfy sum |b_k| = ``mass`` with |b_k| shrinking like
    ``decay**k``; this keeps the zeros of the series well outside the unit
    circle so that its reciprocal has fast-decaying coefficients.  Used by
    the randomized consistency checks.
    """
    u = rng.uniform(-1.0, 1.0, order) + 1j * rng.uniform(-1.0, 1.0, order)
    b = u * decay ** np.arange(1, order + 1)
    total = np.sum(np.abs(b))
    if total > 0:
        b *= mass / total
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    c[1:] = b
    return ComplexSeries(c)
