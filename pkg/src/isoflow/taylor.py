"""Truncated Taylor (jet) arithmetic, vectorized over numpy arrays.

A jet stores the Taylor coefficients c_k = f^(k)(x0)/k! of a scalar
function about each point of an input array, truncated at ORDER.  All
profile evaluations route through this module, so k-th derivatives are
exact to machine precision rather than finite-differenced.
"""
from __future__ import annotations

import math

import numpy as np

ORDER = 4  # highest derivative order carried


class Jet:
    """Taylor coefficients up to ORDER, broadcast over trailing shape."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = np.asarray(coeffs, dtype=float)

    # -- constructors -------------------------------------------------
    @staticmethod
    def variable(x):
        x = np.asarray(x, dtype=float)
        c = np.zeros((ORDER + 1,) + x.shape)
        c[0] = x
        c[1] = 1.0
        return Jet(c)

    @staticmethod
    def affine(x, slope):
        """Jet of the affine map t -> x + slope * (t - t0) evaluated at x."""
        x = np.asarray(x, dtype=float)
        c = np.zeros((ORDER + 1,) + x.shape)
        c[0] = x
        c[1] = slope
        return Jet(c)

    @staticmethod
    def constant(v, shape=()):
        c = np.zeros((ORDER + 1,) + tuple(shape))
        c[0] = v
        return Jet(c)

    # -- accessors ----------------------------------------------------
    @property
    def value(self):
        return self.c[0]

    def derivative(self, k):
        """Raw k-th derivative (coefficient times k!)."""
        return self.c[k] * math.factorial(k)

    def derivatives(self):
        """(ORDER+1, ...) array of raw derivatives 0..ORDER."""
        fact = np.array([math.factorial(k) for k in range(ORDER + 1)])
        return self.c * fact.reshape((ORDER + 1,) + (1,) * (self.c.ndim - 1))

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.c + other.c)
        c = self.c.copy()
        c[0] = c[0] + other
        return Jet(c)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.c)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -np.asarray(other, dtype=float))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.c * other)
        a, b = self.c, other.c
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape))
        for k in range(ORDER + 1):
            acc = 0.0
            for i in range(k + 1):
                acc = acc + a[i] * b[k - i]
            out[k] = acc
        return Jet(out)

    __rmul__ = __mul__

    def reciprocal(self):
        a = self.c
        out = np.zeros_like(a)
        out[0] = 1.0 / a[0]
        for k in range(1, ORDER + 1):
            acc = 0.0
            for i in range(1, k + 1):
                acc = acc + a[i] * out[k - i]
            out[k] = -acc / a[0]
        return Jet(out)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return Jet(self.c / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out = Jet.constant(1.0, self.c.shape[1:])
        base = self
        m = n
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out


# -- elementary functions ----------------------------------------------

def _lift(fn_d0, recur):
    """Build a jet function from the order-0 value and a coefficient
    recurrence out[k] = recur(k, a, out)."""

    def apply(j: Jet) -> Jet:
        a = j.c
        out = np.zeros_like(a)
        out[0] = fn_d0(a[0])
        for k in range(1, ORDER + 1):
            out[k] = recur(k, a, out)
        return Jet(out)

    return apply


def jet_exp(j: Jet) -> Jet:
    def rec(k, a, e):
        acc = 0.0
        for i in range(1, k + 1):
            acc = acc + i * a[i] * e[k - i]
        return acc / k

    return _lift(np.exp, rec)(j)


def jet_log(j: Jet) -> Jet:
    a = j.c
    out = np.zeros_like(a)
    out[0] = np.log(a[0])
    for k in range(1, ORDER + 1):
        acc = 0.0
        for i in range(1, k):
            acc = acc + i * out[i] * a[k - i]
        out[k] = (a[k] - acc / k) / a[0]
    return Jet(out)


def jet_sqrt(j: Jet) -> Jet:
    a = j.c
    out = np.zeros_like(a)
    out[0] = np.sqrt(a[0])
    for k in range(1, ORDER + 1):
        acc = 0.0
        for i in range(1, k):
            acc = acc + out[i] * out[k - i]
        out[k] = (a[k] - acc) / (2.0 * out[0])
    return Jet(out)


def _jet_circular(j: Jet, f0, g0, sign):
    """Joint recurrence for (sin, cos) when sign=-1, (sinh, cosh) for +1."""
    a = j.c
    s = np.zeros_like(a)
    c = np.zeros_like(a)
    s[0] = f0(a[0])
    c[0] = g0(a[0])
    for k in range(1, ORDER + 1):
        accs = 0.0
        accc = 0.0
        for i in range(1, k + 1):
            accs = accs + i * a[i] * c[k - i]
            accc = accc + i * a[i] * s[k - i]
        s[k] = accs / k
        c[k] = sign * accc / k
    return Jet(s), Jet(c)


def jet_sincos(j: Jet):
    return _jet_circular(j, np.sin, np.cos, -1.0)


def jet_sin(j: Jet) -> Jet:
    return jet_sincos(j)[0]


def jet_cos(j: Jet) -> Jet:
    return jet_sincos(j)[1]


def jet_sinhcosh(j: Jet):
    return _jet_circular(j, np.sinh, np.cosh, +1.0)
