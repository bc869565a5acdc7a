"""Smooth 1-D profile functions with exact derivatives up to order 4.

Profiles are immutable and vectorized.  Pinned closed forms hold exactly
(bitwise) on their flat zones; transitions use the ratio-of-exponentials
smooth step, evaluated through jet arithmetic so that derivative(k) is
exact rather than finite-differenced.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

from .errors import (
    InvalidIntervalError,
    InvalidParameterError,
    InvalidProfileError,
)
from .taylor import ORDER, Jet, jet_exp, jet_sincos, jet_sinhcosh


@dataclass(frozen=True)
class FlatZone:
    """Subinterval where a pinned closed form holds exactly.

    form: 'const' with params (c,) or 'linear' with params (a0, a1),
    meaning a0 + a1*r.
    """

    lo: float
    hi: float
    form: str
    params: tuple

    def closed_form(self, r):
        r = np.asarray(r, dtype=float)
        if self.form == "const":
            return np.full_like(r, self.params[0])
        if self.form == "linear":
            a0, a1 = self.params
            return a0 + a1 * r
        raise InvalidProfileError(f"unknown flat-zone form {self.form!r}")


def _zone_jets(zone: FlatZone, r):
    r = np.asarray(r, dtype=float)
    out = np.zeros((ORDER + 1,) + r.shape)
    if zone.form == "const":
        out[0] = zone.params[0]
    else:
        a0, a1 = zone.params
        out[0] = a0 + a1 * r
        out[1] = a1
    return out


@dataclass(frozen=True)
class SmoothProfile1D:
    """A scalar profile with evaluable derivatives of order <= 4."""

    domain: tuple
    kind: str
    params: dict
    flat_zones: list = field(default_factory=list)
    jetfn: object = None  # (r array) -> (ORDER+1, N) raw derivatives

    def __call__(self, r):
        return self.jets(r)[0]

    def eval(self, r):
        return self.jets(r)[0]

    def jets(self, r):
        """All derivatives 0..4 at once, shape (5,) + r.shape."""
        scalar = np.isscalar(r) or np.asarray(r).ndim == 0
        rr = np.atleast_1d(np.asarray(r, dtype=float))
        out = self.jetfn(rr)
        return out[:, 0] if scalar else out

    def deriv(self, r, k=1):
        if not 0 <= k <= ORDER:
            raise InvalidParameterError(f"derivative order {k} outside 0..{ORDER}")
        return self.jets(r)[k]

    def derivative(self, k):
        """The k-th derivative as a callable profile evaluation."""
        return lambda r: self.deriv(r, k)

    # -- serialization --------------------------------------------------
    def to_json(self):
        if self.kind == "custom":
            raise InvalidProfileError("custom profiles have no JSON form")
        return {
            "kind": self.kind,
            "params": self.params,
            "domain": list(self.domain),
            "flat_zones": [
                {"lo": z.lo, "hi": z.hi, "form": z.form, "params": list(z.params)}
                for z in self.flat_zones
            ],
        }

    def dump_csv(self, path, n=512):
        lo, hi = self.domain
        rs = np.linspace(lo, hi, n)
        js = self.jets(rs)
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["r", "value", "d1", "d2"])
            for i, r in enumerate(rs):
                w.writerow([repr(float(r)), repr(float(js[0, i])),
                            repr(float(js[1, i])), repr(float(js[2, i]))])


# -- the ratio-of-exponentials step --------------------------------------

# Below this margin exp(-1/y) underflows to exactly 0.0 in doubles even
# after multiplication by the 1/y^8 jet factors, so the tails are exact.
_TAIL = 1.2e-3


def _step_jets_unit(y):
    """Jets of s(y) = e(y)/(e(y)+e(1-y)), e(t)=exp(-1/t); exact 0/1 tails."""
    y = np.asarray(y, dtype=float)
    out = np.zeros((ORDER + 1,) + y.shape)
    out[0][y >= 1.0 - _TAIL] = 1.0
    mid = (y > _TAIL) & (y < 1.0 - _TAIL)
    if np.any(mid):
        jy = Jet.variable(y[mid])
        a = jet_exp(-jy.reciprocal())
        b = jet_exp(-(1.0 - jy).reciprocal())
        s = a / (a + b)
        out[:, mid] = s.derivatives()
    return out


def _rescale_jets(jets_unit, slope):
    """Chain rule for an affine input substitution y = slope*(r - r0)."""
    out = jets_unit.copy()
    for k in range(1, ORDER + 1):
        out[k] *= slope ** k
    return out


def make_smooth_step(r0: float, r1: float) -> SmoothProfile1D:
    """Monotone C-infinity step: 0 for r <= r0, 1 for r >= r1."""
    if not r0 < r1:
        raise InvalidIntervalError(f"need r0 < r1, got ({r0}, {r1})")
    w = r1 - r0
    slope = 1.0 / w

    def jetfn(r):
        return _rescale_jets(_step_jets_unit((r - r0) * slope), slope)

    return SmoothProfile1D(
        domain=(r0 - w, r1 + w),
        kind="smooth_step",
        params={"r0": r0, "r1": r1},
        flat_zones=[
            FlatZone(-math.inf, r0, "const", (0.0,)),
            FlatZone(r1, math.inf, "const", (1.0,)),
        ],
        jetfn=jetfn,
    )


def make_F(eps: float) -> SmoothProfile1D:
    """Radial warp: 1 on [0, eps/2], 2r on [3 eps/4, eps], positive throughout."""
    if eps <= 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")
    r0, r1 = eps / 2.0, 3.0 * eps / 4.0
    slope = 1.0 / (r1 - r0)
    zones = [
        FlatZone(0.0, r0, "const", (1.0,)),
        FlatZone(r1, eps, "linear", (0.0, 2.0)),
    ]

    def jetfn(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros((ORDER + 1,) + r.shape)
        lowm = r <= r0
        highm = r >= r1
        out[0][lowm] = 1.0
        out[0][highm] = 2.0 * r[highm]
        out[1][highm] = 2.0
        mid = ~(lowm | highm)
        if np.any(mid):
            rm = r[mid]
            s = Jet(_rescale_jets(_step_jets_unit((rm - r0) * slope), slope))
            # convert raw derivatives to Taylor coeffs for jet algebra
            fact = np.array([math.factorial(k) for k in range(ORDER + 1)])
            s = Jet(s.c / fact.reshape(-1, 1))
            jr = Jet.variable(rm)
            val = 1.0 + s * (2.0 * jr - 1.0)
            out[:, mid] = val.derivatives()
        return out

    return SmoothProfile1D((0.0, eps), "radial_warp", {"eps": eps}, zones, jetfn)


def make_G(eps: float) -> SmoothProfile1D:
    """Angular warp: r on [0, eps/2], 1 on [3 eps/4, eps], positive for r > 0."""
    if eps <= 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")
    r0, r1 = eps / 2.0, 3.0 * eps / 4.0
    slope = 1.0 / (r1 - r0)
    zones = [
        FlatZone(0.0, r0, "linear", (0.0, 1.0)),
        FlatZone(r1, eps, "const", (1.0,)),
    ]

    def jetfn(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros((ORDER + 1,) + r.shape)
        lowm = r <= r0
        highm = r >= r1
        out[0][lowm] = r[lowm]
        out[1][lowm] = 1.0
        out[0][highm] = 1.0
        mid = ~(lowm | highm)
        if np.any(mid):
            rm = r[mid]
            s = Jet(_rescale_jets(_step_jets_unit((rm - r0) * slope), slope))
            fact = np.array([math.factorial(k) for k in range(ORDER + 1)])
            s = Jet(s.c / fact.reshape(-1, 1))
            jr = Jet.variable(rm)
            val = jr + s * (1.0 - jr)
            out[:, mid] = val.derivatives()
        return out

    return SmoothProfile1D((0.0, eps), "angular_warp", {"eps": eps}, zones, jetfn)


def radial_length(F: SmoothProfile1D, eps: float) -> float:
    """Length of a radius, integral of F over [0, eps], abs error <= 1e-10."""
    samples = F(np.linspace(0.0, eps, 4097))
    if np.any(samples <= 0.0):
        raise InvalidProfileError("radial warp profile must be positive on [0, eps]")
    val, err = quad(lambda t: float(F(t)), 0.0, eps,
                    epsabs=1e-12, epsrel=1e-12, limit=200)
    if err > 1e-10:
        raise InvalidProfileError(f"quadrature error estimate {err:g} above 1e-10")
    return val


# -- library profiles -----------------------------------------------------

def constant_profile(value: float, domain=(0.0, 1.0)) -> SmoothProfile1D:
    def jetfn(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros((ORDER + 1,) + r.shape)
        out[0] = value
        return out

    return SmoothProfile1D(tuple(domain), "constant", {"value": value},
                           [FlatZone(domain[0], domain[1], "const", (value,))], jetfn)


def linear_profile(intercept: float, slope: float, domain=(0.0, 1.0)) -> SmoothProfile1D:
    def jetfn(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros((ORDER + 1,) + r.shape)
        out[0] = intercept + slope * r
        out[1] = slope
        return out

    return SmoothProfile1D(tuple(domain), "linear",
                           {"intercept": intercept, "slope": slope},
                           [FlatZone(domain[0], domain[1], "linear", (intercept, slope))],
                           jetfn)


def sin_profile(domain=(0.0, math.pi / 2)) -> SmoothProfile1D:
    def jetfn(r):
        r = np.asarray(r, dtype=float)
        s, _ = jet_sincos(Jet.variable(r))
        return s.derivatives()

    return SmoothProfile1D(tuple(domain), "sin", {}, [], jetfn)


def sinh_profile(domain=(0.0, 1.0)) -> SmoothProfile1D:
    def jetfn(r):
        r = np.asarray(r, dtype=float)
        s, _ = jet_sinhcosh(Jet.variable(r))
        return s.derivatives()

    return SmoothProfile1D(tuple(domain), "sinh", {}, [], jetfn)


def plateau_bump(lo: float, hi: float, rise: float) -> SmoothProfile1D:
    """0 outside [lo, hi], 1 on [lo+rise, hi-rise], smooth in between."""
    if not lo < hi:
        raise InvalidIntervalError(f"need lo < hi, got ({lo}, {hi})")
    if not 0 < rise <= (hi - lo) / 2:
        raise InvalidParameterError("rise must fit twice inside [lo, hi]")
    up = make_smooth_step(lo, lo + rise)
    down = make_smooth_step(hi - rise, hi)

    def jetfn(r):
        a = up.jetfn(np.asarray(r, dtype=float))
        b = down.jetfn(np.asarray(r, dtype=float))
        fact = np.array([math.factorial(k) for k in range(ORDER + 1)]).reshape(-1, 1)
        prod = Jet(a / fact) * Jet((np.array([1, 0, 0, 0, 0]).reshape(-1, 1) - b) / fact)
        return prod.derivatives()

    return SmoothProfile1D(
        (lo, hi), "plateau_bump", {"lo": lo, "hi": hi, "rise": rise},
        [FlatZone(-math.inf, lo, "const", (0.0,)),
         FlatZone(lo + rise, hi - rise, "const", (1.0,)),
         FlatZone(hi, math.inf, "const", (0.0,))],
        jetfn)


def lincomb_profile(terms, domain, kind="lincomb", params=None) -> SmoothProfile1D:
    """Weighted sum of profiles: sum_i w_i * p_i."""
    terms = [(float(w), p) for w, p in terms]

    def jetfn(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros((ORDER + 1,) + r.shape)
        for w, p in terms:
            out += w * p.jetfn(r)
        return out

    return SmoothProfile1D(tuple(domain), kind, params or {}, [], jetfn)


def custom_profile(jetfn, domain, flat_zones=None) -> SmoothProfile1D:
    """Wrap an arbitrary (r)->(5,N) derivative function (not serializable)."""
    return SmoothProfile1D(tuple(domain), "custom", {}, flat_zones or [], jetfn)


# -- JSON registry --------------------------------------------------------

def profile_from_json(obj) -> SmoothProfile1D:
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj["kind"]
    p = obj.get("params", {})
    domain = tuple(obj.get("domain", (0.0, 1.0)))
    if kind == "smooth_step":
        return make_smooth_step(p["r0"], p["r1"])
    if kind == "radial_warp":
        return make_F(p["eps"])
    if kind == "angular_warp":
        return make_G(p["eps"])
    if kind == "constant":
        return constant_profile(p["value"], domain)
    if kind == "linear":
        return linear_profile(p["intercept"], p["slope"], domain)
    if kind == "sin":
        return sin_profile(domain)
    if kind == "sinh":
        return sinh_profile(domain)
    if kind == "plateau_bump":
        return plateau_bump(p["lo"], p["hi"], p["rise"])
    raise InvalidProfileError(f"unknown profile kind {kind!r}")
