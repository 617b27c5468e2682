"""Ground-truth evaluation of the log-kernel integrals by tanh-sinh quadrature.

The four integrals

    F(z;u,v)    =  int_0^1 log(1 - u t^z) / (1/v - t) dt
    F(z;u,v,w)  =  int_0^1 log(1 - u t^z) log(1 - w t^z) / (1/v - t) dt
    F_k(z;u,v)  =  int_0^1 log^k(1 - u t^z) / (1/v - t) dt
    J(z)        =  int_0^1 log(1 + t^z) / (1 + t) dt

are evaluated with a double-exponential (tanh-sinh) transformation and
level doubling; the reported error estimate is the last-level correction.
The node map absorbs the integrable logarithmic endpoint singularity at
t = 1 (u = 1 case) and the t^z behaviour at t = 0 without special-casing.

When the pole 1/v comes close to the contour (distance in [clearance,
1e-2]), the interval is split at the foot of the perpendicular from 1/v
so each half sees the pole next to an endpoint, where nodes cluster.

Accuracy contract: results never degrade silently.  If ``max_levels`` is
exhausted before the target, the result carries ``accuracy_warning=True``
and the achieved estimate.  Strongly oscillatory exponents (|Im z| much
larger than ~10 Re z) are outside the contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from . import _kernels as kern
from .domains import membership, require_finite
from .errors import DomainError, PoleProximityError
from .polylog import li

_XMAX = 3.8  # tanh-sinh abscissa range; weights beyond are below double precision


@dataclass(frozen=True)
class QuadConfig:
    target_abs_err: float = 1e-12
    max_levels: int = 12
    pole_clearance: float = 1e-6

    def __post_init__(self):
        if not 0.0 < self.target_abs_err < 1.0:
            raise DomainError(f"target_abs_err must lie in (0, 1), got {self.target_abs_err}")
        if not 1 <= self.max_levels <= 20:
            raise DomainError(f"max_levels must lie in [1, 20], got {self.max_levels}")
        if self.pole_clearance <= 0:
            raise DomainError("pole_clearance must be positive")


DEFAULT_CONFIG = QuadConfig()


@dataclass(frozen=True)
class ValueWithError:
    """A complex result with an absolute-error estimate and provenance tag."""

    value: complex
    abs_err: float
    method: str
    evaluations: int
    accuracy_warning: bool = False

    def __post_init__(self):
        if self.abs_err < 0 or self.evaluations < 1:
            raise DomainError("abs_err must be >= 0 and evaluations >= 1")


def _node_block(x: np.ndarray):
    """Stable (t, log t, 1-t, weight) for tanh-sinh abscissae x (h factored out)."""
    sigma = 0.5 * math.pi * np.sinh(x)
    t = np.empty_like(sigma)
    omt = np.empty_like(sigma)
    lnt = np.empty_like(sigma)
    pos = sigma >= 0
    ep = np.exp(-2.0 * sigma[pos])
    t[pos] = 1.0 / (1.0 + ep)
    omt[pos] = ep / (1.0 + ep)
    lnt[pos] = -np.log1p(ep)
    neg = ~pos
    en = np.exp(2.0 * sigma[neg])
    t[neg] = en / (1.0 + en)
    omt[neg] = 1.0 / (1.0 + en)
    lnt[neg] = 2.0 * sigma[neg] - np.log1p(en)
    w = math.pi * np.cosh(x) * t * omt
    return t, lnt, omt, w


@lru_cache(maxsize=32)
def _level_nodes(level: int):
    """New abscissae introduced at this refinement level (immutable arrays)."""
    h = 2.0 ** (-level)
    if level == 0:
        j = np.arange(-int(_XMAX), int(_XMAX) + 1, dtype=np.float64)
    else:
        jmax = int(_XMAX / h)
        odd = np.arange(1, jmax + 1, 2, dtype=np.float64)
        j = np.concatenate([-odd[::-1], odd])
    block = _node_block(j * h)
    for arr in block:
        arr.setflags(write=False)
    return block


Integrand = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


def _integrate_unit(g: Integrand, cfg: QuadConfig):
    """Integrate g over [0,1]; g receives stable (t, log t, 1-t) node arrays."""
    running = 0.0 + 0.0j
    running_abs = 0.0
    evals = 0
    s_prev = None
    err = math.inf
    warning = True
    value = 0.0 + 0.0j
    for level in range(cfg.max_levels + 1):
        t, lnt, omt, w = _level_nodes(level)
        vals = w * g(t, lnt, omt)
        running += np.sum(vals)
        running_abs += float(np.sum(np.abs(vals)))
        evals += len(t)
        h = 2.0 ** (-level)
        value = h * running
        floor = 4e-16 * h * running_abs
        if s_prev is not None:
            err = abs(value - s_prev)
            if level >= 2 and err <= max(cfg.target_abs_err, floor):
                warning = False
                break
        s_prev = value
    return value, max(err, floor), evals, warning


def _dist_to_unit_interval(x: complex) -> tuple[float, float]:
    c = min(max(x.real, 0.0), 1.0)
    return abs(x - c), c


def _pieces_for_pole(v: complex, cfg: QuadConfig):
    """Split points for the pole at 1/v, per the near-pole policy."""
    d, c = _dist_to_unit_interval(1.0 / v)
    if d < cfg.pole_clearance:
        raise PoleProximityError(
            f"pole 1/v = {1.0 / v!r} lies within {d:.3g} of [0,1] "
            f"(clearance {cfg.pole_clearance:g})"
        )
    if d <= 1e-2 and 1e-3 < c < 1.0 - 1e-3:
        return (("left", c), ("right", c))
    return (("full", 0.0),)


def _integrate_pieces(g: Integrand, pieces, cfg: QuadConfig):
    total = 0.0 + 0.0j
    err = 0.0
    evals = 0
    warning = False
    for kind, c in pieces:
        if kind == "full":
            gp = g
            jac = 1.0
        elif kind == "left":
            lnc = math.log(c)

            def gp(s, lns, oms, _g=g, _c=c, _lnc=lnc):
                t = _c * s
                return _g(t, _lnc + lns, (1.0 - _c) + _c * oms)

            jac = c
        else:  # right piece [c, 1]
            def gp(s, lns, oms, _g=g, _c=c):
                omt = (1.0 - _c) * oms
                return _g(1.0 - omt, np.log1p(-omt), omt)

            jac = 1.0 - c
        sub_target = min(0.5, cfg.target_abs_err / (2.0 * max(jac, 1e-6)))
        sub_cfg = replace(cfg, target_abs_err=sub_target)
        val, e, n, warn = _integrate_unit(gp, sub_cfg)
        total += jac * val
        err += jac * e
        evals += n
        warning = warning or warn
    return total, err, evals, warning


def _check_common(z: complex, u: complex, v: complex, cfg: QuadConfig):
    z = require_finite(z, "z")
    u = require_finite(u, "u")
    v = require_finite(v, "v")
    if z.real <= 0:
        raise DomainError("Re z must be positive (use integrate_j for the reflected J case)")
    if u != 0 and not membership(u, "L"):
        raise DomainError(f"u = {u!r} lies outside L (the plane minus (1,inf) and 0)")
    if not membership(v, "Lprime"):
        raise DomainError(f"v = {v!r} lies outside L' (the plane minus [1,inf) and 0)")
    return z, u, v


def integrate_f(z, u, v, cfg: Optional[QuadConfig] = None) -> ValueWithError:
    """F(z;u,v) by tanh-sinh quadrature."""
    return integrate_fk(z, u, v, 1, cfg)


def integrate_fk(z, u, v, k: int, cfg: Optional[QuadConfig] = None) -> ValueWithError:
    """F_k(z;u,v) by tanh-sinh quadrature; k = 1 coincides with integrate_f."""
    cfg = cfg or DEFAULT_CONFIG
    z, u, v = _check_common(z, u, v, cfg)
    if not 1 <= k <= 6:
        raise DomainError(f"k must lie in [1, 6], got {k}")
    if u == 0:
        return ValueWithError(0j, 0.0, "quadrature", 1)
    pieces = _pieces_for_pole(v, cfg)
    vinv = 1.0 / v

    def g(t, lnt, omt):
        return kern.f_power_integrand(t, lnt, z, u, k, vinv)

    val, err, evals, warn = _integrate_pieces(g, pieces, cfg)
    return ValueWithError(val, err, "quadrature", evals, warn)


def integrate_f3(z, u, v, w, cfg: Optional[QuadConfig] = None) -> ValueWithError:
    """F(z;u,v,w) by tanh-sinh quadrature."""
    cfg = cfg or DEFAULT_CONFIG
    z, u, v = _check_common(z, u, v, cfg)
    w = require_finite(w, "w")
    if w != 0 and not membership(w, "L"):
        raise DomainError(f"w = {w!r} lies outside L (the plane minus (1,inf) and 0)")
    if u == 0 or w == 0:
        return ValueWithError(0j, 0.0, "quadrature", 1)
    pieces = _pieces_for_pole(v, cfg)
    vinv = 1.0 / v

    def g(t, lnt, omt):
        return kern.f3_integrand(t, lnt, z, u, w, vinv)

    val, err, evals, warn = _integrate_pieces(g, pieces, cfg)
    return ValueWithError(val, err, "quadrature", evals, warn)


def integrate_j(z, cfg: Optional[QuadConfig] = None) -> ValueWithError:
    """J(z) by tanh-sinh quadrature; any complex z with Re z != 0."""
    cfg = cfg or DEFAULT_CONFIG
    z = require_finite(z, "z")
    if z.real == 0:
        raise DomainError("J(z) requires Re z != 0")

    def g(t, lnt, omt):
        return kern.j_integrand(t, lnt, z)

    val, err, evals, warn = _integrate_unit(g, cfg)
    return ValueWithError(val, err, "quadrature", evals, warn)


def integrate_unit_interval(g: Integrand, cfg: Optional[QuadConfig] = None) -> ValueWithError:
    """Tanh-sinh integration of an arbitrary integrand over [0,1].

    ``g(t, lnt, omt)`` receives stable node arrays (lnt = log t computed to
    full precision near t = 0, omt = 1 - t near t = 1).  Used by the
    identity harness to integrate defining integrands directly.
    """
    cfg = cfg or DEFAULT_CONFIG
    val, err, evals, warn = _integrate_unit(g, cfg)
    return ValueWithError(val, err, "quadrature", evals, warn)


def integrate_logsq_kernel(u, v, w, cfg: Optional[QuadConfig] = None) -> ValueWithError:
    """Direct quadrature of  int_0^1 log^2((v-u)(wt-1)/((v-w)(ut-1))) * v/(vt-1) dt."""
    u, v, w = (require_finite(a, n) for a, n in ((u, "u"), (v, "v"), (w, "w")))
    pref = (v - u) / (v - w)

    def g(t, lnt, omt):
        ratio = pref * (w * t - 1.0) / (u * t - 1.0)
        return np.log(ratio) ** 2 * v / (v * t - 1.0)

    cfg = cfg or DEFAULT_CONFIG
    val, err, evals, warn = _integrate_unit(g, cfg)
    return ValueWithError(val, err, "quadrature", evals, warn)


def integrate_dilog_kernel(u, v, w, cfg: Optional[QuadConfig] = None) -> ValueWithError:
    """Direct quadrature of  int_0^1 u/(ut-1) * Li_2(v(1-wt)/(v-w)) dt."""
    u, v, w = (require_finite(a, n) for a, n in ((u, "u"), (v, "v"), (w, "w")))
    pref = v / (v - w)

    def g(t, lnt, omt):
        args = pref * (1.0 - w * t)
        li2 = np.array([li(2, a) for a in args], dtype=np.complex128)
        return u / (u * t - 1.0) * li2

    cfg = cfg or DEFAULT_CONFIG
    val, err, evals, warn = _integrate_unit(g, cfg)
    return ValueWithError(val, err, "quadrature", evals, warn)


# ----- exp-sinh integration over [0, inf), for the substituted form -----

_X_NEG = 4.5
_X_POS = 2.2


def _expsinh_block(x: np.ndarray):
    tau = np.exp(0.5 * math.pi * np.sinh(x))
    w = tau * 0.5 * math.pi * np.cosh(x)
    return tau, w


@lru_cache(maxsize=32)
def _expsinh_nodes(level: int):
    h = 2.0 ** (-level)
    if level == 0:
        j = np.arange(-int(_X_NEG), int(_X_POS) + 1, dtype=np.float64)
    else:
        j_all = np.arange(math.ceil(-_X_NEG / h), math.floor(_X_POS / h) + 1)
        j = j_all[j_all % 2 != 0].astype(np.float64)
    block = _expsinh_block(j * h)
    for arr in block:
        arr.setflags(write=False)
    return block


def integrate_f_substituted(z, u, v, cfg: Optional[QuadConfig] = None) -> ValueWithError:
    """F(z;u,v) in its exponentially substituted form on [0, inf).

    Evaluates  int_0^inf log(1 - u e^{-z tau}) / (e^tau / v - 1) dtau  with
    exp-sinh quadrature; used as an independent cross-check of integrate_f.
    """
    cfg = cfg or DEFAULT_CONFIG
    z, u, v = _check_common(z, u, v, cfg)
    if u == 0:
        return ValueWithError(0j, 0.0, "quadrature", 1)

    def g(tau):
        decay = v * np.exp(-tau)
        num = np.log((1.0 - u) - u * kern.cexpm1(np.asarray(-z * tau, dtype=np.complex128)))
        return num * decay / (1.0 - decay)

    running = 0.0 + 0.0j
    running_abs = 0.0
    evals = 0
    s_prev = None
    err = math.inf
    warning = True
    value = 0.0 + 0.0j
    for level in range(cfg.max_levels + 1):
        tau, w = _expsinh_nodes(level)
        vals = w * g(tau)
        running += np.sum(vals)
        running_abs += float(np.sum(np.abs(vals)))
        evals += len(tau)
        h = 2.0 ** (-level)
        value = h * running
        floor = 4e-16 * h * running_abs
        if s_prev is not None:
            err = abs(value - s_prev)
            if level >= 2 and err <= max(cfg.target_abs_err, floor):
                warning = False
                break
        s_prev = value
    return ValueWithError(value, max(err, floor), "quadrature", evals, warning)
