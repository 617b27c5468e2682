"""Analytic continuation of the integrals by collapsed multi-series.

Both continuations share one summation engine:

    sum_{M >= m0}  c(M) * sum_{l >= 1}  v^l / (z M + l)

* the k-fold power series of log^k(1 - u t^z) collapses over
  m_1 + ... + m_k = M with coefficients c_k(M) u^M, where c_k(M) is the
  coefficient of x^M in (-log(1-x))^k;
* the triple series of the two-log integrand collapses over m + n = M
  with the convolution coefficient sum_{m+n=M} u^m w^n / (m n).

Valid for |u|, |v| (and |w|) strictly below 1 and any complex z bounded
away from the negative rationals; the inner geometric tail and the outer
remaining-block bound are accumulated into a certified truncation bound.
Denominators |z M + l| below ``denom_floor`` raise, because no error
estimate is meaningful near a pole of the continuation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels as kern
from .domains import require_finite
from .errors import ConvergenceError, DomainError, NearPoleError, ResourceLimitError
from .quadrature import ValueWithError

MAX_LOG_POWER = 6


@dataclass(frozen=True)
class SeriesConfig:
    tol: float = 1e-12
    max_index: int = 4000
    denom_floor: float = 1e-8

    def __post_init__(self):
        if self.tol <= 0:
            raise DomainError("tol must be positive")
        if self.max_index < 8:
            raise DomainError("max_index must be >= 8")
        if self.denom_floor <= 0:
            raise DomainError("denom_floor must be positive")


DEFAULT_CONFIG = SeriesConfig()


@dataclass(frozen=True)
class LogPowerCoeffs:
    """coeffs[M] = coefficient of x^M in (-log(1-x))^k, M = 0..M_max."""

    k: int
    coeffs: np.ndarray


_coeff_cache: dict[tuple[int, int], np.ndarray] = {}


def _logpower_array(k: int, m_max: int) -> np.ndarray:
    key = (k, m_max)
    arr = _coeff_cache.get(key)
    if arr is None:
        base = np.zeros(m_max + 1)
        base[1:] = 1.0 / np.arange(1, m_max + 1)
        arr = base
        for _ in range(k - 1):
            arr = np.convolve(arr, base)[: m_max + 1]
        arr.setflags(write=False)
        _coeff_cache[key] = arr
    return arr


def logpower_coeffs(k: int, M_max: int) -> LogPowerCoeffs:
    """Power-series coefficients of (-log(1-x))^k by repeated convolution."""
    if not 1 <= k <= MAX_LOG_POWER:
        raise DomainError(f"k must lie in [1, {MAX_LOG_POWER}], got {k}")
    if M_max < k:
        raise DomainError(f"M_max must be >= k, got {M_max}")
    if M_max > 100_000:
        raise ResourceLimitError(f"M_max = {M_max} exceeds the 1e5 coefficient cap")
    return LogPowerCoeffs(k=k, coeffs=_logpower_array(k, M_max))


def _check_modulus(x: complex, name: str) -> complex:
    x = require_finite(x, name)
    if abs(x) >= 1.0:
        raise ConvergenceError(f"|{name}| must be < 1 for the series representation, got {abs(x)}")
    return x


def _initial_length(rho: float, absv: float, k: int, tol: float, cap: int) -> int:
    # crude first guess: rho^M below tol*(1-rho)(1-|v|)/8, plus the c_k peak margin
    target = max(tol * (1.0 - rho) * (1.0 - absv) * 0.125, 1e-300)
    est = int(math.log(target) / math.log(max(rho, 1e-6))) + 2 * k + 16
    est = max(est, int(math.e ** (k - 1)) + 32, 48)
    return min(est, cap)


def _run_series(coeffs, abs_coeffs, m_start, z, v, rho, cfg) -> ValueWithError:
    n = len(coeffs)
    ratio = abs_coeffs / np.maximum(rho, 1e-300) ** np.arange(n)
    suffix = np.maximum.accumulate(ratio[::-1])[::-1]
    value, bound, evals, min_denom, converged = kern.series_sum(
        np.ascontiguousarray(coeffs, dtype=np.complex128),
        np.ascontiguousarray(abs_coeffs, dtype=np.float64),
        np.ascontiguousarray(suffix, dtype=np.float64),
        m_start,
        complex(z),
        complex(v),
        float(rho),
        float(cfg.tol),
        float(cfg.denom_floor),
        int(cfg.max_index),
    )
    if min_denom < cfg.denom_floor:
        raise NearPoleError(
            f"|z*M + l| fell to {min_denom:.3g} < denom_floor {cfg.denom_floor:g}; "
            "z is too close to a negative rational"
        )
    abs_err = bound + 4e-16 * (1.0 + abs(value))
    return ValueWithError(
        value=value,
        abs_err=abs_err,
        method="series",
        evaluations=max(int(evals), 1),
        accuracy_warning=not converged,
    )


def series_fk(z, u, v, k: int, cfg: Optional[SeriesConfig] = None) -> ValueWithError:
    """F_k(z;u,v) by the collapsed double series, for |u| < 1, |v| < 1."""
    cfg = cfg or DEFAULT_CONFIG
    z = require_finite(z, "z")
    if not 1 <= k <= MAX_LOG_POWER:
        raise DomainError(f"k must lie in [1, {MAX_LOG_POWER}], got {k}")
    u = _check_modulus(u, "u")
    v = _check_modulus(v, "v")
    if u == 0 or v == 0:
        return ValueWithError(0j, 0.0, "series", 1)
    rho = abs(u)
    sign = -1.0 if k % 2 else 1.0  # log^k(1-x) = (-1)^k (-log(1-x))^k
    n = _initial_length(rho, abs(v), k, cfg.tol, cfg.max_index)
    while True:
        ck = _logpower_array(k, n)
        powers = u ** np.arange(n + 1)
        coeffs = sign * ck * powers
        abs_coeffs = ck * np.abs(powers)
        out = _run_series(coeffs, abs_coeffs, k, z, v, rho, cfg)
        if not out.accuracy_warning or n >= cfg.max_index:
            return out
        n = min(2 * n, cfg.max_index)


def series_f3(z, u, v, w, cfg: Optional[SeriesConfig] = None) -> ValueWithError:
    """F(z;u,v,w) by the collapsed triple series, for |u|, |v|, |w| < 1."""
    cfg = cfg or DEFAULT_CONFIG
    z = require_finite(z, "z")
    u = _check_modulus(u, "u")
    v = _check_modulus(v, "v")
    w = _check_modulus(w, "w")
    if u == 0 or w == 0 or v == 0:
        return ValueWithError(0j, 0.0, "series", 1)
    rho = max(abs(u), abs(w))
    n = _initial_length(rho, abs(v), 2, cfg.tol, cfg.max_index)
    while True:
        m = np.arange(n + 1, dtype=np.float64)
        log_u = np.zeros(n + 1, dtype=np.complex128)
        log_w = np.zeros(n + 1, dtype=np.complex128)
        log_u[1:] = u ** m[1:] / m[1:]
        log_w[1:] = w ** m[1:] / m[1:]
        coeffs = np.convolve(log_u, log_w)[: n + 1]
        abs_coeffs = np.convolve(np.abs(log_u), np.abs(log_w))[: n + 1]
        out = _run_series(coeffs, abs_coeffs, 2, z, v, rho, cfg)
        if not out.accuracy_warning or n >= cfg.max_index:
            return out
        n = min(2 * n, cfg.max_index)
