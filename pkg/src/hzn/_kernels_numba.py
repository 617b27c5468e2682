"""Jitted twins of the hot numeric kernels (see ``_kernels_numpy``).

Scalar loops compiled with numba; first call pays a one-time compile cost
that is cached on disk afterwards.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_JIT = dict(cache=True, fastmath=False, nogil=True)


@njit(**_JIT)
def _cexpm1_s(zeta):
    if abs(zeta) < 1e-4:
        return zeta * (1.0 + zeta * (0.5 + zeta * (1.0 / 6.0 + zeta / 24.0)))
    return cmath.exp(zeta) - 1.0


@njit(**_JIT)
def _clog1p_s(x):
    if abs(x) < 1e-8:
        return x - 0.5 * x * x
    return cmath.log(1.0 + x)


@njit(**_JIT)
def cexpm1(zeta):
    out = np.empty_like(zeta)
    for i in range(zeta.shape[0]):
        out[i] = _cexpm1_s(zeta[i])
    return out


@njit(**_JIT)
def clog1p(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        out[i] = _clog1p_s(x[i])
    return out


@njit(**_JIT)
def log_f_factor(t, lnt, z, u):
    out = np.empty(t.shape[0], dtype=np.complex128)
    for i in range(t.shape[0]):
        out[i] = cmath.log((1.0 - u) - u * _cexpm1_s(z * lnt[i]))
    return out


@njit(**_JIT)
def f_power_integrand(t, lnt, z, u, k, vinv):
    out = np.empty(t.shape[0], dtype=np.complex128)
    for i in range(t.shape[0]):
        lg = cmath.log((1.0 - u) - u * _cexpm1_s(z * lnt[i]))
        out[i] = lg**k / (vinv - t[i])
    return out


@njit(**_JIT)
def f3_integrand(t, lnt, z, u, w, vinv):
    out = np.empty(t.shape[0], dtype=np.complex128)
    for i in range(t.shape[0]):
        zeta = z * lnt[i]
        lg_u = cmath.log((1.0 - u) - u * _cexpm1_s(zeta))
        lg_w = cmath.log((1.0 - w) - w * _cexpm1_s(zeta))
        out[i] = lg_u * lg_w / (vinv - t[i])
    return out


@njit(**_JIT)
def j_integrand(t, lnt, z):
    # Re(zeta) > 0: zeta + log1p(e^-zeta) is the continuous branch of
    # log(1 + e^zeta) along the contour (principal log would wind).
    out = np.empty(t.shape[0], dtype=np.complex128)
    for i in range(t.shape[0]):
        zeta = z * lnt[i]
        if zeta.real > 0.0:
            lg = zeta + _clog1p_s(cmath.exp(-zeta))
        else:
            lg = _clog1p_s(cmath.exp(zeta))
        out[i] = lg / (1.0 + t[i])
    return out


@njit(**_JIT)
def _tail_min_denom(re_zm, im_zm, l_next, floor):
    if l_next + re_zm > 0.0:
        return math.hypot(l_next + re_zm, im_zm)
    return max(abs(im_zm), floor)


@njit(**_JIT)
def series_sum(coeffs, abs_coeffs, suffix_ratio_max, m_start, z, v, rho, tol, denom_floor, l_cap):
    absv = abs(v)
    geo_v = absv / (1.0 - absv)
    value = 0.0 + 0.0j
    bound = 0.0
    evals = 0
    min_denom = np.inf
    converged = False
    n = coeffs.shape[0]
    M = m_start
    while M <= n:
        if M > m_start or M == n:
            if z.real >= 0.0:
                dmin_out = math.hypot(z.real * M + 1.0, z.imag * M)
            else:
                dmin_out = max(abs(z.imag) * M, denom_floor)
            ratio = suffix_ratio_max[min(M, n - 1)]
            tail_outer = ratio * rho**M / (1.0 - rho) * geo_v / dmin_out
            if tail_outer < 0.5 * tol:
                bound += tail_outer
                converged = True
                break
            if M == n:
                # coefficient table exhausted; report the uncovered tail honestly
                bound += tail_outer
                break
        zm = z * M
        re_zm, im_zm = zm.real, zm.imag
        aM = coeffs[M]
        aabs = abs_coeffs[M]
        budget = 0.25 * tol * (1.0 - rho) * rho ** (M - m_start)
        inner = 0.0 + 0.0j
        tail_inner = np.inf
        vp = 1.0 + 0.0j
        l = 1
        while l <= l_cap:
            vp *= v
            den = zm + l
            ad = abs(den)
            if ad < min_denom:
                min_denom = ad
            if ad < denom_floor:
                return value, np.inf, evals, min_denom, False
            inner += vp / den
            evals += 1
            if l % 16 == 0 or absv**l * geo_v < budget:
                dmin_tail = _tail_min_denom(re_zm, im_zm, l + 1.0, denom_floor)
                tail_inner = absv**l * geo_v / dmin_tail
                if tail_inner * max(aabs, 1e-300) < budget:
                    break
            l += 1
        value += aM * inner
        bound += tail_inner * aabs
        M += 1
    return value, bound, evals, min_denom, converged
