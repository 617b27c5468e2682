"""Pure-numpy implementations of the hot numeric kernels.

These are the fallback twins of the jitted kernels in ``_kernels_numba``;
both sides expose the same signatures.  Selection happens in ``_kernels``.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"


def cexpm1(zeta: np.ndarray) -> np.ndarray:
    """exp(zeta) - 1 for complex arrays, stable for small |zeta|."""
    zeta = np.asarray(zeta, dtype=np.complex128)
    out = np.exp(zeta) - 1.0
    small = np.abs(zeta) < 1e-4
    if np.any(small):
        zs = zeta[small]
        out[small] = zs * (1.0 + zs * (0.5 + zs * (1.0 / 6.0 + zs / 24.0)))
    return out


def clog1p(x: np.ndarray) -> np.ndarray:
    """log(1 + x) for complex arrays, stable for small |x|."""
    x = np.asarray(x, dtype=np.complex128)
    out = np.log(1.0 + x)
    small = np.abs(x) < 1e-8
    if np.any(small):
        xs = x[small]
        out[small] = xs - 0.5 * xs * xs
    return out


def log_f_factor(t, lnt, z, u):
    """log(1 - u * t**z) over node arrays, stable near t = 1 when u = 1."""
    zeta = z * lnt
    return np.log((1.0 - u) - u * cexpm1(zeta))


def f_power_integrand(t, lnt, z, u, k, vinv):
    """log^k(1 - u t^z) / (1/v - t) over node arrays."""
    return log_f_factor(t, lnt, z, u) ** k / (vinv - t)


def f3_integrand(t, lnt, z, u, w, vinv):
    """log(1 - u t^z) log(1 - w t^z) / (1/v - t) over node arrays."""
    return log_f_factor(t, lnt, z, u) * log_f_factor(t, lnt, z, w) / (vinv - t)


def j_integrand(t, lnt, z):
    """log(1 + t^z) / (1 + t) over node arrays; Re(z) may be negative.

    For Re(z*log t) > 0 the factor e^(z*log t) spirals outward and the
    principal log of 1 + e^zeta would jump branches along the contour; the
    split zeta + log1p(e^-zeta) is the continuous (analytic) branch there
    and also avoids overflow.
    """
    zeta = np.asarray(z * lnt, dtype=np.complex128)
    out = np.empty_like(zeta)
    grow = zeta.real > 0.0
    if np.any(grow):
        zb = zeta[grow]
        out[grow] = zb + clog1p(np.exp(-zb))
    rest = ~grow
    out[rest] = clog1p(np.exp(zeta[rest]))
    return out / (1.0 + t)


def _tail_min_denom(re_zm: float, im_zm: float, l_next: float, floor: float) -> float:
    # lower bound for |z*M + l'| over real l' >= l_next
    if l_next + re_zm > 0.0:
        return float(np.hypot(l_next + re_zm, im_zm))
    return max(abs(im_zm), floor)


def series_sum(coeffs, abs_coeffs, suffix_ratio_max, m_start, z, v, rho, tol, denom_floor, l_cap):
    """Collapsed double sum  sum_M coeffs[M] * sum_{l>=1} v^l / (z M + l).

    ``abs_coeffs`` majorizes |coeffs|; ``suffix_ratio_max[M]`` bounds
    ``abs_coeffs[M']/rho**M'`` for every M' >= M.  Returns
    ``(value, bound, evals, min_denom, converged)`` where ``bound`` majorizes
    the truncation error of the returned partial sum.
    """
    absv = abs(v)
    geo_v = absv / (1.0 - absv)
    value = 0.0 + 0.0j
    bound = 0.0
    evals = 0
    min_denom = np.inf
    converged = False
    n = len(coeffs)
    chunk = 48
    M = m_start
    while M <= n:
        # remaining-M tail bound; valid once every later |z M' + l| >= dmin_out
        if M > m_start or M == n:
            if z.real >= 0.0:
                dmin_out = float(np.hypot(z.real * M + 1.0, z.imag * M))
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
        l0 = 1
        while l0 <= l_cap:
            ls = np.arange(l0, min(l0 + chunk, l_cap + 1), dtype=np.float64)
            dens = zm + ls
            adens = np.abs(dens)
            dmin_seen = float(adens.min())
            if dmin_seen < min_denom:
                min_denom = dmin_seen
            if dmin_seen < denom_floor:
                return value, np.inf, evals, min_denom, False
            inner += np.sum(v**ls / dens)
            evals += len(ls)
            l_last = ls[-1]
            dmin_tail = _tail_min_denom(re_zm, im_zm, l_last + 1.0, denom_floor)
            tail_inner = absv**l_last * geo_v / dmin_tail
            if tail_inner * max(aabs, 1e-300) < budget:
                break
            l0 += chunk
        value += aM * inner
        bound += tail_inner * aabs
        M += 1
    return value, bound, evals, min_denom, converged
