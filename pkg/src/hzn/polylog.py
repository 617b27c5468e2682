"""Complex polylogarithm Li_s(z) for integer 1 <= s <= 8, principal branch.

Evaluation strategy by region:

* ``|z| <= 0.55``       direct power series sum z^n / n^s
* ``|z| >= 1/0.55``     inversion z -> 1/z with Bernoulli-polynomial log terms
* annulus in between    expansion in mu = log z about z = 1

Arguments on the cut ``[1, inf)`` are resolved by one-sided limits.  Note
that plain principal-branch arithmetic (``log`` of a negative real carries
``+i*pi``) reproduces the limit from *below* the cut; the limit from above
is its complex conjugate for real cut arguments.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import BranchCutError, DomainError, PoleError

MAX_ORDER = 8

PRINCIPAL = "principal"
LIMIT_FROM_ABOVE = "limit_from_above"
LIMIT_FROM_BELOW = "limit_from_below"
_BRANCH_MODES = (PRINCIPAL, LIMIT_FROM_ABOVE, LIMIT_FROM_BELOW)

PI = 3.14159265358979323846264338328
TWO_PI = 2.0 * PI
LOG2 = 0.693147180559945309417232121458

# zeta(2..8), 30 significant digits each
_ZETA_SMALL = {
    2: 1.64493406684822643647241516665,
    3: 1.20205690315959428539973816151,
    4: 1.08232323371113819151600369654,
    5: 1.03692775514336992633136548646,
    6: 1.01734306198444913971451792979,
    7: 1.00834927738192282683979754985,
    8: 1.00407735619794433937868523851,
}

# B_0 .. B_8, used by the degree-<=8 Bernoulli polynomials of the inversion formula
_BERN_SMALL = (1.0, -0.5, 1.0 / 6.0, 0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0, 0.0, -1.0 / 30.0)

_SERIES_RADIUS = 0.55

_zeta_cache: dict[int, float] = dict(_ZETA_SMALL)
_bern_even_cache: dict[int, float] = {}


def _zeta_pos(j: int) -> float:
    """zeta(j) for integer j >= 2."""
    val = _zeta_cache.get(j)
    if val is None:
        # direct sum; tail < 300**(1-j)/(j-1) < 1e-20 for j >= 9
        val = math.fsum(n ** (-float(j)) for n in range(1, 301))
        _zeta_cache[j] = val
    return val


def _bern_even(m: int) -> float:
    """Bernoulli number B_m for even m >= 2, via B_m = (-1)^(m/2+1) 2 m! zeta(m) / (2 pi)^m."""
    val = _bern_even_cache.get(m)
    if val is None:
        k = m // 2
        sign = 1.0 if k % 2 == 1 else -1.0
        val = sign * 2.0 * math.factorial(m) * _zeta_pos(m) / TWO_PI**m
        _bern_even_cache[m] = val
    return val


def _zeta_int(m: int) -> float:
    """zeta at an integer argument m <= 8, m != 1."""
    if m >= 2:
        return _zeta_pos(m)
    if m == 0:
        return -0.5
    if m == 1:
        raise PoleError("zeta(1) requested")
    n = -m
    if n % 2 == 0:
        return 0.0
    return -_bern_even(n + 1) / (n + 1)


def _check_order(s: int) -> int:
    if not isinstance(s, (int, np.integer)) or not 1 <= s <= MAX_ORDER:
        raise DomainError(f"polylog order must be an integer in [1, {MAX_ORDER}], got {s!r}")
    return int(s)


def _harmonic(n: int) -> float:
    return math.fsum(1.0 / k for k in range(1, n + 1))


def _li_series(s: int, z: complex) -> complex:
    # |z| <= 0.55 kept by callers; ~65 terms reach 1e-17
    total = 0j
    zp = complex(z)
    n = 1
    while n <= 300:
        term = zp / n**s
        total += term
        if abs(term) < 1e-17 * (1.0 + abs(total)):
            break
        zp *= z
        n += 1
    return total


def _log_negated(w: complex) -> complex:
    """log(-w), with a zero imaginary part normalized to +0.0 first.

    Unary negation turns +0.0j into -0.0j, which would flip cmath.log onto
    the -i*pi side of its cut; normalizing keeps the principal convention
    Im(log) in (-pi, pi], so on-cut inputs resolve to the limit from below.
    """
    nw = -w
    if nw.imag == 0.0:
        nw = complex(nw.real, 0.0)
    return cmath.log(nw)


def _li_annulus(s: int, z: complex) -> complex:
    # expansion in mu = log z; valid for |mu| < 2*pi, used here with |mu| <= 3.3
    mu = cmath.log(z)
    rho2 = (abs(mu) / TWO_PI) ** 2
    total = 0j
    mupow = 1.0 + 0j  # mu^m / m!
    last_nonzero = math.inf
    for m in range(0, 160):
        if m == s - 1:
            term = (_harmonic(s - 1) - _log_negated(mu)) * mupow
            total += term
        else:
            c = _zeta_int(s - m)
            if c != 0.0:
                term = c * mupow
                total += term
                if m > s + 2:
                    mag = abs(term)
                    if mag + last_nonzero < 1e-17 * (1.0 + abs(total)) / max(1e-30, 1.0 - rho2):
                        break
                    last_nonzero = mag
        mupow *= mu / (m + 1)
    return total


def _bernoulli_poly(s: int, x: complex) -> complex:
    total = 0j
    for k in range(s + 1):
        b = _BERN_SMALL[k]
        if b != 0.0:
            total += math.comb(s, k) * b * x ** (s - k)
    return total


def _li_inversion(s: int, z: complex) -> complex:
    base = _li_series(s, 1.0 / z)
    x = 0.5 + _log_negated(z) / (2j * PI)
    bpoly = _bernoulli_poly(s, x)
    sign = 1.0 if s % 2 == 1 else -1.0
    return sign * base - (2j * PI) ** s / math.factorial(s) * bpoly


def _li_raw(s: int, z: complex) -> complex:
    """Principal-branch value; on the cut this equals the limit from below."""
    if s == 1:
        return -cmath.log(1.0 - z)
    r = abs(z)
    if r <= _SERIES_RADIUS:
        return _li_series(s, z)
    if r < 1.0 / _SERIES_RADIUS:
        return _li_annulus(s, z)
    return _li_inversion(s, z)


def on_cut(z: complex) -> bool:
    """True when z lies on the polylogarithm cut [1, inf)."""
    z = complex(z)
    return z.imag == 0.0 and z.real >= 1.0


def li(s: int, z: complex, branch: str = PRINCIPAL) -> complex:
    """Polylogarithm Li_s(z) of integer order s on the principal branch.

    ``branch`` selects a one-sided limit for arguments on the cut [1, inf);
    off the cut all modes coincide.  ``principal`` rejects the open cut.
    """
    s = _check_order(s)
    if branch not in _BRANCH_MODES:
        raise DomainError(f"unknown branch mode {branch!r}; expected one of {_BRANCH_MODES}")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"argument must be finite, got {z!r}")
    if not on_cut(z):
        return _li_raw(s, z)
    if z.real == 1.0:
        if s == 1:
            raise PoleError("Li_1 has a pole at z = 1")
        return complex(_zeta_pos(s))
    if branch == PRINCIPAL:
        raise BranchCutError(
            f"Li_{s}({z.real}) lies on the cut [1, inf); pass a limit_from_* branch mode"
        )
    val = _li_raw(s, z)
    return val if branch == LIMIT_FROM_BELOW else val.conjugate()


def li_derivative_check(s: int, z: complex, h: float) -> float:
    """|centered finite difference of Li_{s+1} at z  -  Li_s(z)/z|."""
    s = _check_order(s)
    if s + 1 > MAX_ORDER:
        raise DomainError(f"derivative check needs order s+1 <= {MAX_ORDER}")
    z = complex(z)
    if z == 0:
        raise DomainError("derivative check is undefined at z = 0")
    if on_cut(z):
        raise BranchCutError("derivative check requires z off the cut [1, inf)")
    if not 1e-6 <= h <= 1e-4:
        raise DomainError(f"step h must lie in [1e-6, 1e-4], got {h}")
    fd = (li(s + 1, z + h) - li(s + 1, z - h)) / (2.0 * h)
    return abs(fd - li(s, z) / z)


def _require_off_cut(a: complex, what: str) -> complex:
    a = complex(a)
    if on_cut(a):
        raise BranchCutError(f"{what} = {a!r} lies on the dilogarithm cut [1, inf)")
    return a


def rogers_residual(A: complex, B: complex) -> float:
    """Absolute residual of the five-term dilogarithm relation in Rogers form."""
    A, B = complex(A), complex(B)
    AB = A * B
    if AB == 1:
        raise DomainError("rogers_residual requires A*B != 1")
    args = (A, B, AB, (A - AB) / (1 - AB), (B - AB) / (1 - AB))
    for a in args:
        _require_off_cut(a, "dilogarithm argument")
    lhs = li(2, A) + li(2, B) - li(2, AB)
    rhs = (
        li(2, (A - AB) / (1 - AB))
        + li(2, (B - AB) / (1 - AB))
        + cmath.log((1 - A) / (1 - AB)) * cmath.log((1 - B) / (1 - AB))
    )
    return abs(lhs - rhs)


def abel_residual(x: complex, y: complex) -> float:
    """Absolute residual of the five-term dilogarithm relation in Abel form."""
    x, y = complex(x), complex(y)
    if x == 1 or y == 1:
        raise DomainError("abel_residual requires x != 1 and y != 1")
    args = (x / (1 - y), y / (1 - x), x * y / ((1 - x) * (1 - y)), x, y)
    for a in args:
        _require_off_cut(a, "dilogarithm argument")
    lhs = li(2, x / (1 - y)) + li(2, y / (1 - x)) - li(2, x * y / ((1 - x) * (1 - y)))
    rhs = li(2, x) + li(2, y) + cmath.log(1 - x) * cmath.log(1 - y)
    return abs(lhs - rhs)


def alt_mzv_31(terms: int) -> float:
    """Partial sum of the alternating double zeta value sum_{m>n>=1} (-1)^(m+n)/(m^3 n).

    The tail beyond ``terms`` is O(log(terms)/terms^3); see
    :func:`alt_mzv_31_tail_bound`.
    """
    if terms < 2:
        raise DomainError(f"terms must be >= 2, got {terms}")
    n = np.arange(1, terms + 1, dtype=np.float64)
    alt_harmonic = np.cumsum(np.where(np.arange(1, terms + 1) % 2 == 1, 1.0, -1.0) / n)
    m = np.arange(2, terms + 1, dtype=np.float64)
    sign_m = np.where(np.arange(2, terms + 1) % 2 == 0, 1.0, -1.0)
    contrib = -sign_m * alt_harmonic[:-1] / m**3
    return math.fsum(contrib.tolist())


def alt_mzv_31_tail_bound(terms: int) -> float:
    """Bound on |alt_mzv_31(inf) - alt_mzv_31(terms)|.

    The inner alternating-harmonic factor is bounded by 1, and the outer
    alternating sum's tail is dominated by its first term.
    """
    if terms < 2:
        raise DomainError(f"terms must be >= 2, got {terms}")
    return 2.0 / (terms + 1) ** 3
