"""Parameter domains, principal roots, and roots of unity.

Every evaluator in this package draws its parameters from one of four
regions of the complex plane:

* ``D``       punctured closed unit disk ``0 < |x| <= 1``
* ``Dprime``  ``D`` with the point 1 removed
* ``L``       plane minus the open ray ``(1, inf)`` and 0
* ``Lprime``  plane minus the closed ray ``[1, inf)`` and 0

Region tests are exact (no epsilon).  Callers that additionally need a
safety margin for convergence apply their own radius checks.

All fractional powers use the principal branch: ``log`` has its cut on
``(-inf, 0]`` with imaginary part in ``(-pi, pi]``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError, PoleError

_SET_NAMES = ("D", "Dprime", "L", "Lprime")


def require_finite(x: complex, name: str = "value") -> complex:
    """Coerce to complex and reject NaN/Inf components."""
    x = complex(x)
    if not (math.isfinite(x.real) and math.isfinite(x.imag)):
        raise DomainError(f"{name} must have finite components, got {x!r}")
    return x


def membership(x: complex, set_name: str) -> bool:
    """Exact test of ``x`` against one of the sets D, Dprime, L, Lprime."""
    x = require_finite(x, "x")
    if set_name == "D":
        return x != 0 and abs(x) <= 1.0
    if set_name == "Dprime":
        return x != 0 and x != 1 and abs(x) <= 1.0
    if set_name == "L":
        return x != 0 and not (x.imag == 0.0 and x.real > 1.0)
    if set_name == "Lprime":
        return x != 0 and not (x.imag == 0.0 and x.real >= 1.0)
    raise DomainError(f"unknown set name {set_name!r}; expected one of {_SET_NAMES}")


def principal_root(x: complex, n: int) -> complex:
    """Principal n-th root exp(log(x)/n), with Im(log) in (-pi, pi]."""
    x = require_finite(x, "x")
    if x == 0:
        raise DomainError("principal_root is undefined at 0")
    if n < 1:
        raise DomainError(f"root order must be a positive integer, got {n}")
    if n == 1:
        return x
    return cmath.exp(cmath.log(x) / n)


@dataclass(frozen=True)
class RootsOfUnity:
    """The n-th roots of unity, ordered by angle starting from 1."""

    n: int
    roots: tuple[complex, ...]

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return self.n


def roots_of_unity(n: int) -> RootsOfUnity:
    """All n-th roots of unity; ``roots[j] = exp(2*pi*i*j/n)``, ``roots[0] == 1``."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    roots = [1 + 0j]
    for j in range(1, n):
        theta = 2.0 * math.pi * j / n
        roots.append(complex(math.cos(theta), math.sin(theta)))
    return RootsOfUnity(n=n, roots=tuple(roots))


def partial_fraction_sum(Y: complex, n: int) -> complex:
    """Sum of 1/(1 - beta*Y) over the n-th roots of unity beta.

    Equals ``n / (1 - Y**n)`` identically; raises when Y is (numerically)
    an n-th root of unity.
    """
    Y = require_finite(Y, "Y")
    total = 0j
    guard = 1e-13 * (1.0 + abs(Y))
    for beta in roots_of_unity(n):
        d = 1.0 - beta * Y
        if abs(d) <= guard:
            raise PoleError(f"Y={Y!r} is an {n}-th root of unity (to working precision)")
        total += 1.0 / d
    return total


@dataclass(frozen=True)
class RegionFlags:
    """Domain-membership flags for a parameter bundle."""

    u_in_L: bool = False
    u_in_D: bool = False
    u_in_Dprime: bool = False
    v_in_Lprime: bool = False
    v_in_D: bool = False
    v_in_Dprime: bool = False
    w_in_L: bool = False
    w_in_D: bool = False
    w_in_Dprime: bool = False


@dataclass(frozen=True)
class EvalParams:
    """A validated parameter bundle (z; u, v, optional w; order k).

    Flags are computed from exact membership tests at construction, so
    they are consistent by definition; validation only has to reject
    non-finite values and a non-positive order.
    """

    z: complex
    u: complex
    v: complex
    w: Optional[complex] = None
    k: int = 1
    region_flags: RegionFlags = field(default=RegionFlags())

    def __post_init__(self):
        for name in ("z", "u", "v"):
            require_finite(getattr(self, name), name)
        if self.w is not None:
            require_finite(self.w, "w")
        if self.k < 1:
            raise DomainError(f"order k must be >= 1, got {self.k}")

    @classmethod
    def for_values(cls, z, u, v, w=None, k: int = 1) -> "EvalParams":
        z, u, v = complex(z), complex(u), complex(v)
        w = None if w is None else complex(w)
        flags = RegionFlags(
            u_in_L=membership(u, "L") if u != 0 else False,
            u_in_D=membership(u, "D") if u != 0 else False,
            u_in_Dprime=membership(u, "Dprime") if u != 0 else False,
            v_in_Lprime=membership(v, "Lprime") if v != 0 else False,
            v_in_D=membership(v, "D") if v != 0 else False,
            v_in_Dprime=membership(v, "Dprime") if v != 0 else False,
            w_in_L=membership(w, "L") if w not in (None, 0) else False,
            w_in_D=membership(w, "D") if w not in (None, 0) else False,
            w_in_Dprime=membership(w, "Dprime") if w not in (None, 0) else False,
        )
        return cls(z=z, u=u, v=v, w=w, k=k, region_flags=flags)
