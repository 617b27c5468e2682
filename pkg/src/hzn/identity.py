"""Registry and fuzzing harness for the functional equations.

Each registered identity pairs two evaluation routes (closed form,
series, quadrature, or a constant) with a seeded sampler that only emits
parameters satisfying both routes' preconditions -- including the
certified-domain predicates of the closed forms.  Reports are
deterministic for a given (name, samples, seed, tol).

The two variants of the two-term relation for the J integral are both
registered permanently: the constant-right-hand-side form passes, while
the log^2(z) variant is kept as an informational record of the misprint
it documents (its report never fails a verification run).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import closedform as cf
from . import series as sr
from .domains import partial_fraction_sum, principal_root, roots_of_unity
from .errors import HznError
from .polylog import (
    LIMIT_FROM_ABOVE,
    LIMIT_FROM_BELOW,
    LOG2,
    PI,
    abel_residual,
    li,
    li_derivative_check,
    rogers_residual,
)
from .quadrature import (
    QuadConfig,
    integrate_dilog_kernel,
    integrate_f,
    integrate_f3,
    integrate_f_substituted,
    integrate_fk,
    integrate_j,
    integrate_logsq_kernel,
)


class UnknownIdentityError(HznError, LookupError):
    """Requested identity name is not registered."""


Params = dict
Sampler = Callable[[np.random.Generator, int], Params]
Evaluator = Callable[[Params], complex]


@dataclass(frozen=True)
class IdentitySpec:
    name: str
    description: str
    lhs: Evaluator
    rhs: Evaluator
    sampler: Sampler
    default_tol: float
    backends: tuple[str, str]
    informational: bool = False


@dataclass
class IdentityReport:
    name: str
    samples: int
    seed: int
    tol: float
    max_residual: float
    mean_residual: float
    failures: list[tuple[Params, float]]
    status: str
    wall_time_s: float = 0.0

    def to_record(self, include_timing: bool = False) -> dict:
        rec = {
            "schema_version": 1,
            "name": self.name,
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
            "status": self.status,
            "max_residual": self.max_residual,
            "mean_residual": self.mean_residual,
            "failure_count": len(self.failures),
            "failures": [
                {"params": _encode_params(p), "residual": r} for p, r in self.failures
            ],
        }
        if include_timing:
            rec["wall_time_s"] = self.wall_time_s
        return rec


def _encode_params(params: Params) -> dict:
    out = {}
    for key, val in params.items():
        if isinstance(val, complex):
            out[key] = [val.real, val.imag]
        else:
            out[key] = val
    return out


# ----- samplers -----

_MAX_DRAWS = 200_000


def _draw_point(rng, rmax=0.8, rmin=0.05, avoid=(), sep=0.05, one_margin=0.1) -> complex:
    for _ in range(_MAX_DRAWS):
        x = complex(rng.uniform(-rmax, rmax), rng.uniform(-rmax, rmax))
        if not rmin <= abs(x) <= rmax:
            continue
        if abs(x - 1.0) < one_margin:
            continue
        if any(abs(x - a) < sep for a in avoid):
            continue
        return x
    raise RuntimeError("sampler exhausted its draw budget (sampler bug)")


def _draw_z(rng, re_lo=0.3, re_hi=1.5, im_ratio=0.5) -> complex:
    re = rng.uniform(re_lo, re_hi)
    return complex(re, rng.uniform(-im_ratio, im_ratio) * re)


def _sample_until(rng, make, accept) -> Params:
    for _ in range(_MAX_DRAWS):
        params = make()
        if accept(params):
            return params
    raise RuntimeError("sampler exhausted its draw budget (sampler bug)")


def _cut_clear(a: complex, margin: float = 0.02) -> bool:
    a = complex(a)
    d = abs(a.imag) if a.real >= 1.0 else abs(a - 1.0)
    return d >= margin


# ----- the value table (all eight rows) -----

def _row_closed_fk(u, v, k):
    return lambda: cf.fk_at_1(u, v, k)


def _row_closed_u1(v, k, n):
    return lambda: cf.fk_u1_at_1_over_n(v, k, n)


TABLE1_ROWS = (
    {
        "k": 1, "n": 1, "u": 0.5, "v": -1.0,
        "label": "F_1(1/1; 1/2, -1)",
        "formula": "log(2) log(2/3) - Li2(1/3) + Li2(2/3)",
        "closed": _row_closed_fk(0.5, -1.0, 1),
        "literal": lambda: LOG2 * math.log(2.0 / 3.0) - li(2, 1.0 / 3.0) + li(2, 2.0 / 3.0),
        "tol": 1e-9,
    },
    {
        "k": 1, "n": 1, "u": 1.0 / 3.0, "v": -1.0,
        "label": "F_1(1/1; 1/3, -1)",
        "formula": "log(2) log(2/3) - Li2(1/2) + Li2(3/4)",
        "closed": _row_closed_fk(1.0 / 3.0, -1.0, 1),
        "literal": lambda: LOG2 * math.log(2.0 / 3.0) - li(2, 0.5) + li(2, 0.75),
        "tol": 1e-9,
    },
    {
        "k": 1, "n": 1, "u": 1.0, "v": 0.25,
        "label": "F_1(1/1; 1, 1/4)",
        "formula": "Li2(-1/3)",
        "closed": _row_closed_u1(0.25, 1, 1),
        "literal": lambda: li(2, -1.0 / 3.0),
        "tol": 1e-9,
    },
    {
        "k": 1, "n": 1, "u": -4.0, "v": -2.0,
        "label": "F_1(1/1; -4, -2)",
        "formula": "-log(5) log(6) - Li2(-5) - pi^2/12",
        "closed": _row_closed_fk(-4.0, -2.0, 1),
        "literal": lambda: -math.log(5.0) * math.log(6.0) - li(2, -5.0) - PI**2 / 12.0,
        "tol": 1e-9,
    },
    {
        "k": 2, "n": 2, "u": 1.0, "v": 1.0 / 9.0,
        "label": "F_2(1/2; 1, 1/9)",
        "formula": "-2 [Li3(-1/2) + Li3(1/4)]",
        "closed": _row_closed_u1(1.0 / 9.0, 2, 2),
        "literal": lambda: -2.0 * (li(3, -0.5) + li(3, 0.25)),
        "tol": 1e-9,
    },
    {
        "k": 2, "n": 1, "u": -2.0, "v": -3.0,
        "label": "F_2(1/1; -2, -3)",
        "formula": "-log^2(3) log(8) - i pi log^2(3) - 2 log(3) Li2(9) + 2 Li3(9) - 2 Li3(3)",
        "closed": _row_closed_fk(-2.0, -3.0, 2),
        "literal": lambda: (
            -math.log(3.0) ** 2 * math.log(8.0)
            - 1j * PI * math.log(3.0) ** 2
            - 2.0 * math.log(3.0) * li(2, 9.0, LIMIT_FROM_BELOW)
            + 2.0 * li(3, 9.0, LIMIT_FROM_BELOW)
            - 2.0 * li(3, 3.0, LIMIT_FROM_BELOW)
        ),
        "tol": 1e-8,
    },
    {
        "k": 1, "n": 2, "u": 1.0, "v": -1.0,
        "label": "F_1(1/2; 1, -1)",
        "formula": "Li2(i/(i-1)) + Li2(i/(i+1))",
        "closed": _row_closed_u1(-1.0, 1, 2),
        "literal": lambda: li(2, 1j / (1j - 1.0)) + li(2, 1j / (1j + 1.0)),
        "tol": 1e-9,
    },
    {
        "k": 2, "n": 1, "u": 1.0, "v": -1.0,
        "label": "F_2(1/1; 1, -1)",
        "formula": "-2 Li3(1/2)",
        "closed": _row_closed_u1(-1.0, 2, 1),
        "literal": lambda: -2.0 * li(3, 0.5),
        "tol": 1e-9,
    },
)


def table1_oracle(row, cfg: Optional[QuadConfig] = None) -> complex:
    """Quadrature value of the integral a table row evaluates in closed form."""
    return integrate_fk(1.0 / row["n"], row["u"], row["v"], row["k"], cfg).value


# ----- identity construction -----

_REGISTRY: dict[str, IdentitySpec] = {}


def _register(spec: IdentitySpec) -> None:
    if spec.name in _REGISTRY:
        raise ValueError(f"duplicate identity name {spec.name!r}")
    _REGISTRY[spec.name] = spec


def _j_sampler(rng, idx):
    return {"z": _draw_z(rng, 0.25, 3.0, 0.5)}


def _mult_f_arg_sampler(rng, idx):
    n = (2, 3, 5)[idx % 3]
    rmax_u = 0.55 if n == 5 else 0.8  # keeps n*arcsin|u| < pi: no log-branch winding
    return {
        "n": n,
        "z": _draw_z(rng, 0.25, 1.2, 0.5),
        "u": _draw_point(rng, rmax=rmax_u),
        "v": _draw_point(rng, rmax=0.8),
    }


def _mult_f_param_sampler(rng, idx):
    n = (2, 3, 5)[idx % 3]
    return {
        "n": n,
        "z": _draw_z(rng, 0.3, 1.5, 0.5),
        "u": _draw_point(rng, rmax=0.8),
        "v": _draw_point(rng, rmax=0.9),
    }


def _mult_f3_sampler(rng, idx):
    n = (2, 3)[idx % 2]
    return {
        "n": n,
        "z": _draw_z(rng, 0.3, 1.2, 0.5),
        "u": _draw_point(rng, rmax=0.8),
        "v": _draw_point(rng, rmax=0.8),
        "w": _draw_point(rng, rmax=0.8),
    }


def _mult_fk_sampler(rng, idx):
    k = (1, 2, 3)[idx % 3]
    n = (2, 3)[(idx // 3) % 2]
    return {
        "k": k,
        "n": n,
        "z": _draw_z(rng, 0.3, 1.5, 0.5),
        "u": _draw_point(rng, rmax=0.8),
        "v": _draw_point(rng, rmax=0.9),
    }


def _closed_f3_sampler(rng, idx):
    def make():
        u = _draw_point(rng)
        v = _draw_point(rng, avoid=(u,))
        w = _draw_point(rng, avoid=(u, v))
        return {"u": u, "v": v, "w": w}

    return _sample_until(rng, make, lambda p: cf.f3_formula_domain_ok(p["u"], p["v"], p["w"]))


def _closed_f3_sym_sampler(rng, idx):
    def make():
        u = _draw_point(rng)
        v = _draw_point(rng, avoid=(u,))
        w = _draw_point(rng, avoid=(u, v))
        return {"u": u, "v": v, "w": w}

    return _sample_until(
        rng,
        make,
        lambda p: cf.f3_formula_domain_ok(p["u"], p["v"], p["w"])
        and cf.f3_formula_domain_ok(p["w"], p["v"], p["u"]),
    )


def _closed_fk_sampler(rng, idx):
    k = (1, 2, 3)[idx % 3]

    def make():
        u = _draw_point(rng)
        v = _draw_point(rng, avoid=(u,))
        return {"k": k, "u": u, "v": v}

    return _sample_until(rng, make, lambda p: cf.fk_formula_domain_ok(p["u"], p["v"]))


def _closed_fk_1overn_sampler(rng, idx):
    k = (1, 2)[idx % 2]
    n = (2, 3)[(idx // 2) % 2]

    def make():
        u = _draw_point(rng)
        v = _draw_point(rng, avoid=(u,))
        return {"k": k, "n": n, "u": u, "v": v}

    def accept(p):
        r = principal_root(p["v"], p["n"])
        return all(
            p["u"] != beta * r and cf.fk_formula_domain_ok(p["u"], beta * r)
            for beta in roots_of_unity(p["n"])
        )

    return _sample_until(rng, make, accept)


def _closed_f_mn_sampler(rng, idx):
    m, n = ((1, 2), (2, 1), (1, 3), (2, 3))[idx % 4]
    return {
        "m": m,
        "n": n,
        "u": _draw_point(rng, rmax=0.8),
        "v": _draw_point(rng, rmax=0.8),
    }


def _closed_f3_pq_sampler(rng, idx):
    p, q = ((1, 2), (2, 1), (1, 3), (2, 3))[idx % 4]

    def make():
        u = _draw_point(rng, rmax=0.5, rmin=0.1)
        v = _draw_point(rng, rmax=0.5, rmin=0.1, avoid=(u,))
        w = _draw_point(rng, rmax=0.5, rmin=0.1, avoid=(u, v))
        return {"p": p, "q": q, "u": u, "v": v, "w": w}

    def accept(pp):
        up = principal_root(pp["u"], pp["p"])
        vq = principal_root(pp["v"], pp["q"])
        wp = principal_root(pp["w"], pp["p"])
        for alpha in roots_of_unity(pp["q"]):
            for beta in roots_of_unity(pp["p"]):
                for gamma in roots_of_unity(pp["p"]):
                    if not cf.f3_formula_domain_ok(beta * up, alpha * vq, gamma * wp):
                        return False
        return True

    return _sample_until(rng, make, accept)


def _lemma_sampler(rng, idx):
    def make():
        u = _draw_point(rng)
        v = _draw_point(rng, avoid=(u,))
        w = _draw_point(rng, avoid=(u, v))
        return {"u": u, "v": v, "w": w}

    return _sample_until(rng, make, lambda p: cf.lemma_formula_domain_ok(p["u"], p["v"], p["w"]))


def _series_f3_sampler(rng, idx):
    return {
        "z": _draw_z(rng, 0.3, 1.5, 0.5),
        "u": _draw_point(rng, rmax=0.7),
        "v": _draw_point(rng, rmax=0.7),
        "w": _draw_point(rng, rmax=0.7),
    }


def _series_fk_sampler(rng, idx):
    return {
        "k": (1, 2, 3)[idx % 3],
        "z": _draw_z(rng, 0.3, 1.5, 0.5),
        "u": _draw_point(rng, rmax=0.7),
        "v": _draw_point(rng, rmax=0.7),
    }


def _series_refine_sampler(rng, idx):
    re = -rng.uniform(0.2, 1.0)
    im = rng.uniform(0.3, 1.0) * (1 if rng.uniform() < 0.5 else -1)
    return {
        "z": complex(re, im),
        "u": _draw_point(rng, rmax=0.6),
        "v": _draw_point(rng, rmax=0.6),
        "w": _draw_point(rng, rmax=0.6),
    }


def _rogers_sampler(rng, idx):
    def make():
        return {"A": _draw_point(rng, rmax=0.55, rmin=0.02),
                "B": _draw_point(rng, rmax=0.55, rmin=0.02)}

    def accept(p):
        A, B = p["A"], p["B"]
        AB = A * B
        if abs(1.0 - AB) < 0.05:
            return False
        args = (A, B, AB, (A - AB) / (1 - AB), (B - AB) / (1 - AB))
        return all(_cut_clear(a) for a in args)

    return _sample_until(rng, make, accept)


def _abel_sampler(rng, idx):
    def make():
        return {"x": _draw_point(rng, rmax=0.55, rmin=0.02),
                "y": _draw_point(rng, rmax=0.55, rmin=0.02)}

    def accept(p):
        x, y = p["x"], p["y"]
        if abs(1 - x) < 0.05 or abs(1 - y) < 0.05:
            return False
        args = (x / (1 - y), y / (1 - x), x * y / ((1 - x) * (1 - y)), x, y)
        return all(_cut_clear(a) for a in args)

    return _sample_until(rng, make, accept)


def _li_deriv_sampler(rng, idx):
    s = (1, 2, 3, 4, 5, 6, 7)[idx % 7]

    def make():
        return {
            "s": s,
            "z": _draw_point(rng, rmax=2.5, rmin=0.2, one_margin=0.0),
            "h": math.exp(rng.uniform(math.log(3e-6), math.log(3e-5))),
        }

    return _sample_until(rng, make, lambda p: _cut_clear(p["z"], 0.05))


def _uu_sampler(rng, idx):
    return {"k": (1, 2, 3)[idx % 3], "u": _draw_point(rng, rmax=0.8)}


def _u1_fk_sampler(rng, idx):
    n = (1, 2, 3)[idx % 3]
    k = (1, 2, 3)[(idx // 3) % 3]
    return {"k": k, "n": n, "v": _draw_point(rng, rmax=0.8, rmin=0.3)}


def _u1_f3_sampler(rng, idx):
    return {"n": (1, 2, 3)[idx % 3], "v": _draw_point(rng, rmax=0.8, rmin=0.3)}


def _uvu_1overn_sampler(rng, idx):
    n = (1, 2, 3)[idx % 3]

    def make():
        u = _draw_point(rng)
        v = _draw_point(rng, rmax=0.8, rmin=0.3, avoid=(u,))
        return {"n": n, "u": u, "v": v}

    def accept(p):
        return all(
            p["u"] != alpha * p["v"] and cf.fk_formula_domain_ok(p["u"], alpha * p["v"])
            for alpha in roots_of_unity(p["n"])
        )

    return _sample_until(rng, make, accept)


def _quad_f_sampler(rng, idx):
    return {
        "z": _draw_z(rng, 0.3, 2.0, 0.5),
        "u": _draw_point(rng, rmax=0.8),
        "v": _draw_point(rng, rmax=0.8),
    }


def _table1_sampler(rng, idx):
    return {"row": idx % len(TABLE1_ROWS)}


def _euler_sampler(rng, idx):
    return {"x": rng.uniform(0.05, 0.95)}


def _monodromy_sampler(rng, idx):
    return {"x": rng.uniform(1.5, 20.0)}


def _pfrac_sampler(rng, idx):
    n = 1 + idx % 8

    def make():
        return {"n": n, "Y": _draw_point(rng, rmax=0.8, rmin=0.05, one_margin=0.0)}

    return _sample_until(rng, make, lambda p: abs(1.0 - p["Y"] ** p["n"]) > 0.05)


def _roots_product_sampler(rng, idx):
    return {"n": 1 + idx % 12, "x": _draw_point(rng, rmax=1.0, rmin=0.0, one_margin=0.0)}


def _build_registry() -> None:
    reg = _register

    reg(IdentitySpec(
        name="j-two-term-log2const",
        description="J(z) + J(1/z) = log^2(2)  (substitution-proof right-hand side)",
        lhs=lambda p: integrate_j(p["z"]).value + integrate_j(1.0 / p["z"]).value,
        rhs=lambda p: complex(LOG2**2),
        sampler=_j_sampler,
        default_tol=1e-10,
        backends=("quadrature", "closed_form"),
    ))
    reg(IdentitySpec(
        name="j-two-term-log2z",
        description="J(z) + J(1/z) = log^2(z)  (as printed; fails, documents the misprint)",
        lhs=lambda p: integrate_j(p["z"]).value + integrate_j(1.0 / p["z"]).value,
        rhs=lambda p: np.log(complex(p["z"])) ** 2,
        sampler=_j_sampler,
        default_tol=1e-8,
        backends=("quadrature", "closed_form"),
        informational=True,
    ))
    reg(IdentitySpec(
        name="j-reflection",
        description="J(-z) = J(z) + z pi^2 / 12",
        lhs=lambda p: integrate_j(-p["z"]).value,
        rhs=lambda p: cf.j_reflection(p["z"]),
        sampler=lambda rng, idx: {"z": _draw_z(rng, 0.25, 2.0, 0.5)},
        default_tol=1e-10,
        backends=("quadrature", "quadrature"),
    ))
    reg(IdentitySpec(
        name="mult-f-arg",
        description="F(nz; u^n, v) = sum over alpha^n=1 of F(z; u alpha, v)",
        lhs=lambda p: integrate_f(p["n"] * p["z"], p["u"] ** p["n"], p["v"]).value,
        rhs=lambda p: sum(
            integrate_f(p["z"], p["u"] * a, p["v"]).value for a in roots_of_unity(p["n"])
        ),
        sampler=_mult_f_arg_sampler,
        default_tol=1e-9,
        backends=("quadrature", "quadrature"),
    ))
    reg(IdentitySpec(
        name="mult-f-param",
        description="F(z/n; u, v^n) = sum over alpha^n=1 of F(z; u, v alpha)",
        lhs=lambda p: integrate_f(p["z"] / p["n"], p["u"], p["v"] ** p["n"]).value,
        rhs=lambda p: sum(
            integrate_f(p["z"], p["u"], p["v"] * a).value for a in roots_of_unity(p["n"])
        ),
        sampler=_mult_f_param_sampler,
        default_tol=1e-9,
        backends=("quadrature", "quadrature"),
    ))
    reg(IdentitySpec(
        name="mult-f3-arg",
        description="F(nz; u^n, v, w^n) = double root-of-unity sum of F(z; u a, v, w b)",
        lhs=lambda p: integrate_f3(
            p["n"] * p["z"], p["u"] ** p["n"], p["v"], p["w"] ** p["n"]
        ).value,
        rhs=lambda p: sum(
            integrate_f3(p["z"], p["u"] * a, p["v"], p["w"] * b).value
            for a in roots_of_unity(p["n"])
            for b in roots_of_unity(p["n"])
        ),
        sampler=_mult_f3_sampler,
        default_tol=1e-9,
        backends=("quadrature", "quadrature"),
    ))
    reg(IdentitySpec(
        name="mult-f3-param",
        description="F(z/n; u, v^n, w) = sum over alpha^n=1 of F(z; u, v alpha, w)",
        lhs=lambda p: integrate_f3(p["z"] / p["n"], p["u"], p["v"] ** p["n"], p["w"]).value,
        rhs=lambda p: sum(
            integrate_f3(p["z"], p["u"], p["v"] * a, p["w"]).value
            for a in roots_of_unity(p["n"])
        ),
        sampler=_mult_f3_sampler,
        default_tol=1e-9,
        backends=("quadrature", "quadrature"),
    ))
    reg(IdentitySpec(
        name="mult-fk-param",
        description="F_k(z/n; u, v^n) = sum over beta^n=1 of F_k(z; u, beta v)",
        lhs=lambda p: integrate_fk(p["z"] / p["n"], p["u"], p["v"] ** p["n"], p["k"]).value,
        rhs=lambda p: sum(
            integrate_fk(p["z"], p["u"], p["v"] * b, p["k"]).value
            for b in roots_of_unity(p["n"])
        ),
        sampler=_mult_fk_sampler,
        default_tol=1e-9,
        backends=("quadrature", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-f3-at-1",
        description="grand closed form of F(1;u,v,w) vs quadrature",
        lhs=lambda p: cf.f3_at_1(p["u"], p["v"], p["w"]),
        rhs=lambda p: integrate_f3(1.0, p["u"], p["v"], p["w"]).value,
        sampler=_closed_f3_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-f3-symmetry",
        description="u <-> w symmetry of the closed F(1;u,v,w)",
        lhs=lambda p: cf.f3_at_1(p["u"], p["v"], p["w"]),
        rhs=lambda p: cf.f3_at_1(p["w"], p["v"], p["u"]),
        sampler=_closed_f3_sym_sampler,
        default_tol=1e-10,
        backends=("closed_form", "closed_form"),
    ))
    reg(IdentitySpec(
        name="closed-fk-at-1",
        description="weighted-polylog closed form of F_k(1;u,v) vs quadrature",
        lhs=lambda p: cf.fk_at_1(p["u"], p["v"], p["k"]),
        rhs=lambda p: integrate_fk(1.0, p["u"], p["v"], p["k"]).value,
        sampler=_closed_fk_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-fk-uu",
        description="F_k(1;u,u) = -log^(k+1)(1-u)/(k+1) vs quadrature",
        lhs=lambda p: cf.fk_at_1_uu(p["u"], p["k"]),
        rhs=lambda p: integrate_fk(1.0, p["u"], p["u"], p["k"]).value,
        sampler=_uu_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-f3-uvu",
        description="closed form of F(1;u,v,u) vs quadrature of F_2(1;u,v)",
        lhs=lambda p: cf.f3_at_1_uvu(p["u"], p["v"]),
        rhs=lambda p: integrate_fk(1.0, p["u"], p["v"], 2).value,
        sampler=lambda rng, idx: _sample_until(
            rng,
            lambda: {"u": _draw_point(rng), "v": _draw_point(rng)},
            lambda p: p["u"] != p["v"] and cf.fk_formula_domain_ok(p["u"], p["v"]),
        ),
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-fk-1overn",
        description="root-of-unity evaluation of F_k(1/n;u,v) vs quadrature",
        lhs=lambda p: cf.fk_at_1_over_n(p["u"], p["v"], p["k"], p["n"]),
        rhs=lambda p: integrate_fk(1.0 / p["n"], p["u"], p["v"], p["k"]).value,
        sampler=_closed_fk_1overn_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-fk-u1",
        description="u -> 1 limit form of F_k(1/n;1,v) vs quadrature",
        lhs=lambda p: cf.fk_u1_at_1_over_n(p["v"], p["k"], p["n"]),
        rhs=lambda p: integrate_fk(1.0 / p["n"], 1.0, p["v"], p["k"]).value,
        sampler=_u1_fk_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-f3-u1",
        description="u -> 1 limit form of F(1/n;1,v^n,1) vs quadrature",
        lhs=lambda p: cf.f3_u1_at_1_over_n(p["v"], p["n"]),
        rhs=lambda p: integrate_f3(1.0 / p["n"], 1.0, p["v"] ** p["n"], 1.0).value,
        sampler=_u1_f3_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-f3-1overn-uvu",
        description="root-of-unity evaluation of F(1/n;u,v^n,u) vs quadrature",
        lhs=lambda p: cf.f3_at_1_over_n_uvu(p["u"], p["v"], p["n"]),
        rhs=lambda p: integrate_f3(1.0 / p["n"], p["u"], p["v"] ** p["n"], p["u"]).value,
        sampler=_uvu_1overn_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-f-m-over-n",
        description="double root-of-unity dilogarithm evaluation of F(m/n;u,v) vs quadrature",
        lhs=lambda p: cf.f_at_m_over_n(p["u"], p["v"], p["m"], p["n"]),
        rhs=lambda p: integrate_f(p["m"] / p["n"], p["u"], p["v"]).value,
        sampler=_closed_f_mn_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="closed-f3-p-over-q",
        description="triple root-of-unity evaluation of F(p/q;u,v,w) vs quadrature",
        lhs=lambda p: cf.f3_at_p_over_q(p["u"], p["v"], p["w"], p["p"], p["q"]),
        rhs=lambda p: integrate_f3(p["p"] / p["q"], p["u"], p["v"], p["w"]).value,
        sampler=_closed_f3_pq_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="lemma-I",
        description="closed form of the squared-log kernel integral vs direct quadrature",
        lhs=lambda p: cf.closed_logsq_integral(p["u"], p["v"], p["w"]),
        rhs=lambda p: integrate_logsq_kernel(p["u"], p["v"], p["w"]).value,
        sampler=_lemma_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="lemma-J-pair",
        description="closed form of the symmetrized dilogarithm kernel pair vs quadrature",
        lhs=lambda p: cf.closed_dilog_pair_integral(p["u"], p["v"], p["w"]),
        rhs=lambda p: integrate_dilog_kernel(p["u"], p["v"], p["w"]).value
        + integrate_dilog_kernel(p["w"], p["v"], p["u"]).value,
        sampler=_lemma_sampler,
        default_tol=1e-9,
        backends=("closed_form", "quadrature"),
    ))
    reg(IdentitySpec(
        name="series-vs-quad-f3",
        description="collapsed triple series for F(z;u,v,w) vs quadrature (Re z > 0)",
        lhs=lambda p: sr.series_f3(p["z"], p["u"], p["v"], p["w"]).value,
        rhs=lambda p: integrate_f3(p["z"], p["u"], p["v"], p["w"]).value,
        sampler=_series_f3_sampler,
        default_tol=1e-9,
        backends=("series", "quadrature"),
    ))
    reg(IdentitySpec(
        name="series-vs-quad-fk",
        description="collapsed double series for F_k(z;u,v) vs quadrature (Re z > 0)",
        lhs=lambda p: sr.series_fk(p["z"], p["u"], p["v"], p["k"]).value,
        rhs=lambda p: integrate_fk(p["z"], p["u"], p["v"], p["k"]).value,
        sampler=_series_fk_sampler,
        default_tol=1e-9,
        backends=("series", "quadrature"),
    ))
    reg(IdentitySpec(
        name="series-continuation-refine",
        description="series continuation at Re z < 0: stability under tolerance halving",
        lhs=lambda p: sr.series_f3(p["z"], p["u"], p["v"], p["w"]).value,
        rhs=lambda p: sr.series_f3(
            p["z"], p["u"], p["v"], p["w"], sr.SeriesConfig(tol=5e-13)
        ).value,
        sampler=_series_refine_sampler,
        default_tol=5e-12,
        backends=("series", "series"),
    ))
    reg(IdentitySpec(
        name="rogers",
        description="five-term dilogarithm relation, Rogers form",
        lhs=lambda p: complex(rogers_residual(p["A"], p["B"])),
        rhs=lambda p: 0j,
        sampler=_rogers_sampler,
        default_tol=1e-12,
        backends=("closed_form", "closed_form"),
    ))
    reg(IdentitySpec(
        name="abel",
        description="five-term dilogarithm relation, Abel form",
        lhs=lambda p: complex(abel_residual(p["x"], p["y"])),
        rhs=lambda p: 0j,
        sampler=_abel_sampler,
        default_tol=1e-12,
        backends=("closed_form", "closed_form"),
    ))
    reg(IdentitySpec(
        name="li-derivative",
        description="d/dz Li_{s+1}(z) = Li_s(z)/z against a centered finite difference",
        lhs=lambda p: complex(li_derivative_check(p["s"], p["z"], p["h"])),
        rhs=lambda p: 0j,
        sampler=_li_deriv_sampler,
        default_tol=1e-8,
        backends=("closed_form", "closed_form"),
    ))
    reg(IdentitySpec(
        name="li-euler-reflection",
        description="Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x) on (0,1)",
        lhs=lambda p: li(2, p["x"]) + li(2, 1.0 - p["x"]),
        rhs=lambda p: PI**2 / 6.0 - math.log(p["x"]) * math.log(1.0 - p["x"]),
        sampler=_euler_sampler,
        default_tol=1e-12,
        backends=("closed_form", "closed_form"),
    ))
    reg(IdentitySpec(
        name="li-cut-monodromy",
        description="Li2 jump across the cut equals 2 pi i log x",
        lhs=lambda p: li(2, p["x"], LIMIT_FROM_ABOVE) - li(2, p["x"], LIMIT_FROM_BELOW),
        rhs=lambda p: 2j * PI * math.log(p["x"]),
        sampler=_monodromy_sampler,
        default_tol=1e-11,
        backends=("closed_form", "closed_form"),
    ))
    reg(IdentitySpec(
        name="partial-fraction",
        description="sum of 1/(1 - beta Y) over n-th roots equals n/(1-Y^n)",
        lhs=lambda p: partial_fraction_sum(p["Y"], p["n"]),
        rhs=lambda p: p["n"] / (1.0 - p["Y"] ** p["n"]),
        sampler=_pfrac_sampler,
        default_tol=1e-11,
        backends=("closed_form", "closed_form"),
    ))
    reg(IdentitySpec(
        name="roots-product",
        description="product of (1 - alpha x) over n-th roots equals 1 - x^n",
        lhs=lambda p: math.prod(
            (1.0 - a * p["x"] for a in roots_of_unity(p["n"])), start=1 + 0j
        ),
        rhs=lambda p: 1.0 - p["x"] ** p["n"],
        sampler=_roots_product_sampler,
        default_tol=1e-12,
        backends=("closed_form", "closed_form"),
    ))
    reg(IdentitySpec(
        name="quad-substitution",
        description="F(z;u,v) on [0,1] vs its exponentially substituted form on [0,inf)",
        lhs=lambda p: integrate_f(p["z"], p["u"], p["v"]).value,
        rhs=lambda p: integrate_f_substituted(p["z"], p["u"], p["v"]).value,
        sampler=_quad_f_sampler,
        default_tol=1e-11,
        backends=("quadrature", "quadrature"),
    ))
    reg(IdentitySpec(
        name="quad-f3-symmetry",
        description="integrand symmetry F(z;u,v,w) = F(z;w,v,u) under quadrature",
        lhs=lambda p: integrate_f3(p["z"], p["u"], p["v"], p["w"]).value,
        rhs=lambda p: integrate_f3(p["z"], p["w"], p["v"], p["u"]).value,
        sampler=_series_f3_sampler,
        default_tol=1e-12,
        backends=("quadrature", "quadrature"),
    ))
    reg(IdentitySpec(
        name="table1",
        description="all eight tabulated special values: closed form vs quadrature",
        lhs=lambda p: complex(TABLE1_ROWS[p["row"]]["closed"]()),
        rhs=lambda p: table1_oracle(TABLE1_ROWS[p["row"]]),
        sampler=_table1_sampler,
        default_tol=1e-8,
        backends=("closed_form", "quadrature"),
    ))


_build_registry()


def list_identities() -> list[str]:
    """All registered identity names, sorted."""
    return sorted(_REGISTRY)


def get_identity(name: str) -> IdentitySpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownIdentityError(
            f"unknown identity {name!r}; see list_identities()"
        ) from None


def run_identity(name: str, n_samples: int = 50, seed: int = 0,
                 tol: Optional[float] = None) -> IdentityReport:
    """Fuzz one identity and report residual statistics.

    Deterministic: identical (name, n_samples, seed, tol) produce identical
    reports (wall time aside).  The residual of a sample is |lhs - rhs|.
    """
    spec = get_identity(name)
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    tol = spec.default_tol if tol is None else float(tol)
    rng = np.random.default_rng(seed)
    t0 = time.perf_counter()
    residuals = []
    failures: list[tuple[Params, float]] = []
    for i in range(n_samples):
        params = spec.sampler(rng, i)
        lhs = complex(spec.lhs(params))
        rhs = complex(spec.rhs(params))
        res = abs(lhs - rhs)
        residuals.append(res)
        if not res <= tol:
            failures.append((params, res))
    wall = time.perf_counter() - t0
    if spec.informational:
        status = "informational"
    else:
        status = "pass" if not failures else "fail"
    return IdentityReport(
        name=name,
        samples=n_samples,
        seed=seed,
        tol=tol,
        max_residual=max(residuals),
        mean_residual=math.fsum(residuals) / len(residuals),
        failures=failures,
        status=status,
        wall_time_s=wall,
    )
