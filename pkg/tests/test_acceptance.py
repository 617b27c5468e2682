"""Acceptance suite: every criterion runs at its stated tolerance and prints
one pass/fail line.  Tolerances are pinned here, not configurable."""

import math

import numpy as np

from hzn.closedform import fk_u1_at_1_over_n
from hzn.identity import TABLE1_ROWS, run_identity, table1_oracle
from hzn.polylog import PI, alt_mzv_31, li
from hzn.quadrature import integrate_j
from hzn.series import SeriesConfig, series_f3, series_fk
from hzn.quadrature import integrate_f3, integrate_fk

LOG2 = math.log(2.0)
ZETA3 = 1.20205690315959428539973816151


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{criterion}: {detail}"


class TestAcceptance:
    def test_01_table_reproduction(self):
        worst = 0.0
        ok = True
        for row in TABLE1_ROWS:
            residual = abs(complex(row["closed"]()) - table1_oracle(row))
            worst = max(worst, residual)
            ok &= residual <= row["tol"]
        _report("1. value-table reproduction, all 8 rows", ok, f"worst residual {worst:.2e}")

    def test_02_minus_two_li3_half(self):
        closed = fk_u1_at_1_over_n(-1.0, 2, 1)
        explicit = -2.0 * (7.0 / 8.0 * ZETA3 - PI**2 * LOG2 / 12.0 + LOG2**3 / 6.0)
        residual = abs(closed - explicit)
        _report("2. F_2(1;1,-1) = -2 Li3(1/2) cross-check", residual <= 1e-12,
                f"residual {residual:.2e}")

    def test_03_li4_half_via_alternating_mzv(self):
        zeta31 = alt_mzv_31(10**5)
        borwein = PI**4 / 360.0 - LOG2**4 / 24.0 + PI**2 * LOG2**2 / 24.0 - zeta31 / 2.0
        residual = abs(complex(borwein) - li(4, 0.5))
        _report("3. Li4(1/2) via the alternating double sum", residual <= 1e-10,
                f"residual {residual:.2e}")

    def test_04_j_two_term(self):
        rng = np.random.default_rng(1404)
        worst = 0.0
        for _ in range(50):
            re = rng.uniform(0.2, 5.0)
            z = complex(re, rng.uniform(-0.5, 0.5) * re)
            total = integrate_j(z).value + integrate_j(1.0 / z).value
            worst = max(worst, abs(total - LOG2**2))
        ok = worst <= 1e-10
        # the as-printed log^2(z) right-hand side fails at z = 1
        misprint = abs(2.0 * integrate_j(1.0).value - 0.0)
        ok &= misprint >= 0.1
        _report("4. two-term relation: log^2(2) holds, log^2(z) refuted", ok,
                f"worst {worst:.2e}; misprint residual at z=1 is {misprint:.3f}")

    def test_05_j_reflection(self):
        rng = np.random.default_rng(1405)
        worst = 0.0
        for _ in range(20):
            re = rng.uniform(0.25, 2.0)
            z = complex(re, rng.uniform(-0.5, 0.5) * re)
            lhs = integrate_j(-z).value
            rhs = integrate_j(z).value + z * PI**2 / 12.0
            worst = max(worst, abs(lhs - rhs))
        _report("5. reflection J(-z) = J(z) + z pi^2/12", worst <= 1e-10,
                f"worst {worst:.2e}")

    def test_06_multiplication_formulas(self):
        worst = 0.0
        ok = True
        for name, samples in (
            ("mult-f-arg", 60),    # cycles n in {2,3,5}: 20 draws each
            ("mult-f-param", 60),
            ("mult-f3-arg", 40),   # cycles n in {2,3}: 20 draws each
            ("mult-f3-param", 40),
            ("mult-fk-param", 120),  # cycles k in {1,2,3} x n in {2,3}: 20 each
        ):
            rep = run_identity(name, n_samples=samples, seed=1406, tol=1e-9)
            worst = max(worst, rep.max_residual)
            ok &= rep.status == "pass"
        _report("6. multiplication formulas at n in {2,3,5}", ok, f"worst {worst:.2e}")

    def test_07_grand_formula(self):
        rep = run_identity("closed-f3-at-1", n_samples=100, seed=1407, tol=1e-9)
        sym = run_identity("closed-f3-symmetry", n_samples=100, seed=1407, tol=1e-10)
        ok = rep.status == "pass" and sym.status == "pass"
        _report("7. grand closed form of F(1;u,v,w): oracle + u<->w symmetry", ok,
                f"worst {max(rep.max_residual, sym.max_residual):.2e}")

    def test_08_auxiliary_integrals(self):
        rep_i = run_identity("lemma-I", n_samples=50, seed=1408, tol=1e-9)
        rep_j = run_identity("lemma-J-pair", n_samples=50, seed=1408, tol=1e-9)
        ok = rep_i.status == "pass" and rep_j.status == "pass"
        _report("8. auxiliary integral closed forms vs their defining integrals", ok,
                f"worst {max(rep_i.max_residual, rep_j.max_residual):.2e}")

    def test_09_series_continuations(self):
        rng = np.random.default_rng(1409)
        ok = True
        worst = 0.0

        def pt(rmax):
            while True:
                x = complex(rng.uniform(-rmax, rmax), rng.uniform(-rmax, rmax))
                if 0.05 <= abs(x) <= rmax:
                    return x

        for _ in range(25):
            z = complex(rng.uniform(0.3, 1.5), rng.uniform(-0.6, 0.6))
            u, v, w = pt(0.7), pt(0.7), pt(0.7)
            s = series_f3(z, u, v, w)
            q = integrate_f3(z, u, v, w)
            delta = abs(s.value - q.value)
            ok &= delta <= s.abs_err + q.abs_err + 1e-12
            worst = max(worst, delta)
        for _ in range(25):
            z = complex(rng.uniform(0.3, 1.5), rng.uniform(-0.6, 0.6))
            u, v = pt(0.7), pt(0.7)
            k = int(rng.integers(1, 4))
            s = series_fk(z, u, v, k)
            q = integrate_fk(z, u, v, k)
            delta = abs(s.value - q.value)
            ok &= delta <= s.abs_err + q.abs_err + 1e-12
            worst = max(worst, delta)
        for _ in range(10):
            z = complex(-rng.uniform(0.2, 1.0), rng.uniform(0.3, 1.0))
            u, v, w = pt(0.6), pt(0.6), pt(0.6)
            s1 = series_f3(z, u, v, w)
            s2 = series_f3(z, u, v, w, SeriesConfig(tol=5e-13))
            ok &= abs(s1.value - s2.value) <= s1.abs_err + s2.abs_err
        _report("9. series continuations agree with quadrature and refine stably", ok,
                f"worst Re z > 0 delta {worst:.2e}")

    def test_10_rational_arguments(self):
        worst = 0.0
        ok = True
        for name, samples in (
            ("closed-f-m-over-n", 40),     # cycles the four (m,n) pairs
            ("closed-f3-p-over-q", 16),
            ("closed-fk-1overn", 24),
            ("closed-f3-1overn-uvu", 18),
        ):
            rep = run_identity(name, n_samples=samples, seed=1410, tol=1e-9)
            worst = max(worst, rep.max_residual)
            ok &= rep.status == "pass"
        _report("10. rational-argument evaluations vs oracle", ok, f"worst {worst:.2e}")

    def test_11_polylog_property_suite(self):
        rog = run_identity("rogers", n_samples=100, seed=1411, tol=1e-12)
        abel = run_identity("abel", n_samples=100, seed=1411, tol=1e-12)
        deriv = run_identity("li-derivative", n_samples=50, seed=1411, tol=1e-8)
        mono = run_identity("li-cut-monodromy", n_samples=30, seed=1411, tol=1e-11)
        ok = all(r.status == "pass" for r in (rog, abel, deriv, mono))
        _report("11. dilogarithm relations, derivative, and cut monodromy", ok,
                f"worst {max(rog.max_residual, abel.max_residual, deriv.max_residual, mono.max_residual):.2e}")

    def test_12_determinism(self, tmp_path):
        from hzn.cli import main

        out_a = tmp_path / "a.json"
        out_b = tmp_path / "b.json"
        argv = ["verify", "--identity", "all", "--samples", "50", "--seed", "42",
                "--format", "json"]
        rc_a = main(argv + ["--out", str(out_a)])
        rc_b = main(argv + ["--out", str(out_b)])
        identical = out_a.read_bytes() == out_b.read_bytes()
        _report("12. verify --identity all is byte-identical across runs",
                rc_a == 0 and rc_b == 0 and identical,
                f"exit codes {rc_a}/{rc_b}, identical={identical}")
