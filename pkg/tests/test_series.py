import math

import numpy as np
import pytest

from hzn.errors import ConvergenceError, DomainError, NearPoleError, ResourceLimitError
from hzn.quadrature import integrate_f3, integrate_fk
from hzn.series import LogPowerCoeffs, SeriesConfig, logpower_coeffs, series_f3, series_fk


def stirling_first_unsigned(n_max):
    """|s(n,k)| by the standard recurrence, exact integers."""
    s = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    s[0][0] = 1
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            s[n][k] = (n - 1) * s[n - 1][k] + s[n - 1][k - 1]
    return s


class TestLogPowerCoeffs:
    def test_k1_harmonic(self):
        c = logpower_coeffs(1, 12).coeffs
        for m in range(1, 13):
            assert c[m] == pytest.approx(1.0 / m, rel=1e-15)

    def test_k2_hand_values(self):
        c = logpower_coeffs(2, 6).coeffs
        assert c[2] == pytest.approx(1.0)
        assert c[3] == pytest.approx(1.0)  # 1/1*1/2 + 1/2*1/1

    def test_stirling_identity(self):
        s = stirling_first_unsigned(12)
        for k in range(1, 7):
            c = logpower_coeffs(k, 12).coeffs
            for m in range(k, 13):
                want = math.factorial(k) * s[m][k] / math.factorial(m)
                assert c[m] == pytest.approx(want, rel=1e-13)

    def test_validation(self):
        with pytest.raises(DomainError):
            logpower_coeffs(0, 10)
        with pytest.raises(DomainError):
            logpower_coeffs(2, 1)
        with pytest.raises(ResourceLimitError):
            logpower_coeffs(2, 200_000)

    def test_returns_type(self):
        out = logpower_coeffs(3, 20)
        assert isinstance(out, LogPowerCoeffs) and out.k == 3


def brute_force_fk(z, u, v, k, cap=16):
    """Nested k-fold sum over all indices <= cap, plus the l sum."""
    total = 0j
    sign = (-1.0) ** k

    def rec(depth, msum, coeff):
        nonlocal total
        if depth == k:
            inner = 0j
            vp = 1.0 + 0j
            for l in range(1, 400):
                vp *= v
                inner += vp / (z * msum + l)
            total += sign * coeff * u**msum * inner
            return
        for m in range(1, cap + 1):
            rec(depth + 1, msum + m, coeff / m)

    rec(0, 0, 1.0)
    return total


class TestSeriesFk:
    def test_brute_force_equivalence(self):
        # |u| small enough that indices beyond the cap contribute < 1e-15
        z, u, v = 1.3 + 0.2j, 0.08, -0.3
        for k in (1, 2, 3):
            got = series_fk(z, u, v, k).value
            want = brute_force_fk(z, u, v, k)
            assert abs(got - want) <= 1e-12

    def test_against_quadrature(self):
        cases = [
            (1.0, 0.5, -0.9, 1),
            (1.0, 0.5, 0.5, 2),
            (0.7 + 0.5j, 0.6, -0.55 + 0.2j, 3),
            (2.3, -0.7, 0.3 + 0.4j, 1),
        ]
        for z, u, v, k in cases:
            s = series_fk(z, u, v, k)
            q = integrate_fk(z, u, v, k)
            assert abs(s.value - q.value) <= 1e-10
            assert not s.accuracy_warning

    def test_uu_closed_value(self):
        s = series_fk(1.0, 0.5, 0.5, 2)
        assert abs(s.value - (-(math.log(0.5) ** 3) / 3.0)) <= 1e-10

    def test_u_zero(self):
        assert series_fk(1.0, 0.0, 0.5, 3).value == 0

    def test_modulus_validation(self):
        with pytest.raises(ConvergenceError):
            series_fk(1.0, 1.0, 0.5, 1)
        with pytest.raises(ConvergenceError):
            series_fk(1.0, 0.5, -1.2, 1)

    def test_near_pole_rejection(self):
        # z = -2/3: the denominator z*M + l vanishes at (M, l) = (3, 2)
        with pytest.raises(NearPoleError):
            series_fk(-2.0 / 3.0, 0.5, 0.5, 1)

    def test_tail_bound_soundness(self):
        cfg_small = SeriesConfig(tol=1e-15, max_index=60)
        cfg_large = SeriesConfig(tol=1e-15, max_index=240)
        s1 = series_fk(1.0, 0.9, 0.6, 2, cfg_small)
        s2 = series_fk(1.0, 0.9, 0.6, 2, cfg_large)
        assert s1.accuracy_warning  # 60 coefficients cannot reach 1e-15
        assert abs(s1.value - s2.value) <= s1.abs_err


class TestSeriesF3:
    def test_against_quadrature(self):
        cases = [
            (1.0, 0.4, 0.2, -0.5),
            (0.9 + 0.2j, 0.3 + 0.3j, -0.25, 0.6),
            (2.0, 0.65, 0.6, 0.6),
        ]
        for z, u, v, w in cases:
            s = series_f3(z, u, v, w)
            q = integrate_f3(z, u, v, w)
            assert abs(s.value - q.value) <= 1e-10

    def test_triple_brute_force(self):
        z, u, v, w = 1.3 + 0.2j, 0.35, -0.3, 0.25j
        total = 0j
        for m in range(1, 60):
            for n in range(1, 60):
                base = u**m * w**n / (m * n)
                if abs(base) < 1e-19:
                    continue
                vp = 1.0 + 0j
                for l in range(1, 200):
                    vp *= v
                    total += base * vp / (z * (m + n) + l)
        assert abs(series_f3(z, u, v, w).value - total) <= 1e-12

    def test_u_zero(self):
        assert series_f3(1.0, 0.0, 0.3, 0.3).value == 0

    def test_continuation_left_half_plane(self):
        z = -0.5 + 0.5j
        s1 = series_f3(z, 0.3, 0.3, 0.3)
        s2 = series_f3(z, 0.3, 0.3, 0.3, SeriesConfig(tol=5e-13))
        assert abs(s1.value - s2.value) <= s1.abs_err + s2.abs_err
        assert not s1.accuracy_warning

    def test_region_agreement_seeded(self):
        rng = np.random.default_rng(33)
        for _ in range(25):
            z = complex(rng.uniform(0.3, 1.5), rng.uniform(-0.5, 0.5))

            def pt():
                while True:
                    x = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
                    if 0.05 <= abs(x) <= 0.7:
                        return x

            u, v, w = pt(), pt(), pt()
            s = series_f3(z, u, v, w)
            q = integrate_f3(z, u, v, w)
            assert abs(s.value - q.value) <= s.abs_err + q.abs_err + 1e-12
