import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hzn.domains import (
    EvalParams,
    membership,
    partial_fraction_sum,
    principal_root,
    roots_of_unity,
)
from hzn.errors import DomainError, PoleError

finite_complex = st.builds(
    complex,
    st.floats(-3, 3, allow_nan=False, allow_infinity=False),
    st.floats(-3, 3, allow_nan=False, allow_infinity=False),
)


class TestMembership:
    def test_examples(self):
        assert membership(0.5, "D")
        assert not membership(1.0, "Dprime")
        assert membership(-4.0, "L")
        assert membership(-2.0, "Lprime")

    def test_boundary_and_zero(self):
        assert membership(1.0, "D")
        assert not membership(0.0, "D")
        assert membership(cmath.exp(0.3j), "D")
        assert membership(1.0, "L")
        assert not membership(1.0, "Lprime")
        assert not membership(1.5, "L")
        assert membership(1.5 + 1e-12j, "L")

    def test_unknown_set(self):
        with pytest.raises(DomainError):
            membership(0.5, "E")

    def test_non_finite(self):
        with pytest.raises(DomainError):
            membership(complex(math.inf, 0), "D")

    @given(finite_complex)
    def test_consistency(self, x):
        if x == 0:
            return
        if membership(x, "Dprime"):
            assert membership(x, "D")
        if membership(x, "Lprime"):
            assert membership(x, "L")
        if membership(x, "D") and not (x.imag == 0 and x.real > 1):
            assert membership(x, "L")


class TestPrincipalRoot:
    def test_examples(self):
        assert abs(principal_root(-1.0, 2) - 1j) < 1e-15
        for n in (1, 2, 5, 9):
            assert principal_root(1.0, n) == 1.0
        assert abs(principal_root(1.0 / 9.0, 2) - 1.0 / 3.0) < 1e-15

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            principal_root(0.0, 3)

    @given(finite_complex, st.integers(1, 8))
    @settings(max_examples=200)
    def test_power_recovers(self, x, n):
        if abs(x) < 1e-6:
            return
        r = principal_root(x, n)
        assert abs(r**n - x) <= 1e-13 * abs(x) + 1e-15


class TestRootsOfUnity:
    def test_small_cases(self):
        assert roots_of_unity(1).roots == (1 + 0j,)
        r2 = roots_of_unity(2).roots
        assert r2[0] == 1 and abs(r2[1] + 1) < 1e-15
        r4 = roots_of_unity(4).roots
        for got, want in zip(r4, (1, 1j, -1, -1j)):
            assert abs(got - want) < 1e-15

    def test_unit_modulus(self):
        for n in range(1, 25):
            for r in roots_of_unity(n):
                assert abs(abs(r) - 1.0) <= 1e-14

    def test_product_identity(self):
        rng = np.random.default_rng(5)
        for n in range(1, 13):
            for _ in range(20):
                x = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                if abs(x) > 1:
                    continue
                prod = 1 + 0j
                for a in roots_of_unity(n):
                    prod *= 1 - a * x
                assert abs(prod - (1 - x**n)) <= 1e-12

    def test_invalid_n(self):
        with pytest.raises(DomainError):
            roots_of_unity(0)


class TestPartialFractionSum:
    def test_y_zero(self):
        for n in (1, 3, 7):
            assert abs(partial_fraction_sum(0.0, n) - n) < 1e-14

    def test_half(self):
        assert abs(partial_fraction_sum(0.5, 2) - 8.0 / 3.0) < 1e-14

    def test_derived_five_terms(self):
        y = 0.3 + 0.4j
        explicit = sum(1.0 / (1.0 - b * y) for b in roots_of_unity(5))
        closed = 5.0 / (1.0 - y**5)
        assert abs(partial_fraction_sum(y, 5) - explicit) < 1e-14
        assert abs(explicit - closed) <= 1e-12 * abs(closed)

    def test_pole(self):
        with pytest.raises(PoleError):
            partial_fraction_sum(1.0, 4)
        with pytest.raises(PoleError):
            partial_fraction_sum(-1.0, 2)

    @given(finite_complex, st.integers(1, 10))
    @settings(max_examples=150)
    def test_matches_closed_form(self, y, n):
        if abs(1 - y**n) < 1e-2:
            return
        got = partial_fraction_sum(y, n)
        want = n / (1 - y**n)
        assert abs(got - want) <= 1e-12 * (1 + abs(want))


class TestEvalParams:
    def test_flags_computed(self):
        p = EvalParams.for_values(z=1.0, u=0.5, v=-2.0, w=0.3, k=2)
        f = p.region_flags
        assert f.u_in_D and f.u_in_Dprime and f.u_in_L
        assert f.v_in_Lprime and not f.v_in_D
        assert f.w_in_D and f.w_in_L

    def test_rejects_bad_order(self):
        with pytest.raises(DomainError):
            EvalParams.for_values(1.0, 0.5, 0.5, k=0)

    def test_rejects_nonfinite(self):
        with pytest.raises(DomainError):
            EvalParams.for_values(complex(math.nan, 0), 0.5, 0.5)
