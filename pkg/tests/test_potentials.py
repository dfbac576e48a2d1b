import math

import pytest
from hypothesis import given, settings, strategies as st

from scatter2d import potentials as pot
from scatter2d.errors import DomainError, PoleError
from scatter2d.specfun import GAMMA_EULER

GAMMA_S = pot.LOG_SCHEME_GAMMA


class TestEvaluate:
    def test_inverse_square(self):
        p = pot.InverseSquare(lam=2.0)
        assert pot.evaluate(p, 2.0) == pytest.approx(0.5, abs=1e-15)

    def test_disc_value(self):
        p = pot.RegularizedDelta(scheme=pot.ConstantStrength(v=math.pi), radius_a=1.0)
        assert pot.evaluate(p, 0.5) == pytest.approx(1.0, abs=1e-15)

    def test_outside_disc_is_zero(self):
        for scheme in (pot.ConstantStrength(v=math.pi), pot.LogRunning(a0=1.0)):
            p = pot.RegularizedDelta(scheme=scheme, radius_a=1.0)
            assert pot.evaluate(p, 2.0) == 0.0

    def test_requires_positive_radius(self):
        with pytest.raises(DomainError):
            pot.evaluate(pot.InverseSquare(lam=1.0), 0.0)


class TestLogRunning:
    def test_pole_radius(self):
        s = pot.LogRunning(a0=1.0)
        assert s.pole_radius == pytest.approx(math.exp(-GAMMA_S), rel=1e-15)
        with pytest.raises(PoleError):
            s.strength(s.pole_radius)

    def test_strength_below_pole_is_negative(self):
        s = pot.LogRunning(a0=1.0)
        assert s.strength(s.pole_radius / 10.0) < 0.0

    def test_strength_formula(self):
        s = pot.LogRunning(a0=0.3)
        a = 1e-3
        assert s.strength(a) == pytest.approx(
            2.0 * math.pi / (math.log(a / 0.3) + GAMMA_S), rel=1e-15)


class TestScaleTransform:
    def test_inverse_square_factor(self):
        spec, factor = pot.scale_transform(pot.InverseSquare(lam=1.0),
                                           pot.ScaleTransformation(rho=4.0))
        assert spec == pot.InverseSquare(lam=1.0)
        assert factor == pytest.approx(4.0)

    def test_constant_disc_dilates(self):
        p = pot.RegularizedDelta(scheme=pot.ConstantStrength(v=2.0), radius_a=1.0)
        spec, factor = pot.scale_transform(p, pot.ScaleTransformation(rho=4.0))
        assert spec.scheme == pot.ConstantStrength(v=2.0)
        assert spec.radius_a == pytest.approx(2.0)
        assert factor == pytest.approx(4.0)

    def test_identity(self):
        for p in (pot.InverseSquare(lam=0.7),
                  pot.RegularizedDelta(scheme=pot.LogRunning(a0=1.0), radius_a=1e-3)):
            spec, factor = pot.scale_transform(p, pot.ScaleTransformation(rho=1.0))
            assert spec == p
            assert factor == 1.0

    @given(st.floats(min_value=0.2, max_value=5.0),
           st.floats(min_value=0.05, max_value=3.0))
    @settings(max_examples=40)
    def test_pointwise_covariance_inverse_square(self, rho, r):
        p = pot.InverseSquare(lam=1.3)
        spec, factor = pot.scale_transform(p, pot.ScaleTransformation(rho=rho))
        lhs = pot.evaluate(p, r / math.sqrt(rho))
        assert lhs == pytest.approx(factor * pot.evaluate(spec, r), rel=1e-14)

    @given(st.floats(min_value=0.2, max_value=5.0),
           st.floats(min_value=0.05, max_value=3.0))
    @settings(max_examples=40)
    def test_pointwise_covariance_constant_disc(self, rho, r):
        p = pot.RegularizedDelta(scheme=pot.ConstantStrength(v=-1.7), radius_a=0.9)
        spec, factor = pot.scale_transform(p, pot.ScaleTransformation(rho=rho))
        if abs(r - spec.radius_a) < 1e-9:
            return  # discontinuity circle excluded
        lhs = pot.evaluate(p, r / math.sqrt(rho))
        assert lhs == pytest.approx(factor * pot.evaluate(spec, r), rel=1e-14, abs=1e-14)

    def test_log_running_pointwise_identity_fails_by_defect(self):
        s = pot.LogRunning(a0=1.0)
        a, rho = 1e-3, 4.0
        p = pot.RegularizedDelta(scheme=s, radius_a=a)
        spec, factor = pot.scale_transform(p, pot.ScaleTransformation(rho=rho))
        a_new = spec.radius_a
        defect = pot.scale_covariance_defect(s, a_new, rho)
        for r in (0.1 * a_new, 0.5 * a_new, 0.9 * a_new):
            residual = (pot.evaluate(p, r / math.sqrt(rho))
                        - factor * pot.evaluate(spec, r))
            ref = defect / (math.pi * a_new**2) * rho
            assert residual == pytest.approx(ref, rel=1e-10)


class TestCovarianceDefect:
    def test_constant_strength_is_exact(self):
        for a in (1e-4, 0.1, 2.0):
            for rho in (0.3, 1.0, 7.0):
                assert pot.scale_covariance_defect(
                    pot.ConstantStrength(v=5.0), a, rho) == 0.0

    def test_log_running_reference_point(self):
        # strengths at log-distance -1 and -2 from the pole differ by pi
        s = pot.LogRunning(a0=1.0)
        a = math.exp(-GAMMA_S - 1.0)
        assert pot.scale_covariance_defect(s, a, math.e**2) == pytest.approx(
            math.pi, rel=1e-12)

    def test_identity_rho(self):
        assert pot.scale_covariance_defect(pot.LogRunning(a0=2.0), 1e-3, 1.0) == 0.0

    @given(st.floats(min_value=1e-6, max_value=1e-2),
           st.floats(min_value=0.5, max_value=4.0))
    @settings(max_examples=40)
    def test_defect_matches_strength_difference(self, a, rho):
        s = pot.LogRunning(a0=1.0)
        assert pot.scale_covariance_defect(s, a, rho) == pytest.approx(
            s.strength(a / math.sqrt(rho)) - s.strength(a), rel=1e-12)

    def test_disc_integral_scaling(self):
        # integral of the disc potential over its support equals v(a);
        # invariant under a -> sqrt(rho) a only for the constant scheme
        rho = 4.0
        sc = pot.ConstantStrength(v=2.0)
        assert sc.strength(1e-3) == sc.strength(1e-3 * math.sqrt(rho))
        sl = pot.LogRunning(a0=1.0)
        assert sl.strength(1e-3) != sl.strength(1e-3 * math.sqrt(rho))


class TestSerialization:
    @pytest.mark.parametrize("p", [
        pot.InverseSquare(lam=0.25),
        pot.RegularizedDelta(scheme=pot.ConstantStrength(v=-2.0), radius_a=0.5),
        pot.RegularizedDelta(scheme=pot.LogRunning(a0=1.0), radius_a=1e-4),
    ])
    def test_roundtrip(self, p):
        assert pot.from_kv(pot.to_kv(p)) == p

    def test_gamma_constant_documented_value(self):
        # the running-coupling gamma is the Euler constant shifted by the
        # renormalization condition fixing the zero-radius limit
        assert GAMMA_S == pytest.approx(GAMMA_EULER - 0.25, abs=0.0)
