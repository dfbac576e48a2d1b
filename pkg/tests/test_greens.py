import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from scatter2d import greens, specfun as sf
from scatter2d.errors import DomainError
from scatter2d.partialwave import (
    PhaseShift,
    ScatteringConfig,
    effective_order,
    inverse_square_phase_shift,
    phase_shift_finite_a,
)
from scatter2d.potentials import ConstantStrength, InverseSquare, LogRunning, RegularizedDelta


def cfg(k=1.0, m=1.0):
    return ScatteringConfig(mass_m=m, wavenumber_k=k)


class TestGreenFunction:
    def test_composition(self):
        g = greens.green_function(1.0, 1.0)
        assert g == pytest.approx(0.25j * (sf.bessel_j(0.0, 1.0)
                                           + 1j * sf.bessel_y(0.0, 1.0)), abs=1e-14)

    def test_singularity_rejected(self):
        with pytest.raises(DomainError):
            greens.green_function(1.0, 0.0)

    def test_helmholtz_residual(self):
        # radial part of (lap + k^2) G away from the source, by central
        # differences: G'' + G'/r + k^2 G = 0
        k, r, h = 1.0, 2.0, 1e-4
        g = lambda x: greens.green_function(k, x)
        lap = ((g(r + h) - 2 * g(r) + g(r - h)) / h**2
               + (g(r + h) - g(r - h)) / (2 * h * r))
        assert abs(lap + k * k * g(r)) < 1e-6

    def test_source_strength(self):
        # flux of grad G through a small circle -> -1 (unit point source)
        k, eps, h = 1.0, 1e-3, 1e-7
        dgdr = (greens.green_function(k, eps + h)
                - greens.green_function(k, eps - h)) / (2 * h)
        flux = 2 * math.pi * eps * dgdr
        assert abs(flux - (-1.0)) < 1e-3


class TestPlaneWaveExpansion:
    def test_origin(self):
        assert greens.expand_plane_wave(1.0, 0.0, 0.3, 5) == pytest.approx(1.0, abs=1e-14)

    def test_forward_direction(self):
        got = greens.expand_plane_wave(1.0, 2.0, 0.0, 40)
        assert abs(got - cmath.exp(2j)) < 1e-12

    @given(st.floats(min_value=0.0, max_value=2 * math.pi))
    @settings(max_examples=30)
    def test_matches_exponential_any_angle(self, theta):
        got = greens.expand_plane_wave(1.0, 2.0, theta, 40)
        assert abs(got - cmath.exp(2j * math.cos(theta))) < 1e-12

    def test_truncation_error_decreases(self):
        ref = cmath.exp(5j * math.cos(1.1))
        errs = [abs(greens.expand_plane_wave(1.0, 5.0, 1.1, L) - ref)
                for L in (8, 18, 28)]
        assert errs[0] > errs[1] > errs[2]


class TestWeberSchafheitlin:
    def test_equal_orders(self):
        assert greens.weber_schafheitlin(1.0, 1.0, 1.0) == pytest.approx(0.5, abs=1e-12)
        assert greens.weber_schafheitlin(2.5, 2.5, 1.0) == pytest.approx(
            1.0 / 5.0, abs=1e-10)

    @staticmethod
    def quadrature_oracle(alpha, beta, gamma_exp, X=4000.0):
        # adaptive quadrature to X plus the analytic tail of the
        # large-x form of J_alpha J_beta x^(-gamma)
        from scipy.integrate import quad
        from scipy.special import jv

        f = lambda x: jv(alpha, x) * jv(beta, x) * x**(-gamma_exp)
        head, _ = quad(lambda u: 2.0 * u * f(u * u), 0.0, 1.0,
                       epsabs=1e-12, epsrel=0.0, limit=500)
        mid, _ = quad(f, 1.0, X, epsabs=1e-12, epsrel=0.0, limit=20000)
        d = (beta - alpha) * math.pi / 2.0
        s = (alpha + beta + 1.0) * math.pi / 2.0
        g = gamma_exp
        tail = (math.cos(d) / (math.pi * g * X**g)
                - math.sin(2.0 * X - s) / (2.0 * math.pi * X**(g + 1.0))
                + (beta**2 - alpha**2) * math.sin(d) / (2.0 * math.pi * (g + 1.0)
                                                        * X**(g + 1.0)))
        return head + mid + tail

    def test_quadrature_oracle_is_sound(self):
        # the oracle itself checked against the independent reduction
        # 2 sin((beta-alpha) pi/2) / (pi (beta^2 - alpha^2)) at gamma = 1
        for alpha, beta in ((0.0, 1.5), (1.0, 2.0)):
            ref = 2.0 * math.sin((beta - alpha) * math.pi / 2.0) / (
                math.pi * (beta**2 - alpha**2))
            assert self.quadrature_oracle(alpha, beta, 1.0) == pytest.approx(
                ref, abs=1e-9)

    def test_against_adaptive_quadrature(self):
        cases = [(0.0, 1.5, 1.0), (1.0, 2.0, 1.0), (0.5, 2.5, 1.5), (2.0, 3.3, 2.0)]
        for alpha, beta, gamma_exp in cases:
            ref = self.quadrature_oracle(alpha, beta, gamma_exp)
            got = greens.weber_schafheitlin(alpha, beta, gamma_exp)
            assert got == pytest.approx(ref, abs=1e-8)

    def test_divergent_inputs_rejected(self):
        with pytest.raises(DomainError):
            greens.weber_schafheitlin(0.0, 0.0, 1.0)  # alpha+beta-gamma+1 = 0
        with pytest.raises(DomainError):
            greens.weber_schafheitlin(1.0, 1.0, -0.5)

    def test_reflection_route_reproduces_reference_shift(self):
        # closed integral for ell=1, coupling nu^2 - ell^2 = 3:
        # sin(delta) from the Gamma ratio matches Eq-of-motion value -1
        ell, two_m_lam = 1, 3.0
        nu = effective_order(ell, 1.0, two_m_lam / 2.0)
        integral = greens.weber_schafheitlin(float(ell), nu, 1.0)
        sin_delta = -two_m_lam * math.pi / 2.0 * integral / math.pi * 2.0 / 2.0
        # the tabulated value collapses to 2 sin((nu-ell)pi/2)/(pi (nu^2-ell^2))
        ref = 2.0 * math.sin((nu - ell) * math.pi / 2.0) / (math.pi * (nu**2 - ell**2))
        assert integral == pytest.approx(ref, abs=1e-12)
        delta = 0.5 * math.pi * (ell - nu)
        assert -0.5 * math.pi * two_m_lam * integral == pytest.approx(
            math.sin(delta), abs=1e-12)


class TestIntegralPhaseShift:
    def test_free_is_zero(self):
        assert greens.integral_phase_shift(0, cfg(), InverseSquare(lam=0.0)) == 0.0

    @pytest.mark.parametrize("ell", [0, 1, 2])
    @pytest.mark.parametrize("two_m_lam", [0.5, 3.0])
    def test_inverse_square_matches_closed_form(self, ell, two_m_lam):
        c = cfg(k=1.3)
        p = InverseSquare(lam=two_m_lam / 2.0)
        got = greens.integral_phase_shift(ell, c, p)
        ref = math.sin(inverse_square_phase_shift(ell, c.mass_m, p.lam).delta)
        assert got == pytest.approx(ref, abs=1e-6)

    @pytest.mark.parametrize("scheme", [ConstantStrength(v=2.0), LogRunning(a0=1.0)])
    def test_disc_matches_matching_route(self, scheme):
        c = cfg(k=1.0)
        p = RegularizedDelta(scheme=scheme, radius_a=0.5 if isinstance(
            scheme, ConstantStrength) else 1e-3)
        got = greens.integral_phase_shift(0, c, p)
        ref = math.sin(phase_shift_finite_a(0, c, p).delta_principal)
        assert got == pytest.approx(ref, abs=1e-8)

    def test_k_independence_for_inverse_square(self):
        p = InverseSquare(lam=0.25)
        vals = [greens.integral_phase_shift(0, cfg(k=k), p) for k in (0.5, 1.0, 5.0)]
        assert max(vals) - min(vals) < 1e-8


class TestAmplitude:
    def test_all_zero_shifts(self):
        shifts = [PhaseShift.from_tan(ell, 0.0) for ell in range(5)]
        f, dsigma = greens.scattering_amplitude(shifts, 2.0, 0.7)
        assert f == 0.0
        assert dsigma == 0.0

    def test_pure_s_wave_resonance(self):
        shifts = [PhaseShift.from_tan(0, math.inf)]
        k = 2.0
        f, dsigma = greens.scattering_amplitude(shifts, k, 0.3)
        assert f == pytest.approx(-2.0 / math.sqrt(2 * math.pi * k), abs=1e-14)
        assert dsigma == pytest.approx(2.0 / (math.pi * k), abs=1e-14)

    def test_unitarity(self):
        amp = greens.build_amplitude(
            [PhaseShift.from_tan(ell, 0.3 * ell - 0.7) for ell in range(6)], 1.0)
        for s in amp.s_elements.values():
            assert abs(s) == pytest.approx(1.0, abs=1e-15)

    def test_missing_channel_rejected(self):
        with pytest.raises(DomainError):
            greens.build_amplitude([PhaseShift.from_tan(2, 0.1)], 1.0)

    def test_k_scaled_cross_section_invariance(self):
        # S-elements of the 1/r^2 potential carry no k, so k |f|^2 is a
        # pure function of theta
        m, lam = 1.0, 0.4
        shifts = [inverse_square_phase_shift(ell, m, lam) for ell in range(9)]
        for theta in (0.2, 1.0, 2.5):
            vals = []
            for k in (1.0, 9.0):
                _, dsigma = greens.scattering_amplitude(shifts, k, theta)
                vals.append(k * dsigma)
            assert vals[0] == pytest.approx(vals[1], rel=1e-12)

    def test_asymptotic_assembly_matches_partial_wave_sum(self):
        # the amplitude built from radial source integrals must agree
        # with the S-matrix sum (same truncation L=8)
        c = cfg(k=1.0)
        p = InverseSquare(lam=0.25)
        shifts = [inverse_square_phase_shift(ell, c.mass_m, p.lam) for ell in range(9)]
        integrals = {ell: greens.radial_source_integral(ell, c, p) for ell in range(9)}
        for theta in (0.0, 0.9, 2.2, math.pi):
            ref, _ = greens.scattering_amplitude(shifts, c.wavenumber_k, theta)
            got = greens.amplitude_from_source_integrals(
                integrals, shifts, c.wavenumber_k, theta)
            assert abs(got - ref) < 1e-6
