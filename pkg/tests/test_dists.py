"""Skew-normal and Vasicek distribution tests."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from bivnorm import (
    DiagBoundKind,
    DomainError,
    SkewNormal,
    Vasicek,
    diag_bound,
    norm_cdf,
    norm_pdf,
)

SKEW_CDF_07_15 = 0.5407098199050944  # P(X <= 0.7), lam = 1.5, density quadrature
VASICEK_Q999 = 0.176328939146198     # quantile(0.999) for p=0.02, rho=0.15


def _richardson_derivative(f, x: float, eps: float) -> float:
    def central(e):
        return (f(x + e) - f(x - e)) / (2 * e)

    return (4.0 * central(eps / 2) - central(eps)) / 3.0


class TestSkewNormal:
    def test_pdf_reduces_to_normal(self):
        x = np.linspace(-3, 3, 13)
        np.testing.assert_allclose(SkewNormal(0.0).pdf(x), norm_pdf(x), rtol=1e-15)

    def test_pdf_at_zero(self):
        for lam in (-2.0, 0.5, 3.0):
            assert SkewNormal(lam).pdf(0.0) == pytest.approx(norm_pdf(0.0), rel=1e-15)

    def test_pdf_composition(self):
        assert SkewNormal(2.0).pdf(1.0) == pytest.approx(
            2 * norm_pdf(1.0) * norm_cdf(2.0), rel=1e-15
        )

    def test_pdf_normalizes(self):
        for lam in (-2.0, 0.7, 1.5):
            total, _ = integrate.quad(SkewNormal(lam).pdf, -np.inf, np.inf, epsabs=1e-12)
            assert total == pytest.approx(1.0, abs=1e-10)

    def test_cdf_reduces_to_normal(self):
        sn = SkewNormal(0.0)
        for x in (-1.5, 0.0, 2.0):
            assert sn.cdf(x) == pytest.approx(norm_cdf(x), abs=1e-13)

    def test_quarter_at_origin_for_unit_skew(self):
        assert SkewNormal(1.0).cdf(0.0) == pytest.approx(0.25, abs=1e-13)
        assert SkewNormal(1.0).cdf_diagonal(0.0) == pytest.approx(0.25, abs=1e-13)

    def test_frozen_value(self):
        assert SkewNormal(1.5).cdf(0.7) == pytest.approx(SKEW_CDF_07_15, abs=1e-10)

    def test_two_representations_agree(self):
        for lam in (-2.0, -0.5, 0.5, 2.0):
            sn = SkewNormal(lam)
            for x in np.linspace(-3, 3, 13):
                assert sn.cdf(x) == pytest.approx(sn.cdf_diagonal(x), abs=1e-10)

    def test_cdf_matches_density_quadrature(self):
        for lam in (-1.5, 0.8):
            sn = SkewNormal(lam)
            for x in (-2.0, 0.3, 1.1):
                ref, _ = integrate.quad(sn.pdf, -np.inf, x, epsabs=1e-12)
                assert sn.cdf(x) == pytest.approx(ref, abs=1e-10)

    def test_monotone_and_limits(self):
        sn = SkewNormal(1.2)
        xs = np.linspace(-6, 6, 61)
        vals = [sn.cdf(x) for x in xs]
        assert np.all(np.diff(vals) >= -1e-14)
        assert sn.cdf(-np.inf) == 0.0
        assert sn.cdf(np.inf) == 1.0

    def test_diagonal_bounds_apply_left_of_zero(self):
        # for 0 < lam <= 1 the CDF at x <= 0 is a diagonal section with
        # rho = (1-lam^2)/(1+lam^2) >= 0, so the two-sided scaled bounds hold
        for lam in (0.25, 0.6, 1.0):
            rho = (1 - lam**2) / (1 + lam**2)
            sn = SkewNormal(lam)
            for x in np.linspace(-3.0, 0.0, 13):
                u = norm_cdf(x)
                value = sn.cdf_diagonal(x)
                lower = diag_bound(DiagBoundKind.LOWER_THM2, u, rho)
                upper = diag_bound(DiagBoundKind.UPPER_THM2, u, rho)
                assert lower - 1e-12 <= value <= upper + 1e-12

    def test_rejects_nan(self):
        with pytest.raises(DomainError):
            SkewNormal(np.nan)


class TestVasicek:
    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            Vasicek(0.0, 0.2)
        with pytest.raises(DomainError):
            Vasicek(0.2, 1.0)

    def test_quantile_cdf_roundtrip(self):
        dist = Vasicek(0.1, 0.2)
        for alpha in (0.01, 0.25, 0.5, 0.9, 0.999):
            assert dist.cdf(dist.quantile(alpha)) == pytest.approx(alpha, abs=1e-12)

    def test_median(self):
        dist = Vasicek(0.3, 0.4)
        assert dist.quantile(0.5) == pytest.approx(dist.median(), abs=1e-15)
        assert dist.median() == pytest.approx(
            norm_cdf(dist.probit_mean), abs=1e-15
        )

    def test_frozen_extreme_quantile(self):
        assert Vasicek(0.02, 0.15).quantile(0.999) == pytest.approx(
            VASICEK_Q999, abs=1e-13
        )

    def test_pdf_normalizes(self):
        # below rho = 1/2 the density vanishes at both endpoints
        for p, rho in [(0.05, 0.2), (0.3, 0.45), (0.5, 0.49)]:
            dist = Vasicek(p, rho)
            total, _ = integrate.quad(dist.pdf, 1e-14, 1 - 1e-14, epsabs=1e-11, limit=200)
            assert total == pytest.approx(1.0, abs=1e-8)

    def test_pdf_consistent_with_cdf_in_u_shape(self):
        # u-shaped densities park non-negligible mass astronomically close
        # to the endpoints, so normalization is checked against the CDF
        dist = Vasicek(0.3, 0.7)
        eps = 1e-6
        total, _ = integrate.quad(dist.pdf, eps, 1 - eps, epsabs=1e-11, limit=400)
        assert total == pytest.approx(dist.cdf(1 - eps) - dist.cdf(eps), abs=1e-8)

    def test_pdf_matches_cdf_derivative(self):
        dist = Vasicek(0.2, 0.3)
        eps = 1e-6
        for q in (0.05, 0.3, 0.7):
            fd = (dist.cdf(q + eps) - dist.cdf(q - eps)) / (2 * eps)
            assert dist.pdf(q) == pytest.approx(fd, rel=1e-8)

    def test_moments_against_quadrature(self):
        dist = Vasicek(0.1, 0.3)
        mean, _ = integrate.quad(lambda q: q * dist.pdf(q), 0, 1, epsabs=1e-11)
        second, _ = integrate.quad(lambda q: q * q * dist.pdf(q), 0, 1, epsabs=1e-11)
        assert mean == pytest.approx(dist.mean(), abs=1e-7)
        assert second == pytest.approx(dist.second_moment(), abs=1e-7)

    def test_center_moments_closed(self):
        dist = Vasicek(0.5, 0.5)
        assert dist.second_moment() == pytest.approx(1 / 3, abs=1e-13)
        assert dist.variance() == pytest.approx(1 / 12, abs=1e-13)

    def test_variance_vanishes_at_small_rho(self):
        assert Vasicek(0.3, 1e-9).variance() == pytest.approx(0.0, abs=1e-9)

    def test_probit_normality_by_change_of_variables(self):
        # E PhiInv(P) and V PhiInv(P) from quadrature against the closed forms
        dist = Vasicek(0.2, 0.4)
        from bivnorm import norm_quantile

        m, _ = integrate.quad(
            lambda q: norm_quantile(q) * dist.pdf(q), 1e-13, 1 - 1e-13, limit=200
        )
        s2, _ = integrate.quad(
            lambda q: norm_quantile(q) ** 2 * dist.pdf(q), 1e-13, 1 - 1e-13, limit=200
        )
        assert m == pytest.approx(dist.probit_mean, abs=1e-7)
        assert s2 - m * m == pytest.approx(dist.probit_variance, abs=1e-6)

    def test_mode_and_shape(self):
        assert Vasicek(0.5, 0.3).mode() == pytest.approx(0.5, abs=1e-15)
        assert Vasicek(0.2, 0.3).shape() == "unimodal"
        assert Vasicek(0.2, 0.5).shape() == "monotone"
        assert Vasicek(0.2, 0.7).shape() == "u_shaped"
        with pytest.raises(DomainError):
            Vasicek(0.2, 0.5).mode()

    def test_mode_is_stationary(self):
        # Richardson-extrapolated central difference: the density can be
        # spiky (third derivative ~ 1e9 for small p), so a plain central
        # difference at any single step cannot certify 1e-6.
        for p, rho in [(0.02, 0.15), (0.3, 0.3), (0.5, 0.49)]:
            dist = Vasicek(p, rho)
            m = dist.mode()
            deriv = _richardson_derivative(dist.pdf, m, 1e-5)
            assert abs(deriv) < 1e-6

    def test_pair_cov_independent_factors(self):
        a = Vasicek(0.1, 0.2)
        b = Vasicek(0.3, 0.4)
        assert a.pair_cov(b, 0.0) == pytest.approx(0.0, abs=1e-15)

    def test_pair_cov_closed_center(self):
        a = Vasicek(0.5, 0.5)
        assert a.pair_cov(a, 1.0) == pytest.approx(1 / 12, abs=1e-12)

    def test_pair_product_moment_confirmed_by_factor_mc(self):
        # E(P Pt) equals the joint hit probability of the factor model with
        # loadings sqrt(rho), sqrt(rhot) and factor correlation gamma
        from bivnorm import FactorModel, McConfig, mc_factor_model

        a = Vasicek(0.2, 0.36)
        b = Vasicek(0.4, 0.25)
        gamma = 0.7
        model = FactorModel(np.sqrt(a.rho), np.sqrt(b.rho), gamma, a.p, b.p)
        est = mc_factor_model(model, McConfig(n_paths=500_000, seed=17))
        assert abs(est.estimate - a.pair_product_moment(b, gamma)) <= 4 * est.std_error

    def test_roundtrip_tight_at_moderate_parameters(self):
        for p in (0.05, 0.3, 0.7):
            for rho in (0.1, 0.3, 0.6):
                dist = Vasicek(p, rho)
                for alpha in (0.001, 0.1, 0.5, 0.9, 0.999):
                    assert dist.cdf(dist.quantile(alpha)) == pytest.approx(
                        alpha, abs=1e-12
                    )

    @given(
        st.floats(min_value=0.02, max_value=0.98),
        st.floats(min_value=0.02, max_value=0.9),
        st.floats(min_value=0.01, max_value=0.99),
    )
    @settings(max_examples=150, deadline=None)
    def test_roundtrip_property(self, p, rho, alpha):
        # the quantile can saturate toward 1 in double precision for strong
        # (p, rho, alpha) combinations; interior quantiles round-trip tightly
        dist = Vasicek(p, rho)
        q = dist.quantile(alpha)
        if 1e-8 < q < 1 - 1e-8:
            assert abs(dist.cdf(q) - alpha) <= 1e-9
