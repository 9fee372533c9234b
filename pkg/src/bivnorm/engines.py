"""Bivariate standard normal density and CDF.

Four independent evaluation engines for Phi2(h, k; rho), selectable through
:class:`Phi2Method`:

owen
    Half-plane decomposition via Owen's T-function. Closed-form speed,
    vectorized; the reference route for scans.
plackett_from_independence
    Integrates the correlation derivative d(Phi2)/d(rho) = phi2 from 0
    up to rho, starting at the independence value Phi(h) Phi(k).
plackett_from_max
    Same derivative integrated downward from the comonotone value
    min(Phi(h), Phi(k)), with a substitution that removes the
    1/sqrt(1-r^2) endpoint singularity; the right tool for |rho| near 1.
tetrachoric
    Hermite power series in rho; rejected for |rho| > 0.6 where its
    convergence turns hopeless.
single_factor_quadrature
    Gauss-Hermite quadrature of the one-factor conditional-independence
    representation with loadings sqrt(|rho|).

``auto`` follows the classical split: correlation-path quadrature from
independence for |rho| <= 0.8, from the maximum copula beyond.
"""

from __future__ import annotations

import enum

import numpy as np
from scipy.special import roots_hermite

from .errors import ConvergenceError, DomainError, EngineRejected
from .gauss import norm_cdf, norm_pdf, _as_float_array, _maybe_scalar
from .owen import owen_t
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, quad1d

__all__ = [
    "Phi2Method",
    "QuadratureConfig",
    "DEFAULT_CONFIG",
    "validate_rho",
    "phi2_density",
    "phi2_cdf",
    "phi2_auto",
    "phi2_owen",
]

_TWO_PI = 2.0 * np.pi

# Beyond here the Hermite series needs too many terms to be trustworthy.
TETRACHORIC_RHO_MAX = 0.6

# Gauss-Hermite order of the single-factor engine, banded by |rho|: the
# probit factors steepen like 1/sqrt(1-|rho|), so high correlation needs a
# denser rule to stay below 1e-12.
_GH_BANDS = ((0.8, 96), (1.0, 768))
_GH_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


class Phi2Method(enum.Enum):
    """Selector for the Phi2 evaluation engines."""

    AUTO = "auto"
    OWEN = "owen"
    PLACKETT_FROM_INDEPENDENCE = "plackett_from_independence"
    PLACKETT_FROM_MAX = "plackett_from_max"
    TETRACHORIC = "tetrachoric"
    SINGLE_FACTOR_QUADRATURE = "single_factor_quadrature"


def validate_rho(rho: float, interior: bool = False) -> float:
    """Check rho in [-1, 1] (strictly inside when ``interior``)."""
    r = float(rho)
    if np.isnan(r) or abs(r) > 1.0:
        raise DomainError(f"correlation must lie in [-1, 1], got {rho!r}")
    if interior and abs(r) == 1.0:
        raise DomainError("correlation must lie strictly inside (-1, 1) here")
    return r


def phi2_density(x, y, rho):
    """Bivariate standard normal density phi2(x, y; rho), |rho| < 1."""
    r = validate_rho(rho, interior=True)
    x_arr, xs = _as_float_array(x)
    y_arr, ys = _as_float_array(y)
    omr2 = 1.0 - r * r
    q = (x_arr * x_arr - 2.0 * r * x_arr * y_arr + y_arr * y_arr) / (2.0 * omr2)
    return _maybe_scalar(np.exp(-q) / (_TWO_PI * np.sqrt(omr2)), xs and ys)


# ---------------------------------------------------------------------------
# owen engine (vectorized)
# ---------------------------------------------------------------------------


def phi2_owen(h, k, rho):
    """Phi2 via the T-function split, vectorized over finite h, k.

    Phi2 = (Phi(h) + Phi(k))/2 - T(h, a_h) - T(k, a_k) - delta with
    a_h = (k/h - rho)/sqrt(1-rho^2) (and symmetrically a_k), where delta
    is 1/2 when exactly one argument lies below its median. h = 0 or
    k = 0 sends the corresponding slope to +-inf, which the T-function
    absorbs as its one-sided limit; the sign follows the other argument.
    The convention for delta at exactly 1/2 matches the displayed case
    split, with "u >= 1/2" containing the boundary.
    """
    r = validate_rho(rho, interior=True)
    h_arr, hs = _as_float_array(h)
    k_arr, ks = _as_float_array(k)
    h_b, k_b = np.broadcast_arrays(h_arr, k_arr)
    shape = h_b.shape
    h_b = np.asarray(h_b, dtype=float).ravel()
    k_b = np.asarray(k_b, dtype=float).ravel()
    if not (np.all(np.isfinite(h_b)) and np.all(np.isfinite(k_b))):
        raise DomainError("phi2_owen requires finite arguments")

    u = norm_cdf(h_b)
    v = norm_cdf(k_b)
    denom = np.sqrt(1.0 - r * r)

    out = np.empty_like(h_b)
    center = (h_b == 0.0) & (k_b == 0.0)
    if np.any(center):
        out[center] = 0.25 + np.arcsin(r) / _TWO_PI

    rest = ~center
    if np.any(rest):
        hh, kk = h_b[rest], k_b[rest]
        uu, vv = u[rest], v[rest]
        with np.errstate(divide="ignore", invalid="ignore"):
            a_h = np.where(hh != 0.0, (kk / np.where(hh != 0.0, hh, 1.0) - r) / denom, 0.0)
            a_k = np.where(kk != 0.0, (hh / np.where(kk != 0.0, kk, 1.0) - r) / denom, 0.0)
        # T at an infinite slope degenerates to sign * (1 - Phi(0))/2 = sign/4.
        t_h = np.where(hh != 0.0, owen_t(hh, a_h), np.sign(kk) * 0.25)
        t_k = np.where(kk != 0.0, owen_t(kk, a_k), np.sign(hh) * 0.25)
        delta = 0.5 * ((hh < 0.0) != (kk < 0.0))
        out[rest] = 0.5 * (uu + vv) - t_h - t_k - delta

    out = np.clip(out, np.maximum(u + v - 1.0, 0.0), np.minimum(u, v))
    return _maybe_scalar(out.reshape(shape), hs and ks)


# ---------------------------------------------------------------------------
# correlation-path (Plackett) engines
# ---------------------------------------------------------------------------


def _plackett_from_independence(h: float, k: float, rho: float, cfg: QuadratureConfig) -> float:
    base = norm_cdf(h) * norm_cdf(k)
    return base + quad1d(lambda rr: phi2_density(h, k, rr), 0.0, rho, cfg)


def _plackett_from_max(h: float, k: float, rho: float, cfg: QuadratureConfig) -> float:
    # Substituting r = 1 - (1-rho) s^2 cancels the sqrt(1-r^2) blowup at
    # r = 1 against the Jacobian; what remains is smooth on [0, 1]:
    #   integrand(s) = sqrt(1-rho)/pi * exp(E) / sqrt(2 - omr),
    #   E = -((h-k)^2 + 2 h k omr) / (2 omr (2 - omr)),  omr = (1-rho) s^2.
    one_m_rho = 1.0 - rho
    diff2 = (h - k) ** 2
    hk2 = 2.0 * h * k
    coef = np.sqrt(one_m_rho) / np.pi

    def integrand(s: float) -> float:
        omr = one_m_rho * s * s
        if omr == 0.0:
            return 0.0 if diff2 != 0.0 else coef * np.exp(-0.25 * hk2) / np.sqrt(2.0)
        with np.errstate(divide="ignore", over="ignore"):
            expo = -(diff2 + hk2 * omr) / (2.0 * omr * (2.0 - omr))
            return coef * float(np.exp(expo)) / np.sqrt(2.0 - omr)

    return min(norm_cdf(h), norm_cdf(k)) - quad1d(integrand, 0.0, 1.0, cfg)


# ---------------------------------------------------------------------------
# tetrachoric series engine
# ---------------------------------------------------------------------------


def _tetrachoric(h: float, k: float, rho: float, cfg: QuadratureConfig) -> float:
    if abs(rho) > TETRACHORIC_RHO_MAX:
        raise EngineRejected(
            f"tetrachoric series is limited to |rho| <= {TETRACHORIC_RHO_MAX}, got {rho}"
        )
    scale = norm_pdf(h) * norm_pdf(k)
    # Running Hermite recurrence; c_m = rho^(m+1) / (m+1)!.
    he_h_prev, he_h = 0.0, 1.0
    he_k_prev, he_k = 0.0, 1.0
    c = rho
    total = 0.0
    last_terms = [np.inf, np.inf]
    for m in range(cfg.series_max_terms):
        term = he_h * he_k * c
        total += term
        last_terms[m % 2] = abs(term)
        he_h_prev, he_h = he_h, h * he_h - m * he_h_prev
        he_k_prev, he_k = he_k, k * he_k - m * he_k_prev
        c *= rho / (m + 2)
    # Odd/even Hermite zeros make single terms vanish spuriously; the tail
    # estimate takes the larger of the last two.
    tail = max(last_terms)
    if not np.isfinite(tail) or tail * scale > cfg.abs_tol:
        raise ConvergenceError(
            f"tetrachoric series not converged after {cfg.series_max_terms} terms",
            estimate=tail * scale,
        )
    return norm_cdf(h) * norm_cdf(k) + scale * total


# ---------------------------------------------------------------------------
# single-factor Gauss-Hermite engine
# ---------------------------------------------------------------------------


def _gh_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GH_CACHE:
        x, w = roots_hermite(order)
        _GH_CACHE[order] = (np.sqrt(2.0) * x, w / np.sqrt(np.pi))
    return _GH_CACHE[order]


def _single_factor(h: float, k: float, rho: float, cfg: QuadratureConfig) -> float:
    # One common factor with loadings of size sqrt(|rho|); the sign of rho
    # goes onto one loading so that alpha * beta = rho.
    alpha = np.copysign(np.sqrt(abs(rho)), rho)
    beta = np.sqrt(abs(rho))
    s = np.sqrt(1.0 - abs(rho))
    order = next(n for cap, n in _GH_BANDS if abs(rho) <= cap)
    z, w = _gh_rule(order)
    vals = norm_cdf((h - alpha * z) / s) * norm_cdf((k - beta * z) / s)
    return float(np.dot(w, vals))


# ---------------------------------------------------------------------------
# public CDF with dispatch
# ---------------------------------------------------------------------------

_ENGINES = {
    Phi2Method.OWEN: lambda h, k, r, cfg: phi2_owen(h, k, r),
    Phi2Method.PLACKETT_FROM_INDEPENDENCE: _plackett_from_independence,
    Phi2Method.PLACKETT_FROM_MAX: _plackett_from_max,
    Phi2Method.TETRACHORIC: _tetrachoric,
    Phi2Method.SINGLE_FACTOR_QUADRATURE: _single_factor,
}


def phi2_cdf(
    h: float,
    k: float,
    rho: float,
    method: Phi2Method = Phi2Method.AUTO,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Phi2(h, k; rho) = P(X <= h, Y <= k) for standard normal (X, Y).

    Accepts +-inf arguments (short-circuited to univariate values) and the
    boundary correlations (short-circuited to the exact limit formulas
    max(Phi(h)+Phi(k)-1, 0), Phi(h) Phi(k), min(Phi(h), Phi(k))). The result
    always satisfies those Frechet bounds.
    """
    r = validate_rho(rho)
    h = float(h)
    k = float(k)
    if np.isnan(h) or np.isnan(k):
        raise DomainError("phi2_cdf arguments must not be NaN")
    if not isinstance(method, Phi2Method):
        method = Phi2Method(method)

    if h == np.inf:
        return float(norm_cdf(k))
    if k == np.inf:
        return float(norm_cdf(h))
    if h == -np.inf or k == -np.inf:
        return 0.0
    if r == 0.0:
        return float(norm_cdf(h) * norm_cdf(k))
    if r == 1.0:
        return float(min(norm_cdf(h), norm_cdf(k)))
    if r == -1.0:
        return float(max(norm_cdf(h) + norm_cdf(k) - 1.0, 0.0))

    if method is Phi2Method.AUTO:
        method = (
            Phi2Method.PLACKETT_FROM_INDEPENDENCE
            if abs(r) <= 0.8
            else Phi2Method.PLACKETT_FROM_MAX
        )
    value = _ENGINES[method](h, k, r, cfg)
    lower = max(norm_cdf(h) + norm_cdf(k) - 1.0, 0.0)
    upper = min(norm_cdf(h), norm_cdf(k))
    return float(min(max(value, lower), upper))


def phi2_auto(
    h: float,
    k: float,
    rho: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Phi2 with the default engine split (see module docstring)."""
    return phi2_cdf(h, k, rho, Phi2Method.AUTO, cfg)
