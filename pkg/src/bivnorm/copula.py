"""The bivariate normal copula layer.

C(u, v; rho) = Phi2(PhiInv(u), PhiInv(v); rho) together with its density,
conditionals, symmetry group, the diagonal slope function g, and the
reduction identities that relate general points, the half-line v = 1/2 and
the diagonal u = v to each other.

Boundary policy: arguments at 0 or 1 and correlations at -1, 0, 1 are
resolved to their exact closed forms before any quantile transform, so the
numerical engines only ever see interior parameters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .engines import (
    DEFAULT_CONFIG,
    Phi2Method,
    QuadratureConfig,
    phi2_cdf,
    validate_rho,
)
from .gauss import norm_cdf, norm_quantile, _as_float_array, _maybe_scalar
from .owen import owen_t
from .quadrature import quad1d

__all__ = [
    "SymmetryKind",
    "SymmetryImage",
    "HalflineReduction",
    "copula_cdf",
    "copula_density",
    "cond_cdf_given_u",
    "cond_cdf_given_v",
    "apply_symmetry",
    "diag_g",
    "diag_cdf",
    "halfline_cdf",
    "reduce_to_halflines",
    "line_from_diag",
    "diag_g_transform",
    "copula_factor_integral",
    "copula_single_factor",
    "copula_cond_integral",
]

_TWO_PI = 2.0 * np.pi


def _validate_unit(x, name: str):
    arr, scalar = _as_float_array(x)
    if np.any(np.isnan(arr)) or np.any((arr < 0.0) | (arr > 1.0)):
        raise DomainError(f"{name} must lie in [0, 1], got {x!r}")
    return arr, scalar


def copula_cdf(
    u: float,
    v: float,
    rho: float,
    method: Phi2Method = Phi2Method.AUTO,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """C(u, v; rho), exact on the boundary of the unit square and at
    rho in {-1, 0, 1}, numeric via the selected engine elsewhere."""
    uu, _ = _validate_unit(u, "u")
    vv, _ = _validate_unit(v, "v")
    u, v = float(uu), float(vv)
    r = validate_rho(rho)
    if u == 0.0 or v == 0.0:
        return 0.0
    if u == 1.0:
        return v
    if v == 1.0:
        return u
    if r == -1.0:
        return max(u + v - 1.0, 0.0)
    if r == 0.0:
        return u * v
    if r == 1.0:
        return min(u, v)
    return phi2_cdf(norm_quantile(u), norm_quantile(v), r, method, cfg)


def copula_density(u, v, rho):
    """Copula density c(u, v; rho) for interior u, v and |rho| < 1.

    Evaluated in the cancellation-free exponential form
    exp((2 rho x y - rho^2 (x^2 + y^2)) / (2 (1-rho^2))) / sqrt(1-rho^2)
    with x, y the normal quantiles of u, v.
    """
    r = validate_rho(rho, interior=True)
    u_arr, us = _validate_unit(u, "u")
    v_arr, vs = _validate_unit(v, "v")
    if np.any(u_arr <= 0.0) or np.any(u_arr >= 1.0) or np.any(v_arr <= 0.0) or np.any(v_arr >= 1.0):
        raise DomainError("copula_density requires interior u, v")
    x = norm_quantile(u_arr)
    y = norm_quantile(v_arr)
    omr2 = 1.0 - r * r
    expo = (2.0 * r * x * y - r * r * (x * x + y * y)) / (2.0 * omr2)
    return _maybe_scalar(np.exp(expo) / np.sqrt(omr2), us and vs)


def cond_cdf_given_u(u, v, rho):
    """P(V <= v | U = u) = Phi((PhiInv(v) - rho PhiInv(u)) / sqrt(1-rho^2)),
    the partial derivative of C with respect to u."""
    r = validate_rho(rho, interior=True)
    u_arr, us = _validate_unit(u, "u")
    v_arr, vs = _validate_unit(v, "v")
    if np.any(u_arr <= 0.0) or np.any(u_arr >= 1.0):
        raise DomainError("the conditioning argument must be interior")
    x = norm_quantile(u_arr)
    y = norm_quantile(v_arr)
    out = norm_cdf((y - r * x) / np.sqrt(1.0 - r * r))
    return _maybe_scalar(out, us and vs)


def cond_cdf_given_v(u, v, rho):
    """P(U <= u | V = v); mirror image of :func:`cond_cdf_given_u`."""
    return cond_cdf_given_u(v, u, rho)


class SymmetryKind(enum.Enum):
    """The four exchangeability / reflection identities of the copula."""

    SWAP = "swap"
    REFLECT_V = "reflect_v"
    REFLECT_U = "reflect_u"
    REFLECT_UV = "reflect_uv"


@dataclass(frozen=True)
class SymmetryImage:
    """Transformed evaluation: C(u, v; rho) = offset + sign * C(u', v'; rho')."""

    u: float
    v: float
    rho: float
    offset: float
    sign: int

    def value(
        self,
        method: Phi2Method = Phi2Method.AUTO,
        cfg: QuadratureConfig = DEFAULT_CONFIG,
    ) -> float:
        return self.offset + self.sign * copula_cdf(self.u, self.v, self.rho, method, cfg)


def apply_symmetry(kind: SymmetryKind, u: float, v: float, rho: float) -> SymmetryImage:
    """Rewrite C(u, v; rho) through one of its exact symmetries.

    swap:        C(v, u; rho)
    reflect_v:   u - C(u, 1-v; -rho)
    reflect_u:   v - C(1-u, v; -rho)
    reflect_uv:  u + v - 1 + C(1-u, 1-v; rho)   (radial symmetry)
    """
    _validate_unit(u, "u")
    _validate_unit(v, "v")
    r = validate_rho(rho)
    if not isinstance(kind, SymmetryKind):
        kind = SymmetryKind(kind)
    if kind is SymmetryKind.SWAP:
        return SymmetryImage(v, u, r, 0.0, +1)
    if kind is SymmetryKind.REFLECT_V:
        return SymmetryImage(u, 1.0 - v, -r, u, -1)
    if kind is SymmetryKind.REFLECT_U:
        return SymmetryImage(1.0 - u, v, -r, v, -1)
    return SymmetryImage(1.0 - u, 1.0 - v, r, u + v - 1.0, +1)


# ---------------------------------------------------------------------------
# diagonal machinery
# ---------------------------------------------------------------------------


def _lam(rho: float) -> float:
    # sqrt((1-rho)/(1+rho)); +inf at rho = -1, 0 at rho = 1.
    with np.errstate(divide="ignore"):
        return float(np.sqrt((1.0 - rho) / (1.0 + rho))) if rho != -1.0 else np.inf


def diag_g(u, rho):
    """g(u; rho) = Phi(sqrt((1-rho)/(1+rho)) PhiInv(u)).

    The conditional probability P(V <= u | U = u), and half the derivative
    of the diagonal section u -> C(u, u; rho). Satisfies g(1/2) = 1/2,
    g(1-u) = 1 - g(u), and g(g(u; rho); -rho) = u. The endpoint limits are
    0 and 1 (no tail dependence). |rho| = 1 with interior u is rejected.
    """
    r = validate_rho(rho)
    u_arr, scalar = _validate_unit(u, "u")
    interior = (u_arr > 0.0) & (u_arr < 1.0)
    if abs(r) == 1.0 and np.any(interior):
        raise DomainError("diag_g is not defined at |rho| = 1 for interior u")
    lam = _lam(r)
    out = np.empty_like(u_arr)
    out[~interior] = u_arr[~interior]
    if np.any(interior):
        out[interior] = norm_cdf(lam * norm_quantile(u_arr[interior]))
    return _maybe_scalar(out, scalar)


def diag_cdf(
    u,
    rho,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Diagonal section C(u, u; rho) = u - 2 T(PhiInv(u), sqrt((1-rho)/(1+rho))).

    Closed form through the T-function (``cfg`` is accepted for interface
    symmetry with the quadrature-backed operations but is not consumed).
    Vectorized over u; exact at u in {0, 1} and rho in {-1, 1}.
    """
    r = validate_rho(rho)
    u_arr, scalar = _validate_unit(u, "u")
    out = u_arr.copy()
    interior = (u_arr > 0.0) & (u_arr < 1.0)
    if np.any(interior):
        ui = u_arr[interior]
        out[interior] = ui - 2.0 * owen_t(norm_quantile(ui), _lam(r))
    return _maybe_scalar(np.clip(out, 0.0, 1.0), scalar)


def halfline_cdf(u, rho) -> float:
    """Half-line section C(u, 1/2; rho) = u/2 - T(PhiInv(u), -rho/sqrt(1-rho^2)).

    Vectorized over u; the slope degenerates to -+inf at rho = +-1, which the
    T-function absorbs as its one-sided limit.
    """
    r = validate_rho(rho)
    u_arr, scalar = _validate_unit(u, "u")
    out = np.zeros_like(u_arr)
    out[u_arr == 1.0] = 0.5
    interior = (u_arr > 0.0) & (u_arr < 1.0)
    if np.any(interior):
        slope = -r / np.sqrt(1.0 - r * r) if abs(r) != 1.0 else -r * np.inf
        ui = u_arr[interior]
        out[interior] = 0.5 * ui - owen_t(norm_quantile(ui), slope)
    return _maybe_scalar(np.clip(out, 0.0, 1.0), scalar)


@dataclass(frozen=True)
class HalflineReduction:
    """C(u, v; rho) rewritten as C(u, 1/2; rho_u) + C(v, 1/2; rho_v) - delta."""

    u: float
    rho_u: float
    v: float
    rho_v: float
    delta: float

    def value(self) -> float:
        return (
            halfline_cdf(self.u, self.rho_u)
            + halfline_cdf(self.v, self.rho_v)
            - self.delta
        )


def reduce_to_halflines(u: float, v: float, rho: float) -> HalflineReduction:
    """Split a general evaluation into two half-line evaluations.

    The transformed correlations are rho_u = -a_u / sqrt(1 + a_u^2) with
    a_u = (PhiInv(v)/PhiInv(u) - rho)/sqrt(1-rho^2) (and symmetrically for
    rho_v); delta is 1/2 when exactly one argument is below 1/2. Arguments
    at exactly 1/2 make the slope ratio undefined and are rejected; callers
    fall back to the direct formula there.
    """
    r = validate_rho(rho, interior=True)
    for name, val in (("u", u), ("v", v)):
        if not 0.0 < val < 1.0:
            raise DomainError(f"{name} must be interior, got {val!r}")
        if val == 0.5:
            raise DomainError(f"the half-line split is singular at {name} = 1/2")
    h = norm_quantile(u)
    k = norm_quantile(v)
    denom = np.sqrt(1.0 - r * r)
    a_u = (k / h - r) / denom
    a_v = (h / k - r) / denom
    rho_u = -a_u / np.hypot(1.0, a_u)
    rho_v = -a_v / np.hypot(1.0, a_v)
    delta = 0.5 if (u < 0.5) != (v < 0.5) else 0.0
    return HalflineReduction(u, float(rho_u), v, float(rho_v), delta)


def line_from_diag(u: float, rho: float) -> float:
    """C(u, 1/2; rho) recovered from the diagonal section at 1 - 2 rho^2:
    half of it for rho < 0, its reflection u - half for rho > 0."""
    r = validate_rho(rho)
    _validate_unit(u, "u")
    if r == 0.0:
        return 0.5 * float(u)
    half_diag = 0.5 * diag_cdf(u, 1.0 - 2.0 * r * r)
    return half_diag if r < 0.0 else float(u) - half_diag


def diag_g_transform(u: float, rho: float) -> float:
    """C(u, u; rho) via the substitution identity
    2 u g(u; rho) - C(g(u; rho), g(u; rho); -rho)."""
    r = validate_rho(rho, interior=True)
    if not 0.0 < u < 1.0:
        raise DomainError(f"u must be interior, got {u!r}")
    g = diag_g(u, r)
    return 2.0 * u * g - diag_cdf(g, -r)


# ---------------------------------------------------------------------------
# factor-form integral representations
# ---------------------------------------------------------------------------

_FACTOR_ORDERS = ((0.8, (80, 112)), (1.0, (384, 512)))


def _factor_orders(*loadings: float) -> tuple[int, int]:
    worst = max(abs(x) for x in loadings)
    return next(pair for cap, pair in _FACTOR_ORDERS if worst <= cap)


def _gh_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    from .engines import _gh_rule

    return _gh_rule(order)


def _factor_integral_fixed(
    h: float, k: float, alpha: float, beta: float, gamma: float, order: int
) -> float:
    # E[ Phi((h - alpha Y)/sa) Phi((k - beta Yt)/sb) ] with corr(Y, Yt) = gamma,
    # written as a tensor integral over independent (Y, W).
    z, w = _gh_nodes(order)
    sa = np.sqrt(1.0 - alpha * alpha)
    sb = np.sqrt(1.0 - beta * beta)
    sg = np.sqrt(1.0 - gamma * gamma)
    fy = norm_cdf((h - alpha * z) / sa)
    inner = norm_cdf((k - beta * (gamma * z[:, None] + sg * z[None, :])) / sb) @ w
    return float(np.dot(w, fy * inner))


def copula_factor_integral(
    u: float,
    v: float,
    alpha: float,
    beta: float,
    gamma: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Two-factor integral representation of C(u, v; alpha beta gamma).

    Numerically integrates the double integral of the conditional default
    probabilities against a correlated factor pair; equals the direct copula
    value at rho = alpha * beta * gamma. The result of two Gauss-Hermite
    resolutions must agree within the configured tolerance, otherwise a
    convergence failure is raised.
    """
    for name, val in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not -1.0 < val < 1.0:
            raise DomainError(f"{name} must lie in (-1, 1), got {val!r}")
    _validate_unit(u, "u")
    _validate_unit(v, "v")
    if u in (0.0, 1.0) or v in (0.0, 1.0):
        return copula_cdf(u, v, alpha * beta * gamma)
    h = norm_quantile(u)
    k = norm_quantile(v)
    lo, hi = _factor_orders(alpha, beta, gamma)
    coarse = _factor_integral_fixed(h, k, alpha, beta, gamma, lo)
    fine = _factor_integral_fixed(h, k, alpha, beta, gamma, hi)
    _check_two_level(coarse, fine, cfg, "factor integral")
    return float(np.clip(fine, 0.0, 1.0))


def copula_single_factor(
    u: float,
    v: float,
    alpha: float,
    beta: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """One-factor limit of the factor integral: C(u, v; alpha beta) as
    E[ Phi((PhiInv(u) - alpha Z)/sa) Phi((PhiInv(v) - beta Z)/sb) ]."""
    for name, val in (("alpha", alpha), ("beta", beta)):
        if not -1.0 < val < 1.0:
            raise DomainError(f"{name} must lie in (-1, 1), got {val!r}")
    _validate_unit(u, "u")
    _validate_unit(v, "v")
    if u in (0.0, 1.0) or v in (0.0, 1.0):
        return copula_cdf(u, v, alpha * beta)
    h = norm_quantile(u)
    k = norm_quantile(v)
    sa = np.sqrt(1.0 - alpha * alpha)
    sb = np.sqrt(1.0 - beta * beta)
    lo, hi = _factor_orders(alpha, beta)
    vals = []
    for order in (lo, hi):
        z, w = _gh_nodes(order)
        vals.append(float(np.dot(w, norm_cdf((h - alpha * z) / sa) * norm_cdf((k - beta * z) / sb))))
    _check_two_level(vals[0], vals[1], cfg, "single-factor integral")
    return float(np.clip(vals[1], 0.0, 1.0))


def copula_cond_integral(
    u: float,
    v: float,
    rho: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    axis: str = "u",
) -> float:
    """C(u, v; rho) as the integral of a conditional CDF.

    axis="u" integrates P(V <= v | U = t) over t in [0, u]; axis="v"
    integrates P(U <= u | V = t) over t in [0, v].
    """
    r = validate_rho(rho, interior=True)
    _validate_unit(u, "u")
    _validate_unit(v, "v")
    if axis not in ("u", "v"):
        raise DomainError(f'axis must be "u" or "v", got {axis!r}')
    if axis == "u":
        if u == 0.0:
            return 0.0
        return quad1d(lambda t: cond_cdf_given_u(t, v, r), 0.0, u, cfg)
    if v == 0.0:
        return 0.0
    return quad1d(lambda t: cond_cdf_given_v(u, t, r), 0.0, v, cfg)


def _check_two_level(coarse: float, fine: float, cfg: QuadratureConfig, what: str) -> None:
    from .errors import ConvergenceError

    diff = abs(fine - coarse)
    if diff > cfg.abs_tol and diff > cfg.rel_tol * abs(fine):
        raise ConvergenceError(
            f"{what} did not converge: resolutions differ by {diff:.3e}",
            estimate=diff,
        )
