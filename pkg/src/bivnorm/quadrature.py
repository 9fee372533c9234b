"""Adaptive 1-D quadrature and the shared tolerance configuration.

Every numeric integral in the package (the correlation-path engines, the
diagonal integral, the concordance checks, the distribution moments) runs
through :func:`quad1d`, a thin contract-enforcing wrapper around the adaptive
Gauss-Kronrod integrator in :mod:`scipy.integrate`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from scipy import integrate

from .errors import ConvergenceError


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and budgets for the numeric integrals.

    abs_tol / rel_tol:
        Target absolute and relative error for adaptive quadrature. A result
        whose error estimate exceeds ``abs_tol`` raises ConvergenceError.
    max_subdivisions:
        Interval-splitting budget of the adaptive integrator.
    series_max_terms:
        Truncation budget for the correlation power series engine.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_subdivisions: int = 200
    series_max_terms: int = 60

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if self.series_max_terms < 1:
            raise ValueError("series_max_terms must be >= 1")


DEFAULT_CONFIG = QuadratureConfig()


def quad1d(
    fn: Callable[[float], float],
    a: float,
    b: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Integrate ``fn`` over ``[a, b]`` with the adaptive Gauss-Kronrod rule.

    The integrand must be finite on the open interval; integrable endpoint
    singularities are handled by the underlying subdivision. Raises
    ConvergenceError (carrying the achieved estimate) when the error estimate
    does not reach ``cfg.abs_tol``.
    """
    if a == b:
        return 0.0
    # Ask for one order more than the contract so the returned estimate
    # certifies cfg.abs_tol with margin.
    out = integrate.quad(
        fn,
        a,
        b,
        epsabs=cfg.abs_tol / 10.0,
        epsrel=cfg.rel_tol / 10.0,
        limit=cfg.max_subdivisions,
        full_output=1,
    )
    value, abserr = out[0], out[1]
    if abserr > cfg.abs_tol and abserr > cfg.rel_tol * abs(value):
        raise ConvergenceError(
            f"quadrature on [{a}, {b}] reached error estimate {abserr:.3e} "
            f"(target {cfg.abs_tol:.3e})",
            estimate=abserr,
        )
    return value
