"""Two univariate laws that live inside the bivariate normal copula.

The skew-normal CDF is a single rectangle probability of the bivariate
normal (evaluated here through two different identities), and the Vasicek
distribution - the mixing law of one-factor threshold models - has its
second moment on the copula diagonal. A small Monte Carlo of the factor
construction closes the loop.
"""

import numpy as np

from bivnorm import (
    FactorModel,
    McConfig,
    SkewNormal,
    Vasicek,
    copula_cdf,
    mc_conditional_probability,
    mc_factor_model,
)

# -- skew-normal -------------------------------------------------------------
lam = 1.5
sn = SkewNormal(lam)
print(f"skew-normal, lambda = {lam}:")
print(f"{'x':>6s} {'pdf':>12s} {'cdf (rectangle)':>16s} {'cdf (diagonal)':>16s}")
for x in (-2.0, -1.0, 0.0, 0.7, 2.0):
    print(f"{x:6.2f} {sn.pdf(x):12.8f} {sn.cdf(x):16.12f} {sn.cdf_diagonal(x):16.12f}")

# -- Vasicek ------------------------------------------------------------------
p, rho = 0.02, 0.15
dist = Vasicek(p, rho)
print(f"\nVasicek(p={p}, rho={rho}):  shape = {dist.shape()}")
print(f"  mean          {dist.mean():.12f}")
print(f"  E(P^2)        {dist.second_moment():.12f}   (= C(p, p; rho))")
print(f"  variance      {dist.variance():.12f}")
print(f"  median        {dist.median():.12f}")
print(f"  mode          {dist.mode():.12f}")
print(f"  q(0.999)      {dist.quantile(0.999):.12f}")
print(f"  round trip    cdf(q(0.9)) = {dist.cdf(dist.quantile(0.9)):.12f}")

# probit-scale normality: PhiInv(P) ~ N(mu, sigma^2)
print(f"  probit mean   {dist.probit_mean:.12f}")
print(f"  probit var    {dist.probit_variance:.12f}")

# the shape trichotomy around rho = 1/2
for r in (0.3, 0.5, 0.7):
    print(f"  rho = {r}: {Vasicek(0.3, r).shape()}")

# covariance of two mixing variables sharing correlated factors
other = Vasicek(0.05, 0.3)
print(f"  cov with Vasicek(0.05, 0.3) at factor corr 0.8: "
      f"{dist.pair_cov(other, 0.8):.3e}")

# -- factor-model Monte Carlo --------------------------------------------------
model = FactorModel(alpha=0.9, beta=0.9, gamma=0.617, u=0.5, v=0.5)
est = mc_factor_model(model, McConfig(n_paths=1_000_000, seed=42))
truth = copula_cdf(model.u, model.v, model.rho)
print(f"\nfactor model: alpha=beta=0.9, gamma=0.617  (rho = {model.rho:.5f})")
print(f"  MC joint-hit probability: {est.estimate:.6f} +- {est.std_error:.6f}")
print(f"  copula value:             {truth:.6f}")
print(f"  distance: {abs(est.estimate - truth) / est.std_error:.2f} standard errors")

cond = mc_conditional_probability(model, McConfig(n_paths=1_000_000, seed=7))
print(f"  conditional-probability mean: {cond.estimate:.6f} (should be u = {model.u})")
