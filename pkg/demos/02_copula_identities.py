"""The copula layer: symmetries, conditionals, and reduction identities.

The bivariate normal copula is rigid: any value can be rewritten through
reflections, pushed onto the half-line v = 1/2, onto the diagonal u = v, or
rebuilt from its conditionals. This script exercises each identity and shows
the residuals, which should sit at machine precision.
"""

import numpy as np

from bivnorm import (
    SymmetryKind,
    apply_symmetry,
    cond_cdf_given_u,
    copula_cdf,
    copula_cond_integral,
    copula_factor_integral,
    diag_cdf,
    diag_g,
    diag_g_transform,
    halfline_cdf,
    line_from_diag,
    reduce_to_halflines,
)

u, v, rho = 0.3, 0.7, 0.2
direct = copula_cdf(u, v, rho)
print(f"C({u}, {v}; {rho}) = {direct:.15f}\n")

# -- the symmetry group ----------------------------------------------------
print("symmetry identities (residuals):")
for kind in SymmetryKind:
    image = apply_symmetry(kind, u, v, rho)
    print(f"  {kind.value:10s} -> offset {image.offset:+.3f} "
          f"{'+' if image.sign > 0 else '-'} C({image.u:.2f}, {image.v:.2f}; {image.rho:+.2f})"
          f"   residual {abs(image.value() - direct):.2e}")

# -- splitting a general point into two half-line evaluations ---------------
red = reduce_to_halflines(u, v, rho)
print(f"\nhalf-line split: C(u,1/2;{red.rho_u:+.6f}) + C(v,1/2;{red.rho_v:+.6f})"
      f" - {red.delta}")
print(f"  reconstruction residual {abs(red.value() - direct):.2e}")

# -- the diagonal and its slope function g ----------------------------------
print("\ndiagonal section and g:")
for uu in (0.2, 0.5, 0.8):
    c_diag = diag_cdf(uu, rho)
    print(f"  C({uu}, {uu}; {rho}) = {c_diag:.15f}   g = {diag_g(uu, rho):.15f}")

# derivative law: d/du C(u,u) = 2 g(u)
eps = 1e-6
fd = (diag_cdf(0.3 + eps, rho) - diag_cdf(0.3 - eps, rho)) / (2 * eps)
print(f"  d/du C(u,u) at 0.3: finite diff {fd:.10f} vs 2g {2 * diag_g(0.3, rho):.10f}")

# the inverse law g(g(u; rho); -rho) = u
uu = 0.2
print(f"  inverse law residual {abs(diag_g(diag_g(uu, 0.6), -0.6) - uu):.2e}")

# diagonal <-> half-line, both directions
for uu in (0.25, 0.6):
    lhs = diag_cdf(uu, rho)
    rhs = 2 * halfline_cdf(uu, -np.sqrt((1 - rho) / 2))
    print(f"  diag->line residual {abs(lhs - rhs):.2e}, "
          f"line->diag residual {abs(line_from_diag(uu, rho) - halfline_cdf(uu, rho)):.2e}")

# substitution identity C(u,u;rho) = 2u g - C(g, g; -rho)
print(f"  substitution identity residual "
      f"{abs(diag_g_transform(0.2, 0.7) - diag_cdf(0.2, 0.7)):.2e}")

# -- conditionals and integral representations ------------------------------
print("\nconditional CDF and integral forms:")
print(f"  P(V<=0.6 | U=0.3), rho=0.7: {cond_cdf_given_u(0.3, 0.6, 0.7):.15f}")
val = copula_cond_integral(0.3, 0.6, 0.28)
print(f"  integral of the conditional over [0, u]: {val:.12f} "
      f"(direct {copula_cdf(0.3, 0.6, 0.28):.12f})")
val = copula_factor_integral(0.3, 0.6, 0.7, 0.8, 0.5)
print(f"  two-factor double integral (alpha beta gamma = 0.28): {val:.12f}")
