"""Exceptional directions: where the growth transfer breaks down.

The angular factor of the indicator has exactly floor(rho)+1 zeros in
(0, pi).  On those directions the indicator vanishes, the transfer constant
blows up, and a one-direction growth assumption stops controlling the mass.
This script tabulates the zero sets, shows the sign structure of the
indicator between consecutive roots, and demonstrates the guarded transfer
constant.
"""

import math

from raygrowth.errors import ExceptionalAngleError
from raygrowth.indicator import (
    indicator_closed,
    tauberian_audit,
    tauberian_constant,
    zero_set,
)
from raygrowth.kernels import ProblemParams

print("zero sets of the angular factor (degrees):")
for n in (3, 4, 5, 6):
    for rho in (0.5, 1.5, 2.7):
        z = zero_set(ProblemParams(n, rho))
        roots = ", ".join(f"{math.degrees(b):8.4f}" for b in z.roots)
        print(f"  n={n} rho={rho}: {len(z.roots)} root(s): {roots}")

params = ProblemParams(3, 2.5)
z = zero_set(params)
print(f"\nsign structure between roots (n=3, rho=2.5, roots at "
      f"{', '.join(f'{math.degrees(b):.2f}' for b in z.roots)} deg):")
probes = [1e-3] + list(z.roots) + [math.pi - 1e-3]
for i in range(len(probes) - 1):
    mid = 0.5 * (probes[i] + probes[i + 1])
    print(f"  H({math.degrees(mid):7.2f} deg) = {float(indicator_closed(params, mid)):+.5f}")

params = ProblemParams(3, 0.5)
beta = zero_set(params).roots[0]
print(f"\ntransfer constant for n=3, rho=0.5 (root at {math.degrees(beta):.4f} deg):")
for deg in (0.0, 45.0, 90.0):
    phi = math.radians(deg)
    const = tauberian_constant(params, phi)
    audit = tauberian_audit(params, phi)
    print(f"  phi={deg:5.1f} deg: M(g;0)={const:+.8f}   audit product M*H/Delta={audit:.12f}")
print("  (the audit product equals rho+n-2, uniformly in phi: the printed")
print("   constant composes with the indicator to that factor, not to 1)")
try:
    tauberian_constant(params, beta)
except ExceptionalAngleError as exc:
    print(f"  phi=root: refused as expected -> {type(exc).__name__}")
