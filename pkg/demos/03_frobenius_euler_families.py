"""Frobenius-Euler polynomials and their probabilistic generalisations.

The family of order r is read off from

    ((1 - u) / (A(t) - u))^r * A(t)^x,

where A(t) is the moment generating function of Y (or its degenerate
version).  With Y = 1 this is the classical Frobenius-Euler family, and
u = -1 gives the Euler polynomials.

Run: python3 demos/03_frobenius_euler_families.py
"""
from fractions import Fraction

from probfe import FamilySpec, build_family, frobenius_euler, poisson
from probfe.families import family_boundary_check, order_reduction_check, sheffer_recurrence_check

print("Euler polynomials (u = -1):")
for n, p in enumerate(frobenius_euler(-1, 4).polys):
    print(f"  E_{n}(x) = {p}")

print("\nFrobenius-Euler numbers at u = 1/2:", [str(v) for v in frobenius_euler(Fraction(1, 2), 6).numbers()])

spec = FamilySpec(model=poisson(2), u=Fraction(1, 2), lam=Fraction(1, 4), order_r=2, nmax=3)
print("\nPoisson(2), u = 1/2, lambda = 1/4, order 2:")
for n, p in enumerate(build_family(spec).polys):
    print(f"  P_{n}(x) = {p}")

# The families satisfy several identities; each is checked exactly.
fam1 = build_family(spec.with_(order_r=1, nmax=8))
fam2 = build_family(spec.with_(nmax=8))
print("\nP(x+1) - u P(x) = (1-u) sum_k S2(n,k)(x)_k :", family_boundary_check(fam1).ok)
print("order r reduces to order r-1 under the same difference:", order_reduction_check(fam2, fam1).ok)
print("f(t) P_n = n P_{n-1} for f the inverse of log A(t):", sheffer_recurrence_check(fam2).ok)
