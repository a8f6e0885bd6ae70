"""Power series as operators and functionals on polynomials.

A series f(t) = sum a_k t^k / k! acts as sum a_k/k! d^k/dx^k, and
<f(t) | p(x)> is that result evaluated at 0.

Run: python3 demos/06_umbral_operators.py
"""
from fractions import Fraction

from probfe import FamilySpec, TruncatedSeries, XPolynomial, build_family, parse_poly
from probfe.families import sheffer_operator
from probfe.umbral import apply_operator, forward_difference, pair_functional

p = parse_poly("x^3 - 2*x")
print("p(x) =", p)
print("e^{2t} p(x) = p(x+2) =", apply_operator(TruncatedSeries.exp(3, 2), p))
print("<e^{yt} | p> = p(y) at y = 1/2:", pair_functional(TruncatedSeries.exp(3, Fraction(1, 2)), p))
print("forward difference of (x)_3:", forward_difference(XPolynomial.falling(3)), "= 3 (x)_2")

# The families are Sheffer sequences: <g(t)^r f(t)^k | P_n> = n! delta_{n,k}.
spec = FamilySpec(u=Fraction(1, 3), order_r=2, nmax=4)
fam = build_family(spec)
print("\n<g^r f^k | P_n> for n, k = 0..4")
for n in range(5):
    print("  ", [str(pair_functional(sheffer_operator(spec, k), fam[n])) for k in range(5)])
