"""Explicit expansions of (x)_n and x^n for the four built-in models.

Run: python3 demos/05_closed_forms.py
"""
from fractions import Fraction

from probfe import bernoulli, closed_falling, closed_monomial, exponential, geometric, poisson
from probfe.closedforms import model_closed_s1
from probfe.represent import expand_thm33
from probfe.series import XPolynomial

u = Fraction(1, 2)
for m in (bernoulli(Fraction(1, 3)), poisson(2), geometric(Fraction(1, 3)), exponential(3)):
    print(m)
    print("  S1^Y row 4 from the closed form:", [str(v) for v in model_closed_s1(m, 0, 4).row(4)])
    for lam in (Fraction(0), Fraction(1, 4)):
        f = closed_falling(m, u, lam, 3)
        g = expand_thm33(XPolynomial.falling(3), m, u, lam)
        print(f"  (x)_3, lambda={lam}:", [str(c) for c in f.coefficients], " generic agrees:",
              f.coefficients == g.coefficients)
    mono = closed_monomial(m, u, 0, 3)
    print("  x^3:", [str(c) for c in mono.coefficients])
