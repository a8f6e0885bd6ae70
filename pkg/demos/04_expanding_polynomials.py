"""Writing a polynomial in a Frobenius-Euler basis.

Several independent formulas give the coefficients; they agree exactly and
summing a_k P_k(x) recovers the input.

Run: python3 demos/04_expanding_polynomials.py
"""
from fractions import Fraction
from math import factorial

from probfe import FamilySpec, expand, exponential, parse_poly, reconstruct
from probfe.represent import THEOREM_FORMULAS

p = parse_poly("x^4 - 3*x + 1/2")
print("p(x) =", p)

spec = FamilySpec(model=exponential(3), u=Fraction(1, 2), lam=Fraction(1, 4), order_r=1)
for tag in ("33", "4"):
    for formula in THEOREM_FORMULAS[tag]:
        e = expand(p, spec, tag, formula)
        print(f"  set {tag:>2}, formula {formula}:", [str(c) for c in e.coefficients])

e = expand(p, spec.with_(order_r=3), "4")
print("\norder 3 coefficients:", [str(c) for c in e.coefficients])
print("sum a_k P_k(x) == p(x):", reconstruct(e) == p)

# For Y = 1 the coefficients have a derivative form:
# a_k = (p^(k)(1) - u p^(k)(0)) / ((1 - u) k!).
u = Fraction(-1)
unit = expand(p, FamilySpec(u=u), "31")
direct = [(p.derivative(k)(1) - u * p.derivative(k)(0)) / ((1 - u) * factorial(k))
          for k in range(p.degree + 1)]
print("\nunit model, u = -1:", [str(c) for c in unit.coefficients], "matches derivative form:",
      list(unit.coefficients) == direct)
