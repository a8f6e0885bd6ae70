"""Random-variable models and their (degenerate) moments.

Run: python3 demos/02_moment_models.py
"""
from fractions import Fraction

from probfe import bernoulli, custom, exponential, geometric, poisson
from probfe.rvmodels import degenerate_mgf_series, mgf_series, raw_moment

models = [bernoulli(Fraction(1, 3)), poisson(2), geometric(Fraction(1, 2)), exponential(3)]

print("First moments E[Y^n], n = 0..5")
for m in models:
    print(f"  {str(m):<22}", [str(raw_moment(m, n)) for n in range(6)])

# Poisson(1) moments are the Bell numbers.
print("\nPoisson(1) moments:", [str(raw_moment(poisson(1), n)) for n in range(8)])

# The degenerate MGF E[(1 + lam t)^(Y/lam)] has coefficients E[(Y)_{n,lam}].
lam = Fraction(1, 4)
print(f"\nDegenerate moments at lambda = {lam}")
for m in models:
    print(f"  {str(m):<22}", [str(c) for c in degenerate_mgf_series(m, lam, 4).coeffs])

# Any distribution can be supplied by its moments.  Here: Y uniform on {1, 2}.
moments = [Fraction(1 + 2**n, 2) for n in range(9)]
m = custom(moments)
print("\nCustom model (uniform on {1,2}), MGF coefficients:", [str(c) for c in mgf_series(m, 5).coeffs])
