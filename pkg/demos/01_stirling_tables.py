"""Stirling numbers: classical, degenerate and probabilistic.

Run: python3 demos/01_stirling_tables.py
"""
from fractions import Fraction

from probfe import (
    bernoulli,
    classical_s1,
    classical_s2,
    degenerate_s2,
    exponential,
    poisson,
    probabilistic_s1,
    probabilistic_s2,
    probabilistic_s2_direct,
    table_invert,
)
from probfe.stirling import orthogonality_defect


def show(title, table):
    print(title)
    for n, row in enumerate(table.values):
        print(f"  n={n}: " + "  ".join(str(v) for v in row))
    print()


show("Classical S2(n,k): set partitions of n into k blocks", classical_s2(5))
show("Signed classical S1(n,k): coefficients of x(x-1)...(x-n+1)", classical_s1(5))

# The degenerate version interpolates between S2 (lambda = 0) and the
# identity matrix (lambda = 1).
show("Degenerate S2 at lambda = 1/2", degenerate_s2(4, Fraction(1, 2)))

# Replace e^t by the moment generating function of Y.  For Y ~ Bernoulli(p)
# every entry picks up a factor p^k.
p = Fraction(1, 3)
show(f"S2^Y for Y ~ Bernoulli({p})", probabilistic_s2(bernoulli(p), 4))

# Poisson(1): sum_k S2^Y(n,k) (j)_k is the n-th moment of a Poisson(j) variable.
show("S2^Y for Y ~ Poisson(1)", probabilistic_s2(poisson(1), 5))

# The first-kind table is the matrix inverse.  It is computed by series
# reversion; triangular inversion of S2^Y gives the same thing.
m = exponential(2)
s1 = probabilistic_s1(m, 5)
show("S1^Y for Y ~ Exponential(2), by series reversion", s1)
print("equal to the triangular inverse of S2^Y:", table_invert(probabilistic_s2(m, 5)).values == s1.values)
print("orthogonality defects:", orthogonality_defect(probabilistic_s2(m, 8), probabilistic_s1(m, 8)))

# An independent route to S2^Y: the alternating sum over E[(Y_1+...+Y_j)^n].
print("S2^Y(6,3) two ways:", probabilistic_s2(m, 6)(6, 3), probabilistic_s2_direct(m, 6, 3))
