"""Scan the center of U(M_gamma) over a handful of rational gammas.

Because [d^l e^m, a] = -(l + m gamma) d^l e^m, central monomials appear only
when gamma is a negative rational -l/m.  The brute-force search below solves
the linear system [n, s] = 0 over all monomials up to a degree bound.

Run: python3 demos/center_scan.py
"""

from fractions import Fraction

from menv.center import GammaMode, ad_action, center_generator, center_search

print("[d^2 e^3, a] =", ad_action("a", (0, 0, 0, 2, 3)))
print()

for gamma in ["1", "1/2", "-1", "-2", "-1/2", "-2/3"]:
    g = Fraction(gamma)
    bound = 2 * (abs(g.numerator) + g.denominator)
    basis = center_search(bound, GammaMode(g))
    gen = center_generator(g)
    label = "scalars only" if gen is None else f"generated by d^{gen[3]} e^{gen[4]}"
    print(f"gamma = {gamma:>5}: {label:24s} basis to degree {bound}: {[str(x) for x in basis]}")
