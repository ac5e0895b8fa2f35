"""Multiply in U(M_gamma) with the closed form, the operator calculus and
the straightening oracle, and watch them agree.

Run: python3 demos/products_three_ways.py
"""

import time
from itertools import product

from menv.core import Element, associator, monomials_box, mul_closed
from menv.operators import apply, left_op_monomial
from menv.oracle import mul_oracle

# A few products by hand.  Monomials are exponent tuples (i, j, k, l, m)
# for a^i b^j c^k d^l e^m, and "g" in the output stands for gamma.
for x, z in [((0, 0, 1, 0, 0), (0, 1, 0, 0, 0)),
             ((0, 0, 0, 0, 1), (2, 0, 0, 0, 0)),
             ((1, 1, 1, 0, 0), (1, 1, 1, 0, 1))]:
    print(f"{Element.monomial(x)}  *  {Element.monomial(z)}  =  {mul_closed(x, z)}")

# The product is not associative; associators with generators obey the
# nucleus relations (s,x,y) = -(x,s,y) = (x,y,s).
a, b, c = (Element.generator(g) for g in "abc")
ab = a * b
print("\n(c, ab, ab) =", associator(c, ab, ab))
print("(ab, c, ab) =", associator(ab, c, ab))

# Sweep every pair with exponents <= 1 through all three engines.
monos = monomials_box(1)
timings = {}
results = {}
for name, engine in [("closed", mul_closed),
                     ("operator", lambda x, z: apply(left_op_monomial(x), z)),
                     ("oracle", mul_oracle)]:
    start = time.perf_counter()
    results[name] = [engine(x, z) for x, z in product(monos, monos)]
    timings[name] = time.perf_counter() - start

same = results["closed"] == results["operator"] == results["oracle"]
print(f"\n{len(monos) ** 2} pairs, engines agree: {same}")
for name, t in timings.items():
    print(f"  {name:9s} {t:6.2f}s")
