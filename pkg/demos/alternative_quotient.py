"""The alternative quotient A(M) = U(M)/J and the small envelope A_gamma.

J is generated by the associators that alternativity forces to vanish.  We
recompute them in U(M), reduce, and then check A(M) and A_gamma directly.

Run: python3 demos/alternative_quotient.py
"""

from menv.alternative import (
    AltElement,
    alt_associator,
    alternator_generators_check,
    embedding_check,
    quotient_homomorphism_check,
    small_alternativity_check,
    small_commutator,
    small_key,
)

for name, value, expected, matches, vanishes in alternator_generators_check():
    note = "" if matches else f"   (at gamma = 1 this is {expected})"
    print(f"{name:22s} = {str(value):8s} zero mod J: {vanishes}{note}")

print("\nquotient map is multiplicative up to degree 3:", quotient_homomorphism_check(3))

b, c = AltElement.generator("b"), AltElement.generator("c")
ac = AltElement.monomial((1, 0, 1, 0, 0))
print("in A(M):  c * b =", c * b)
print("          (b, ac, b) + (ac, b, b) =", alt_associator(b, ac, b) + alt_associator(ac, b, b))

print("\nA_gamma alternative (a-powers up to 6):", small_alternativity_check(6))
print("A_gamma contains M_gamma as commutator algebra:", embedding_check())
print("[e, a] in A_gamma:", small_commutator(small_key("e"), small_key("a")))
