"""Shared random generators for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from menv.core import Element
from menv.expr import Add, Call, Mono, Prod, Scalar, Scale

small_ints = st.integers(-3, 3)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
coefficients = st.lists(rationals, min_size=1, max_size=3)


def monomials(max_exp=1, max_degree=3):
    return st.tuples(*[st.integers(0, max_exp)] * 5).filter(lambda m: sum(m) <= max_degree)


def elements(max_exp=1, max_degree=3, max_terms=3, symbolic=True):
    coeff = coefficients if symbolic else rationals.map(lambda c: (c,))
    return st.dictionaries(monomials(max_exp, max_degree), coeff, max_size=max_terms).map(Element)


def random_mono(rng, max_exp=1, max_degree=2, allow_unit=False):
    while True:
        m = tuple(rng.randint(0, max_exp) for _ in range(5))
        if sum(m) <= max_degree and (allow_unit or any(m)):
            return m


def random_scalar(rng):
    value = Fraction(rng.randint(0, 5), rng.randint(1, 4))
    return Scalar(value, rng.choice((0, 0, 0, 1, 2)))


def random_ast(rng, depth=4, max_exp=1, max_degree=2):
    """A random expression tree of depth at most ``depth``."""
    if depth <= 1 or rng.random() < 0.3:
        return Mono(random_mono(rng, max_exp, max_degree)) if rng.random() < 0.85 else random_scalar(rng)
    sub = lambda: random_ast(rng, depth - 1, max_exp, max_degree)  # noqa: E731
    kind = rng.choice(("prod", "prod", "add", "scale", "comm", "assoc", "ad"))
    if kind == "prod":
        return Prod(sub(), sub())
    if kind == "add":
        n = rng.randint(1, 3)
        terms = tuple((rng.choice((1, -1)), sub()) for _ in range(n))
        if n == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(terms)
    if kind == "scale":
        return Scale(random_scalar(rng), sub())
    if kind == "comm":
        return Call("comm", (sub(), sub()))
    if kind == "assoc":
        return Call("assoc", (sub(), sub(), sub()))
    gen = [0] * 5
    gen[rng.randint(0, 4)] = 1
    return Call("ad", (Mono(tuple(gen)), sub()))
