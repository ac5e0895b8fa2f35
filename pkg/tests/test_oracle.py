from itertools import product

import pytest
from hypothesis import given

from menv import qgamma
from menv.core import GENS, Element, bracket_gen_gen, monomials_box, mul_closed
from menv.oracle import (
    Leaf,
    bracket_mono_gen,
    derivation_on_gen,
    derive,
    left_mul_gen,
    mul_oracle,
    oracle_mul,
    straighten,
)
from strategies import elements

A, B, C, D_, E_ = (Leaf(g) for g in GENS)


def mono(text):
    i = {g: 0 for g in GENS}
    for word in text.split():
        g, _, p = word.partition("^")
        i[g] = int(p or 1)
    return tuple(i[g] for g in GENS)


def el(terms):
    return Element({mono(k): v for k, v in terms.items()})


def test_derivations_on_generators():
    assert derivation_on_gen("a", "b", "c") == {"d": (1,)}
    assert derivation_on_gen("b", "a", "c") == {"d": (-1,)}
    assert derivation_on_gen("a", "e", "a") == {"e": qgamma.neg(qgamma.power(qgamma.GAMMA, 2))}
    assert derivation_on_gen("a", "e", "e") == {}
    for s, t in [("b", "d"), ("b", "e"), ("c", "d"), ("c", "e"), ("d", "e")]:
        assert all(not derivation_on_gen(s, t, g) for g in GENS)


def test_derivation_extends_by_leibniz():
    assert derive("a", "e", mono("a e")) == el({"e^2": (0, 0, -1)})
    assert derive("a", "b", mono("c")) == el({"d": 1})
    assert not derive("b", "d", mono("a b c"))


def test_free_relations():
    # st - ts = [s, t] for every pair of generators
    for s, t in product(GENS, repeat=2):
        got = straighten(Leaf(s) * Leaf(t) - Leaf(t) * Leaf(s))
        assert got == bracket_gen_gen(s, t)


def test_straighten_examples():
    assert straighten(C * B) == el({"b c": 1, "d": -2})
    assert straighten(B * (A * C)) == el({"a b c": 1, "b c": 1, "d": -2})
    assert straighten(2 * (A * B) - Leaf((1,))) == el({"a b": 2, "": -1})


@pytest.mark.parametrize(
    "args, want",
    [
        ((C, A * B, A * B), {"b d": -1}),
        ((B, A * C, A * C), {"c d": 1}),
        ((A, B * C, B * C), {"d^2": 2}),
    ],
)
def test_associators_by_straightening(args, want):
    x, y, z = args
    assert straighten((x * y) * z - x * (y * z)) == el(want)


def test_bracket_and_left_multiplication():
    assert bracket_mono_gen(mono("b c"), "a") == el({"b c": 2, "d": -3})
    assert left_mul_gen("b", mono("a c")) == el({"a b c": 1, "b c": 1, "d": -2})


def test_agrees_with_closed_form_on_unit_box():
    monos = monomials_box(1)
    for x, z in product(monos, monos):
        assert mul_oracle(x, z) == mul_closed(x, z)


@given(elements(max_exp=2, max_degree=4), elements(max_exp=2, max_degree=4))
def test_no_zero_divisors(x, y):
    if x and y:
        assert oracle_mul(x, y)
