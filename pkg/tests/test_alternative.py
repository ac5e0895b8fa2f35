import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from menv.alternative import (
    AltElement,
    SmallElement,
    alt_associator,
    alt_mul,
    alternator_generators_check,
    embedding_check,
    is_normal,
    quotient_homomorphism_check,
    reduce_mod_J,
    small_alternativity_check,
    small_associator,
    small_ideal_check,
    small_key,
    small_mul,
    small_mul_basis,
    t_correction,
    type1,
    type2,
)
from menv.core import Element, gamma_eval, mul_closed

GEN = {g: AltElement.generator(g) for g in "abcde"}


def random_alt(rng, terms=3):
    out = {}
    for _ in range(terms):
        if rng.random() < 0.25:
            mono = type1(rng.randint(0, 2))
        else:
            mono = type2(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2))
        out[mono] = (rng.randint(-3, 3), rng.randint(-1, 1))
    return AltElement(out)


def test_normal_forms():
    assert is_normal((3, 0, 0, 1, 0))
    assert is_normal((1, 2, 1, 0, 4))
    assert not is_normal((0, 1, 0, 1, 0))
    assert not is_normal((0, 0, 0, 2, 0))
    assert not reduce_mod_J(Element.monomial((0, 0, 0, 1, 1)))


def test_generator_products():
    b, c, d = GEN["b"], GEN["c"], GEN["d"]
    assert alt_mul(b, c) == AltElement({type2(0, 1, 1, 0): 1})
    assert alt_mul(c, b) == AltElement({type2(0, 1, 1, 0): 1, type1(0): -2})
    assert not alt_mul(b, d)
    assert not alt_mul(d, GEN["e"])


def test_type_one_times_power_of_a():
    for i in range(3):
        for r in range(4):
            got = alt_mul(AltElement.monomial(type1(i)), AltElement.monomial(type2(r, 0, 0, 0)))
            assert got == reduce_mod_J(mul_closed(type1(i), type2(r, 0, 0, 0)))


def test_t_correction_vanishes_on_empty_index():
    assert not t_correction(2, 3, 0, 0)
    with pytest.raises(ValueError):
        t_correction(0, 0, 2, 0)


def test_quotient_is_multiplicative_degree_three():
    assert quotient_homomorphism_check(3)


def test_generator_associators_vanish_mod_j():
    rows = {name: row for name, *row in alternator_generators_check()}
    for name, (value, expected, matches, vanishes) in rows.items():
        assert value
        assert vanishes, name
    assert rows["(c,ab,ab)"][2]
    assert rows["(b,ac,ac)"][2]
    assert rows["(a,bc,bc)"][2]


def test_mixed_generator_value():
    value = dict((r[0], r[1]) for r in alternator_generators_check())["(ac,be,a)+(be,ac,a)"]
    assert value == Element({(0, 0, 0, 1, 1): (0, 1)})
    assert gamma_eval(value, 1) == Element.monomial((0, 0, 0, 1, 1))


def test_alternative_laws_on_random_pairs():
    rng = random.Random(11)
    for _ in range(120):
        x, y = random_alt(rng), random_alt(rng)
        assert not alt_associator(x, x, y)
        assert not alt_associator(y, x, x)


@given(st.randoms(use_true_random=False))
def test_associator_is_skew(rng):
    x, y, z = random_alt(rng, 2), random_alt(rng, 2), random_alt(rng, 2)
    xyz = alt_associator(x, y, z)
    assert xyz == -alt_associator(y, x, z)
    assert xyz == -alt_associator(x, z, y)


def test_alt_element_product_operator():
    x = AltElement.generator("c")
    assert x * GEN["b"] == alt_mul(x, GEN["b"])
    assert isinstance(x * Element.generator("b"), AltElement)


def test_small_table():
    a, b, c, d, e = (small_key(g) for g in "abcde")
    assert small_mul(b, c) == SmallElement({d: 1})
    assert small_mul(c, b) == SmallElement({d: -1})
    assert small_mul(e, small_key(3)) == SmallElement({e: (0, 0, 0, -1)})
    assert small_mul(small_key(2), small_key(3)) == SmallElement.basis(5)
    assert small_mul(a, d) == SmallElement({d: 1})
    assert not small_mul(d, a)
    with pytest.raises(ValueError):
        small_key(0)


def test_small_envelope():
    assert small_alternativity_check(6)
    assert embedding_check()
    assert small_ideal_check(6)


def test_small_envelope_negative_control():
    def perturbed(x, y):
        if (x[0], y[0]) == ("b", "c"):
            return {("e", 0): (1,)}
        return small_mul_basis(x, y)

    assert not small_alternativity_check(4, perturbed)
    assert not embedding_check(perturbed)


def test_small_associator_example():
    a, b, c = small_key("a"), small_key("b"), small_key("c")
    assert small_associator(b, a, c) == -small_associator(a, b, c)
