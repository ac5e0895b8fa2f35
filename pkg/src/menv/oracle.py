"""Ground-truth multiplication in U(M_gamma) by recursive PBW straightening.

Nothing here uses the closed-form structure constants.  Products are built
from the bracket table and the values of the derivations D_{s,t} on the
generators, using the commutation identities valid for elements of the
generalized alternative nucleus:

    [ty, s] = [t,s] y + t[y,s] - D_{s,t}(y) - [y,[s,t]]
    s(ty)   = t(sy) + [s,t] y + 2/3 D_{s,t}(y) + 2/3 [y,[s,t]]
    (sx) z  = 2 s(xz) - x(sz) - x[z,s] + [xz,s]

where ``t y`` is a left-tapped basis monomial with leading generator ``t``.
Every intermediate is normalized to a PBW Element before it is reused.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import qgamma
from .core import GENS, INDEX, UNIT, Element, _accumulate, bracket_vector, gen_mono

TWO_THIRDS = (Fraction(2, 3),)

# D_{s,t}(g) for s < t, from the derivation table; unlisted values are zero.
DERIVATION_TABLE = {
    ("a", "b"): {"a": {"b": (-1,)}, "c": {"d": (1,)}},
    ("a", "c"): {"a": {"c": (-1,)}, "b": {"d": (-1,)}},
    ("a", "d"): {"a": {"d": (-1,)}},
    ("a", "e"): {"a": {"e": qgamma.neg(qgamma.power(qgamma.GAMMA, 2))}},
    ("b", "c"): {"a": {"d": (1,)}},
}


class RecursionGuardError(RuntimeError):
    """The straightening recursion failed to make progress."""


def derivation_on_gen(s, t, g):
    """D_{s,t}(g) as a dict generator -> coefficient (antisymmetric in s, t)."""
    if s == t:
        return {}
    if INDEX[s] < INDEX[t]:
        return dict(DERIVATION_TABLE.get((s, t), {}).get(g, {}))
    return {h: qgamma.neg(c) for h, c in DERIVATION_TABLE.get((t, s), {}).get(g, {}).items()}


def _lead(x):
    for n, e in enumerate(x):
        if e:
            return n
    return None


def _split(x):
    """x = t * y with t the leading generator of x."""
    n = _lead(x)
    rest = list(x)
    rest[n] -= 1
    return GENS[n], tuple(rest)


def _gens_terms(vec):
    return {gen_mono(g): c for g, c in vec.items() if c}


def _check_progress(depth):
    if depth > 200:
        raise RecursionGuardError("straightening depth exceeded")


@lru_cache(maxsize=None)
def _left_mul_gen(s, x):
    n = INDEX[s]
    lead = _lead(x)
    if lead is None or n <= lead:
        mono = list(x)
        mono[n] += 1
        return {tuple(mono): qgamma.ONE}
    _check_progress(sum(x))
    t, y = _split(x)
    out = {}
    # t (s y): every generator in s y is >= t, so this is a direct prefix
    _accumulate(out, _left_mul_gen_terms(t, _left_mul_gen(s, y)))
    st = bracket_vector(s, t)
    for g, c in st.items():
        _accumulate(out, _left_mul_gen(g, y), c)
    _accumulate(out, _derive(s, t, y), TWO_THIRDS)
    for g, c in st.items():
        _accumulate(out, _bracket_mono_gen(y, g), qgamma.mul(c, TWO_THIRDS))
    return out


def _left_mul_gen_terms(s, terms):
    out = {}
    for mono, c in terms.items():
        _accumulate(out, _left_mul_gen(s, mono), c)
    return out


@lru_cache(maxsize=None)
def _bracket_mono_gen(x, s):
    if not any(x):
        return {}
    t, y = _split(x)
    if not any(y):
        return _gens_terms(bracket_vector(t, s))
    _check_progress(sum(x))
    out = {}
    for g, c in bracket_vector(t, s).items():
        _accumulate(out, _left_mul_gen(g, y), c)
    _accumulate(out, _left_mul_gen_terms(t, _bracket_mono_gen(y, s)))
    _accumulate(out, _derive(s, t, y), (-1,))
    for g, c in bracket_vector(s, t).items():
        _accumulate(out, _bracket_mono_gen(y, g), qgamma.neg(c))
    return out


def _bracket_terms(terms, s):
    out = {}
    for mono, c in terms.items():
        _accumulate(out, _bracket_mono_gen(mono, s), c)
    return out


@lru_cache(maxsize=None)
def _derive(s, t, x):
    if s == t or not any(x):
        return {}
    if INDEX[s] > INDEX[t]:
        return {m: qgamma.neg(c) for m, c in _derive(t, s, x).items()}
    u, rest = _split(x)
    out = {}
    for g, c in derivation_on_gen(s, t, u).items():
        _accumulate(out, _left_mul_gen(g, rest), c)
    _accumulate(out, _left_mul_gen_terms(u, _derive(s, t, rest)))
    return out


@lru_cache(maxsize=None)
def _mul_oracle(y, z):
    deg = sum(y)
    if deg == 0:
        return {z: qgamma.ONE}
    s, x = _split(y)
    if deg == 1:
        return _left_mul_gen(s, z)
    _check_progress(deg)
    xz = _mul_terms(x, {z: qgamma.ONE})
    out = {}
    _accumulate(out, _left_mul_gen_terms(s, xz), (2,))
    _accumulate(out, _mul_terms(x, _left_mul_gen(s, z)), (-1,))
    _accumulate(out, _mul_terms(x, _bracket_mono_gen(z, s)), (-1,))
    _accumulate(out, _bracket_terms(xz, s))
    return out


def _mul_terms(x, terms):
    out = {}
    for mono, c in terms.items():
        _accumulate(out, _mul_oracle(x, mono), c)
    return out


def bracket_mono_gen(x, s):
    """[x, s] for a basis monomial x and a generator s."""
    return Element._wrap(dict(_bracket_mono_gen(tuple(x), s)))


def left_mul_gen(s, x):
    """s * x in PBW normal form."""
    return Element._wrap(dict(_left_mul_gen(s, tuple(x))))


def derive(s, t, x):
    """D_{s,t}(x), extended from the generator table by the Leibniz rule."""
    return Element._wrap(dict(_derive(s, t, tuple(x))))


def mul_oracle(x, z):
    """Product of basis monomials by straightening."""
    return Element._wrap(dict(_mul_oracle(tuple(x), tuple(z))))


def clear_caches():
    for f in (_left_mul_gen, _bracket_mono_gen, _derive, _mul_oracle):
        f.cache_clear()


# ---------------------------------------------------------------------------
# Free nonassociative terms


class FreeTerm:
    """Unreduced expression in the free unital nonassociative algebra."""

    def __add__(self, other):
        return Sum((self, other))

    def __sub__(self, other):
        return Sum((self, Scaled((-1,), other)))

    def __mul__(self, other):
        return Node(self, other)

    def __rmul__(self, c):
        return Scaled(qgamma.coerce(c), self)


@dataclass(frozen=True)
class Leaf(FreeTerm):
    value: object  # a generator name or a coefficient tuple


@dataclass(frozen=True)
class Node(FreeTerm):
    left: FreeTerm
    right: FreeTerm


@dataclass(frozen=True)
class Sum(FreeTerm):
    parts: tuple


@dataclass(frozen=True)
class Scaled(FreeTerm):
    coeff: tuple
    term: FreeTerm


def straighten(term):
    """Image of a free term in U(M_gamma), in PBW normal form."""
    if isinstance(term, Leaf):
        if isinstance(term.value, str):
            return Element.generator(term.value)
        return Element.scalar(term.value)
    if isinstance(term, Scaled):
        return straighten(term.term).scale(term.coeff)
    if isinstance(term, Sum):
        out = Element.zero()
        for part in term.parts:
            out = out + straighten(part)
        return out
    if isinstance(term, Node):
        left, right = straighten(term.left), straighten(term.right)
        out = {}
        for mx, cx in left.terms.items():
            for mz, cz in right.terms.items():
                _accumulate(out, _mul_oracle(mx, mz), qgamma.mul(cx, cz))
        return Element._wrap(out)
    raise TypeError(f"not a free term: {term!r}")


def oracle_mul(x, y):
    """Bilinear product of Elements through the straightening engine."""
    out = {}
    for mx, cx in x.terms.items():
        for mz, cz in y.terms.items():
            _accumulate(out, _mul_oracle(mx, mz), qgamma.mul(cx, cz))
    return Element._wrap(out)


__all__ = [
    "DERIVATION_TABLE",
    "FreeTerm",
    "Leaf",
    "Node",
    "RecursionGuardError",
    "Scaled",
    "Sum",
    "UNIT",
    "bracket_mono_gen",
    "derivation_on_gen",
    "derive",
    "left_mul_gen",
    "mul_oracle",
    "oracle_mul",
    "straighten",
]
