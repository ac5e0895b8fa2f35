"""Alternative envelopes of M_gamma.

``A(M) = U(M)/J`` with J the ideal generated by ``bd, cd, d^2, de``.  Cosets
are represented by U(M) monomials of two shapes: ``a^i d`` (type 1) and
``a^r b^n c^p e^s`` (type 2).  :func:`alt_mul` is the multiplication table of
the quotient; :func:`quotient_homomorphism_check` ties it back to U(M).

The second half implements the small alternative algebra A_gamma with basis
``a^r (r >= 1), b, c, d, e``.
"""

from functools import lru_cache
from itertools import product
from math import comb

from . import qgamma
from .core import Element, _accumulate, associator, monomials_up_to, mul_closed


class AltElement(Element):
    """Element of A(M), supported on type-1 and type-2 monomials."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, Element):
            return alt_mul(self, _as_alt(other))
        return self.scale(other)


def type1(i):
    """The basis coset a^i d."""
    return (i, 0, 0, 1, 0)


def type2(r, n, p, s):
    """The basis coset a^r b^n c^p e^s."""
    return (r, n, p, 0, s)


def is_normal(mono):
    i, j, k, l, m = mono
    return l == 0 or (l == 1 and j == k == m == 0)


def reduce_mod_J(x):
    """Project an Element of U(M) onto A(M) = U(M)/J."""
    if isinstance(x, tuple):
        x = Element.monomial(x)
    return AltElement._wrap({mono: c for mono, c in x.terms.items() if is_normal(mono)})


def _as_alt(x):
    if isinstance(x, AltElement):
        return x
    return reduce_mod_J(x)


def _poly_a(i, shift, r, tail):
    """a^i (a + shift)^r * tail as PBW terms; shift is a Q[gamma] tuple."""
    out = {}
    for nu in range(r + 1):
        c = qgamma.scale(qgamma.power(shift, nu), comb(r, nu))
        if c:
            _accumulate(out, {(i + r - nu,) + tail: c})
    return out


def t_correction(i, r, j, k):
    """The d-valued correction T^{ir}_{jk} of the type-2 product."""
    d_tail = (0, 0, 1, 0)
    out = {}
    if (j, k) == (0, 0):
        pass
    elif (j, k) == (1, 0):
        _accumulate(out, _poly_a(0, (-1,), i + r, d_tail))
        _accumulate(out, _poly_a(i, (1,), r, d_tail), (-1,))
    elif (j, k) == (0, 1):
        _accumulate(out, _poly_a(0, (-1,), i + r, d_tail), (-1,))
        _accumulate(out, _poly_a(i, (1,), r, d_tail), (-1,))
    elif (j, k) == (1, 1):
        _accumulate(out, _poly_a(i, (-1,), r, d_tail))
        _accumulate(out, _poly_a(i, (2,), r, d_tail), (-1,))
    else:
        raise ValueError("j and k must be 0 or 1")
    return AltElement._wrap(out)


@lru_cache(maxsize=None)
def _alt_mul_basis(u, v):
    i, j, k, l, m = u
    r, n, p, q, s = v
    if l and q:
        return {}
    if l:
        if n or p or s:
            return {}
        return _poly_a(i, (-1,), r, (0, 0, 1, 0))
    if q:
        if j or k or m:
            return {}
        return {(i + r, 0, 0, 1, 0): qgamma.ONE}
    shift = qgamma.linear(j + k, -m)
    out = _poly_a(i, shift, r, (j + n, k + p, 0, m + s))
    if m == 0 and s == 0 and j + n == 1 and k + p == 1:
        _accumulate(out, t_correction(i, r, j, k).terms)
    return out


def alt_mul(x, y):
    """Product in A(M) from the explicit multiplication table."""
    out = {}
    for u, cu in x.terms.items():
        if not is_normal(u):
            raise ValueError(f"{u} is not a normal-form coset representative")
        for v, cv in y.terms.items():
            if not is_normal(v):
                raise ValueError(f"{v} is not a normal-form coset representative")
            _accumulate(out, _alt_mul_basis(u, v), qgamma.mul(cu, cv))
    return AltElement._wrap(out)


def alt_associator(x, y, z):
    return alt_mul(alt_mul(x, y), z) - alt_mul(x, alt_mul(y, z))


def _gen(s):
    return Element.generator(s)


def alternator_generators():
    """The four U(M) associators whose values generate J, with the expected values."""
    a, b, c, d, e = (_gen(g) for g in "abcde")
    ab, ac, bc, be = a * b, a * c, b * c, b * e
    return [
        ("(c,ab,ab)", associator(c, ab, ab), -(b * d)),
        ("(b,ac,ac)", associator(b, ac, ac), c * d),
        ("(a,bc,bc)", associator(a, bc, bc), (d * d).scale(2)),
        ("(ac,be,a)+(be,ac,a)", associator(ac, be, a) + associator(be, ac, a), d * e),
    ]


def alternator_generators_check():
    """Recompute the four generator associators; returns a list of report rows.

    Each row is ``(name, value, expected, matches, vanishes_mod_J)``.
    """
    rows = []
    for name, value, expected in alternator_generators():
        rows.append((name, value, expected, value == expected, not reduce_mod_J(value)))
    return rows


def quotient_homomorphism_check(degree_bound=4, pairs=None):
    """pi(x z) == pi(x) pi(z) for all monomial pairs of total degree <= bound."""
    if pairs is None:
        monos = monomials_up_to(degree_bound)
        pairs = product(monos, monos)
    for x, z in pairs:
        lhs = reduce_mod_J(mul_closed(x, z))
        rhs = alt_mul(reduce_mod_J(x), reduce_mod_J(z))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# The small alternative envelope A_gamma
#
# Basis keys: ("a", r) for a^r with r >= 1, and ("b", 0) ... ("e", 0).

A = "a"


def small_key(name):
    if isinstance(name, int):
        if name < 1:
            raise ValueError("a^r needs r >= 1")
        return (A, name)
    if name in ("b", "c", "d", "e"):
        return (name, 0)
    if name == "a":
        return (A, 1)
    raise ValueError(f"unknown basis element {name!r}")


class SmallElement:
    """Element of A_gamma: a finite map basis key -> Q[gamma] coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for key, c in (terms or {}).items():
            c = qgamma.coerce(c)
            v = qgamma.add(out.get(key, ()), c)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        self.terms = out

    @classmethod
    def basis(cls, name):
        return cls({small_key(name): qgamma.ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = qgamma.add(out.get(k, ()), c)
        return SmallElement(out)

    def __neg__(self):
        return SmallElement({k: qgamma.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SmallElement({k: qgamma.mul(v, qgamma.coerce(c)) for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, SmallElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "SmallElement(0)"
        parts = []
        for (name, r), c in sorted(self.terms.items()):
            label = (f"a^{r}" if r > 1 else "a") if name == A else name
            parts.append(f"({qgamma.pretty(c)}) {label}")
        return "SmallElement(" + " + ".join(parts) + ")"


def small_mul_basis(x, y):
    """Product of two basis keys of A_gamma as a dict key -> coefficient."""
    (nx, rx), (ny, ry) = x, y
    if nx == A and ny == A:
        return {(A, rx + ry): qgamma.ONE}
    if nx == A and ny == "d":
        return {("d", 0): qgamma.ONE}
    if ny == A and nx in ("b", "c"):
        return {(nx, 0): qgamma.ONE}
    if (nx, ny) == ("b", "c"):
        return {("d", 0): qgamma.ONE}
    if (nx, ny) == ("c", "b"):
        return {("d", 0): (-1,)}
    if nx == "e" and ny == A:
        return {("e", 0): qgamma.power((0, -1), ry)}
    return {}


def small_mul(x, y, table=small_mul_basis):
    """Bilinear product in A_gamma; ``table`` gives products of basis keys."""
    if isinstance(x, tuple):
        x = SmallElement({x: qgamma.ONE})
    if isinstance(y, tuple):
        y = SmallElement({y: qgamma.ONE})
    out = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            c = qgamma.mul(cx, cy)
            for k, v in table(kx, ky).items():
                out[k] = qgamma.add(out.get(k, ()), qgamma.mul(v, c))
    return SmallElement(out)


def small_associator(x, y, z, table=small_mul_basis):
    return small_mul(small_mul(x, y, table), z, table) - small_mul(x, small_mul(y, z, table), table)


def small_basis(exponent_cap):
    return [(A, r) for r in range(1, exponent_cap + 1)] + [(g, 0) for g in "bcde"]


def small_alternativity_check(exponent_cap=6, table=small_mul_basis):
    """The associator is skew under both adjacent transpositions on all basis triples."""
    basis = small_basis(exponent_cap)
    for x, y, z in product(basis, repeat=3):
        xyz = small_associator(x, y, z, table)
        if xyz + small_associator(y, x, z, table):
            return False
        if xyz + small_associator(x, z, y, table):
            return False
    return True


def small_commutator(x, y, table=small_mul_basis):
    return small_mul(x, y, table) - small_mul(y, x, table)


def embedding_check(table=small_mul_basis):
    """Commutators of a, b, c, d, e in A_gamma reproduce the bracket of M_gamma."""
    from .core import bracket_vector

    keys = {g: small_key(g) for g in "abcde"}
    for s, t in product("abcde", repeat=2):
        got = small_commutator(keys[s], keys[t], table)
        want = SmallElement({keys[g]: c for g, c in bracket_vector(s, t).items()})
        if got != want:
            return False
    return True


def in_small_ideal(x):
    """Membership in span{a^t - a^s}: only a-powers, coefficients summing to zero."""
    total = ()
    for (name, _), c in x.terms.items():
        if name != A:
            return False
        total = qgamma.add(total, c)
    return not total


def small_ideal_check(exponent_cap=6):
    """span{a^t - a^s} is a two-sided ideal of span{a^r, b, c, d}."""
    sub = [(A, r) for r in range(1, exponent_cap + 1)] + [(g, 0) for g in "bcd"]
    gens = [SmallElement({(A, t): 1, (A, s): -1})
            for t in range(1, exponent_cap + 1) for s in range(1, exponent_cap + 1) if s != t]
    for x in sub:
        for g in gens:
            if not in_small_ideal(small_mul(x, g)) or not in_small_ideal(small_mul(g, x)):
                return False
    return True
