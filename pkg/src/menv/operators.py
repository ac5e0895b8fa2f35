"""Differential-operator representation of left/right multiplication.

Under the PBW identification U(M_gamma) ~ F[a, b, c, d, e], products become
linear operators built from three primitives:

* ``M_x`` -- multiply by the variable x,
* ``D_x`` -- differentiate with respect to x,
* ``S^alpha`` -- shift ``a -> a + alpha``, alpha in Q[gamma].

A :class:`CompositeOp` is a finite sum of scalar * (word in primitives); a word
acts right-to-left, so ``S^-1 M_d`` multiplies by d and then shifts.
Operators are compared extensionally (:func:`op_equal_upto`).
"""

from functools import lru_cache
from math import comb, factorial
from typing import NamedTuple

from . import qgamma
from .core import (
    GENS,
    INDEX,
    Element,
    _accumulate,
    bracket_vector,
    monomials_up_to,
    multinomial,
    x_poly,
)


class PrimitiveOp(NamedTuple):
    kind: str  # "M", "D" or "S"
    gen: str
    power: object  # positive int for M/D, a Q[gamma] tuple for S

    def __str__(self):
        if self.kind == "S":
            amount = qgamma.pretty(self.power)
            return "S" if self.power == qgamma.ONE else f"S^({amount})"
        return f"{self.kind}_{self.gen}" + (f"^{self.power}" if self.power != 1 else "")


def _merge_word(left, right):
    """Concatenate words, folding adjacent M_x M_x and D_x D_x into powers."""
    if left and right:
        p, q = left[-1], right[0]
        if p.kind == q.kind and p.kind in "MD" and p.gen == q.gen:
            return left[:-1] + (PrimitiveOp(p.kind, p.gen, p.power + q.power),) + right[1:]
    return left + right


class CompositeOp:
    """Finite sum of coefficient * word; immutable."""

    __slots__ = ("terms", "_trie")

    def __init__(self, terms=None):
        clean = {}
        for word, c in (terms or {}).items():
            c = qgamma.coerce(c)
            word = tuple(p for p in word if not (p.kind != "S" and p.power == 0)
                         and not (p.kind == "S" and not p.power))
            v = qgamma.add(clean.get(word, ()), c)
            if v:
                clean[word] = v
            else:
                clean.pop(word, None)
        self.terms = clean
        self._trie = None

    @classmethod
    def word(cls, *prims, coeff=1):
        return cls({tuple(prims): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = qgamma.add(out.get(w, ()), c)
        return CompositeOp(out)

    def __neg__(self):
        return CompositeOp({w: qgamma.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = qgamma.coerce(c)
        return CompositeOp({w: qgamma.mul(v, c) for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CompositeOp):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = _merge_word(w1, w2)
                out[w] = qgamma.add(out.get(w, ()), qgamma.mul(c1, c2))
        return CompositeOp(out)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n):
        out = IDENTITY
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        return apply(self, x)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "CompositeOp(0)"
        parts = []
        for w, c in self.terms.items():
            word = " ".join(str(p) for p in w) or "I"
            parts.append(f"({qgamma.pretty(c)}) {word}")
        return "CompositeOp(" + " + ".join(parts) + ")"


def M(x, n=1):
    return CompositeOp.word(PrimitiveOp("M", x, n))


def D(x, n=1):
    return CompositeOp.word(PrimitiveOp("D", x, n))


def S(alpha=1):
    return CompositeOp.word(PrimitiveOp("S", "a", qgamma.coerce(alpha)))


IDENTITY = CompositeOp({(): 1})
ZERO_OP = CompositeOp()


def commutator_op(A, B):
    return A * B - B * A


# ---------------------------------------------------------------------------
# Application


@lru_cache(maxsize=None)
def _shift_expansion(i, alpha):
    """(a + alpha)^i as a list of (a-exponent, coefficient)."""
    return [(i - t, qgamma.scale(qgamma.power(alpha, t), comb(i, t))) for t in range(i + 1)]


def _apply_prim(p, terms):
    out = {}
    n = INDEX[p.gen]
    if p.kind == "M":
        for mono, c in terms.items():
            m = list(mono)
            m[n] += p.power
            out[tuple(m)] = c
        return out
    if p.kind == "D":
        for mono, c in terms.items():
            e = mono[n]
            if e < p.power:
                continue
            f = 1
            for t in range(p.power):
                f *= e - t
            m = list(mono)
            m[n] = e - p.power
            out[tuple(m)] = qgamma.scale(c, f)
        return out
    for mono, c in terms.items():
        for e, coeff in _shift_expansion(mono[0], p.power):
            if coeff:
                _accumulate(out, {(e,) + mono[1:]: c}, coeff)
    return out


def _build_trie(entries):
    const = ()
    children = {}
    for word, c in entries:
        if not word:
            const = qgamma.add(const, c)
        else:
            children.setdefault(word[-1], []).append((word[:-1], c))
    return const, {p: _build_trie(sub) for p, sub in children.items()}


def _run_trie(node, terms, out):
    const, children = node
    if const:
        _accumulate(out, terms, const)
    for p, child in children.items():
        image = _apply_prim(p, terms)
        if image:
            _run_trie(child, image, out)


def apply(op, x):
    """Apply an operator to an Element (or a bare monomial tuple)."""
    if isinstance(x, tuple):
        x = Element.monomial(x)
    if op._trie is None:
        op._trie = _build_trie(list(op.terms.items()))
    out = {}
    _run_trie(op._trie, x.terms, out)
    return Element._wrap(out)


def op_equal_upto(A, B, degree_bound=4):
    """True iff A and B agree on every monomial of total degree <= degree_bound."""
    diff = A - B
    for mono in monomials_up_to(degree_bound):
        if apply(diff, mono):
            return False
    return True


# ---------------------------------------------------------------------------
# Operators of the generators

_I = IDENTITY


def left_op(s):
    """L_s, left multiplication by a generator."""
    if s == "a":
        return M("a")
    if s == "b":
        return S(1) * M("b") + (S(-1) - S(1)) * D("c") * M("d")
    if s == "c":
        return S(1) * M("c") - (S(1) + S(-1)) * D("b") * M("d")
    if s == "d":
        return S(-1) * M("d")
    if s == "e":
        return S(qgamma.neg(qgamma.GAMMA)) * M("e")
    raise KeyError(s)


def right_op(s):
    """R_s, right multiplication by a generator."""
    if s == "a":
        return (M("a") + M("b") * D("b") + M("c") * D("c") - M("d") * D("d")
                - M("e") * D("e") * qgamma.GAMMA - D("b") * D("c") * M("d") * 3)
    if s == "b":
        return M("b") - (S(-1) + _I) * D("c") * M("d")
    if s == "c":
        return M("c") + (S(-1) - _I) * D("b") * M("d")
    if s in "de":
        return M(s)
    raise KeyError(s)


def adjoint_op(s):
    """rho_s = R_s - L_s, so that rho_s(x) = [x, s]."""
    if s == "a":
        return (M("b") * D("b") + M("c") * D("c") - M("d") * D("d")
                - M("e") * D("e") * qgamma.GAMMA - D("b") * D("c") * M("d") * 3)
    if s == "b":
        return (_I - S(1)) * M("b") + (S(1) - S(-1) * 2 - _I) * D("c") * M("d")
    if s == "c":
        return (_I - S(1)) * M("c") + (S(1) + S(-1) * 2 - _I) * D("b") * M("d")
    if s == "d":
        return (_I - S(-1)) * M("d")
    if s == "e":
        return (_I - S(qgamma.neg(qgamma.GAMMA))) * M("e")
    raise KeyError(s)


def _derivation_base(s, t):
    if (s, t) == ("a", "b"):
        return (_I - S(1)) * M("b") + (S(1) + S(-1) - _I) * D("c") * M("d")
    if (s, t) == ("a", "c"):
        return (_I - S(1)) * M("c") + (S(1) - S(-1) - _I) * D("b") * M("d")
    if (s, t) == ("a", "d"):
        return (S(-1) - _I) * M("d")
    if (s, t) == ("a", "e"):
        return ((S(qgamma.neg(qgamma.GAMMA)) - _I) * M("e")).scale(qgamma.GAMMA)
    if (s, t) == ("b", "c"):
        # equals ad_d on the whole envelope
        return (_I - S(-1)) * M("d")
    return ZERO_OP


def derivation_op(s, t):
    """D_{s,t} as an operator; antisymmetric, zero on the pairs inside {b..e} except (b,c)."""
    if s == t:
        return ZERO_OP
    if INDEX[s] < INDEX[t]:
        return _derivation_base(s, t)
    return -_derivation_base(t, s)


def left_op_of(x):
    """L_x for a linear combination x of generators, given as an Element."""
    out = ZERO_OP
    for mono, c in x.terms.items():
        if sum(mono) != 1:
            raise ValueError("expected a linear combination of generators")
        out = out + left_op(GENS[mono.index(1)]).scale(c)
    return out


def _lin(vec, fn):
    out = ZERO_OP
    for g, c in vec.items():
        out = out + fn(g).scale(c)
    return out


def bracket_left_op(s, t):
    return _lin(bracket_vector(s, t), left_op)


def bracket_adjoint_op(s, t):
    return _lin(bracket_vector(s, t), adjoint_op)


# ---------------------------------------------------------------------------
# Left multiplication by an arbitrary basis monomial


@lru_cache(maxsize=None)
def left_op_monomial(x):
    """L_x for x = a^i b^j c^k d^l e^m as an explicit sum of normal-ordered words.

    Each word is M_a^kappa S^(shift) M_b^eta D_b^* D_c^* M_c^lambda M_d^* M_e^m,
    obtained from the X_i expansion of L_x with the binomial expansions of the
    powers of L_b and L_c substituted in.
    """
    i, j, k, l, m = x
    terms = {}
    e_shift = qgamma.scale(qgamma.GAMMA, -m)
    for alpha in range(min(j, k) + 1):
        for beta in range(alpha + 1):
            v = alpha - beta
            for kappa in range(i + 1):
                for delta in range(i - kappa + 1):
                    for eps in range(i - kappa - delta + 1):
                        u, w = j - alpha - eps, k - alpha - delta
                        if u < 0 or w < 0:
                            continue
                        xv = x_poly(i, kappa, delta, eps)(v)
                        if not xv:
                            continue
                        base = (factorial(alpha) * factorial(delta) * factorial(eps)
                                * comb(alpha, beta) * multinomial(j, alpha, eps)
                                * multinomial(k, alpha, delta) * xv)
                        if (i + alpha - beta - kappa - delta) % 2:
                            base = -base
                        for eta in range(u + 1):
                            for theta in range(u - eta + 1):
                                cb = multinomial(u, eta, theta)
                                if (u - eta - theta) % 2:
                                    cb = -cb
                                for lam in range(w + 1):
                                    for mu in range(w - lam + 1):
                                        cc = multinomial(w, lam, mu)
                                        if (w - lam) % 2:
                                            cc = -cc
                                        shift = (-beta - delta - eps + (u - 2 * theta)
                                                 + (w - 2 * mu) - l)
                                        word = (
                                            PrimitiveOp("M", "a", kappa),
                                            PrimitiveOp("S", "a", qgamma.add(qgamma.const(shift), e_shift)),
                                            PrimitiveOp("M", "b", eta),
                                            PrimitiveOp("D", "b", delta + w - lam),
                                            PrimitiveOp("D", "c", u - eta + eps),
                                            PrimitiveOp("M", "c", lam),
                                            PrimitiveOp("M", "d", u - eta + w - lam + alpha + delta + eps + l),
                                            PrimitiveOp("M", "e", m),
                                        )
                                        c = base * cb * cc
                                        terms[word] = terms.get(word, 0) + c
    return CompositeOp(terms)


def operator_mul(x, z):
    """Product of basis monomials via L_x applied to z."""
    return apply(left_op_monomial(tuple(x)), tuple(z))


def operator_mul_elements(x, y):
    out = {}
    for mx, cx in x.terms.items():
        op = left_op_monomial(mx)
        image = apply(op, y)
        _accumulate(out, image.terms, cx)
    return Element._wrap(out)


def shift_automorphism(x, amount=1):
    """The automorphism a -> a + amount (other generators fixed) on PBW coordinates."""
    return apply(S(amount), x)
