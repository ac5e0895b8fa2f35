"""Exact arithmetic in the universal nonassociative envelope U(M_gamma).

Elements are sparse maps from PBW exponent tuples ``(i, j, k, l, m)`` -- the
left-tapped monomial ``a^i b^j c^k d^l e^m`` -- to coefficients in Q[gamma]
(see :mod:`menv.qgamma`).  The product of two basis monomials is given by a
closed-form finite sum (:func:`mul_closed`); everything else is bilinear
plumbing around it.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from . import qgamma

GENS = "abcde"
INDEX = {g: n for n, g in enumerate(GENS)}
UNIT = (0, 0, 0, 0, 0)


class DomainError(ValueError):
    """Raised for parameter values outside the family, e.g. gamma = 0."""


def gen_mono(s):
    mono = [0] * 5
    mono[INDEX[s]] = 1
    return tuple(mono)


def mono_degree(mono):
    return sum(mono)


def mono_str(mono):
    if not any(mono):
        return "1"
    parts = []
    for g, e in zip(GENS, mono):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return " ".join(parts)


def _check_mono(mono):
    mono = tuple(mono)
    if len(mono) != 5 or any((not isinstance(e, int)) or e < 0 for e in mono):
        raise ValueError(f"bad monomial exponents {mono!r}")
    return mono


def monomials_up_to(degree):
    """All monomials of total degree <= ``degree``, in lexicographic order."""
    out = [m for m in product(range(degree + 1), repeat=5) if sum(m) <= degree]
    return out


def monomials_box(max_exp):
    """All monomials with every exponent <= ``max_exp``."""
    return list(product(range(max_exp + 1), repeat=5))


def _accumulate(out, terms, coeff=qgamma.ONE):
    for mono, c in terms.items():
        if coeff != qgamma.ONE:
            c = qgamma.mul(c, coeff)
        prev = out.get(mono)
        if prev is None:
            out[mono] = c
        else:
            s = qgamma.add(prev, c)
            if s:
                out[mono] = s
            else:
                del out[mono]
    return out


class Element:
    """Element of U(M_gamma): a finite map monomial -> Q[gamma] coefficient.

    Treated as immutable.  ``x * y`` is the algebra product (closed-form
    engine); multiplying by an int, Fraction or coefficient tuple scales.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                _accumulate(clean, {_check_mono(mono): qgamma.coerce(c)})
        clean = {m: c for m, c in clean.items() if c}
        self.terms = clean

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, mono, coeff=1):
        c = qgamma.coerce(coeff)
        return cls._wrap({_check_mono(mono): c} if c else {})

    @classmethod
    def generator(cls, s):
        return cls._wrap({gen_mono(s): qgamma.ONE})

    @classmethod
    def scalar(cls, c):
        return cls.monomial(UNIT, c)

    @classmethod
    def zero(cls):
        return cls._wrap({})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def items(self):
        return self.terms.items()

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), qgamma.ZERO)

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Element.scalar(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(other)
        return type(self)._wrap(_accumulate(dict(self.terms), other.terms))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._wrap({m: qgamma.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = qgamma.coerce(c)
        if not c:
            return type(self)._wrap({})
        return type(self)._wrap(
            {m: v for m, v in ((m, qgamma.mul(x, c)) for m, x in self.terms.items()) if v}
        )

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            for t in range(len(c) - 1, -1, -1):
                if not c[t]:
                    continue
                mag = abs(c[t])
                words = []
                if mag != 1 or (t == 0 and not any(mono)):
                    words.append(str(mag))
                if t:
                    words.append("g" if t == 1 else f"g^{t}")
                if any(mono):
                    words.append(mono_str(mono))
                pieces.append(("-" if c[t] < 0 else "+", " ".join(words)))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Element({str(self)!r})"


ONE = Element.scalar(1)


# ---------------------------------------------------------------------------
# The Malcev algebra M_gamma

# [s, t] for s < t; every pair not listed brackets to zero.
BRACKET_TABLE = {
    ("b", "c"): {"d": (2,)},
    ("a", "b"): {"b": (-1,)},
    ("a", "c"): {"c": (-1,)},
    ("a", "d"): {"d": (1,)},
    ("a", "e"): {"e": qgamma.GAMMA},
}


def bracket_vector(s, t, table=None):
    """``[s, t]`` as a dict generator -> coefficient, using ``table``."""
    table = BRACKET_TABLE if table is None else table
    if (s, t) in table:
        return dict(table[(s, t)])
    if (t, s) in table:
        return {g: qgamma.neg(c) for g, c in table[(t, s)].items()}
    return {}


def bracket_gen_gen(s, t):
    """The Malcev bracket of two generators as an Element."""
    return Element._wrap({gen_mono(g): c for g, c in bracket_vector(s, t).items() if c})


def _bracket_lin(x, y, table):
    out = {}
    for s, cs in x.items():
        for t, ct in y.items():
            for g, c in bracket_vector(s, t, table).items():
                prev = out.get(g, ())
                v = qgamma.add(prev, qgamma.mul(qgamma.mul(cs, ct), c))
                if v:
                    out[g] = v
                else:
                    out.pop(g, None)
    return out


def verify_malcev(table=None):
    """Check the Malcev identity on all basis triples, identically in gamma.

    [[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]
    """
    table = BRACKET_TABLE if table is None else table
    basis = {g: {g: qgamma.ONE} for g in GENS}

    def br(u, v):
        return _bracket_lin(u, v, table)

    for x, y, z in product(GENS, repeat=3):
        X, Y, Z = basis[x], basis[y], basis[z]
        lhs = br(br(X, Y), br(X, Z))
        rhs = {}
        for term in (br(br(br(X, Y), Z), X), br(br(br(Y, Z), X), X), br(br(br(Z, X), X), Y)):
            for g, c in term.items():
                v = qgamma.add(rhs.get(g, ()), c)
                if v:
                    rhs[g] = v
                else:
                    rhs.pop(g, None)
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Combinatorics


@lru_cache(maxsize=None)
def stirling2(r, s):
    """Stirling number of the second kind from the alternating-sum formula."""
    if r < 0 or s < 0:
        return 0
    total = sum((-1) ** (s - t) * comb(s, t) * t**r for t in range(s + 1))
    return total // factorial(s)


def falling_factorial(n, r):
    """n (n-1) ... (n-r+1); zero when r > n."""
    if r > n:
        return 0
    out = 1
    for t in range(r):
        out *= n - t
    return out


def multinomial(n, *parts):
    """n! / (parts! * (n - sum(parts))!); zero if any index is negative."""
    rest = n - sum(parts)
    if rest < 0 or any(p < 0 for p in parts):
        return 0
    out = factorial(n) // factorial(rest)
    for p in parts:
        out //= factorial(p)
    return out


class IntPoly(tuple):
    """Integer polynomial in one variable, trimmed; index t is the t-th power."""

    def __new__(cls, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    def __call__(self, v):
        acc = 0
        for c in reversed(self):
            acc = acc * v + c
        return acc

    def __add__(self, other):
        n = max(len(self), len(other))
        return IntPoly(
            (self[t] if t < len(self) else 0) + (other[t] if t < len(other) else 0)
            for t in range(n)
        )

    def shift_mul(self, c0):
        """Multiply by (v + c0)."""
        out = [0] * (len(self) + 1)
        for t, c in enumerate(self):
            out[t] += c0 * c
            out[t + 1] += c
        return IntPoly(out)

    def __repr__(self):
        return f"IntPoly({list(self)})"


def _x_in_range(i, kappa, delta, eps):
    return 0 <= kappa <= i and 0 <= delta <= i - kappa and 0 <= eps <= i - kappa - delta


@lru_cache(maxsize=None)
def x_poly(i, kappa, delta, eps):
    """X_i(kappa, delta, eps) as a polynomial in v = alpha - beta (Stirling form)."""
    if not _x_in_range(i, kappa, delta, eps):
        return IntPoly()
    out = [0] * (i - kappa - delta - eps + 1)
    lead = comb(delta + eps, eps)
    for zeta in range(i - kappa - delta - eps + 1):
        out[zeta] = lead * multinomial(i, kappa, zeta) * stirling2(i - kappa - zeta, delta + eps)
    return IntPoly(out)


@lru_cache(maxsize=None)
def x_poly_recurrence(i, kappa, delta, eps):
    """X_i from the defining recurrence, used to cross-check :func:`x_poly`."""
    if not _x_in_range(i, kappa, delta, eps):
        return IntPoly()
    if i == 0:
        return IntPoly([1])
    prev = x_poly_recurrence
    return (
        prev(i - 1, kappa, delta, eps).shift_mul(delta + eps)
        + prev(i - 1, kappa - 1, delta, eps)
        + prev(i - 1, kappa, delta - 1, eps)
        + prev(i - 1, kappa, delta, eps - 1)
    )


# ---------------------------------------------------------------------------
# Structure constants


@lru_cache(maxsize=None)
def mul_closed(x, z):
    """Product of basis monomials ``x * z`` from the closed-form structure constants.

    Square brackets in the formula are falling factorials; ``omega`` is linear
    in gamma, so each ``omega**nu`` is expanded binomially.
    """
    i, j, k, l, m = x
    r, n, p, q, s = z
    acc = {}
    for alpha in range(min(j, k) + 1):
        fa = factorial(alpha)
        for beta in range(alpha + 1):
            v = alpha - beta
            c_ab = fa * comb(alpha, beta)
            for kappa in range(i + 1):
                for delta in range(i - kappa + 1):
                    if k - alpha - delta < 0:
                        break
                    for eps in range(i - kappa - delta + 1):
                        if j - alpha - eps < 0:
                            break
                        c_de = c_ab * factorial(delta + eps)
                        for zeta in range(i - kappa - delta - eps + 1):
                            st = stirling2(i - kappa - zeta, delta + eps)
                            if not st:
                                continue
                            vz = v**zeta if zeta else 1
                            if not vz:
                                continue
                            c_z = c_de * vz * multinomial(i, kappa, zeta) * st
                            for eta in range(j - alpha - eps + 1):
                                ff2_top = j - alpha - eta
                                for theta in range(j - alpha - eps - eta + 1):
                                    c_j = c_z * multinomial(j, alpha, eps, eta, theta)
                                    for lam in range(k - alpha - delta + 1):
                                        ff1 = falling_factorial(n, k - alpha - lam)
                                        if not ff1:
                                            continue
                                        ff2 = falling_factorial(p + lam, ff2_top)
                                        if not ff2:
                                            continue
                                        c_l = c_j * ff1 * ff2
                                        if (i + j + k + alpha - beta - kappa - eps
                                                - eta - theta - lam) % 2:
                                            c_l = -c_l
                                        mono_tail = (
                                            -k + n + alpha + eta + lam,
                                            -j + p + alpha + eta + lam,
                                            j + k + l + q - alpha - eta - lam,
                                            m + s,
                                        )
                                        for mu in range(k - alpha - delta - lam + 1):
                                            c_mu = c_l * multinomial(k, alpha, delta, lam, mu)
                                            w0 = (j + k - l - 2 * alpha - beta - 2 * delta
                                                  - 2 * eps - 2 * theta - 2 * mu)
                                            for nu in range(r + 1):
                                                omega_nu = qgamma.linear_power(w0, -m, nu)
                                                if not omega_nu:
                                                    continue
                                                c = c_mu * comb(r, nu)
                                                mono = (r + kappa - nu,) + mono_tail
                                                term = qgamma.scale(omega_nu, c)
                                                prev = acc.get(mono)
                                                acc[mono] = term if prev is None else qgamma.add(prev, term)
    return Element._wrap({mo: c for mo, c in acc.items() if c})


def mul(x, y, engine=None):
    """Bilinear product of Elements; ``engine`` maps monomial pairs to Elements."""
    engine = mul_closed if engine is None else engine
    out = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            _accumulate(out, engine(mx, my).terms, qgamma.mul(cx, cy))
    return Element._wrap(out)


def commutator(x, y, engine=None):
    return mul(x, y, engine) - mul(y, x, engine)


def associator(x, y, z, engine=None):
    """(x y) z - x (y z)."""
    return mul(mul(x, y, engine), z, engine) - mul(x, mul(y, z, engine), engine)


def gamma_eval(x, gamma0):
    """Substitute a nonzero rational value for gamma."""
    gamma0 = Fraction(gamma0)
    if gamma0 == 0:
        raise DomainError("gamma must be nonzero")
    out = {}
    for mono, c in x.terms.items():
        v = qgamma.const(qgamma.evaluate(c, gamma0))
        if v:
            out[mono] = v
    return type(x)._wrap(out)
