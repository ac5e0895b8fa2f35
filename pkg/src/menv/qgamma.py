"""Polynomials in the structure parameter gamma with rational coefficients.

A coefficient is a plain tuple ``(c0, c1, ...)`` holding the coefficient of
``gamma**t`` at index ``t``.  Entries are ``int`` or ``fractions.Fraction``.
Tuples are always trimmed, so the zero polynomial is ``()`` and equality of
tuples is equality of polynomials.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

ZERO = ()
ONE = (1,)
GAMMA = (0, 1)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(_norm(c) for c in coeffs)


def const(c):
    """Embed a rational scalar."""
    c = _norm(c)
    return (c,) if c else ()


def coerce(value):
    """Accept an int, Fraction, rational string or coefficient sequence."""
    if isinstance(value, (tuple, list)):
        return trim(value)
    if isinstance(value, str):
        return const(Fraction(value))
    return const(value)


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    if not q:
        return p
    out = list(p)
    for t, c in enumerate(q):
        out[t] += c
    if len(p) == len(q):
        return trim(out)
    return tuple(_norm(c) for c in out)


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if not c:
        return ()
    return tuple(_norm(x * c) for x in p)


def mul(p, q):
    if not p or not q:
        return ()
    if len(q) == 1:
        return scale(p, q[0])
    if len(p) == 1:
        return scale(q, p[0])
    out = [0] * (len(p) + len(q) - 1)
    for s, x in enumerate(p):
        if x:
            for t, y in enumerate(q):
                out[s + t] += x * y
    return trim(out)


@lru_cache(maxsize=4096)
def power(p, n):
    if n == 0:
        return ONE
    if n == 1:
        return p
    half = power(p, n // 2)
    sq = mul(half, half)
    return mul(sq, p) if n % 2 else sq


def linear(c0, c1):
    """The polynomial ``c0 + c1*gamma``."""
    return trim((c0, c1))


@lru_cache(maxsize=8192)
def linear_power(c0, c1, n):
    """Expand ``(c0 + c1*gamma)**n`` by the binomial theorem (0**0 = 1)."""
    return trim(comb(n, t) * c0 ** (n - t) * c1**t for t in range(n + 1))


def evaluate(p, g):
    acc = 0
    for c in reversed(p):
        acc = acc * g + c
    return _norm(acc) if isinstance(acc, Fraction) else acc


def degree(p):
    return len(p) - 1


def to_strings(p):
    return [str(Fraction(c)) for c in p]


def from_strings(items):
    return trim(Fraction(s) for s in items)


def pretty(p, var="g"):
    """Human readable form such as ``2 g^2 - 1/3``."""
    if not p:
        return "0"
    parts = []
    for t in range(len(p) - 1, -1, -1):
        c = p[t]
        if not c:
            continue
        mag = abs(c)
        if t == 0:
            body = str(mag)
        else:
            v = var if t == 1 else f"{var}^{t}"
            body = v if mag == 1 else f"{mag} {v}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
