"""Expression language for elements of U(M_gamma).

Grammar (whitespace is insignificant between tokens)::

    expr    := ['-'] product (('+' | '-') product)*
    product := unary ['*' unary]          # a second '*' is an error
    unary   := scalar [factor] | factor
    scalar  := INT ['/' INT] ['g' ['^' INT]] | 'g' ['^' INT]
    factor  := '(' expr ')' | call | monomial
    call    := ('comm' | 'assoc' | 'ad') '(' expr (',' expr)* ')'
    monomial:= GEN ['^' INT] (GEN ['^' INT])*    # generators in order a<b<c<d<e

``g`` is the parameter gamma.  A monomial literal such as ``a^2 b e`` is the
left-tapped basis element itself.  Products never associate implicitly:
``a*b*c`` is rejected, write ``(a*b)*c`` or ``a*(b*c)``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import INDEX, Element, gamma_eval, mono_str, mul
from .operators import operator_mul_elements
from .oracle import oracle_mul


class ParseError(ValueError):
    def __init__(self, message, pos=None):
        self.pos = pos
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}")


class AmbiguityError(ParseError):
    pass


class OrderError(ParseError):
    pass


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Mono:
    exps: tuple


@dataclass(frozen=True)
class Scalar:
    value: Fraction
    gpow: int = 0


@dataclass(frozen=True)
class Scale:
    scalar: Scalar
    arg: object


@dataclass(frozen=True)
class Prod:
    left: object
    right: object


@dataclass(frozen=True)
class Add:
    terms: tuple  # of (sign, node), sign in {+1, -1}


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


ARITY = {"comm": 2, "assoc": 3, "ad": 2}

_TOKEN = re.compile(r"\s*(?:(\d+)|(comm|assoc|ad)\b|([a-eg])|([()*+\-,/^]))")


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("INT", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("CALL", m.group(2), start))
        elif m.group(3):
            kind = "G" if m.group(3) == "g" else "GEN"
            tokens.append((kind, m.group(3), start))
        else:
            tokens.append((m.group(4), m.group(4), start))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.n = 0

    @property
    def tok(self):
        return self.tokens[self.n]

    def take(self, kind=None):
        tok = self.tok
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {found}", tok[2])
        self.n += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.tok[0] != "EOF":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return node

    def expr(self):
        terms = []
        sign = 1
        if self.tok[0] == "-":
            self.take()
            sign = -1
        terms.append((sign, self.product()))
        while self.tok[0] in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
            terms.append((sign, self.product()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(tuple(terms))

    def product(self):
        left = self.unary()
        if self.tok[0] != "*":
            return left
        self.take()
        right = self.unary()
        if self.tok[0] == "*":
            raise AmbiguityError(
                "chained '*' is ambiguous in a nonassociative algebra; "
                "add parentheses such as (x*y)*z or x*(y*z)",
                self.tok[2],
            )
        return Prod(left, right)

    def unary(self):
        if self.tok[0] in ("INT", "G"):
            scalar = self.scalar()
            if self.tok[0] in ("(", "CALL", "GEN"):
                return Scale(scalar, self.factor())
            return scalar
        return self.factor()

    def scalar(self):
        value = Fraction(1)
        gpow = 0
        if self.tok[0] == "INT":
            num = self.take()[1]
            den = 1
            if self.tok[0] == "/":
                self.take()
                tok = self.take("INT")
                den = tok[1]
                if den == 0:
                    raise ParseError("zero denominator", tok[2])
            value = Fraction(num, den)
        if self.tok[0] == "G":
            self.take()
            gpow = 1
            if self.tok[0] == "^":
                self.take()
                gpow = self.take("INT")[1]
        return Scalar(value, gpow)

    def factor(self):
        kind = self.tok[0]
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "CALL":
            return self.call()
        if kind == "GEN":
            return self.monomial()
        found = "end of input" if kind == "EOF" else repr(self.tok[1])
        raise ParseError(f"expected a factor, found {found}", self.tok[2])

    def call(self):
        name, pos = self.take()[1], self.tokens[self.n - 1][2]
        self.take("(")
        args = [self.expr()]
        while self.tok[0] == ",":
            self.take()
            args.append(self.expr())
        self.take(")")
        if len(args) != ARITY[name]:
            raise ParseError(f"{name} takes {ARITY[name]} arguments, got {len(args)}", pos)
        if name == "ad" and not (isinstance(args[0], Mono) and sum(args[0].exps) == 1):
            raise ParseError("first argument of ad must be a generator", pos)
        return Call(name, tuple(args))

    def monomial(self):
        exps = [0] * 5
        last = -1
        while self.tok[0] == "GEN":
            g, pos = self.take()[1:]
            n = INDEX[g]
            if n <= last:
                raise OrderError(
                    f"generator {g!r} out of order in monomial literal; "
                    "write generators in the order a, b, c, d, e with powers",
                    pos,
                )
            power = 1
            if self.tok[0] == "^":
                self.take()
                power = self.take("INT")[1]
                if power == 0:
                    raise ParseError("zero exponent in monomial literal", pos)
            exps[n] = power
            last = n
        return Mono(tuple(exps))


def parse(text):
    """Parse an expression into an AST."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printing


def _scalar_str(s):
    if s.gpow == 0:
        return str(s.value)
    g = "g" if s.gpow == 1 else f"g^{s.gpow}"
    return g if s.value == 1 else f"{s.value} {g}"


def _wrapped(node):
    if isinstance(node, (Mono, Call)):
        return to_text(node)
    return f"({to_text(node)})"


def _operand(node):
    if isinstance(node, (Prod, Add)):
        return f"({to_text(node)})"
    return to_text(node)


def to_text(node):
    """Canonical text; ``parse(to_text(t)) == t`` for every parsed AST."""
    if isinstance(node, Mono):
        return mono_str(node.exps)
    if isinstance(node, Scalar):
        return _scalar_str(node)
    if isinstance(node, Scale):
        return f"{_scalar_str(node.scalar)} {_wrapped(node.arg)}"
    if isinstance(node, Prod):
        return f"{_operand(node.left)}*{_operand(node.right)}"
    if isinstance(node, Call):
        return f"{node.name}(" + ", ".join(to_text(a) for a in node.args) + ")"
    if isinstance(node, Add):
        out = ""
        for n, (sign, term) in enumerate(node.terms):
            body = f"({to_text(term)})" if isinstance(term, Add) else to_text(term)
            if n == 0:
                out = ("-" if sign < 0 else "") + body
            else:
                out += (" - " if sign < 0 else " + ") + body
        return out
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# Evaluation

ENGINES = {
    "closed": mul,
    "operator": operator_mul_elements,
    "oracle": oracle_mul,
}


def _scalar_coeff(s):
    return (0,) * s.gpow + (s.value,)


def evaluate(node, engine="closed", gamma=None):
    """Evaluate an AST to an Element with one of the three product engines.

    ``gamma`` is None for symbolic gamma or a nonzero rational.
    """
    prod = ENGINES[engine]
    value = _eval(node, prod, Element)
    if gamma is not None:
        value = gamma_eval(value, gamma)
    return value


def _eval(node, prod, cls):
    if isinstance(node, Mono):
        return cls.monomial(node.exps)
    if isinstance(node, Scalar):
        return cls.scalar(_scalar_coeff(node))
    if isinstance(node, Scale):
        return _eval(node.arg, prod, cls).scale(_scalar_coeff(node.scalar))
    if isinstance(node, Prod):
        return prod(_eval(node.left, prod, cls), _eval(node.right, prod, cls))
    if isinstance(node, Add):
        out = cls.zero()
        for sign, term in node.terms:
            v = _eval(term, prod, cls)
            out = out + v if sign > 0 else out - v
        return out
    if isinstance(node, Call):
        args = [_eval(a, prod, cls) for a in node.args]
        if node.name == "comm":
            return prod(args[0], args[1]) - prod(args[1], args[0])
        if node.name == "ad":
            s, x = args
            return prod(x, s) - prod(s, x)
        x, y, z = args
        return prod(prod(x, y), z) - prod(x, prod(y, z))
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_alt(node, gamma=None):
    """Evaluate an AST in the alternative quotient A(M) = U(M)/J."""
    from .alternative import AltElement, alt_mul

    value = _eval(node, alt_mul, _AltFactory(AltElement))
    if gamma is not None:
        value = gamma_eval(value, gamma)
    return value


class _AltFactory:
    def __init__(self, cls):
        self.cls = cls

    def monomial(self, exps):
        from .alternative import reduce_mod_J

        return reduce_mod_J(Element.monomial(exps))

    def scalar(self, c):
        return self.cls.scalar(c)

    def zero(self):
        return self.cls.zero()


__all__ = [
    "Add",
    "AmbiguityError",
    "Call",
    "ENGINES",
    "Mono",
    "OrderError",
    "ParseError",
    "Prod",
    "Scalar",
    "Scale",
    "evaluate",
    "evaluate_alt",
    "parse",
    "to_text",
]
