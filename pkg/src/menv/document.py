"""JSON documents holding one element of U(M_gamma).

Layout::

    {"gamma":"symbolic","terms":[{"mono":[0,0,0,1,2],"coeff":["1"]}]}

``coeff`` lists the coefficients of gamma^0, gamma^1, ... as rational
strings with no trailing zeros.  Terms are sorted by monomial and the text
uses compact separators, so equal elements serialize to identical bytes.
"""

import json
from fractions import Fraction

from . import qgamma
from .center import GammaMode
from .core import Element


class SchemaError(ValueError):
    pass


def serialize(x, gamma=None):
    """ElementDocument text for ``x``; ``gamma`` is None, a GammaMode or a rational."""
    mode = gamma if isinstance(gamma, GammaMode) else GammaMode(gamma)
    if not mode.symbolic and any(len(c) > 1 for c in x.terms.values()):
        raise SchemaError("instantiated documents need constant coefficients")
    terms = [{"mono": list(m), "coeff": qgamma.to_strings(c)} for m, c in sorted(x.terms.items())]
    return json.dumps({"gamma": str(mode), "terms": terms}, separators=(",", ":"))


def _rational(text, where):
    if not isinstance(text, str):
        raise SchemaError(f"{where}: coefficient entries must be strings")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: {text!r} is not a rational number") from exc


def read_document(text):
    """Parse document text into ``(element, GammaMode)``, validating the schema."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"gamma", "terms"}:
        raise SchemaError("document must be an object with keys 'gamma' and 'terms'")
    g = doc["gamma"]
    if not isinstance(g, str):
        raise SchemaError("'gamma' must be a string")
    if g == "symbolic":
        mode = GammaMode()
    else:
        value = _rational(g, "gamma")
        if value == 0:
            raise SchemaError("gamma must be nonzero")
        mode = GammaMode(value)
    if not isinstance(doc["terms"], list):
        raise SchemaError("'terms' must be a list")
    terms = {}
    for n, term in enumerate(doc["terms"]):
        where = f"terms[{n}]"
        if not isinstance(term, dict) or set(term) != {"mono", "coeff"}:
            raise SchemaError(f"{where}: expected an object with keys 'mono' and 'coeff'")
        mono = term["mono"]
        if (not isinstance(mono, list) or len(mono) != 5
                or not all(type(e) is int and e >= 0 for e in mono)):
            raise SchemaError(f"{where}: 'mono' must be five nonnegative integers")
        coeff = term["coeff"]
        if not isinstance(coeff, list) or not coeff:
            raise SchemaError(f"{where}: 'coeff' must be a nonempty list")
        c = tuple(_rational(s, where) for s in coeff)
        if c[-1] == 0:
            raise SchemaError(f"{where}: 'coeff' has a trailing zero")
        if not mode.symbolic and len(c) > 1:
            raise SchemaError(f"{where}: instantiated documents need constant coefficients")
        if tuple(mono) in terms:
            raise SchemaError(f"{where}: duplicate monomial {mono}")
        terms[tuple(mono)] = qgamma.trim(c)
    return Element(terms), mode


def deserialize(text):
    """The element stored in a document."""
    return read_document(text)[0]
