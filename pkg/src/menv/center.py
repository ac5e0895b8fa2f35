"""Center of U(M_gamma).

The center coincides with the commutative center, so ``n`` is central iff
``[n, s] = 0`` for the five generators.  Since ``[d^l e^m, a] = -(l + m gamma)
d^l e^m``, a nontrivial center needs gamma = -l/m < 0: it is then the
polynomial algebra on ``d^l e^m`` (l/m in lowest terms), and only the scalars
for every other gamma.  :func:`center_search` recomputes this by brute force
in a bounded degree.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import qgamma
from .core import GENS, DomainError, Element, monomials_up_to
from .operators import adjoint_op, apply


@dataclass(frozen=True)
class GammaMode:
    """Either symbolic gamma (``value is None``) or a fixed nonzero rational."""

    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None:
            v = Fraction(self.value)
            if v == 0:
                raise DomainError("gamma must be nonzero")
            object.__setattr__(self, "value", v)

    @property
    def symbolic(self):
        return self.value is None

    @classmethod
    def parse(cls, text):
        if text in (None, "symbolic"):
            return cls()
        try:
            return cls(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad gamma value {text!r}") from exc

    def __str__(self):
        return "symbolic" if self.value is None else str(self.value)


SYMBOLIC = GammaMode()


def _as_mode(mode):
    if isinstance(mode, GammaMode):
        return mode
    return GammaMode.parse(None if mode is None else str(mode))


def ad_action(s, x):
    """[x, s] computed with the adjoint operator of s."""
    if isinstance(x, tuple):
        x = Element.monomial(x)
    return apply(adjoint_op(s), x)


def _vanishes(x, mode):
    if mode.symbolic:
        return not x
    return all(qgamma.evaluate(c, mode.value) == 0 for c in x.terms.values())


def is_central(x, mode=SYMBOLIC):
    mode = _as_mode(mode)
    return all(_vanishes(ad_action(s, x), mode) for s in GENS)


def center_generator(gamma0):
    """The monomial d^l e^m generating the center when gamma0 = -l/m < 0.

    Returns None for positive gamma0, where the center is the scalars.
    """
    gamma0 = Fraction(gamma0)
    if gamma0 == 0:
        raise DomainError("gamma must be nonzero")
    if gamma0 > 0:
        return None
    return (0, 0, 0, -gamma0.numerator, gamma0.denominator)


def _kernel(columns):
    """Basis of the kernel of the linear map sending unit vector j to ``columns[j]``.

    ``columns`` is a list of sparse dicts row -> Fraction.  Returns sparse
    dicts column -> Fraction in reduced echelon form.
    """
    pivots = {}  # row -> (image vector, combination)
    kernel = []
    for j, col in enumerate(columns):
        vec = dict(col)
        combo = {j: Fraction(1)}
        while vec:
            row = max(vec)
            if row not in pivots:
                break
            pvec, pcombo = pivots[row]
            f = vec[row] / pvec[row]
            for r, c in pvec.items():
                v = vec.get(r, 0) - f * c
                if v:
                    vec[r] = v
                else:
                    vec.pop(r, None)
            for r, c in pcombo.items():
                v = combo.get(r, 0) - f * c
                if v:
                    combo[r] = v
                else:
                    combo.pop(r, None)
        if vec:
            pivots[max(vec)] = (vec, combo)
        else:
            kernel.append(combo)
    return _rref(kernel)


def _rref(vectors):
    rows = [dict(v) for v in vectors]
    done = []
    for v in rows:
        for lead, w in done:
            if lead in v:
                f = v[lead]
                for r, c in w.items():
                    x = v.get(r, 0) - f * c
                    if x:
                        v[r] = x
                    else:
                        v.pop(r, None)
        if not v:
            continue
        lead = max(v)
        f = v[lead]
        v = {r: c / f for r, c in v.items()}
        for n, (lead2, w) in enumerate(done):
            if lead in w:
                g = w[lead]
                for r, c in v.items():
                    x = w.get(r, 0) - g * c
                    if x:
                        w[r] = x
                    else:
                        w.pop(r, None)
        done.append((lead, v))
    done.sort()
    return [v for _, v in done]


def center_search(max_degree, mode=SYMBOLIC, a_free_only=False):
    """Basis of {n : deg n <= max_degree, [n, s] = 0 for all generators s}.

    Solved exactly over Q.  In symbolic mode the brackets must vanish
    coefficientwise in gamma.
    """
    mode = _as_mode(mode)
    monos = [m for m in monomials_up_to(max_degree) if not (a_free_only and m[0])]
    columns = []
    for mono in monos:
        col = {}
        for n, s in enumerate(GENS):
            image = ad_action(s, mono)
            for out, c in image.terms.items():
                if mode.symbolic:
                    for t, v in enumerate(c):
                        if v:
                            col[(n, out, t)] = Fraction(v)
                else:
                    v = qgamma.evaluate(c, mode.value)
                    if v:
                        col[(n, out, 0)] = Fraction(v)
        columns.append(col)
    basis = []
    for vec in _kernel(columns):
        basis.append(Element({monos[j]: c for j, c in vec.items()}))
    basis.sort(key=lambda x: (x.degree(), sorted(x.terms)))
    return basis
