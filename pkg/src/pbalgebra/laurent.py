"""Laurent polynomials in ``v`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Sparse ``{exponent: coefficient}``; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for e, a in (coeffs or {}).items():
            a = Fraction(a)
            if a:
                c[int(e)] = c.get(int(e), 0) + a
        self._c = {e: a for e, a in sorted(c.items()) if a}

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def from_dense(cls, coeffs, lowest=0):
        return cls({lowest + p: a for p, a in enumerate(coeffs) if a})

    @property
    def coeffs(self):
        return dict(self._c)

    def __getitem__(self, exp):
        return self._c.get(exp, Fraction(0))

    def __iter__(self):
        return iter(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``v**k``."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def bar(self):
        """The involution ``v -> v^-1``."""
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def evaluate(self, v):
        return sum((a * Fraction(v) ** e for e, a in self._c.items()), Fraction(0))

    def min_degree(self):
        return min(self._c) if self._c else None

    def max_degree(self):
        return max(self._c) if self._c else None

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for e, a in self._c.items():
            if e == 0:
                terms.append(str(a))
            else:
                mono = "v" if e == 1 else f"v^{e}"
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly({0: x})


V = LaurentPoly.monomial(1)
