"""Exact rational helpers: parsing, common denominators, row reduction."""

from fractions import Fraction
from math import lcm

import numpy as np

from .errors import BadRational

_INT64_SAFE = 2**62


def parse_rational(value):
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction.

    Floats and decimal strings are rejected: structure constants are exact.
    """
    if isinstance(value, bool):
        raise BadRational(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if "." in s or "e" in s.lower():
            raise BadRational(f"decimal rationals are not allowed: {value!r}")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise BadRational(f"not a rational: {value!r}") from None
    raise BadRational(f"not a rational: {value!r}")


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def common_denominator(values):
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d


def int_array(values, shape=None):
    """Integer array, int64 when every entry is comfortably small, else object."""
    vals = [int(v) for v in values]
    big = max((abs(v) for v in vals), default=0)
    arr = np.array(vals, dtype=np.int64 if big < 2**31 else object)
    return arr.reshape(shape) if shape is not None else arr


def exact_matmul(a, b):
    """Product of two integer arrays without silent int64 overflow."""
    if a.dtype == object or b.dtype == object:
        return np.asarray(a, dtype=object) @ np.asarray(b, dtype=object)
    inner = a.shape[-1] if a.ndim else 1
    amax = int(np.abs(a).max(initial=0))
    bmax = int(np.abs(b).max(initial=0))
    if amax * bmax * max(inner, 1) < _INT64_SAFE:
        return a @ b
    return a.astype(object) @ b.astype(object)


def rref(rows, ncols=None):
    """Reduced row echelon form over Q.

    ``rows`` is a sequence of sequences; entries are converted to Fraction.
    Returns ``(reduced_rows, pivot_columns)`` with zero rows dropped.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    if not len(rows):
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(matrix):
    """Exact basis (list of Fraction vectors) of ``{x : matrix @ x = 0}``."""
    matrix = [list(r) for r in matrix]
    ncols = len(matrix[0]) if matrix else 0
    red, pivots = rref(matrix, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


def in_span(basis_rref, vector):
    """True iff ``vector`` lies in the row space given by an rref basis."""
    red, pivots = basis_rref
    v = [Fraction(x) for x in vector]
    for row, pc in zip(red, pivots):
        if v[pc] != 0:
            f = v[pc]
            v = [x - f * y for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def clear_denominators(vector):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    from math import gcd

    d = common_denominator(vector)
    ints = [int(Fraction(x) * d) for x in vector]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints
