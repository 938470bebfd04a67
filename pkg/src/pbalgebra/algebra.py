"""Positively based algebras as exact data.

An algebra of dimension ``n`` is stored as a sparse map of structure
constants ``gamma[(i, j, k)]`` with ``a_i * a_j = sum_k gamma[(i, j, k)] a_k``.
Constants are exact :class:`~fractions.Fraction` values; iteration order is
lexicographic in ``(i, j, k)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from . import kernels
from .errors import (
    AssociativityFailed,
    DimensionMismatch,
    DomainError,
    InvalidAlgebra,
    NegativeConstant,
    SizeCapExceeded,
    UnitAxiomFailed,
)
from .exact import common_denominator, format_rational, int_array, parse_rational

DEFAULT_MAX_DIM = 400


@dataclass(frozen=True, eq=False)
class PBAlgebra:
    dim: int
    labels: tuple
    unit_index: int
    gamma: Mapping = field(repr=False)

    def __post_init__(self):
        n = int(self.dim)
        if n < 1:
            raise DomainError("dimension must be positive")
        labels = tuple(str(x) for x in self.labels)
        if len(labels) != n:
            raise DimensionMismatch(f"{len(labels)} labels for dimension {n}")
        if len(set(labels)) != n:
            raise DomainError("basis labels must be distinct")
        if not 0 <= self.unit_index < n:
            raise DomainError(f"unit index {self.unit_index} out of range")
        gamma = {}
        for key, val in self.gamma.items():
            i, j, k = (int(x) for x in key)
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise DomainError(f"structure constant index {key} out of range")
            q = parse_rational(val)
            if q != 0:
                gamma[(i, j, k)] = gamma.get((i, j, k), 0) + q
        gamma = {key: gamma[key] for key in sorted(gamma) if gamma[key] != 0}
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "unit_index", int(self.unit_index))
        object.__setattr__(self, "gamma", gamma)

    def __eq__(self, other):
        if not isinstance(other, PBAlgebra):
            return NotImplemented
        return (self.dim, self.labels, self.unit_index, self.gamma) == (
            other.dim, other.labels, other.unit_index, other.gamma)

    __hash__ = None

    # -- array views (built lazily, never mutated) -----------------------

    @cached_property
    def triples(self):
        """``(I, J, K)`` int64 index arrays in lexicographic order."""
        if not self.gamma:
            z = np.zeros(0, dtype=np.int64)
            return z, z.copy(), z.copy()
        arr = np.array(list(self.gamma), dtype=np.int64)
        return arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy()

    @cached_property
    def values(self):
        return tuple(self.gamma.values())

    @cached_property
    def denominator(self):
        """Common denominator ``D``; ``D * gamma`` is integral."""
        return common_denominator(self.values)

    @cached_property
    def scaled_values(self):
        """Integer array ``D * gamma`` aligned with :attr:`triples`."""
        d = self.denominator
        return int_array([v * d for v in self.values])

    @cached_property
    def float_values(self):
        return np.array([float(v) for v in self.values], dtype=np.float64)

    @cached_property
    def pair_ptr(self):
        """CSR pointer over the flattened pair ``i*n + j`` into :attr:`triples`."""
        i, j, _ = self.triples
        n = self.dim
        counts = np.bincount(i * n + j, minlength=n * n)
        ptr = np.zeros(n * n + 1, dtype=np.int64)
        np.cumsum(counts, out=ptr[1:])
        return ptr

    @cached_property
    def is_integral(self):
        return self.denominator == 1

    # -- JSON ------------------------------------------------------------

    def to_dict(self):
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "unit_index": self.unit_index,
            "gamma": [[i, j, k, format_rational(v)] for (i, j, k), v in self.gamma.items()],
        }

    @classmethod
    def from_dict(cls, doc):
        try:
            gamma = {}
            for entry in doc["gamma"]:
                i, j, k, val = entry
                key = (int(i), int(j), int(k))
                gamma[key] = gamma.get(key, 0) + parse_rational(val)
            return cls(int(doc["dim"]), tuple(doc["labels"]), int(doc["unit_index"]), gamma)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed algebra document: {exc}") from exc

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    # -- small conveniences ------------------------------------------------

    def index(self, label):
        return self.labels.index(str(label))

    def basis_vector(self, i):
        e = [Fraction(0)] * self.dim
        e[i] = Fraction(1)
        return e

    def unit(self):
        return self.basis_vector(self.unit_index)


# -- element vectors --------------------------------------------------------

def _is_float(x):
    return isinstance(x, np.ndarray) and x.dtype.kind == "f"


def _check_len(alg, *vecs):
    for v in vecs:
        if len(v) != alg.dim:
            raise DimensionMismatch(f"vector of length {len(v)} for dimension {alg.dim}")


def multiply(alg: PBAlgebra, x: Sequence, y: Sequence):
    """Product of two elements given by coordinates in the basis.

    Exact (list of Fractions) unless one of the inputs is a float ndarray,
    in which case a float ndarray is returned.
    """
    _check_len(alg, x, y)
    if _is_float(x) or _is_float(y):
        i, j, k = alg.triples
        return kernels.bilinear(i, j, k, alg.float_values,
                                np.asarray(x, dtype=np.float64),
                                np.asarray(y, dtype=np.float64), alg.dim)
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    out = [Fraction(0)] * alg.dim
    for (i, j, k), g in alg.gamma.items():
        if x[i] and y[j]:
            out[k] += g * x[i] * y[j]
    return out


def basis_action(alg: PBAlgebra, i: int):
    """Exact integer matrix ``D * action(a_i)`` (``D`` = :attr:`PBAlgebra.denominator`).

    Entry ``(k, j)`` is ``D * gamma(i, j, k)``.
    """
    n = alg.dim
    ptr = alg.pair_ptr
    lo, hi = ptr[i * n], ptr[i * n + n]
    _, J, K = alg.triples
    vals = alg.scaled_values
    out = np.zeros((n, n), dtype=vals.dtype)
    out[K[lo:hi], J[lo:hi]] = vals[lo:hi]
    return out


def action_matrix(alg: PBAlgebra, x: Sequence):
    """Matrix of left multiplication by ``x`` on the regular module.

    Column ``j`` is ``multiply(x, a_j)``.  Exact Fraction object array for
    exact input, float array for float input.
    """
    _check_len(alg, x)
    n = alg.dim
    I, J, K = alg.triples
    if _is_float(x):
        out = np.zeros((n, n))
        np.add.at(out, (K, J), alg.float_values * np.asarray(x)[I])
        return out
    out = np.full((n, n), Fraction(0), dtype=object)
    for (i, j, k), g in alg.gamma.items():
        if x[i]:
            out[k, j] += g * Fraction(x[i])
    return out


def star(alg: PBAlgebra, i: int, j: int):
    """Support ``{k : gamma(i, j, k) > 0}`` of ``a_i a_j``."""
    n = alg.dim
    if not (0 <= i < n and 0 <= j < n):
        raise DomainError(f"index out of range: ({i}, {j})")
    ptr = alg.pair_ptr
    lo, hi = ptr[i * n + j], ptr[i * n + j + 1]
    _, _, K = alg.triples
    return frozenset(int(k) for k, v in zip(K[lo:hi], alg.values[lo:hi]) if v > 0)


# -- validation -------------------------------------------------------------

@dataclass
class ValidationReport:
    violations: list
    associativity_failures: int = 0
    backend: str = ""

    @property
    def ok(self):
        return not self.violations

    def raise_if_invalid(self):
        if self.violations:
            raise InvalidAlgebra(self)

    def as_dict(self):
        return {
            "valid": self.ok,
            "violations": [v.as_dict() for v in self.violations],
            "associativity_failures": self.associativity_failures,
        }


def _unit_failures(alg):
    n, u = alg.dim, alg.unit_index
    ptr = alg.pair_ptr
    _, _, K = alg.triples
    fails = []
    for side in ("left", "right"):
        for i in range(n):
            row = u * n + i if side == "left" else i * n + u
            lo, hi = ptr[row], ptr[row + 1]
            entries = {int(k): v for k, v in zip(K[lo:hi], alg.values[lo:hi])}
            if entries != {i: 1}:
                fails.append(UnitAxiomFailed(side, i))
    return fails


def associativity_failures(alg: PBAlgebra, limit: int = 100):
    """``(count, [(i, j, l), ...])`` of non-associative basis triples (exact)."""
    n = alg.dim
    vals = alg.scaled_values
    ptr = alg.pair_ptr
    _, _, K = alg.triples
    row_nnz = int(np.diff(ptr).max(initial=0))
    vmax = int(np.abs(vals).max(initial=0)) if len(vals) else 0
    safe = vals.dtype == np.int64 and 2 * (vmax * row_nnz) ** 2 * max(n, 1) < 2**62
    impl = kernels if safe else kernels._pykernels
    return impl.assoc_violations(ptr, K, np.ascontiguousarray(vals, dtype=np.int64) if safe else vals,
                                 n, limit)


def validate(alg: PBAlgebra, max_dim: int = DEFAULT_MAX_DIM, override: bool = False,
             limit: int = 100) -> ValidationReport:
    """Check nonnegativity, the unit axioms and associativity exhaustively."""
    if alg.dim > max_dim and not override:
        raise SizeCapExceeded(f"dimension {alg.dim} exceeds validation cap {max_dim}")
    violations = [NegativeConstant(i, j, k, v) for (i, j, k), v in alg.gamma.items() if v < 0]
    violations += _unit_failures(alg)
    count, found = associativity_failures(alg, limit)
    violations += [AssociativityFailed(*t) for t in found]
    return ValidationReport(violations, count, kernels.BACKEND)
