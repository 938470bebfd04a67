"""Algebras and based modules from groups, transformation monoids and cosets.

Composition of transformations is ``(f * g)(x) = f(g(x))``.  With this
convention the left cells of a monoid algebra are Green's L-classes
``S x = S y``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import PBAlgebra
from .errors import DomainError, NoIdentity, NotAssociative, NotASubgroup, SizeCapExceeded
from .modules import BasedModule

DEFAULT_MONOID_CAP = 1000


@dataclass(frozen=True)
class Transformation:
    images: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        m = len(images)
        if any(not 0 <= x < m for x in images):
            raise DomainError(f"image out of range in {images}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, m):
        return cls(tuple(range(m)))

    def __mul__(self, other):
        """``(self * other)(x) = self(other(x))``."""
        return Transformation(tuple(self.images[x] for x in other.images))

    def label(self):
        sep = "" if self.degree <= 10 else ","
        return sep.join(str(x) for x in self.images)


@dataclass(frozen=True)
class CayleyTable:
    table: tuple
    labels: tuple

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        m = len(table)
        if any(len(row) != m for row in table):
            raise DomainError("Cayley table must be square")
        if any(not 0 <= x < m for row in table for x in row):
            raise DomainError("Cayley table entry out of range")
        labels = tuple(str(x) for x in self.labels) if self.labels else tuple(map(str, range(m)))
        if len(labels) != m:
            raise DomainError("label count differs from table order")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "labels", labels)

    @property
    def order(self):
        return len(self.table)

    def identity(self):
        t = self.table
        r = range(self.order)
        for e in r:
            if all(t[e][x] == x == t[x][e] for x in r):
                return e
        raise NoIdentity("table has no two-sided identity")

    def check_associative(self):
        t = np.array(self.table)
        # (xy)z == x(yz) for all triples, vectorised
        left = t[t[:, :, None], np.arange(self.order)[None, None, :]]
        right = t[np.arange(self.order)[:, None, None], t[None, :, :]]
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = (int(x) for x in bad[0])
            raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})")

    def is_group(self):
        rows = all(sorted(row) == list(range(self.order)) for row in self.table)
        cols = all(sorted(col) == list(range(self.order)) for col in zip(*self.table))
        return rows and cols

    def to_dict(self):
        return {"labels": list(self.labels), "table": [list(r) for r in self.table]}

    @classmethod
    def from_dict(cls, doc):
        return cls(doc["table"], tuple(doc.get("labels") or ()))


def from_cayley_table(t: CayleyTable) -> PBAlgebra:
    """Monoid algebra in the standard basis: ``gamma(i, j, t[i][j]) = 1``."""
    unit = t.identity()
    t.check_associative()
    gamma = {(i, j, k): 1 for i, row in enumerate(t.table) for j, k in enumerate(row)}
    return PBAlgebra(t.order, t.labels, unit, gamma)


def monoid_closure(gens: Iterable, cap: int = DEFAULT_MONOID_CAP) -> CayleyTable:
    """Cayley table of the transformation monoid generated by ``gens``.

    Generators are deduplicated and sorted, so the result does not depend on
    the order they are given in.  Elements appear in breadth-first discovery
    order (identity first, then words of length 1, 2, ...).
    """
    gens = sorted({g if isinstance(g, Transformation) else Transformation(tuple(g)) for g in gens},
                  key=lambda g: g.images)
    if not gens:
        raise DomainError("at least one generator is required")
    m = gens[0].degree
    if any(g.degree != m for g in gens):
        raise DomainError("generators act on sets of different sizes")
    ident = Transformation.identity(m)
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in index:
                if len(elements) >= cap:
                    raise SizeCapExceeded(f"monoid closure exceeds {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    table = [[index[x * y] for y in elements] for x in elements]
    return CayleyTable(table, tuple(x.label() for x in elements))


def permutation_group(gens: Iterable, cap: int = DEFAULT_MONOID_CAP) -> CayleyTable:
    """Cayley table of the group generated by permutations (as transformations)."""
    t = monoid_closure(gens, cap)
    if not t.is_group():
        raise DomainError("generators are not all permutations")
    return t


def coset_module(t: CayleyTable, subgroup: Iterable[int], algebra: PBAlgebra | None = None) -> BasedModule:
    """Permutation module of a group on its left cosets ``gH``."""
    if not t.is_group():
        raise DomainError("coset modules need a group table")
    H = sorted(set(int(h) for h in subgroup))
    e = t.identity()
    if any(not 0 <= h < t.order for h in H) or e not in H:
        raise NotASubgroup("subgroup must contain the identity")
    hs = set(H)
    if any(t.table[a][b] not in hs for a in H for b in H):
        raise NotASubgroup("subset is not closed under multiplication")
    cosets = []
    coset_of = {}
    for g in range(t.order):
        if g in coset_of:
            continue
        members = sorted({t.table[g][h] for h in H})
        for x in members:
            coset_of[x] = len(cosets)
        cosets.append(members)
    m = len(cosets)
    actions = []
    for g in range(t.order):
        mat = np.zeros((m, m), dtype=np.int64)
        for c, members in enumerate(cosets):
            mat[coset_of[t.table[g][members[0]]], c] = 1
        actions.append(mat)
    alg = algebra if algebra is not None else from_cayley_table(t)
    labels = tuple("{" + ",".join(t.labels[x] for x in members) + "}" for members in cosets)
    return BasedModule(alg, labels, tuple(actions), 1)


def regular_module(alg: PBAlgebra) -> BasedModule:
    from .algebra import basis_action

    return BasedModule(alg, alg.labels, tuple(basis_action(alg, i) for i in range(alg.dim)),
                       alg.denominator)


# -- a few standard inputs ------------------------------------------------

def cyclic_group(m: int) -> CayleyTable:
    return permutation_group([tuple((x + 1) % m for x in range(m))])


def symmetric_group(m: int) -> CayleyTable:
    gens = [tuple((x + 1) % m for x in range(m))]
    if m > 1:
        gens.append((1, 0) + tuple(range(2, m)))
    return permutation_group(gens)


def dihedral_group(m: int) -> CayleyTable:
    """Symmetries of an m-gon, order 2m."""
    rot = tuple((x + 1) % m for x in range(m))
    ref = tuple((-x) % m for x in range(m))
    return permutation_group([rot, ref])


def full_transformation_monoid(m: int) -> CayleyTable:
    """T_m from an m-cycle, a transposition and one rank-(m-1) idempotent."""
    gens = [Transformation.identity(m)]
    if m > 1:
        gens.append(Transformation(tuple((x + 1) % m for x in range(m))))
        gens.append(Transformation((1, 0) + tuple(range(2, m))))
        gens.append(Transformation((0, 0) + tuple(range(2, m))))
    return monoid_closure(gens)


def truncated_polynomial_algebra(m: int) -> PBAlgebra:
    """``Q[x]/(x^m)`` in the basis ``1, x, ..., x^(m-1)``."""
    gamma = {(i, j, i + j): Fraction(1) for i in range(m) for j in range(m) if i + j < m}
    return PBAlgebra(m, tuple("1" if i == 0 else f"x^{i}" for i in range(m)), 0, gamma)
