"""Based modules: cell modules, quotient algebras, M(J) and coinvariant modules.

A :class:`BasedModule` stores one integer matrix per algebra basis element
together with a common denominator, so every identity can be checked in
exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .algebra import PBAlgebra, basis_action
from .cells import CellDecomposition
from .errors import (
    ConsistencyError,
    DimensionMismatch,
    DomainError,
    NoWitness,
    NotIdempotent,
    NotMonoidBacked,
)
from .exact import exact_matmul, format_rational, int_array


@dataclass(frozen=True, eq=False)
class BasedModule:
    """Module with basis ``labels``; ``a_i`` acts by ``numerators[i] / denominator``."""

    algebra: PBAlgebra
    labels: tuple
    numerators: tuple
    denominator: int = 1

    def __post_init__(self):
        mats = tuple(np.asarray(a) for a in self.numerators)
        if len(mats) != self.algebra.dim:
            raise DimensionMismatch(
                f"{len(mats)} action matrices for an algebra of dimension {self.algebra.dim}")
        m = len(self.labels)
        if any(a.shape != (m, m) for a in mats):
            raise DimensionMismatch(f"action matrices must be {m}x{m}")
        for a in mats:
            a.setflags(write=False)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "numerators", mats)
        object.__setattr__(self, "denominator", int(self.denominator))

    @property
    def dim(self):
        return len(self.labels)

    @cached_property
    def actions_float(self):
        """Float array of shape ``(n, m, m)``."""
        d = float(self.denominator)
        return np.stack([a.astype(np.float64) / d for a in self.numerators])

    def action_exact(self, i):
        d = self.denominator
        return np.array([[Fraction(int(x), d) for x in row] for row in self.numerators[i]],
                        dtype=object).reshape(self.dim, self.dim)

    def element_action(self, coeffs):
        """Float matrix of ``sum_i coeffs[i] a_i``."""
        c = np.asarray([float(x) for x in coeffs])
        return np.tensordot(c, self.actions_float, axes=1)

    def element_action_exact(self, coeffs):
        """Exact Fraction matrix of ``sum_i coeffs[i] a_i``."""
        out = np.full((self.dim, self.dim), Fraction(0), dtype=object)
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                out = out + self.numerators[i].astype(object) * Fraction(c, self.denominator)
        return out

    def to_dict(self):
        d = self.denominator
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "actions": [[[format_rational(Fraction(int(x), d)) for x in row] for row in a]
                        for a in self.numerators],
        }

    # -- invariants --------------------------------------------------------

    def invariant_failures(self):
        """Exact check of unit, compatibility and nonnegativity; list of messages."""
        alg = self.algebra
        n, m, D = alg.dim, self.dim, self.denominator
        fails = []
        if not np.array_equal(self.numerators[alg.unit_index], D * np.eye(m, dtype=np.int64)):
            fails.append("unit does not act as the identity")
        for i, a in enumerate(self.numerators):
            if (a < 0).any():
                fails.append(f"negative entry in action of a_{i}")
        Dg = alg.denominator
        vals = alg.scaled_values
        ptr = alg.pair_ptr
        _, _, K = alg.triples
        for i in range(n):
            for j in range(n):
                lhs = exact_matmul(self.numerators[i], self.numerators[j]) * Dg
                rhs = np.zeros((m, m), dtype=lhs.dtype)
                for t in range(ptr[i * n + j], ptr[i * n + j + 1]):
                    rhs = rhs + vals[t] * self.numerators[K[t]]
                if not np.array_equal(lhs, rhs * D):
                    fails.append(f"a_{i} a_{j} acts differently from its expansion")
        return fails


def _module_from_gamma(alg, rows, cols, labels=None):
    """Action matrices ``[k, j] = D * gamma(i, j, k)`` restricted to ``rows`` x ``cols``."""
    rpos = {k: p for p, k in enumerate(rows)}
    cpos = {j: p for p, j in enumerate(cols)}
    vals = alg.scaled_values
    I, J, K = alg.triples
    mats = [np.zeros((len(rows), len(cols)), dtype=vals.dtype) for _ in range(alg.dim)]
    for t in range(len(I)):
        k, j = int(K[t]), int(J[t])
        if k in rpos and j in cpos:
            mats[int(I[t])][rpos[k], cpos[j]] = vals[t]
    if labels is None:
        labels = tuple(alg.labels[j] for j in cols)
    return BasedModule(alg, labels, tuple(mats), alg.denominator)


def cell_filtration_sets(cd: CellDecomposition, L: int):
    """Index sets spanning ``M_L`` (cells >=_L L) and ``N_L`` (cells >_L L)."""
    L = cd.left.check_id(L)
    upper = [c for c in range(len(cd.left.cells)) if cd.left.leq[L, c]]
    M = sorted(x for c in upper for x in cd.left.cells[c])
    N = sorted(x for c in upper if c != L for x in cd.left.cells[c])
    return M, N


def is_left_ideal_span(alg: PBAlgebra, indices) -> bool:
    """Exact check that the span of ``{a_j : j in indices}`` is closed under left multiplication."""
    s = set(indices)
    _, J, K = alg.triples
    return all(int(k) in s for j, k in zip(J.tolist(), K.tolist()) if j in s)


def cell_module(alg: PBAlgebra, cd: CellDecomposition, L: int) -> BasedModule:
    """``C_L = M_L / N_L`` in the basis indexed by the left cell ``L``."""
    L = cd.left.check_id(L)
    members = list(cd.left.cells[L])
    return _module_from_gamma(alg, members, members)


def is_transitive(m: BasedModule) -> bool:
    support = np.zeros((m.dim, m.dim), dtype=bool)
    for a in m.numerators:
        support |= a != 0
    ncomp, _ = connected_components(csr_matrix(support.T), directed=True, connection="strong")
    return ncomp == 1


def direct_sum(a: BasedModule, b: BasedModule) -> BasedModule:
    if a.algebra is not b.algebra and a.algebra != b.algebra:
        raise DomainError("modules over different algebras")
    from math import lcm

    d = lcm(a.denominator, b.denominator)
    mats = []
    for x, y in zip(a.numerators, b.numerators):
        top = np.hstack([x * (d // a.denominator), np.zeros((a.dim, b.dim), dtype=x.dtype)])
        bot = np.hstack([np.zeros((b.dim, a.dim), dtype=y.dtype), y * (d // b.denominator)])
        mats.append(np.vstack([top, bot]))
    labels = tuple(f"{s}#0" for s in a.labels) + tuple(f"{s}#1" for s in b.labels)
    return BasedModule(a.algebra, labels, tuple(mats), d)


def quotient_indices(cd: CellDecomposition, J: int):
    J = cd.two_sided.check_id(J)
    return [i for i in range(len(cd.two_sided.cell_of)) if cd.index_leq_J(i, J)]


def quotient_algebra(alg: PBAlgebra, cd: CellDecomposition, J: int) -> PBAlgebra:
    """``A_J = A / I_J`` with basis ``{a_j : j <=_J J}``."""
    keep = quotient_indices(cd, J)
    pos = {x: p for p, x in enumerate(keep)}
    gamma = {(pos[i], pos[j], pos[k]): v for (i, j, k), v in alg.gamma.items()
             if i in pos and j in pos and k in pos}
    return PBAlgebra(len(keep), tuple(alg.labels[x] for x in keep), pos[alg.unit_index], gamma)


@dataclass(frozen=True)
class CellMorphism:
    source: int
    target: int
    witness: int
    numerators: np.ndarray   # target-dim x source-dim
    denominator: int

    def to_dict(self, alg):
        d = self.denominator
        return {
            "source": self.source, "target": self.target,
            "witness": self.witness, "witness_label": alg.labels[self.witness],
            "matrix": [[format_rational(Fraction(int(x), d)) for x in row] for row in self.numerators],
        }


def cell_morphism(alg: PBAlgebra, cd: CellDecomposition, L: int, Lp: int) -> CellMorphism:
    """Right multiplication by a witness ``a_j`` followed by projection onto ``C_Lp``.

    ``Lp`` must be <=_L-minimal among the left cells of the common two-sided
    cell.  The witness is the smallest ``j`` with ``i * j`` meeting ``Lp`` for
    some ``i`` in ``L``.  The result is checked to intertwine the actions.
    """
    L, Lp = cd.left.check_id(L), cd.left.check_id(Lp)
    J = cd.two_sided_of_left(L)
    if cd.two_sided_of_left(Lp) != J:
        raise DomainError("left cells lie in different two-sided cells")
    if Lp not in cd.minimal_left_cells(J):
        raise DomainError(f"target left cell {Lp} is not <=_L-minimal in its two-sided cell")
    src, dst = list(cd.left.cells[L]), list(cd.left.cells[Lp])
    sset, dpos = set(src), {k: p for p, k in enumerate(dst)}
    n = alg.dim
    ptr = alg.pair_ptr
    _, _, K = alg.triples
    vals = alg.scaled_values
    for j in range(n):
        mat = np.zeros((len(dst), len(src)), dtype=vals.dtype)
        for c, i in enumerate(src):
            for t in range(ptr[i * n + j], ptr[i * n + j + 1]):
                k = int(K[t])
                if k in dpos:
                    mat[dpos[k], c] = vals[t]
        if mat.any():
            break
    else:
        raise NoWitness(f"no j with L{L} * j meeting L{Lp}")
    phi = CellMorphism(L, Lp, j, mat, alg.denominator)
    ms, mt = cell_module(alg, cd, L), cell_module(alg, cd, Lp)
    for i in range(n):
        if not np.array_equal(exact_matmul(mat, ms.numerators[i]), exact_matmul(mt.numerators[i], mat)):
            raise ConsistencyError(f"cell morphism fails to commute with a_{i}")
    return phi


def mj_module(alg: PBAlgebra, cd: CellDecomposition, I: int) -> BasedModule:
    """``M(I) = X / Y`` on the basis ``{a_i : i in I}``."""
    I = cd.two_sided.check_id(I)
    members = list(cd.two_sided.cells[I])
    return _module_from_gamma(alg, members, members)


# -- monoid-backed constructions ----------------------------------------------

def monoid_table(alg: PBAlgebra):
    """Recover the monoid multiplication table, or raise :class:`NotMonoidBacked`."""
    n = alg.dim
    ptr = alg.pair_ptr
    _, _, K = alg.triples
    if not np.all(np.diff(ptr) == 1) or any(v != 1 for v in alg.values):
        raise NotMonoidBacked("structure constants are not those of a monoid basis")
    return K.reshape(n, n).tolist()


@dataclass(frozen=True)
class DeltaModule:
    module: BasedModule
    idempotent: int
    group: tuple          # indices of the maximal subgroup at the idempotent
    orbits: tuple         # orbit of L_e under right multiplication, per basis vector
    witness: int          # basis position of the class of the idempotent


def maximal_subgroup(alg: PBAlgebra, cd: CellDecomposition, e: int):
    """H-class of ``e``: intersection of its left and right cells."""
    left = set(cd.left.cells[cd.left.cell_of[e]])
    return tuple(sorted(x for x in cd.right.cells[cd.right.cell_of[e]] if x in left))


def delta_module(alg: PBAlgebra, cd: CellDecomposition, e: int) -> DeltaModule:
    """Coinvariants ``C_{L_e}`` modulo ``x g - x`` for ``g`` in the maximal subgroup at ``e``."""
    t = monoid_table(alg)
    if not 0 <= e < alg.dim or t[e][e] != e:
        raise NotIdempotent(f"basis element {e} is not an idempotent of the monoid")
    G = maximal_subgroup(alg, cd, e)
    Lcell = cd.left.cells[cd.left.cell_of[e]]
    Lset = set(Lcell)
    orbit_of = {}
    orbits = []
    for x in Lcell:
        if x in orbit_of:
            continue
        orb = tuple(sorted({t[x][g] for g in G}))
        if not set(orb) <= Lset:
            raise ConsistencyError("right action of the maximal subgroup leaves the left cell")
        for y in orb:
            orbit_of[y] = len(orbits)
        orbits.append(orb)
    m = len(orbits)
    mats = []
    for i in range(alg.dim):
        a = np.zeros((m, m), dtype=np.int64)
        for c, orb in enumerate(orbits):
            y = t[i][orb[0]]
            if y in orbit_of:
                a[orbit_of[y], c] = 1
        mats.append(a)
    labels = tuple("[" + ",".join(alg.labels[x] for x in orb) + "]" for orb in orbits)
    mod = BasedModule(alg, labels, tuple(mats), 1)
    return DeltaModule(mod, e, G, tuple(orbits), orbit_of[e])


def module_from_dict(alg: PBAlgebra, doc) -> BasedModule:
    """Inverse of :meth:`BasedModule.to_dict`."""
    from math import lcm

    from .exact import parse_rational

    mats = [[[parse_rational(x) for x in row] for row in a] for a in doc["actions"]]
    d = 1
    for a in mats:
        for row in a:
            for x in row:
                d = lcm(d, x.denominator)
    m = int(doc["dim"])
    nums = tuple(int_array([x * d for row in a for x in row], (m, m)) for a in mats)
    return BasedModule(alg, tuple(doc["labels"]), nums, d)


def regular_basis_actions(alg: PBAlgebra):
    return tuple(basis_action(alg, i) for i in range(alg.dim))
