"""Finite Weyl groups, Kazhdan-Lusztig bases and the KL-based group algebra.

The Hecke algebra uses the normalization with quadratic relation
``H_s^2 = 1 + (v^-1 - v) H_s`` and ``Hb_s = H_s + v``.  KL coefficients
``h[x, w]`` are defined by ``Hb_w = sum_x h[x, w] H_x`` and lie in ``v Z[v]``
for ``x != w``.  Group elements are integer matrices of the geometric
representation acting on coordinates in the simple-root basis.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import PBAlgebra
from .errors import (
    ConsistencyError,
    DomainError,
    NegativeSpecialization,
    NotFiniteType,
    PositivityViolation,
    RankCapExceeded,
    SizeCapExceeded,
)
from .laurent import LaurentPoly

MAX_RANK = 4
DEFAULT_MAX_ORDER = 400
HARD_MAX_ORDER = 1200


def _irreducible_cartan(letter, r):
    a = 2 * np.eye(r, dtype=np.int64)
    for i in range(r - 1):
        a[i, i + 1] = a[i + 1, i] = -1
    if letter == "A":
        pass
    elif letter == "B":
        if r < 2:
            raise DomainError("type B needs rank >= 2")
        a[r - 2, r - 1] = -2
    elif letter == "C":
        if r < 2:
            raise DomainError("type C needs rank >= 2")
        a[r - 1, r - 2] = -2
    elif letter == "D":
        if r < 4:
            raise DomainError("type D needs rank >= 4")
        a[r - 2, r - 1] = a[r - 1, r - 2] = 0
        a[r - 3, r - 1] = a[r - 1, r - 3] = -1
    elif letter == "F":
        if r != 4:
            raise DomainError("type F exists only in rank 4")
        a[1, 2] = -2
    elif letter == "G":
        if r != 2:
            raise DomainError("type G exists only in rank 2")
        a[0, 1] = -3
    else:
        raise DomainError(f"unsupported Cartan type {letter}")
    return a


def cartan_matrix(type_name: str) -> np.ndarray:
    """Cartan matrix for names like ``A3``, ``B2``, ``D4`` or ``A1xA2``."""
    blocks = []
    for part in type_name.replace(" ", "").upper().split("X"):
        m = re.fullmatch(r"([A-G])(\d+)", part)
        if not m:
            raise DomainError(f"cannot parse Cartan type {type_name!r}")
        blocks.append(_irreducible_cartan(m.group(1), int(m.group(2))))
    r = sum(len(b) for b in blocks)
    out = np.zeros((r, r), dtype=np.int64)
    p = 0
    for b in blocks:
        out[p:p + len(b), p:p + len(b)] = b
        p += len(b)
    return out


def _check_cartan(a):
    r = a.shape[0]
    if a.shape != (r, r) or r == 0:
        raise DomainError("Cartan matrix must be square and nonempty")
    if r > MAX_RANK:
        raise RankCapExceeded(f"rank {r} exceeds {MAX_RANK}")
    for i in range(r):
        if a[i, i] != 2:
            raise DomainError("Cartan matrix must have 2 on the diagonal")
        for j in range(r):
            if i != j and (a[i, j] > 0 or (a[i, j] == 0) != (a[j, i] == 0)):
                raise DomainError("invalid off-diagonal Cartan entries")
    # finite type iff the Coxeter bilinear form is positive definite
    orders = {0: 2, 1: 3, 2: 4, 3: 6}
    B = np.eye(r)
    for i in range(r):
        for j in range(r):
            if i != j:
                m = orders.get(int(a[i, j] * a[j, i]))
                if m is None:
                    raise NotFiniteType("Cartan matrix is not of finite type")
                B[i, j] = -np.cos(np.pi / m)
    if np.linalg.eigvalsh(B).min() <= 1e-9:
        raise NotFiniteType("Cartan matrix is not of finite type")


@dataclass(frozen=True, eq=False)
class WeylGroup:
    cartan: np.ndarray
    elements: tuple          # integer matrices (as nested tuples)
    words: tuple             # reduced words, tuples of 0-based generator indices
    lengths: tuple
    left_descents: tuple     # frozensets of generator indices
    right_descents: tuple
    left_mult: np.ndarray    # left_mult[s, w] = index of s*w

    @property
    def rank(self):
        return self.cartan.shape[0]

    @property
    def order(self):
        return len(self.elements)

    @cached_property
    def _index(self):
        return {m: i for i, m in enumerate(self.elements)}

    def index(self, matrix):
        return self._index[tuple(map(tuple, np.asarray(matrix).tolist()))]

    def matrix(self, i):
        return np.array(self.elements[i], dtype=np.int64)

    @cached_property
    def mult_table(self):
        """``mult_table[x, y]`` = index of ``x * y``."""
        n = self.order
        table = np.zeros((n, n), dtype=np.int64)
        for y in range(n):
            table[0, y] = y
        for x in range(1, n):
            s = self.words[x][0]
            rest = self.left_mult[s, x]
            table[x] = self.left_mult[s, table[rest]]
        return table

    @cached_property
    def inverses(self):
        t = self.mult_table
        return tuple(int(np.flatnonzero(t[x] == 0)[0]) for x in range(self.order))

    @property
    def labels(self):
        return tuple(word_label(w) for w in self.words)

    @property
    def longest(self):
        return int(np.argmax(self.lengths))


def word_label(word):
    return "e" if not word else "".join(f"s{s + 1}" for s in word)


def enumerate_weyl(cartan, max_order: int = DEFAULT_MAX_ORDER) -> WeylGroup:
    """Close the simple reflections under multiplication and record lengths and descents."""
    a = np.asarray(cartan, dtype=np.int64)
    _check_cartan(a)
    r = a.shape[0]
    gens = []
    for i in range(r):
        s = np.eye(r, dtype=np.int64)
        s[i, :] -= a[i, :]
        gens.append(s)
    key = lambda m: tuple(map(tuple, m.tolist()))
    ident = np.eye(r, dtype=np.int64)
    mats = [ident]
    words = [()]
    index = {key(ident): 0}
    queue = deque([0])
    left = []
    while queue:
        w = queue.popleft()
        for s in range(r):
            m = gens[s] @ mats[w]
            k = key(m)
            if k not in index:
                if len(mats) >= HARD_MAX_ORDER:
                    raise NotFiniteType(f"closure exceeds {HARD_MAX_ORDER} elements")
                if len(mats) >= max_order:
                    raise SizeCapExceeded(f"Weyl group order exceeds cap {max_order}")
                index[k] = len(mats)
                mats.append(m)
                words.append((s,) + words[w])
                queue.append(index[k])
    n = len(mats)
    left_mult = np.array([[index[key(gens[s] @ mats[w])] for w in range(n)] for s in range(r)],
                         dtype=np.int64)
    roots = {tuple(m[:, s]) for m in mats for s in range(r)}
    positive = np.array(sorted(x for x in roots if all(c >= 0 for c in x)), dtype=np.int64).T
    lengths = []
    for m in mats:
        img = m @ positive
        lengths.append(int(np.sum(np.all(img <= 0, axis=0))))
    right = tuple(frozenset(s for s in range(r) if np.all(m[:, s] <= 0)) for m in mats)
    leftd = tuple(frozenset(s for s in range(r) if lengths[left_mult[s, w]] < lengths[w])
                  for w in range(n))
    for w in range(n):
        if lengths[w] != len(words[w]):
            raise ConsistencyError(f"root count {lengths[w]} differs from word length for {w}")
        for s in range(r):
            if abs(lengths[left_mult[s, w]] - lengths[w]) != 1:
                raise ConsistencyError("l(sw) must differ from l(w) by one")
    left_mult.setflags(write=False)
    return WeylGroup(a, tuple(key(m) for m in mats), tuple(words), tuple(lengths), leftd, right,
                     left_mult)


@dataclass(frozen=True, eq=False)
class KLBasisData:
    """KL coefficients as a dense integer array ``coeffs[w, x, d]`` (coefficient of ``v^d`` in ``h[x, w]``)."""

    group: WeylGroup
    coeffs: np.ndarray

    def h(self, x, w):
        return LaurentPoly.from_dense([int(c) for c in self.coeffs[w, x]])

    def mu(self, x, w):
        return int(self.coeffs[w, x, 1]) if self.coeffs.shape[2] > 1 else 0

    @cached_property
    def at_one(self):
        """Integer matrix ``P[x, w] = h[x, w](1)``."""
        return self.coeffs.sum(axis=2).T.copy()

    def support(self, w):
        return np.flatnonzero(self.coeffs[w].any(axis=1))


def kl_basis(W: WeylGroup) -> KLBasisData:
    """Inductive construction ``Hb_s Hb_{sw} = Hb_w + sum mu(z, sw) Hb_z``."""
    n = W.order
    deg = max(W.lengths) + 2
    lengths = np.array(W.lengths)
    H = np.zeros((n, n, deg), dtype=np.int64)
    H[0, 0, 0] = 1
    for w in range(1, n):
        s = min(W.left_descents[w])
        y = int(W.left_mult[s, w])
        sx = W.left_mult[s]
        up = lengths[sx] > lengths
        C = H[y]
        if C[~up, 0].any():
            raise ConsistencyError("constant term on a descent of s before multiplication")
        new = C[sx].copy()
        new[up, 1:] += C[up, :-1]
        new[~up, :-1] += C[~up, 1:]
        for z in np.flatnonzero(C[:, 1]):
            if z != y and not up[z]:
                new -= C[z, 1] * H[z]
        if new[w, 0] != 1 or new[w, 1:].any():
            raise ConsistencyError(f"h[w, w] != 1 at w = {word_label(W.words[w])}")
        others = np.ones(n, dtype=bool)
        others[w] = False
        if new[others, 0].any():
            raise ConsistencyError(f"nonzero constant term below the diagonal at w = {w}")
        if (new < 0).any():
            x, d = (int(t) for t in np.argwhere(new < 0)[0])
            raise PositivityViolation(f"h[{x}, {w}] has coefficient {new[x, d]} at v^{d}")
        H[w] = new
    H.setflags(write=False)
    return KLBasisData(W, H)


def _unitriangular_inverse(P):
    """Exact inverse of an upper unitriangular integer matrix."""
    n = P.shape[0]
    big = P.dtype == object
    inv = np.zeros((n, n), dtype=object if big else np.int64)
    for j in range(n):
        inv[j, j] = 1
        for i in range(j - 1, -1, -1):
            inv[i, j] = -(P[i, i + 1:j + 1] @ inv[i + 1:j + 1, j])
    return inv


def kl_algebra(W: WeylGroup, kl: KLBasisData) -> PBAlgebra:
    """Structure constants of ``Hb_x Hb_y`` in the KL basis, specialized at ``v = 1``."""
    n = W.order
    P = kl.at_one
    if np.any(np.tril(P, -1)) or np.any(np.diag(P) != 1):
        raise ConsistencyError("KL change of basis is not unitriangular in the length order")
    Pinv = _unitriangular_inverse(P)
    mult = W.mult_table
    gamma = {}
    for x in range(n):
        prods = np.zeros((n, n), dtype=np.int64)
        for g in np.flatnonzero(P[:, x]):
            prods[mult[g], :] += P[g, x] * P
        G = Pinv @ prods
        if (G < 0).any():
            z, y = (int(t) for t in np.argwhere(G < 0)[0])
            raise NegativeSpecialization(f"gamma({x},{y},{z}) = {G[z, y]} < 0")
        for z, y in zip(*np.nonzero(G)):
            gamma[(x, int(y), int(z))] = int(G[z, y])
    return PBAlgebra(n, W.labels, 0, gamma)


def weyl_kl_algebra(type_name: str, max_order: int = DEFAULT_MAX_ORDER):
    """Convenience: ``(WeylGroup, KLBasisData, PBAlgebra)`` for a Cartan type name."""
    W = enumerate_weyl(cartan_matrix(type_name), max_order)
    kl = kl_basis(W)
    return W, kl, kl_algebra(W, kl)
