"""Radical, generated submodules, tops of modules and simple characters.

The radical is exact: over a field of characteristic zero it is the kernel of
the trace form ``(x, y) -> tr(regular action of x y)``.  Everything built
from a floating Perron-Frobenius vector (``A v``, tops, characters) is
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from .algebra import PBAlgebra, multiply
from .errors import ConsistencyError, ZeroQuotient, ZeroVector
from .exact import in_span, nullspace, rref
from .modules import BasedModule

PIVOT_TOL = 1e-9
CONE_EPS = 1e-7


# -- exact radical -------------------------------------------------------------

def trace_form(alg: PBAlgebra):
    """Exact Gram matrix ``T[x, y] = tr(regular action of a_x a_y)`` (nested lists)."""
    n = alg.dim
    tr = [Fraction(0)] * n
    for (k, j, l), g in alg.gamma.items():
        if j == l:
            tr[k] += g
    T = [[Fraction(0)] * n for _ in range(n)]
    for (x, y, k), g in alg.gamma.items():
        if tr[k]:
            T[x][y] += g * tr[k]
    return T


def _right_multiply(alg, r, i):
    out = [Fraction(0)] * alg.dim
    for (x, j, k), g in alg.gamma.items():
        if j == i and r[x]:
            out[k] += g * r[x]
    return out


def _verify_radical(alg, basis):
    if not basis:
        return
    red = rref(basis, alg.dim)
    for r in basis:
        for i in range(alg.dim):
            e = alg.basis_vector(i)
            if not in_span(red, multiply(alg, e, r)) or not in_span(red, _right_multiply(alg, r, i)):
                raise ConsistencyError("trace-form kernel is not a two-sided ideal")
    power = basis
    for _ in range(alg.dim + 1):
        prods = [multiply(alg, p, r) for p in power for r in basis]
        nonzero = [p for p in prods if any(p)]
        if not nonzero:
            return
        power, _ = rref(nonzero, alg.dim)
    raise ConsistencyError("trace-form kernel is not nilpotent")


def radical(alg: PBAlgebra, verify: bool = True):
    """Exact basis (list of Fraction vectors, in rref) of the Jacobson radical.

    Cached on the algebra instance.
    """
    cached = alg.__dict__.get("_radical")
    if cached is not None:
        return cached
    basis = nullspace(trace_form(alg))
    if basis:
        basis, _ = rref(basis, alg.dim)
    if verify:
        _verify_radical(alg, basis)
    alg.__dict__["_radical"] = basis
    return basis


def is_semisimple(alg: PBAlgebra) -> bool:
    return not radical(alg)


# -- floating subspaces --------------------------------------------------------------

def _extend_basis(Q, w, tol):
    """Add ``w`` to orthonormal columns ``Q`` if it is independent; returns new ``Q`` or None."""
    s = np.abs(w).sum()
    if s == 0:
        return None
    w = w / s
    for _ in range(2):
        if Q.shape[1]:
            w = w - Q @ (Q.T @ w)
    if np.abs(w).sum() <= tol:
        return None
    return np.column_stack([Q, w / np.linalg.norm(w)])


def span_basis(vectors, dim, tol=PIVOT_TOL):
    """Orthonormal basis (columns) of the span of ``vectors``."""
    Q = np.zeros((dim, 0))
    for w in vectors:
        nq = _extend_basis(Q, np.asarray(w, dtype=np.float64), tol)
        if nq is not None:
            Q = nq
    return Q


def generated_submodule(m: BasedModule, v, tol: float = PIVOT_TOL):
    """Orthonormal basis (columns) of ``A v`` inside ``m``."""
    v = np.asarray(v, dtype=np.float64)
    if not np.any(v):
        raise ZeroVector("cannot generate a submodule from the zero vector")
    Q = span_basis([v], m.dim, tol)
    acts = m.actions_float
    frontier = [Q[:, 0]]
    while frontier:
        new = []
        for q in frontier:
            for A in acts:
                nq = _extend_basis(Q, A @ q, tol)
                if nq is not None:
                    Q = nq
                    new.append(Q[:, -1])
        frontier = new
    return Q


def complement(V, U, tol=PIVOT_TOL):
    """Orthonormal basis of the orthogonal complement of ``U`` inside ``V``."""
    P = V - U @ (U.T @ V) if U.shape[1] else V.copy()
    if P.shape[1] == 0:
        return P
    u, s, _ = np.linalg.svd(P, full_matrices=False)
    return u[:, s > tol * max(1.0, s.max(initial=0.0))]


# -- characters ---------------------------------------------------------------------

@dataclass
class SimpleCharacter:
    traces: np.ndarray
    dim: int
    source: str = ""

    def distance(self, other):
        if self.dim != other.dim:
            return float("inf")
        return float(np.max(np.abs(self.traces - other.traces), initial=0.0))

    def matches(self, other, tol=1e-6):
        return self.distance(other) < tol

    def as_dict(self):
        return {"dim": self.dim, "traces": self.traces.tolist(), "source": self.source}


def module_character(m: BasedModule):
    return np.trace(m.actions_float, axis1=1, axis2=2)


def trace_pairing(alg: PBAlgebra, chi, psi):
    """``chi^T T^-1 psi``; simple characters are orthonormal for semisimple ``alg``."""
    T = np.array([[float(x) for x in row] for row in trace_form(alg)])
    return float(np.asarray(chi) @ np.linalg.solve(T, np.asarray(psi)))


@dataclass
class TopData:
    matrices: np.ndarray     # (n, d, d) action on V / rad V
    character: SimpleCharacter
    basis: np.ndarray        # orthonormal complement of rad V inside V
    kernel: np.ndarray       # orthonormal basis of rad V
    submodule: np.ndarray    # orthonormal basis of V


def radical_action(m: BasedModule, rad):
    return [m.element_action(r) for r in rad]


def module_top(alg: PBAlgebra, m: BasedModule, V=None, source: str = "",
               tol: float = PIVOT_TOL) -> TopData:
    """Action on ``V / rad(A) V`` for an invariant subspace ``V`` (default: all of ``m``)."""
    if V is None:
        V = np.eye(m.dim)
    rad = radical(alg)
    vecs = [R @ V[:, c] for R in radical_action(m, rad) for c in range(V.shape[1])]
    K = span_basis(vecs, m.dim, tol)
    W = complement(V, K, tol)
    if W.shape[1] == 0:
        raise ZeroQuotient("V equals rad(A) V")
    mats = np.einsum("ka,nkl,lb->nab", W, m.actions_float, W)
    chi = SimpleCharacter(np.trace(mats, axis1=1, axis2=2), W.shape[1], source)
    return TopData(mats, chi, W, K, V)


def kernel_cone_check(m: BasedModule, V_L, K_L, eps: float = CONE_EPS) -> bool:
    """True iff the only nonnegative vector in span ``K_L`` is zero.

    Feasibility of ``x = K y``, ``x >= -eps``, ``sum(x) = 1``; infeasible means
    the cone meets the kernel only at the origin.
    """
    K = np.asarray(K_L, dtype=np.float64)
    if K.ndim == 1:
        K = K[:, None]
    if K.shape[1] == 0:
        return True
    k = K.shape[1]
    res = linprog(
        c=np.zeros(k),
        A_ub=-K, b_ub=np.full(K.shape[0], eps),
        A_eq=K.sum(axis=0)[None, :], b_eq=[1.0],
        bounds=[(None, None)] * k,
        method="highs",
    )
    return res.status == 2
