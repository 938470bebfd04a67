"""Left, right and two-sided cells of a positively based algebra.

``i <=_L j`` when ``j`` occurs in ``a_s a_i`` for some ``s``; right and
two-sided preorders use right and two-sided multiplication.  Cells are the
strongly connected components of the one-step support graph and the cell
orders come from its condensation.  Everything runs on exact supports.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from .algebra import PBAlgebra
from .errors import DomainError, UnknownCellId

KINDS = ("left", "right", "two-sided")
_ALIASES = {
    "left": "left", "l": "left",
    "right": "right", "r": "right",
    "two-sided": "two-sided", "two_sided": "two-sided", "twosided": "two-sided", "j": "two-sided",
}


def canonical_kind(kind):
    try:
        return _ALIASES[str(kind).lower()]
    except KeyError:
        raise DomainError(f"unknown cell kind {kind!r}") from None


@dataclass(frozen=True)
class CellOrder:
    """Cells of one kind: members, per-index cell id, Hasse edges and closure."""

    cells: tuple          # tuple of sorted index tuples; position = cell id
    cell_of: tuple        # basis index -> cell id
    edges: tuple          # Hasse diagram, (c1, c2) means c1 < c2
    leq: np.ndarray       # reflexive reachability, leq[c1, c2] iff c1 <= c2

    def check_id(self, c):
        if not (isinstance(c, (int, np.integer)) and 0 <= c < len(self.cells)):
            raise UnknownCellId(f"no cell with id {c!r}")
        return int(c)


@dataclass(frozen=True)
class CellDecomposition:
    left: CellOrder
    right: CellOrder
    two_sided: CellOrder

    def of(self, kind):
        return {"left": self.left, "right": self.right, "two-sided": self.two_sided}[canonical_kind(kind)]

    @property
    def left_cell_of(self):
        return self.left.cell_of

    @property
    def right_cell_of(self):
        return self.right.cell_of

    @property
    def two_sided_cell_of(self):
        return self.two_sided.cell_of

    def left_cells_in(self, J):
        """Ids of the left cells contained in two-sided cell ``J``."""
        J = self.two_sided.check_id(J)
        return tuple(c for c, members in enumerate(self.left.cells)
                     if self.two_sided.cell_of[members[0]] == J)

    def two_sided_of_left(self, L):
        L = self.left.check_id(L)
        return self.two_sided.cell_of[self.left.cells[L][0]]

    def index_leq_J(self, i, J):
        """``i <=_J J`` for a basis index and a two-sided cell id."""
        return bool(self.two_sided.leq[self.two_sided.cell_of[i], J])

    def maximal_left_cells(self, J):
        """Left cells of ``J`` that are maximal for <=_L among those in ``J``."""
        ls = self.left_cells_in(J)
        return tuple(a for a in ls
                     if not any(b != a and self.left.leq[a, b] for b in ls))

    def minimal_left_cells(self, J):
        ls = self.left_cells_in(J)
        return tuple(a for a in ls
                     if not any(b != a and self.left.leq[b, a] for b in ls))


def _cell_order(n, edges):
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    cond = nx.condensation(g)
    members = {c: tuple(sorted(cond.nodes[c]["members"])) for c in cond.nodes}
    order = list(nx.lexicographical_topological_sort(cond, key=lambda c: members[c][0]))
    new_id = {c: pos for pos, c in enumerate(order)}
    cells = tuple(members[c] for c in order)
    cell_of = [0] * n
    for cid, ms in enumerate(cells):
        for x in ms:
            cell_of[x] = cid
    dag = nx.relabel_nodes(cond, new_id)
    hasse = tuple(sorted(nx.transitive_reduction(dag).edges()))
    k = len(cells)
    leq = np.eye(k, dtype=bool)
    for c in range(k):
        for d in nx.descendants(dag, c):
            leq[c, d] = True
    leq.setflags(write=False)
    return CellOrder(cells, tuple(cell_of), hasse, leq)


def support_edges(alg: PBAlgebra):
    """One-step edges ``(left, right)`` as ``(source, target)`` index pairs."""
    I, J, K = alg.triples
    pos = np.array([v > 0 for v in alg.values], dtype=bool)
    I, J, K = I[pos], J[pos], K[pos]
    left = set(zip(J.tolist(), K.tolist()))
    right = set(zip(I.tolist(), K.tolist()))
    return left, right


def compute_cells(alg: PBAlgebra) -> CellDecomposition:
    left, right = support_edges(alg)
    n = alg.dim
    return CellDecomposition(
        _cell_order(n, left),
        _cell_order(n, right),
        _cell_order(n, left | right),
    )


def is_idempotent_cell(alg: PBAlgebra, cd: CellDecomposition, J: int) -> bool:
    J = cd.two_sided.check_id(J)
    inJ = np.array([c == J for c in cd.two_sided.cell_of], dtype=bool)
    I, Jx, K = alg.triples
    pos = np.array([v > 0 for v in alg.values], dtype=bool)
    return bool(np.any(pos & inJ[I] & inJ[Jx] & inJ[K]))


def cell_leq(cd: CellDecomposition, kind, c1: int, c2: int) -> bool:
    order = cd.of(kind)
    return bool(order.leq[order.check_id(c1), order.check_id(c2)])


def cells_report(alg: PBAlgebra, cd: CellDecomposition):
    """JSON-ready description: member labels per cell and Hasse edges per kind."""
    out = {}
    for kind in KINDS:
        order = cd.of(kind)
        out[kind] = {
            "cells": [[alg.labels[i] for i in ms] for ms in order.cells],
            "members": [list(ms) for ms in order.cells],
            "edges": [list(e) for e in order.edges],
        }
    out["idempotent_two_sided"] = [
        J for J in range(len(cd.two_sided.cells)) if is_idempotent_cell(alg, cd, J)]
    return out
