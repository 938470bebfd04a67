"""Perron-Frobenius data of positive matrices and cell idempotents."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import PBAlgebra, multiply
from .cells import CellDecomposition, is_idempotent_cell
from .errors import (
    DimensionMismatch,
    DomainError,
    NoConvergence,
    NonPositiveCoefficient,
    NotIdempotentCell,
    NotPerronFrobenius,
    NotPositiveMatrix,
    PositivityFailure,
)
from .modules import BasedModule, cell_module, quotient_indices

ITER_TOL = 1e-12
MAX_ITER = 10**6
POSITIVITY_THRESHOLD = 1e-10


@dataclass
class PFData:
    lam: float
    v: np.ndarray          # right eigenvector, unit 1-norm
    v_hat: np.ndarray      # left eigenvector, v_hat @ v == 1
    projector: np.ndarray  # outer product v v_hat^T
    residual: float        # max |M v - lam v|
    residual_left: float   # max |v_hat^T M - lam v_hat^T|
    iterations: int = 0

    def as_dict(self):
        return {
            "lambda": self.lam,
            "v": self.v.tolist(),
            "v_hat": self.v_hat.tolist(),
            "residual": self.residual,
            "residual_left": self.residual_left,
            "iterations": self.iterations,
        }


def pf_element(alg: PBAlgebra, c, module: BasedModule | None = None):
    """The element ``sum_i c_i a_i`` (exact) for strictly positive ``c``.

    When ``module`` is given, its action matrix is checked to be entrywise
    positive, as guaranteed for transitive modules.
    """
    if len(c) != alg.dim:
        raise DimensionMismatch(f"{len(c)} coefficients for dimension {alg.dim}")
    coeffs = [Fraction(x) for x in c]
    if any(x <= 0 for x in coeffs):
        raise NonPositiveCoefficient("all coefficients must be strictly positive")
    if module is not None:
        mat = module.element_action_exact(coeffs)
        if any(x <= 0 for x in mat.flat):
            raise NotPerronFrobenius("action matrix has a non-positive entry; module not transitive?")
    return coeffs


def _power(M, tol, max_iter):
    x = np.ones(M.shape[0]) / M.shape[0]
    for it in range(1, max_iter + 1):
        y = M @ x
        y /= y.sum()
        if np.max(np.abs(y - x)) < tol:
            return y, it
        x = y
    raise NoConvergence(f"power iteration did not converge in {max_iter} steps")


def pf_eigendata(M, tol: float = ITER_TOL, max_iter: int = MAX_ITER) -> PFData:
    """Perron-Frobenius eigenvalue and eigenvectors by power iteration.

    Starts from the all-ones vector on both ``M`` and ``M^T``.
    """
    if isinstance(M, np.ndarray) and M.dtype == object:
        if any(Fraction(x) <= 0 for x in M.flat):
            raise NotPositiveMatrix("matrix has a non-positive entry")
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch("square matrix required")
    if not np.all(M > 0):
        raise NotPositiveMatrix("matrix has a non-positive entry")
    v, it1 = _power(M, tol, max_iter)
    w, it2 = _power(M.T, tol, max_iter)
    Mv = M @ v
    lam = float(v @ Mv / (v @ v))
    w = w / (w @ v)
    res = float(np.max(np.abs(Mv - lam * v)))
    res_left = float(np.max(np.abs(w @ M - lam * w)))
    return PFData(lam, v, w, np.outer(v, w), res, res_left, max(it1, it2))


def pf_projector(M, pf: PFData, mode: str = "outer", tol: float = ITER_TOL,
                 max_iter: int = 200):
    """``lim M^n / lambda^n``: either ``v v_hat^T`` or by repeated squaring."""
    if mode == "outer":
        return np.outer(pf.v, pf.v_hat)
    if mode != "limit":
        raise DomainError(f"unknown projector mode {mode!r}")
    X = np.asarray(M, dtype=np.float64) / pf.lam
    for _ in range(max_iter):
        Y = X @ X
        # the limit has trace 1; rescaling stops rounding in lambda from compounding
        Y /= np.trace(Y)
        if np.max(np.abs(Y - X)) < tol:
            return Y
        X = Y
    raise NoConvergence("repeated squaring of M / lambda did not converge")


@dataclass
class IdempotentData:
    cell: int
    left_cell: int
    indices: tuple        # basis indices of the two-sided cell
    coefficients: np.ndarray
    lam: float
    residual: float       # max |e^2 - e|
    margin: float         # min coefficient after 1-norm normalisation
    squarings: int = 0
    labels: tuple = field(default=())

    def as_dict(self):
        return {
            "two_sided_cell": self.cell,
            "left_cell": self.left_cell,
            "lambda": self.lam,
            "coefficients": {lab: float(c) for lab, c in zip(self.labels, self.coefficients)},
            "residual": self.residual,
            "positivity_margin": self.margin,
            "squarings": self.squarings,
        }


def cell_idempotent(alg: PBAlgebra, cd: CellDecomposition, J: int, L: int | None = None,
                    tol: float = ITER_TOL, max_squarings: int = 200,
                    threshold: float = POSITIVITY_THRESHOLD) -> IdempotentData:
    """Idempotent ``e = lim (a / lambda)^m`` in ``A_J`` with ``a`` the sum of the cell.

    ``lambda`` is the Perron-Frobenius eigenvalue of ``a`` on ``C_L``.  Powers
    are taken by repeated squaring in ``A_J`` using the structure constants.
    """
    J = cd.two_sided.check_id(J)
    if not is_idempotent_cell(alg, cd, J):
        raise NotIdempotentCell(f"two-sided cell {J} is not idempotent")
    if L is None:
        L = cd.maximal_left_cells(J)[0]
    L = cd.left.check_id(L)
    if cd.two_sided_of_left(L) != J:
        raise DomainError(f"left cell {L} is not contained in two-sided cell {J}")
    members = cd.two_sided.cells[J]
    a = np.zeros(alg.dim)
    a[list(members)] = 1.0
    C = cell_module(alg, cd, L).element_action(a)
    lam = pf_eigendata(C).lam

    keep = np.zeros(alg.dim, dtype=bool)
    keep[quotient_indices(cd, J)] = True

    def square(x):
        y = multiply(alg, x, x)
        y[~keep] = 0.0
        return y

    x = a / lam
    for k in range(1, max_squarings + 1):
        y = square(x)
        if np.max(np.abs(y - x)) < tol * max(1.0, np.max(np.abs(x))):
            x = y
            break
        x = y
    else:
        raise NoConvergence("powers of a / lambda did not converge in A_J")
    e = x
    outside = np.abs(np.delete(e, list(members))).max(initial=0.0)
    if outside > 1e-9:
        raise PositivityFailure(f"idempotent has weight {outside} outside the cell")
    residual = float(np.max(np.abs(square(e) - e)))
    coeffs = e[list(members)]
    margin = float(np.min(coeffs / np.abs(coeffs).sum()))
    if margin <= threshold:
        raise PositivityFailure(f"coefficient {margin} not above {threshold}")
    return IdempotentData(J, L, tuple(members), coeffs, lam, residual, margin, k,
                          tuple(alg.labels[i] for i in members))
