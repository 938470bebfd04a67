"""Special subquotients, apexes and the classification of special modules."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import PBAlgebra
from .cells import CellDecomposition, is_idempotent_cell
from .errors import (
    ConsistencyError,
    CSampleDisagreement,
    DuplicateSpecialAcrossCells,
    NoMaximum,
    NotIdempotentApex,
    NotTransitive,
)
from .modules import BasedModule, cell_module, is_transitive, mj_module
from .spectral import IdempotentData, cell_idempotent, pf_eigendata
from .structure import (
    PIVOT_TOL,
    SimpleCharacter,
    TopData,
    generated_submodule,
    is_semisimple,
    module_character,
    module_top,
    trace_pairing,
)

CHAR_TOL = 1e-6
NONZERO_TOL = 1e-8
EIGEN_TOL = 1e-7


def c_samples(n: int, count: int = 5, seed: int = 0):
    """All-ones plus ``count - 1`` pseudorandom positive rational vectors.

    Entries are ``p/q`` with ``1 <= p, q <= 100`` and ``1/10 <= p/q <= 10``.
    """
    rng = np.random.default_rng(seed)
    out = [[Fraction(1)] * n]
    for _ in range(count - 1):
        vec = []
        while len(vec) < n:
            p, q = (int(x) for x in rng.integers(1, 101, size=2))
            if Fraction(1, 10) <= Fraction(p, q) <= 10:
                vec.append(Fraction(p, q))
        out.append(vec)
    return out


@dataclass
class SpecialReport:
    source: str
    apex: int
    lam: float                 # PF eigenvalue for the first c-sample
    character: SimpleCharacter
    dim: int
    lambdas: list = field(default_factory=list)
    samples: list = field(default_factory=list)
    max_disagreement: float = 0.0
    top: TopData | None = field(default=None, repr=False)
    left_cell: int | None = None
    kernel_cone_ok: bool | None = None

    def as_dict(self):
        return {
            "source": self.source,
            "left_cell": self.left_cell,
            "apex": self.apex,
            "lambda": self.lam,
            "lambdas": self.lambdas,
            "dim": self.dim,
            "character": self.character.traces.tolist(),
            "c_samples": [[str(x) for x in c] for c in self.samples],
            "max_character_disagreement": self.max_disagreement,
            "kernel_cone_ok": self.kernel_cone_ok,
        }


# -- apex ----------------------------------------------------------------------------

def apex(m: BasedModule, alg: PBAlgebra, cd: CellDecomposition) -> int:
    """The <=_J-maximum two-sided cell with a basis element acting nonzero on ``m``."""
    ts = cd.two_sided
    acting = {i for i in range(alg.dim) if np.any(m.numerators[i])}
    X = sorted({ts.cell_of[i] for i in acting})
    maxima = [J for J in X if not any(K != J and ts.leq[J, K] for K in X)]
    if len(maxima) != 1:
        raise NoMaximum(f"cells {maxima} are all maximal among the acting cells")
    top = maxima[0]
    if not is_idempotent_cell(alg, cd, top):
        raise NotIdempotentApex(f"apex {top} is not idempotent")
    silent = [i for i in range(alg.dim) if ts.leq[ts.cell_of[i], top] and i not in acting]
    if silent:
        raise ConsistencyError(f"a_{silent[0]} lies below the apex but annihilates the module")
    return top


# -- special subquotients ------------------------------------------------------------

def _special_of_module(alg, m, samples, source, tol=CHAR_TOL, pivot_tol=PIVOT_TOL):
    tops, lambdas = [], []
    for c in samples:
        M = m.element_action(c)
        pf = pf_eigendata(M)
        V = generated_submodule(m, pf.v, pivot_tol)
        top = module_top(alg, m, V, source, pivot_tol)
        induced = np.tensordot(np.array([float(x) for x in c]), top.matrices, axes=1)
        eig = np.linalg.eigvals(induced)
        if np.min(np.abs(eig - pf.lam)) > EIGEN_TOL * max(1.0, pf.lam):
            raise ConsistencyError(f"PF eigenvalue {pf.lam} is not an eigenvalue on the top")
        tops.append(top)
        lambdas.append(pf.lam)
    worst = 0.0
    for p in range(len(tops)):
        for q in range(p + 1, len(tops)):
            d = tops[p].character.distance(tops[q].character)
            worst = max(worst, d)
            if not d < tol:
                raise CSampleDisagreement(
                    f"{source}: c-samples {p} and {q} give different special characters",
                    tops[p].character, tops[q].character)
    first = tops[0]
    return first, lambdas, worst


def special_of_cell(alg: PBAlgebra, cd: CellDecomposition, L: int, samples=None,
                    seed: int = 0, tol: float = CHAR_TOL) -> SpecialReport:
    """Special subquotient of ``C_L``, checked for independence of the c-sample."""
    L = cd.left.check_id(L)
    if samples is None:
        samples = c_samples(alg.dim, 5, seed)
    m = cell_module(alg, cd, L)
    top, lambdas, worst = _special_of_module(alg, m, samples, f"left cell {L}", tol)
    return SpecialReport(f"left cell {L}", apex(m, alg, cd), lambdas[0], top.character,
                         top.character.dim, lambdas, list(samples), worst, top, L)


def special_of_transitive(m: BasedModule, alg: PBAlgebra, cd: CellDecomposition, samples=None,
                          seed: int = 0, tol: float = CHAR_TOL, source: str = "module") -> SpecialReport:
    """Special subquotient of a transitive module, compared with that of its apex."""
    if not is_transitive(m):
        raise NotTransitive("module is not transitive")
    if samples is None:
        samples = c_samples(alg.dim, 5, seed)
    top, lambdas, worst = _special_of_module(alg, m, samples, source, tol)
    J = apex(m, alg, cd)
    ref = special_of_cell(alg, cd, cd.maximal_left_cells(J)[0], samples, tol=tol)
    if not top.character.matches(ref.character, tol):
        from .errors import SpecialMismatch

        raise SpecialMismatch(f"{source}: special differs from that of its apex {J}")
    return SpecialReport(source, J, lambdas[0], top.character, top.character.dim, lambdas,
                         list(samples), worst, top)


def _cell_report(args):
    alg, cd, L, samples, tol = args
    return special_of_cell(alg, cd, L, samples, tol=tol)


def classify_specials(alg: PBAlgebra, cd: CellDecomposition, samples=None, seed: int = 0,
                      tol: float = CHAR_TOL, jobs: int = 1):
    """One special report per idempotent two-sided cell, from a <=_L-maximal left cell."""
    if samples is None:
        samples = c_samples(alg.dim, 5, seed)
    cells = [J for J in range(len(cd.two_sided.cells)) if is_idempotent_cell(alg, cd, J)]
    tasks = [(alg, cd, cd.maximal_left_cells(J)[0], samples, tol) for J in cells]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_cell_report, tasks))
    else:
        reports = [_cell_report(t) for t in tasks]
    for p in range(len(reports)):
        for q in range(p + 1, len(reports)):
            if reports[p].character.matches(reports[q].character, tol):
                raise DuplicateSpecialAcrossCells(
                    f"two-sided cells {cells[p]} and {cells[q]} give the same special module")
    for J, rep in zip(cells, reports):
        if rep.apex != J:
            raise ConsistencyError(f"idempotent cell {J} has apex {rep.apex}")
    return list(zip(cells, reports))


# -- verification predicates -------------------------------------------------------

def j_invariance_check(alg: PBAlgebra, cd: CellDecomposition, I: int, samples=None,
                       tol: float = CHAR_TOL) -> bool:
    """All left cells of ``I`` give the same special character and the same apex."""
    reports = [special_of_cell(alg, cd, L, samples, tol=tol) for L in cd.left_cells_in(I)]
    first = reports[0]
    return all(r.apex == first.apex and r.character.matches(first.character, tol) for r in reports)


def incomparability_check(alg: PBAlgebra, cd: CellDecomposition, I: int):
    """Left cells of ``I`` are pairwise <=_L-incomparable.

    Returns ``None`` when the hypothesis (``M(I)`` is an ``A_J``-module for the
    apex ``J`` of ``I``) fails, else a boolean.
    """
    ls = cd.left_cells_in(I)
    J = apex(cell_module(alg, cd, ls[0]), alg, cd)
    M = mj_module(alg, cd, I)
    if any(np.any(M.numerators[i]) for i in range(alg.dim) if not cd.index_leq_J(i, J)):
        return None
    return not any(a != b and cd.left.leq[a, b] for a in ls for b in ls)


def good_cell_check(alg: PBAlgebra, cd: CellDecomposition, L: int) -> IdempotentData:
    """Idempotent with positive coefficients witnessing that the apex of ``L`` is good."""
    J = apex(cell_module(alg, cd, L), alg, cd)
    return cell_idempotent(alg, cd, J, cd.maximal_left_cells(J)[0])


def annihilation_violations(alg: PBAlgebra, cd: CellDecomposition, report: SpecialReport,
                            threshold: float = NONZERO_TOL):
    """Basis indices where "acts nonzero on the special iff below the apex" fails."""
    bad = []
    for i in range(alg.dim):
        nonzero = float(np.max(np.abs(report.top.matrices[i]), initial=0.0)) > threshold
        if nonzero != cd.index_leq_J(i, report.apex):
            bad.append(i)
    return bad


def semisimple_checks(alg: PBAlgebra, cd: CellDecomposition, reports: dict, tol: float = CHAR_TOL):
    """Checks valid for semisimple algebras; returns a list of failure messages.

    ``reports`` maps left cell ids to their special reports.
    """
    fails = []
    if not is_semisimple(alg):
        return ["algebra is not semisimple"]
    for J in range(len(cd.two_sided.cells)):
        if not is_idempotent_cell(alg, cd, J):
            fails.append(f"two-sided cell {J} is not idempotent")
    for L, rep in reports.items():
        J = cd.two_sided_of_left(L)
        if rep.dim != len(cd.left_cells_in(rep.apex)):
            fails.append(f"left cell {L}: special of dim {rep.dim}, "
                         f"{len(cd.left_cells_in(rep.apex))} left cells in the apex")
        chi_c = module_character(cell_module(alg, cd, L))
        mult = trace_pairing(alg, chi_c, rep.character.traces)
        if abs(mult - 1) > tol:
            fails.append(f"left cell {L}: special occurs {mult} times in the cell module")
        defect = chi_c - rep.character.traces
        for L2, other in reports.items():
            pair = trace_pairing(alg, defect, other.character.traces)
            if abs(pair) > tol:
                fails.append(f"left cell {L}: special of left cell {L2} occurs in the defect ({pair})")
        del J
    return fails
