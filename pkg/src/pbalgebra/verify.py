"""The full invariant battery behind ``pbalgebra verify``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import PBAlgebra, validate
from .cells import compute_cells, is_idempotent_cell
from .config import RunConfig
from .errors import PBAlgebraError
from .modules import cell_filtration_sets, cell_module, is_left_ideal_span
from .special import (
    annihilation_violations,
    c_samples,
    classify_specials,
    incomparability_check,
    j_invariance_check,
    semisimple_checks,
    special_of_cell,
)
from .spectral import cell_idempotent
from .structure import is_semisimple, kernel_cone_check


@dataclass
class Check:
    name: str
    ok: bool
    detail: object = None


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=None):
        self.checks.append(Check(name, bool(ok), detail))

    def as_dict(self):
        return {
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
        }


def _guard(report, name, fn):
    try:
        return fn()
    except PBAlgebraError as exc:
        report.add(name, False, f"{type(exc).__name__}: {exc}")
        return None


def run_battery(alg: PBAlgebra, config: RunConfig = RunConfig(), jobs: int = 1) -> VerifyReport:
    rep = VerifyReport()
    v = validate(alg, max_dim=config.max_dim)
    rep.add("axioms", v.ok, v.as_dict())
    if not v.ok:
        return rep
    cd = compute_cells(alg)
    samples = c_samples(alg.dim, config.samples, config.seed)
    nL = len(cd.left.cells)
    nJ = len(cd.two_sided.cells)

    bad = []
    for L in range(nL):
        M, N = cell_filtration_sets(cd, L)
        if not (is_left_ideal_span(alg, M) and is_left_ideal_span(alg, N)):
            bad.append(L)
    rep.add("filtration_closed", not bad, {"bad_left_cells": bad})

    fails = {L: cell_module(alg, cd, L).invariant_failures() for L in range(nL)}
    fails = {L: f for L, f in fails.items() if f}
    rep.add("cell_module_compatibility", not fails, {str(k): v for k, v in fails.items()})

    reports = {}
    for L in range(nL):
        r = _guard(rep, f"special[{L}]", lambda: special_of_cell(alg, cd, L, samples, tol=config.char_tol))
        if r is not None:
            reports[L] = r
    rep.add("c_sample_independence", len(reports) == nL,
            {str(L): r.max_disagreement for L, r in reports.items()})

    viol = {L: annihilation_violations(alg, cd, r, config.nonzero_tol) for L, r in reports.items()}
    viol = {str(L): b for L, b in viol.items() if b}
    rep.add("annihilation_iff_below_apex", not viol, viol)

    cone = {}
    for L, r in reports.items():
        cone[str(L)] = kernel_cone_check(cell_module(alg, cd, L), r.top.submodule, r.top.kernel)
    rep.add("kernel_meets_cone_trivially", all(cone.values()), cone)

    jinv = {J: _guard(rep, f"j_invariance[{J}]", lambda: j_invariance_check(alg, cd, J, samples, config.char_tol))
            for J in range(nJ)}
    rep.add("j_invariance", all(jinv.values()), {str(k): v for k, v in jinv.items()})

    inc = {J: _guard(rep, f"incomparability[{J}]", lambda: incomparability_check(alg, cd, J))
           for J in range(nJ)}
    rep.add("left_cells_incomparable", all(x is not False for x in inc.values()),
            {str(k): ("hypothesis fails" if x is None else x) for k, x in inc.items()})

    idem = {}
    for J in range(nJ):
        if not is_idempotent_cell(alg, cd, J):
            continue
        d = _guard(rep, f"idempotent[{J}]", lambda: cell_idempotent(alg, cd, J, tol=config.iter_tol,
                                                                    threshold=config.positivity_tol))
        if d is not None:
            idem[str(J)] = {"residual": d.residual, "margin": d.margin,
                            "ok": d.residual < config.residual_tol and d.margin > config.positivity_tol}
    rep.add("cell_idempotents", all(x["ok"] for x in idem.values()), idem)

    cl = _guard(rep, "classification", lambda: classify_specials(alg, cd, samples, tol=config.char_tol, jobs=jobs))
    if cl is not None:
        rep.add("classification", True, {str(J): r.dim for J, r in cl})

    if is_semisimple(alg):
        f = semisimple_checks(alg, cd, reports, config.char_tol)
        rep.add("semisimple_suite", not f, f)
    return rep
