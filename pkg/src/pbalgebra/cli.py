"""``pbalgebra`` command-line interface.

Exit status: 0 on success, 1 on bad input, 2 when a computed invariant fails.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from .algebra import PBAlgebra, validate
from .cells import cells_report, compute_cells
from .config import RunConfig
from .constructors import (
    CayleyTable,
    Transformation,
    coset_module,
    from_cayley_table,
    monoid_closure,
)
from .errors import ConsistencyError, DomainError
from .exact import format_rational, parse_rational
from .kl_hecke import enumerate_weyl, kl_algebra, kl_basis, cartan_matrix
from .modules import cell_module
from .special import apex, c_samples, classify_specials, special_of_cell
from .spectral import cell_idempotent, pf_eigendata, pf_element
from .structure import module_top, radical
from .verify import run_battery


# -- JSON output ------------------------------------------------------------------

def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _Float(float(obj))
    if isinstance(obj, Fraction):
        return format_rational(obj)
    return obj


class _Float(float):
    def __repr__(self):
        if math.isnan(self) or math.isinf(self):
            return "null"
        text = format(float(self), ".17g")
        return text if any(ch in text for ch in ".en") else text + ".0"


class _Encoder(json.JSONEncoder):
    def iterencode(self, o, _one_shot=False):
        # the C encoder bypasses float.__repr__, so force the Python one
        return json.encoder._make_iterencode(
            {}, self.default, json.encoder.encode_basestring_ascii, self.indent,
            lambda x: repr(x), self.key_separator, self.item_separator,
            self.sort_keys, self.skipkeys, _one_shot)(o, 0)


def dumps(obj) -> str:
    return json.dumps(_plain(obj), cls=_Encoder, indent=2)


# -- helpers --------------------------------------------------------------------

def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read {path}: {exc}") from None


def _load_algebra(path, config):
    alg = PBAlgebra.from_dict(_read_json(path))
    validate(alg, max_dim=config.max_dim).raise_if_invalid()
    return alg


def _coeffs(text, n):
    if text is None:
        return [Fraction(1)] * n
    vals = [parse_rational(x.strip()) for x in text.split(",")]
    return vals


# -- commands -------------------------------------------------------------------

def cmd_validate(args, config):
    alg = PBAlgebra.from_dict(_read_json(args.file))
    rep = validate(alg, max_dim=config.max_dim, override=args.override)
    return rep.as_dict(), 0 if rep.ok else 1


def cmd_gen(args, config):
    if args.kind == "group":
        t = CayleyTable.from_dict(_read_json(args.cayley))
        return from_cayley_table(t).to_dict(), 0
    if args.kind == "monoid":
        doc = _read_json(args.transformations)
        gens = doc["generators"] if isinstance(doc, dict) else doc
        t = monoid_closure([Transformation(tuple(g)) for g in gens], cap=config.monoid_cap)
        return from_cayley_table(t).to_dict(), 0
    if args.kind == "coset":
        t = CayleyTable.from_dict(_read_json(args.group))
        H = [int(x) for x in args.subgroup.split(",") if x.strip()]
        return coset_module(t, H).to_dict(), 0
    if args.kind == "weyl-kl":
        if (args.type is None) == (args.cartan is None):
            raise DomainError("give exactly one of --type and --cartan")
        A = cartan_matrix(args.type) if args.type else np.array(_read_json(args.cartan), dtype=np.int64)
        W = enumerate_weyl(A, max_order=config.max_order)
        return kl_algebra(W, kl_basis(W)).to_dict(), 0
    raise DomainError(f"unknown generator {args.kind}")


def cmd_cells(args, config):
    alg = _load_algebra(args.file, config)
    return cells_report(alg, compute_cells(alg)), 0


def cmd_cell_module(args, config):
    alg = _load_algebra(args.file, config)
    cd = compute_cells(alg)
    return cell_module(alg, cd, cd.left.check_id(args.left_cell)).to_dict(), 0


def cmd_pf(args, config):
    alg = _load_algebra(args.file, config)
    cd = compute_cells(alg)
    m = cell_module(alg, cd, cd.left.check_id(args.left_cell))
    c = pf_element(alg, _coeffs(args.coeffs, alg.dim), m)
    pf = pf_eigendata(m.element_action_exact(c), tol=config.iter_tol, max_iter=config.max_iter)
    return {"left_cell": args.left_cell, "coeffs": c, **pf.as_dict()}, 0


def cmd_idempotent(args, config):
    alg = _load_algebra(args.file, config)
    cd = compute_cells(alg)
    d = cell_idempotent(alg, cd, args.two_sided_cell, tol=config.iter_tol,
                        threshold=config.positivity_tol)
    return d.as_dict(), 0 if d.residual < config.residual_tol else 2


def cmd_radical(args, config):
    alg = _load_algebra(args.file, config)
    rad = radical(alg)
    return {"dim": len(rad), "basis": [[format_rational(x) for x in r] for r in rad]}, 0


def cmd_top(args, config):
    alg = _load_algebra(args.file, config)
    cd = compute_cells(alg)
    L = cd.left.check_id(args.left_cell)
    top = module_top(alg, cell_module(alg, cd, L), source=f"left cell {L}")
    return {"left_cell": L, "dim": top.character.dim, "character": top.character.traces}, 0


def cmd_special(args, config):
    alg = _load_algebra(args.file, config)
    cd = compute_cells(alg)
    samples = c_samples(alg.dim, config.samples, config.seed)
    return special_of_cell(alg, cd, args.left_cell, samples, tol=config.char_tol).as_dict(), 0


def cmd_apex(args, config):
    alg = _load_algebra(args.file, config)
    cd = compute_cells(alg)
    L = cd.left.check_id(args.left_cell)
    J = apex(cell_module(alg, cd, L), alg, cd)
    return {"left_cell": L, "apex": J,
            "members": [alg.labels[i] for i in cd.two_sided.cells[J]]}, 0


def cmd_classify(args, config):
    alg = _load_algebra(args.file, config)
    cd = compute_cells(alg)
    samples = c_samples(alg.dim, config.samples, config.seed)
    out = []
    for J, rep in classify_specials(alg, cd, samples, tol=config.char_tol, jobs=args.jobs):
        d = rep.as_dict()
        d["two_sided_cell"] = J
        d.pop("c_samples")
        out.append(d)
    return {"count": len(out), "specials": out}, 0


def cmd_verify(args, config):
    alg = PBAlgebra.from_dict(_read_json(args.file))
    rep = run_battery(alg, config, jobs=args.jobs)
    return rep.as_dict(), 0 if rep.ok else 2


COMMANDS = {
    "validate": cmd_validate, "gen": cmd_gen, "cells": cmd_cells,
    "cell-module": cmd_cell_module, "pf": cmd_pf, "idempotent": cmd_idempotent,
    "radical": cmd_radical, "top": cmd_top, "special": cmd_special, "apex": cmd_apex,
    "classify": cmd_classify, "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="RunConfig JSON file")
    common.add_argument("--seed", type=int, help="seed for c-samples")
    common.add_argument("--output", help="write JSON here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes over cells")

    p = argparse.ArgumentParser(prog="pbalgebra", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common])
    s.add_argument("file")
    s.add_argument("--override", action="store_true", help="ignore the size cap")

    g = sub.add_parser("gen", parents=[common])
    gs = g.add_subparsers(dest="kind", required=True)
    gs.add_parser("group", parents=[common]).add_argument("--cayley", required=True)
    gs.add_parser("monoid", parents=[common]).add_argument("--transformations", required=True)
    c = gs.add_parser("coset", parents=[common])
    c.add_argument("--group", required=True)
    c.add_argument("--subgroup", required=True, help="comma-separated element indices")
    w = gs.add_parser("weyl-kl", parents=[common])
    w.add_argument("--type")
    w.add_argument("--cartan")

    for name in ("cells", "radical", "classify", "verify"):
        sub.add_parser(name, parents=[common]).add_argument("file")
    for name in ("cell-module", "top", "special", "apex"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file")
        s.add_argument("--left-cell", type=int, required=True)
    s = sub.add_parser("pf", parents=[common])
    s.add_argument("file")
    s.add_argument("--left-cell", type=int, required=True)
    s.add_argument("--coeffs", help="comma-separated positive rationals")
    s = sub.add_parser("idempotent", parents=[common])
    s.add_argument("file")
    s.add_argument("--two-sided-cell", type=int, required=True)
    return p


def run(argv=None):
    """Parse ``argv``, run the command and return ``(exit status, JSON text)``."""
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig.load(args.config) if args.config else RunConfig()
        overrides = {}
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.output is not None:
            overrides["output"] = args.output
        if overrides:
            config = RunConfig.from_dict({**config.to_dict(), **overrides})
        doc, status = COMMANDS[args.command](args, config)
    except DomainError as exc:
        doc, status = {"error": type(exc).__name__, "message": str(exc)}, 1
    except ConsistencyError as exc:
        doc, status = {"error": type(exc).__name__, "message": str(exc)}, 2
    return status, dumps(doc), config if "config" in locals() else None


def main(argv=None):
    status, text, config = run(argv)
    out = config.output if config is not None else None
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
