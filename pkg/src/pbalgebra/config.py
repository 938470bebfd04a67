"""Run configuration shared by the CLI and the verification battery."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

from .errors import DomainError


@dataclass(frozen=True)
class RunConfig:
    char_tol: float = 1e-6          # special characters agree
    iter_tol: float = 1e-12         # power iteration / squaring convergence
    residual_tol: float = 1e-8      # e^2 = e, PF residuals
    nonzero_tol: float = 1e-8       # "acts nonzero" on a top
    positivity_tol: float = 1e-10   # idempotent coefficients
    max_iter: int = 1_000_000
    max_dim: int = 400
    max_order: int = 400
    monoid_cap: int = 1000
    samples: int = 5
    seed: int = 0
    output: str | None = None
    precision: str = "float64"

    def __post_init__(self):
        for f in ("char_tol", "iter_tol", "residual_tol", "nonzero_tol", "positivity_tol"):
            if not getattr(self, f) > 0:
                raise DomainError(f"{f} must be positive")
        for f in ("max_iter", "max_dim", "max_order", "monoid_cap", "samples"):
            if getattr(self, f) < 1:
                raise DomainError(f"{f} must be at least 1")
        if self.precision != "float64":
            raise DomainError("only float64 precision is supported")

    @classmethod
    def from_dict(cls, doc):
        known = {f.name for f in fields(cls)}
        unknown = set(doc) - known
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        return cls(**doc)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self):
        return asdict(self)
