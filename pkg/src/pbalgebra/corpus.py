"""Named desk-scale algebras used by the tests, benchmarks and ``verify``."""

from __future__ import annotations

from .constructors import (
    cyclic_group,
    dihedral_group,
    from_cayley_table,
    full_transformation_monoid,
    symmetric_group,
    truncated_polynomial_algebra,
)
from .kl_hecke import weyl_kl_algebra

_BUILDERS = {
    "C2": lambda: from_cayley_table(cyclic_group(2)),
    "S3": lambda: from_cayley_table(symmetric_group(3)),
    "D4": lambda: from_cayley_table(dihedral_group(4)),
    "T2": lambda: from_cayley_table(full_transformation_monoid(2)),
    "T3": lambda: from_cayley_table(full_transformation_monoid(3)),
    "KL-A2": lambda: weyl_kl_algebra("A2")[2],
    "KL-A3": lambda: weyl_kl_algebra("A3")[2],
    "Qx2": lambda: truncated_polynomial_algebra(2),
}

NAMES = tuple(_BUILDERS)


def build(name: str):
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown corpus algebra {name!r}; known: {', '.join(NAMES)}") from None
