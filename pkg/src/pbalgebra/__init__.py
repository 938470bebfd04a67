"""Cells, cell modules and special modules of positively based algebras."""

from .algebra import PBAlgebra, ValidationReport, action_matrix, basis_action, multiply, star, validate
from .cells import CellDecomposition, CellOrder, cell_leq, cells_report, compute_cells, is_idempotent_cell
from .config import RunConfig
from .constructors import (
    CayleyTable,
    Transformation,
    coset_module,
    from_cayley_table,
    monoid_closure,
    permutation_group,
    regular_module,
)
from .errors import ConsistencyError, DomainError, PBAlgebraError
from .kernels import BACKEND
from .kl_hecke import cartan_matrix, enumerate_weyl, kl_algebra, kl_basis, weyl_kl_algebra
from .modules import (
    BasedModule,
    cell_module,
    cell_morphism,
    delta_module,
    direct_sum,
    is_transitive,
    mj_module,
    quotient_algebra,
)
from .special import (
    SpecialReport,
    apex,
    classify_specials,
    good_cell_check,
    incomparability_check,
    j_invariance_check,
    special_of_cell,
    special_of_transitive,
)
from .spectral import cell_idempotent, pf_eigendata, pf_element, pf_projector
from .structure import generated_submodule, is_semisimple, module_top, radical

__version__ = "0.1.0"
