from fractions import Fraction

import numpy as np
import pytest

import oracles
from pbalgebra import cell_module, generated_submodule, is_semisimple, module_top, multiply, radical
from pbalgebra.constructors import truncated_polynomial_algebra
from pbalgebra.errors import ZeroVector
from pbalgebra.structure import kernel_cone_check, module_character, trace_form, trace_pairing
from conftest import algebra, cells

# dimensions frozen from oracles.radical_dimension
RADICAL_DIMS = {"C2": 0, "S3": 0, "D4": 0, "T2": 1, "T3": 7, "KL-A2": 0, "Qx2": 1}


@pytest.mark.parametrize("name", sorted(RADICAL_DIMS))
def test_radical_dimension(name):
    alg = algebra(name)
    assert len(radical(alg)) == RADICAL_DIMS[name]
    assert is_semisimple(alg) == (RADICAL_DIMS[name] == 0)


def test_radical_dimension_matches_oracle_on_qx3():
    alg = truncated_polynomial_algebra(3)
    assert len(radical(alg)) == oracles.radical_dimension(alg.gamma, 3) == 2


def _rank(rows, n):
    return n - len(oracles.fraction_nullspace(rows, n))


@pytest.mark.parametrize("name", ["T2", "T3", "Qx2"])
def test_radical_is_nilpotent_ideal(name):
    alg = algebra(name)
    n = alg.dim
    rad = radical(alg)
    rows = [list(r) for r in rad]
    prods = []
    for r in rad:
        for i in range(n):
            e = [Fraction(int(a == i)) for a in range(n)]
            prods += [multiply(alg, e, r), multiply(alg, r, e)]
    assert _rank(rows + prods, n) == len(rad)
    for r in rad:
        # left multiplication by a radical element is nilpotent
        L = np.array(oracles.left_mult_matrix(alg.gamma, n, r), dtype=object)
        P, power = L, 1
        while power < n:
            P, power = P.dot(P), 2 * power
        assert all(x == 0 for x in P.flat)


def test_trace_form_symmetric():
    T = trace_form(algebra("T3"))
    assert all(T[i][j] == T[j][i] for i in range(27) for j in range(27))


def test_generated_submodule():
    alg, cd = algebra("T2"), cells("T2")
    m = cell_module(alg, cd, 1)
    V = generated_submodule(m, np.array([1.0, 0.0]))
    assert V.shape == (2, 2)
    with pytest.raises(ZeroVector):
        generated_submodule(m, np.zeros(2))


def test_top_of_group_cell_module_is_regular():
    alg, cd = algebra("S3"), cells("S3")
    top = module_top(alg, cell_module(alg, cd, 0))
    assert top.character.dim == 6
    assert top.character.traces[alg.unit_index] == pytest.approx(6)


def test_top_of_t2_constants_cell():
    alg, cd = algebra("T2"), cells("T2")
    m = cell_module(alg, cd, 1)
    top = module_top(alg, m)
    assert top.character.dim == 1
    assert np.allclose(top.character.traces, 1)


def test_trace_pairing_orthonormal_for_s3():
    alg, cd = algebra("S3"), cells("S3")
    chi_reg = module_character(cell_module(alg, cd, 0))
    triv = np.ones(6)
    assert trace_pairing(alg, triv, triv) == pytest.approx(1)
    assert trace_pairing(alg, chi_reg, triv) == pytest.approx(1)
    assert trace_pairing(alg, chi_reg, chi_reg) == pytest.approx(6)


def test_kernel_cone_check():
    alg, cd = algebra("T3"), cells("T3")
    m = cell_module(alg, cd, 1)
    assert kernel_cone_check(m, np.eye(m.dim), np.zeros((m.dim, 0)))
    assert not kernel_cone_check(m, np.eye(m.dim), np.eye(m.dim)[:, :1])
    v = np.zeros(m.dim)
    v[0], v[1] = 1, -1
    assert kernel_cone_check(m, np.eye(m.dim), v / np.linalg.norm(v))
