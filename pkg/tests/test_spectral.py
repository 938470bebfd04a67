from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from pbalgebra import cell_idempotent, cell_module, multiply, pf_eigendata, pf_element, pf_projector
from pbalgebra.errors import (
    DomainError,
    NonPositiveCoefficient,
    NotIdempotentCell,
    NotPerronFrobenius,
    NotPositiveMatrix,
)
from conftest import algebra, cells


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**31 - 1))
def test_pf_matches_dense_eigensolver(n, seed):
    M = np.random.default_rng(seed).uniform(0.05, 1.0, size=(n, n))
    pf = pf_eigendata(M)
    lam, second, v, _ = oracles.dense_pf(M)
    assert abs(pf.lam - lam) < 1e-9 * lam
    assert lam - second > 1e-9 * lam
    assert np.allclose(pf.v, v, atol=1e-9) and np.all(pf.v > 0)
    assert np.allclose(pf.v_hat @ M, pf.lam * pf.v_hat, atol=1e-8)
    assert np.allclose(pf_projector(M, pf, "limit"), pf_projector(M, pf, "outer"), atol=1e-8)


def test_pf_of_group_sum_is_order():
    alg, cd = algebra("S3"), cells("S3")
    m = cell_module(alg, cd, 0)
    pf = pf_eigendata(m.element_action_exact(pf_element(alg, [1] * 6, m)))
    assert abs(pf.lam - 6) < 1e-12 and np.allclose(pf.v, 1 / 6)


def test_pf_errors():
    alg, cd = algebra("T2"), cells("T2")
    with pytest.raises(NonPositiveCoefficient):
        pf_element(alg, [1, 0, 1, 1])
    with pytest.raises(NotPositiveMatrix):
        pf_eigendata(np.array([[1.0, 0.0], [1.0, 1.0]]))
    # regular module of Q[x]/x^2 is not transitive, so some entry of c.a is zero
    from pbalgebra.constructors import regular_module
    qa = algebra("Qx2")
    with pytest.raises(NotPerronFrobenius):
        pf_element(qa, [1, 1], regular_module(qa))
    with pytest.raises(DomainError):
        pf_projector(np.eye(2), pf_eigendata(np.ones((2, 2))), "bogus")


def test_group_idempotent_is_average():
    for name, order in (("C2", 2), ("S3", 6), ("D4", 8)):
        alg, cd = algebra(name), cells(name)
        d = cell_idempotent(alg, cd, 0)
        assert d.lam == pytest.approx(order)
        assert np.allclose(d.coefficients, 1 / order, atol=1e-12)


@pytest.mark.parametrize("name", ["T2", "T3", "KL-A2", "KL-A3"])
def test_cell_idempotents(name):
    alg, cd = algebra(name), cells(name)
    for J in range(len(cd.two_sided.cells)):
        d = cell_idempotent(alg, cd, J)
        e = np.zeros(alg.dim)
        e[list(d.indices)] = d.coefficients
        keep = np.array([cd.index_leq_J(i, J) for i in range(alg.dim)])
        sq = multiply(alg, e, e)
        sq[~keep] = 0
        assert np.max(np.abs(sq - e)) < 1e-8
        assert d.margin > 1e-10


def test_non_idempotent_cell():
    with pytest.raises(NotIdempotentCell):
        cell_idempotent(algebra("Qx2"), cells("Qx2"), 1)


def test_exact_coefficients_accepted():
    alg = algebra("T2")
    c = pf_element(alg, ["1/2", 3, Fraction(2, 3), 1])
    assert c[0] == Fraction(1, 2)
