from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from pbalgebra import PBAlgebra, action_matrix, basis_action, multiply, star, validate
from pbalgebra.algebra import associativity_failures
from pbalgebra.constructors import Transformation, from_cayley_table, monoid_closure
from pbalgebra.errors import DimensionMismatch, DomainError, InvalidAlgebra, SizeCapExceeded
from pbalgebra.exact import parse_rational
from conftest import algebra


def test_valid_corpus():
    for name in ("C2", "S3", "D4", "T2", "T3", "KL-A2", "KL-A3", "Qx2"):
        rep = validate(algebra(name))
        assert rep.ok, name
        assert rep.associativity_failures == 0


def test_negative_constant_reported():
    alg = PBAlgebra(2, ("1", "x"), 0, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): -1})
    rep = validate(alg)
    kinds = {v.kind for v in rep.violations}
    assert "NegativeConstant" in kinds
    with pytest.raises(InvalidAlgebra):
        rep.raise_if_invalid()


def test_unit_failure_reported():
    alg = PBAlgebra(2, ("1", "x"), 0, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 2, (1, 1, 1): 1})
    rep = validate(alg)
    assert [v.as_dict() for v in rep.violations if v.kind == "UnitAxiomFailed"] == \
        [{"kind": "UnitAxiomFailed", "side": "right", "i": 1}]


def test_associativity_failure_matches_naive():
    # x*x = y, y*x = x, x*y = 0: (x x) x = x but x (x x) = 0
    g = {(0, j, j): 1 for j in range(3)}
    g.update({(j, 0, j): 1 for j in range(1, 3)})
    g.update({(1, 1, 2): 1, (2, 1, 1): 1})
    alg = PBAlgebra(3, ("1", "x", "y"), 0, g)
    assert not oracles.naive_associative(alg.gamma, 3)
    count, found = associativity_failures(alg)
    assert count > 0 and (1, 1, 1) in found
    assert not validate(alg).ok


def test_size_cap():
    alg = algebra("S3")
    with pytest.raises(SizeCapExceeded):
        validate(alg, max_dim=5)
    assert validate(alg, max_dim=5, override=True).ok


def test_json_roundtrip():
    for name in ("T2", "KL-A2", "Qx2"):
        alg = algebra(name)
        assert PBAlgebra.from_json(alg.to_json()) == alg


def test_rational_strings():
    assert parse_rational("3/6") == Fraction(1, 2)
    with pytest.raises(DomainError):
        parse_rational("0.5")
    doc = {"dim": 1, "labels": ["1"], "unit_index": 0, "gamma": [[0, 0, 0, "1.0"]]}
    with pytest.raises(DomainError):
        PBAlgebra.from_dict(doc)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        multiply(algebra("S3"), [1, 0], [1, 0, 0, 0, 0, 0])


def test_star_and_actions():
    alg = algebra("KL-A2")
    s = alg.index("s1")
    assert star(alg, s, s) == {s}          # C_s C_s = 2 C_s at v = 1
    assert alg.gamma[(s, s, s)] == 2
    A = basis_action(alg, s)
    assert A[s, s] == 2 and A.sum() == sum(v for (i, _, _), v in alg.gamma.items() if i == s)
    M = action_matrix(alg, [Fraction(1, 2)] + [0] * 5)
    assert M[0, 0] == Fraction(1, 2)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_multiply_matches_naive(data):
    alg = algebra(data.draw(st.sampled_from(["T2", "KL-A2", "D4", "Qx2"])))
    n = alg.dim
    rats = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    x = data.draw(st.lists(rats, min_size=n, max_size=n))
    y = data.draw(st.lists(rats, min_size=n, max_size=n))
    expect = oracles.naive_multiply(alg.gamma, n, x, y)
    assert multiply(alg, x, y) == expect
    approx = multiply(alg, np.array(x, dtype=float), np.array(y, dtype=float))
    assert np.allclose(approx, [float(e) for e in expect])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=1, max_size=3))
def test_random_transformation_monoids_validate(gens):
    t = monoid_closure([Transformation(g) for g in gens] + [Transformation.identity(3)])
    alg = from_cayley_table(t)
    assert validate(alg).ok
    assert oracles.naive_associative(alg.gamma, alg.dim) if alg.dim <= 8 else True
