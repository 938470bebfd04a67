import numpy as np
import pytest

import oracles
from pbalgebra import CayleyTable, Transformation, coset_module, from_cayley_table, monoid_closure
from pbalgebra.constructors import (
    cyclic_group,
    dihedral_group,
    full_transformation_monoid,
    permutation_group,
    regular_module,
    symmetric_group,
)
from pbalgebra.errors import NoIdentity, NotASubgroup, NotAssociative, SizeCapExceeded


def test_composition_convention():
    f, g = Transformation((1, 1, 2)), Transformation((2, 0, 1))
    assert (f * g).images == oracles.compose(f.images, g.images) == (2, 1, 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_full_transformation_monoid_matches_enumeration(m):
    t = full_transformation_monoid(m)
    assert set(t.labels) == {"".join(map(str, f)) for f in oracles.all_transformations(m)}
    assert t.labels[0] == "".join(map(str, range(m)))
    elems = [tuple(int(c) for c in lab) for lab in t.labels]
    pos = {e: i for i, e in enumerate(elems)}
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            assert t.table[i][j] == pos[oracles.compose(a, b)]


def test_closure_is_order_independent():
    gens = [(1, 2, 0), (0, 0, 2)]
    a = monoid_closure([Transformation(g) for g in gens])
    b = monoid_closure([Transformation(g) for g in reversed(gens)] + [Transformation(gens[0])])
    assert a == b


def test_closure_cap():
    with pytest.raises(SizeCapExceeded):
        monoid_closure([Transformation((1, 2, 3, 0)), Transformation((1, 0, 2, 3)),
                        Transformation((0, 0, 2, 3))], cap=50)


@pytest.mark.parametrize("builder,order", [(lambda: cyclic_group(2), 2), (lambda: symmetric_group(3), 6),
                                           (lambda: dihedral_group(4), 8), (lambda: symmetric_group(4), 24)])
def test_group_orders(builder, order):
    t = builder()
    assert t.order == order and t.is_group()
    assert t.labels[t.identity()] == "".join(map(str, range(len(t.labels[0]))))


def test_cayley_errors():
    with pytest.raises(NoIdentity):
        from_cayley_table(CayleyTable(((0, 0), (0, 0)), ()))
    # left-zero band with an adjoined identity is associative; break it
    with pytest.raises(NotAssociative):
        from_cayley_table(CayleyTable(((0, 1, 2), (1, 2, 0), (2, 2, 2)), ()))


def test_group_algebra_constants():
    alg = from_cayley_table(symmetric_group(3))
    assert all(v == 1 for v in alg.gamma.values()) and len(alg.gamma) == 36


def test_coset_module():
    t = symmetric_group(3)
    s = t.labels.index("102")
    m = coset_module(t, [t.identity(), s])
    assert m.dim == 3
    for a in m.numerators:
        assert sorted(a.sum(axis=0)) == [1, 1, 1] and sorted(a.sum(axis=1)) == [1, 1, 1]
    assert not m.invariant_failures()
    with pytest.raises(NotASubgroup):
        coset_module(t, [t.identity(), t.labels.index("120")])


def test_regular_module_is_left_multiplication():
    alg = from_cayley_table(permutation_group([(1, 2, 0)]))
    m = regular_module(alg)
    assert not m.invariant_failures()
    assert np.array_equal(m.numerators[alg.unit_index], np.eye(3, dtype=np.int64))
