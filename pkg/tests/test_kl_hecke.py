import numpy as np
import pytest

import oracles
from pbalgebra import cartan_matrix, compute_cells, enumerate_weyl, kl_basis, weyl_kl_algebra
from pbalgebra.errors import DomainError, NotFiniteType, RankCapExceeded, SizeCapExceeded
from pbalgebra.laurent import LaurentPoly

ORACLE_GENS = {
    "A1": lambda: oracles.type_a_generators(2),
    "A2": lambda: oracles.type_a_generators(3),
    "A3": lambda: oracles.type_a_generators(4),
    "B2": lambda: oracles.type_b_generators(2),
    "B3": lambda: oracles.type_b_generators(3),
}


def _index_map(W, gens):
    idx = {oracles.word_to_element(W.words[i], gens): i for i in range(W.order)}
    assert len(idx) == W.order
    return idx


@pytest.mark.parametrize("t,order", [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48),
                                     ("G2", 12), ("A1xA1", 4), ("A4", 120)])
def test_weyl_orders(t, order):
    W = enumerate_weyl(cartan_matrix(t))
    assert W.order == order
    assert W.lengths[0] == 0 and W.words[0] == ()
    assert W.lengths[W.longest] == max(W.lengths)


@pytest.mark.parametrize("t", sorted(ORACLE_GENS))
def test_kl_polynomials_match_classical_recursion(t):
    W, kl, _ = weyl_kl_algebra(t)
    gens = ORACLE_GENS[t]()
    elems, length, _, P = oracles.kl_polynomials(gens)
    idx = _index_map(W, gens)
    for x in elems:
        assert W.lengths[idx[x]] == length[x] == oracles.inversions(x) if t[0] == "A" else True
        for w in elems:
            p = P.get((x, w), [])
            expect = {length[w] - length[x] - 2 * d: c for d, c in enumerate(p) if c}
            assert kl.h(idx[x], idx[w]).coeffs == expect


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "B2"])
def test_structure_constants_match_group_algebra(t):
    _, _, alg = weyl_kl_algebra(t)
    W, _, _ = weyl_kl_algebra(t)
    gens = ORACLE_GENS[t]()
    elems, _, gamma = oracles.kl_structure_constants_at_one(gens)
    idx = _index_map(W, gens)
    perm = [idx[x] for x in elems]
    G = np.zeros_like(gamma)
    for (i, j, k), v in alg.gamma.items():
        G[i, j, k] = int(v)
    assert np.array_equal(G[np.ix_(perm, perm, perm)], gamma)


@pytest.mark.parametrize("t", ["A2", "A3", "B2", "B3", "G2"])
def test_structure_constants_nonnegative_integers(t):
    _, _, alg = weyl_kl_algebra(t)
    assert alg.is_integral and all(v > 0 for v in alg.gamma.values())
    assert alg.labels[alg.unit_index] == "e"


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cells_match_rsk(n):
    W, _, alg = weyl_kl_algebra(f"A{n - 1}")
    cd = compute_cells(alg)
    gens = oracles.type_a_generators(n)
    idx = _index_map(W, gens)

    def partition(order):
        return {frozenset(x for x, i in idx.items() if order.cell_of[i] == c) for c in range(len(order.cells))}

    assert partition(cd.left) == oracles.fibers({x: oracles.rsk(x)[1] for x in idx})
    assert partition(cd.right) == oracles.fibers({x: oracles.rsk(x)[0] for x in idx})
    shape = {x: tuple(map(len, oracles.rsk(x)[0])) for x in idx}
    assert partition(cd.two_sided) == oracles.fibers(shape)


def test_cell_counts():
    expected = {"A2": (3, 4), "A3": (5, 10), "B2": (3, 4), "G2": (3, 4), "B3": (6, 14)}
    for t, (nj, nl) in expected.items():
        cd = compute_cells(weyl_kl_algebra(t)[2])
        assert (len(cd.two_sided.cells), len(cd.left.cells)) == (nj, nl), t


def test_bar_invariance_and_degree_bounds():
    W, kl, _ = weyl_kl_algebra("B3")
    v = LaurentPoly.monomial(1)
    for w in range(W.order):
        for x in kl.support(w):
            h = kl.h(x, w)
            if x == w:
                assert h == LaurentPoly.monomial(0)
            else:
                assert h.min_degree() >= 1 and h.max_degree() <= W.lengths[w] - W.lengths[x]
    del v


def test_caps_and_errors():
    with pytest.raises(RankCapExceeded):
        enumerate_weyl(cartan_matrix("A5"))
    with pytest.raises(NotFiniteType):
        enumerate_weyl(np.array([[2, -2], [-2, 2]]))
    with pytest.raises(SizeCapExceeded):
        enumerate_weyl(cartan_matrix("B4"), max_order=100)
    with pytest.raises(DomainError):
        cartan_matrix("Q2")
