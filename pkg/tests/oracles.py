"""Independent reference computations.

None of these import the package's algorithms: they work directly from
transformations, permutations and raw structure-constant dictionaries.
"""

from fractions import Fraction
from itertools import product

import numpy as np


# -- algebra ---------------------------------------------------------------------

def naive_multiply(gamma, n, x, y):
    out = [Fraction(0)] * n
    for (i, j, k), g in gamma.items():
        out[k] += Fraction(x[i]) * Fraction(y[j]) * g
    return out


def naive_associative(gamma, n):
    for i, j, l in product(range(n), repeat=3):
        ei = [Fraction(int(a == i)) for a in range(n)]
        ej = [Fraction(int(a == j)) for a in range(n)]
        el = [Fraction(int(a == l)) for a in range(n)]
        if naive_multiply(gamma, n, naive_multiply(gamma, n, ei, ej), el) != \
                naive_multiply(gamma, n, ei, naive_multiply(gamma, n, ej, el)):
            return False
    return True


# -- transformation monoids and Green's relations ---------------------------------

def all_transformations(m):
    return [tuple(t) for t in product(range(m), repeat=m)]


def compose(f, g):
    """(f o g)(x) = f(g(x))."""
    return tuple(f[x] for x in g)


def green_classes(elements):
    """Left, right and two-sided classes as sets of frozensets of elements."""
    S = list(elements)
    left = {x: frozenset(compose(s, x) for s in S) for x in S}
    right = {x: frozenset(compose(x, s) for s in S) for x in S}
    both = {x: frozenset(compose(compose(s, x), t) for s in S for t in S) for x in S}

    def classes(ideal):
        out = {}
        for x in S:
            out.setdefault(ideal[x], set()).add(x)
        return {frozenset(c) for c in out.values()}

    return classes(left), classes(right), classes(both)


# -- permutation groups --------------------------------------------------------------

def inversions(p):
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def type_a_generators(n):
    """s_i swaps positions i and i+1 of {0..n-1}, i = 0..n-2."""
    gens = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    return gens


def type_b_generators(r):
    """Signed permutations of {1..r} acting on {-r..r}, encoded on 0..2r.

    Returned in the order t_{r-1}, ..., t_1, t_0 where t_0 flips the sign of 1
    and t_i swaps i and i+1; that order makes node r-2 and r-1 the pair joined
    by an edge of order 4.
    """
    size = 2 * r + 1
    off = r

    def perm(f):
        return tuple(f(v - off) + off for v in range(size))

    t = [perm(lambda v: -v if abs(v) == 1 else v)]
    for i in range(1, r):
        def swap(v, i=i):
            a = abs(v)
            s = 1 if v >= 0 else -1
            if a == i:
                return s * (i + 1)
            if a == i + 1:
                return s * i
            return v
        t.append(perm(swap))
    return list(reversed(t))


def generate(gens):
    ident = tuple(range(len(gens[0])))
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for s, g in enumerate(gens):
                x = compose(g, w)
                if x not in words:
                    words[x] = (s,) + words[w]
                    nxt.append(x)
        frontier = nxt
    return words


def word_to_element(word, gens):
    x = tuple(range(len(gens[0])))
    for s in reversed(word):
        x = compose(gens[s], x)
    return x


def kl_polynomials(gens):
    """Classical KL polynomials P_{x,w}(q) as integer coefficient lists.

    Uses the recursion with w = s v, v < w, and the q-normalisation.
    Returns (elements sorted by length, length dict, P dict keyed (x, w)).
    """
    words = generate(gens)
    elems = sorted(words, key=lambda w: (len(words[w]), words[w]))
    length = {w: len(words[w]) for w in elems}
    P = {}

    def get(x, w):
        return P.get((x, w), [])

    def add(a, b, shift=0, scale=1):
        out = list(a) + [0] * max(0, len(b) + shift - len(a))
        for d, c in enumerate(b):
            out[d + shift] += scale * c
        return out

    def mu(z, v):
        d = length[v] - length[z]
        if d % 2 == 0:
            return 0
        p = get(z, v)
        k = (d - 1) // 2
        return p[k] if k < len(p) else 0

    ident = elems[0]
    for x in elems:
        P[(x, ident)] = [1] if x == ident else []
    for w in elems[1:]:
        s = words[w][0]
        g = gens[s]
        v = compose(g, w)          # s w, shorter
        for x in elems:
            sx = compose(g, x)
            c = 1 if length[sx] < length[x] else 0
            res = add(add([], get(sx, v), 1 - c), get(x, v), c)
            for z in elems:
                if length[z] >= length[v]:
                    continue
                if length[compose(g, z)] < length[z]:
                    m = mu(z, v)
                    if m:
                        sh = (length[w] - length[z]) // 2
                        res = add(res, get(x, z), sh, -m)
            while res and res[-1] == 0:
                res.pop()
            if res:
                P[(x, w)] = res
    return elems, length, words, P


def kl_structure_constants_at_one(gens):
    """gamma[x, y, z] with C_x C_y = sum_z gamma C_z in Q[W] (v = 1).

    At v = 1 the Hecke algebra is the group algebra and the canonical basis
    element of w is sum_x P_{x,w}(1) x.
    """
    elems, length, words, P = kl_polynomials(gens)
    idx = {w: i for i, w in enumerate(elems)}
    n = len(elems)
    C = np.zeros((n, n), dtype=np.int64)   # column w = C_w in the group basis
    for (x, w), p in P.items():
        C[idx[x], idx[w]] = sum(p)
    Cinv = np.round(np.linalg.inv(C)).astype(np.int64)
    assert np.array_equal(C @ Cinv, np.eye(n, dtype=np.int64))
    gamma = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            prod = np.zeros(n, dtype=np.int64)
            for x in range(n):
                if not C[x, a]:
                    continue
                for y in range(n):
                    if C[y, b]:
                        prod[idx[compose(elems[x], elems[y])]] += C[x, a] * C[y, b]
            gamma[a, b] = Cinv @ prod
    return elems, words, gamma


# -- RSK -----------------------------------------------------------------------------

def rsk(seq):
    """(P, Q) tableaux of a sequence by row insertion."""
    Pt, Qt = [], []
    for pos, a in enumerate(seq):
        r = 0
        while True:
            if r == len(Pt):
                Pt.append([a])
                Qt.append([pos])
                break
            row = Pt[r]
            bigger = [c for c, b in enumerate(row) if b > a]
            if not bigger:
                row.append(a)
                Qt[r].append(pos)
                break
            c = bigger[0]
            row[c], a = a, row[c]
            r += 1
    return tuple(map(tuple, Pt)), tuple(map(tuple, Qt))


def fibers(keys):
    out = {}
    for x, k in keys.items():
        out.setdefault(k, set()).add(x)
    return {frozenset(v) for v in out.values()}


# -- spectral --------------------------------------------------------------------------

def dense_pf(M):
    """Dominant eigenvalue, second modulus and positive eigenvector by numpy.linalg.eig."""
    w, V = np.linalg.eig(M)
    order = np.argsort(-np.abs(w))
    lam = w[order[0]]
    v = np.real(V[:, order[0]])
    v = v / v.sum()
    second = np.abs(w[order[1]]) if len(w) > 1 else 0.0
    return float(np.real(lam)), float(second), v, w


# -- exact linear algebra ----------------------------------------------------------

def left_mult_matrix(gamma, n, x):
    """Matrix of y -> x y in the basis, columns indexed by basis vectors."""
    M = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        ej = [Fraction(int(a == j)) for a in range(n)]
        col = naive_multiply(gamma, n, x, ej)
        for k in range(n):
            M[k][j] = col[k]
    return M


def fraction_nullspace(rows, ncols):
    """Basis of {y : rows @ y = 0} by textbook Gauss-Jordan elimination."""
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        A[r] = [v / piv for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        y = [Fraction(0)] * ncols
        y[f] = Fraction(1)
        for i, c in enumerate(pivots):
            y[c] = -A[i][f]
        basis.append(y)
    return basis


def radical_dimension(gamma, n):
    """dim of {x : tr(L_{x y}) = 0 for all y}; the radical in characteristic 0."""
    traces = []
    for k in range(n):
        ek = [Fraction(int(a == k)) for a in range(n)]
        L = left_mult_matrix(gamma, n, ek)
        traces.append(sum(L[a][a] for a in range(n)))
    T = [[Fraction(0)] * n for _ in range(n)]
    for (i, j, k), g in gamma.items():
        T[j][i] += g * traces[k]
    return len(fraction_nullspace(T, n))
