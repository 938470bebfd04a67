"""Compiled vs pure-Python kernels: exhaustive associativity and the bilinear product.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from pbalgebra import _pykernels, corpus, from_cayley_table, weyl_kl_algebra
from pbalgebra.constructors import symmetric_group

try:
    from pbalgebra import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python timings are meaningful")
    algebras = {
        "T3": corpus.build("T3"),
        "S4": from_cayley_table(symmetric_group(4)),
        "KL-A3": corpus.build("KL-A3"),
        "KL-B3": weyl_kl_algebra("B3")[2],
    }
    print(f"{'algebra':8} {'dim':>4} {'kernel':12} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    rng = np.random.default_rng(0)
    for name, alg in algebras.items():
        _, _, K = alg.triples
        vals = np.ascontiguousarray(alg.scaled_values, dtype=np.int64)
        args_a = (alg.pair_ptr, K, vals, alg.dim, 10)
        tp, rp = best_of(lambda: _pykernels.assoc_violations(*args_a), args.repeat)
        row = f"{name:8} {alg.dim:>4} {'assoc':12} {tp:>10.4f}"
        if _ckernels is not None:
            tc, rc = best_of(lambda: _ckernels.assoc_violations(*args_a), args.repeat)
            assert rc == rp
            row += f" {tc:>10.4f} {tp / tc:>7.1f}x"
        print(row)

        I, J, K = alg.triples
        x, y = rng.random((2, alg.dim))
        args_b = (I, J, K, alg.float_values, x, y, alg.dim)
        loops = 200
        tp, bp = best_of(lambda: [_pykernels.bilinear(*args_b) for _ in range(loops)], args.repeat)
        row = f"{name:8} {alg.dim:>4} {'bilinear x200':12} {tp:>10.4f}"
        if _ckernels is not None:
            tc, bc = best_of(lambda: [_ckernels.bilinear(*args_b) for _ in range(loops)], args.repeat)
            assert np.allclose(bc[0], bp[0])
            row += f" {tc:>10.4f} {tp / tc:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
