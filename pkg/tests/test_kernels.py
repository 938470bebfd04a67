import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pbalgebra import _pykernels, kernels
from conftest import algebra

try:
    from pbalgebra import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")


def _csr(alg):
    _, _, K = alg.triples
    return alg.pair_ptr, K, np.ascontiguousarray(alg.scaled_values, dtype=np.int64)


@needs_c
@pytest.mark.parametrize("name", ["T2", "S3", "KL-A2", "Qx2"])
def test_backends_agree_on_associativity(name):
    ptr, K, vals = _csr(algebra(name))
    n = algebra(name).dim
    assert _ckernels.assoc_violations(ptr, K, vals, n, 10) == _pykernels.assoc_violations(ptr, K, vals, n, 10)


@needs_c
def test_backends_agree_on_violations():
    alg = algebra("T2")
    ptr, K, vals = _csr(alg)
    bad = vals.copy()
    bad[3] += 1
    c = _ckernels.assoc_violations(ptr, K, bad, alg.dim, 1000)
    p = _pykernels.assoc_violations(ptr, K, bad, alg.dim, 1000)
    assert c == p and c[0] > 0


@needs_c
@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_backends_agree_on_bilinear(seed):
    alg = algebra("KL-A3")
    rng = np.random.default_rng(seed)
    x, y = rng.normal(size=(2, alg.dim))
    I, J, K = alg.triples
    args = (I, J, K, alg.float_values, x, y, alg.dim)
    assert np.allclose(_ckernels.bilinear(*args), _pykernels.bilinear(*args), rtol=1e-12, atol=1e-12)


def test_backend_selection_env():
    env = dict(os.environ, PBALGEBRA_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from pbalgebra import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("cython", "python")
