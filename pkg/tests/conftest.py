import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pbalgebra import compute_cells, corpus  # noqa: E402


@functools.lru_cache(maxsize=None)
def algebra(name):
    return corpus.build(name)


@functools.lru_cache(maxsize=None)
def cells(name):
    return compute_cells(algebra(name))


@pytest.fixture
def alg_cd():
    return lambda name: (algebra(name), cells(name))
