from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qblocks import _kernels, _pykernels
from qblocks.acceptance import representative_blocks
from qblocks.quivers import block_quiver

ckernels = pytest.importorskip("qblocks._ckernels")

keys = st.tuples(*(st.integers(-30, 30) for _ in range(3)))
values = st.tuples(st.integers(-5, 5), st.integers(-5, 5))
polys = st.dictionaries(keys, values, max_size=25)


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.one_of(st.none(), st.integers(-200, 50)))
def test_convolve_backends_agree(f, g, floor):
    assert ckernels.convolve(f, g, floor) == _pykernels.convolve(f, g, floor)


def test_convolve_falls_back_for_wide_keys():
    f = {(1, 2, 3, 4, 5): (1, 0)}
    assert ckernels.convolve(f, f, None) == {(2, 4, 6, 8, 10): (1, 0)}
    big = {(20000, 0, 0): (1, 1)}
    assert ckernels.convolve(big, big, None) == {(40000, 0, 0): (2, 2)}


@pytest.mark.parametrize("cutoff", [6, 9])
def test_close_paths_backends_agree(cutoff):
    for blk in representative_blocks():
        q, r = block_quiver(blk, cutoff)
        args = (len(q.vertices), [a.source for a in q.arrows], [a.target for a in q.arrows],
                sorted(r.zero_words), list(r.binomials), 10 + r.max_length_gap)
        assert ckernels.close_paths(*args) == _pykernels.close_paths(*args)


def test_backend_selected_at_import():
    assert _kernels.BACKEND == "cython"
    env = dict(os.environ, QBLOCKS_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from qblocks import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
