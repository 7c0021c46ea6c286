from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qblocks.eps import EpsCoeff
from qblocks.weights import (
    BlockClass,
    IndResCase,
    SimpleType,
    Weight,
    WeightError,
    block_class,
    central_weight,
    clifford_data,
    dominant_grid,
    ext_trivial_dim,
    gamma,
    is_dominant,
    is_regular_dominant,
    restrict_induce_class,
    same_block,
    self_ext,
    standard_reduction,
)


def test_parse_accepts_halves():
    w = Weight.parse("3/2,1/2,-1/2")
    assert w.doubled == (3, 1, -1)
    assert w.key() == "3/2,1/2,-1/2"
    assert not w.is_integral()


@pytest.mark.parametrize("text", ["", "1,,2", "1/3,0,0", "a,b,c"])
def test_parse_rejects_garbage(text):
    with pytest.raises(WeightError):
        Weight.parse(text)


def test_dominance_rules():
    assert is_dominant(Weight.of(1, 0, 0))
    assert not is_dominant(Weight.of(1, 1, 1))
    assert not is_dominant(Weight.of(0, 1, 2))
    assert not is_dominant(Weight.parse("1,1/2,0"))
    assert is_regular_dominant(Weight.of(2, 0, -2))
    assert not is_regular_dominant(Weight.of(1, 0, 0))


@pytest.mark.parametrize("weight, algebra, dim_e, kernel, sdim, kind", [
    ("3,2,1", "q", 3, 0, EpsCoeff(2, 2), SimpleType.Q),
    ("2,0,-2", "q", 2, 1, EpsCoeff(1, 1), SimpleType.M),
    ("1,0,0", "q", 1, 2, EpsCoeff(1, 1), SimpleType.Q),
    ("0,0,0", "q", 0, 3, EpsCoeff(1, 0), SimpleType.M),
    ("3,2,1", "sq", 2, 0, EpsCoeff(1, 1), SimpleType.M),
    ("6,3,-2", "sq", 1, 1, EpsCoeff(1, 1), SimpleType.Q),
    ("2,0,-2", "sq", 2, 0, EpsCoeff(1, 1), SimpleType.M),
    ("0,0,0", "sq", 0, 2, EpsCoeff(1, 0), SimpleType.M),
])
def test_clifford_data(weight, algebra, dim_e, kernel, sdim, kind):
    data = clifford_data(Weight.parse(weight), algebra)
    assert (data.dim_e, data.dim_kernel, data.simple_dim, data.type) == (dim_e, kernel, sdim, kind)


def test_gamma():
    assert gamma(Weight.of(2, 0, -2), "q") == 2
    assert gamma(Weight.of(2, 0, -2), "sq") == 1
    assert gamma(Weight.of(3, 2, 1), "q") == 1
    with pytest.raises(WeightError):
        gamma(Weight.of(1, 0, 0), "q")


def test_unknown_algebra():
    with pytest.raises(ValueError):
        clifford_data(Weight.of(1, 0, 0), "gl")


@pytest.mark.parametrize("weight, algebra, same, shifted", [
    ("2,0,-1", "q", 0, 1),
    ("3,2,1", "q", 0, 0),
    ("6,3,-2", "sq", 1, 1),
    ("3,2,1", "sq", 0, 0),
    ("2,0,-2", "sq", 0, 0),
])
def test_self_ext(weight, algebra, same, shifted):
    ext = self_ext(Weight.parse(weight), algebra)
    assert (ext.same, ext.shifted) == (same, shifted)


def test_restrict_induce_cases():
    assert restrict_induce_class(Weight.of(2, 0, -1)).case is IndResCase.ZERO_COORD
    assert restrict_induce_class(Weight.of(3, 2, 1)).case is IndResCase.GENERIC
    case_c = restrict_induce_class(Weight.of(6, 3, -2))
    assert case_c.case is IndResCase.RECIPROCAL_ZERO
    assert case_c.res_nonsplit and case_c.res[0] == ("L_sq", True)


def test_standard_reduction():
    assert standard_reduction(Weight.of(1, 0, 0)) == Weight.of(0, 0)
    assert standard_reduction(Weight.of(4, 1, -4)) == Weight.of(3, -3)
    assert standard_reduction(Weight.of(3, 2, 1, 0, -2, -3)) == Weight.of(2, 1, 0, -1, -2)
    with pytest.raises(WeightError):
        standard_reduction(Weight.of(2, 0, -2))


def _weyl_integration_invariants(n: int, degree: int) -> int:
    """dim S^degree(gl_n)^{gl_n} by integrating the character over the torus."""
    roots = [tuple((1 if k == i else 0) - (1 if k == j else 0) for k in range(n))
             for i in range(n) for j in range(n)]
    sym: Counter = Counter()
    for combo in itertools.combinations_with_replacement(range(len(roots)), degree):
        sym[tuple(sum(roots[r][k] for r in combo) for k in range(n))] += 1
    density: Counter = Counter({(0,) * n: 1})
    for i, j in itertools.permutations(range(n), 2):
        step: Counter = Counter()
        for w, c in density.items():
            step[w] += c
            moved = list(w)
            moved[i] += 1
            moved[j] -= 1
            step[tuple(moved)] -= c
        density = step
    total = sum(c * density.get(tuple(-x for x in w), 0) for w, c in sym.items())
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    assert total % fact == 0
    return total // fact


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("degree", range(0, 6))
def test_ext_trivial_against_weyl_integration(n, degree):
    expected = _weyl_integration_invariants(n, degree)
    odd = degree % 2 == 1
    assert ext_trivial_dim(n, degree, shifted=odd) == expected
    assert ext_trivial_dim(n, degree, shifted=not odd) == 0


@pytest.mark.parametrize("weight, algebra, cls", [
    ("2,0,-2", "q", BlockClass.PRINCIPAL),
    ("0,0,0", "sq", BlockClass.PRINCIPAL),
    ("1,0,0", "q", BlockClass.STANDARD),
    ("5,1,-5", "sq", BlockClass.STANDARD),
    ("3/2,1/2,-1/2", "q", BlockClass.HALF_STANDARD),
    ("7/2,3/2,-7/2", "sq", BlockClass.HALF_STANDARD),
    ("2,0,-1", "q", BlockClass.TYPICAL),
    ("3,2,1", "q", BlockClass.STRONGLY_TYPICAL),
    ("5/2,3/2,1/2", "sq", BlockClass.STRONGLY_TYPICAL),
    ("6,3,-2", "sq", BlockClass.SQ_TYPICAL_LOOP),
    ("6,3,-2", "q", BlockClass.STRONGLY_TYPICAL),
])
def test_block_class(weight, algebra, cls):
    assert block_class(Weight.parse(weight), algebra).block_class is cls


def test_block_class_rejects_non_dominant():
    with pytest.raises(WeightError):
        block_class(Weight.of(1, 1, 1), "q")


def test_blocks_share_central_weight():
    b1 = block_class(Weight.of(3, 0, -3), "q")
    b2 = block_class(Weight.of(0, 0, 0), "q")
    assert b1 == b2 and b1.name == "q:Principal:0,0,0"
    assert [w.key() for w in b1.weights(2)] == ["0,0,0", "1,0,-1", "2,0,-2"]


def test_dominant_grid_counts():
    grid = dominant_grid(range(-1, 2))
    assert Weight.of(1, 0, -1) in grid and Weight.of(0, 0, 0) in grid
    assert all(is_dominant(w) for w in grid)


small = st.integers(-6, 6)


@given(st.tuples(small, small, small), st.permutations(range(3)))
def test_central_weight_is_symmetric(coords, perm):
    lam = Weight.of(*coords)
    assert central_weight(lam) == central_weight(lam.permuted(perm))
    assert same_block(lam, lam.permuted(perm))


@given(small, small)
def test_opposite_pair_cancels(a, b):
    assert central_weight(Weight.of(a, -a, b)) == central_weight(Weight.of(b, 0, 0))


@given(st.sampled_from(dominant_grid([Fraction(k, 2) for k in range(-6, 7)])))
def test_every_dominant_weight_has_a_class(lam):
    for algebra in ("q", "sq"):
        block = block_class(lam, algebra)
        if block.is_canonical:
            assert lam in block.weights(abs(lam.doubled[0]) // 2 + 1)
        else:
            with pytest.raises(WeightError):
                block.weights(2)
