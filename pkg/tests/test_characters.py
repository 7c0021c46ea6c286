from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qblocks.characters import (
    FormalCharacter,
    WindowError,
    character_stats,
    completion_margin,
    d_series,
    even_multiplicities,
    euler_character,
    finite_euler_character,
    permutation_sign,
    weyl_numerator,
)
from qblocks.eps import EpsCoeff
from qblocks.weights import Weight, clifford_data, dominant_grid, is_regular_dominant

# Coefficients of prod_{a>0} (1 + e^{-a}) / (1 - e^{-a}) at -(i a_1 + j a_2),
# a_1, a_2 the simple roots of gl_3; expanded independently with sympy.
D_SERIES_COEFFS = {
    (0, 0): 1, (0, 1): 2, (0, 2): 2, (0, 3): 2,
    (1, 0): 2, (1, 1): 6, (1, 2): 8, (1, 3): 8,
    (2, 0): 2, (2, 1): 8, (2, 2): 14, (2, 3): 16,
    (3, 0): 2, (3, 1): 8, (3, 2): 16, (3, 3): 22,
}


@pytest.mark.parametrize("ij, value", sorted(D_SERIES_COEFFS.items()))
def test_d_series_matches_expansion(ij, value):
    i, j = ij
    assert d_series(3, 6).coeff((-2 * i, 2 * i - 2 * j, 2 * j)) == EpsCoeff(value, 0)


def test_window_is_enforced():
    series = d_series(3, 2)
    with pytest.raises(WindowError):
        series.coeff((-6, 0, 6))
    assert series.window == 2


def test_singular_numerator_vanishes():
    assert not weyl_numerator(Weight.of(1, 1, 0)).terms
    assert euler_character(Weight.zero(3), "q", 20).is_zero()
    assert euler_character(Weight.zero(3), "sq", 20).is_zero()


def _weyl_dim(mu: tuple[Fraction, ...]) -> Fraction:
    n = len(mu)
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            out *= Fraction(mu[i] - mu[j] + j - i, j - i)
    return out


REGULAR = [w for w in dominant_grid([Fraction(k, 2) for k in range(-6, 7)])
           if is_regular_dominant(w) and completion_margin(w, 20) >= 0]


@pytest.mark.parametrize("algebra", ["q", "sq"])
@pytest.mark.parametrize("lam", REGULAR[::3], ids=str)
def test_euler_dimension_formula(lam, algebra):
    """dim E = dim v * 2^3 * dim V_gl3(lam - rho), sdim E = 0."""
    stats = character_stats(finite_euler_character(lam, algebra, 20))
    rho = (Fraction(1), Fraction(0), Fraction(-1))
    expected = clifford_data(lam, algebra).simple_dim.dim * 8 * _weyl_dim(
        tuple(c - r for c, r in zip(lam.coords, rho)))
    assert stats.total_dim == expected
    assert stats.super_dim == 0
    assert stats.is_sn_invariant


def test_finite_character_needs_full_window():
    with pytest.raises(WindowError):
        finite_euler_character(Weight.of(5, 0, -5), "q", 10)


def test_gl3_multiplicities_of_principal_euler():
    """E(1,0,-1) is (1+eps) times the superalgebra analogue of S(g_1)."""
    mults = even_multiplicities(finite_euler_character(Weight.of(1, 0, -1), "sq", 4))
    assert all(c.is_nonnegative() for c in mults.values())
    assert sum(c.dim for c in mults.values()) > 0


def test_dump_round_trip():
    ch = finite_euler_character(Weight.of(2, 0, -1), "q", 20)
    assert FormalCharacter.load(ch.dump(), 3).terms == ch.terms


weights = st.tuples(*(st.integers(-4, 4) for _ in range(3))).map(lambda t: Weight.of(*t))
algebras = st.sampled_from(["q", "sq"])


@settings(max_examples=40, deadline=None)
@given(weights, algebras, st.integers(2, 12))
def test_truncation_stability(lam, algebra, depth):
    assert euler_character(lam, algebra, depth) == euler_character(lam, algebra, depth + 1)


@settings(max_examples=40, deadline=None)
@given(weights, algebras, st.permutations(range(3)))
def test_sign_equivariance(lam, algebra, perm):
    base = euler_character(lam, algebra, 8)
    moved = euler_character(lam.permuted(perm), algebra, 8)
    assert moved == base.scale(permutation_sign(perm))


@settings(max_examples=30, deadline=None)
@given(weights, algebras)
def test_parity_shift_is_involution(lam, algebra):
    ch = euler_character(lam, algebra, 6)
    assert ch.parity_shift().parity_shift() == ch
    assert ch.is_parity_symmetric() == (ch.parity_shift() == ch)
