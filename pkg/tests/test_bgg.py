from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qblocks.acceptance import projective_superdims
from qblocks.bgg import (
    COLLAPSED,
    TRACKED,
    GrothendieckVector,
    UnsupportedBlock,
    a_coefficients,
    b_matrix,
    block_report,
    lift_multiple,
    minimal_seed,
    projective_summary,
    projective_table,
    simple_characters,
    trivial_candidates,
)
from qblocks.characters import FormalCharacter
from qblocks.eps import EPS, ONE, EpsCoeff
from qblocks.weights import SimpleLabel, Weight, block_class


def test_sq_principal_summary(block):
    summary = projective_summary(block("sq", "0,0,0"), 3)
    assert summary["P(0)"] == {"C": 4, "L1": 2, "L2": 2}
    assert summary["P(1)"] == {"C": 2, "L1": 2, "L2": 1}
    assert summary["P(2)"] == {"C": 2, "L1": 1, "L2": 2, "L3": 1}
    assert summary["P(3)"] == {"L2": 1, "L3": 2, "L4": 1}


def test_q_principal_doubles_sq(block):
    sq = projective_summary(block("sq", "0,0,0"), 6)
    q = projective_summary(block("q", "0,0,0"), 6)
    assert q == {p: {k: 2 * v for k, v in row.items()} for p, row in sq.items()}


def test_standard_rows(block):
    sq = projective_summary(block("sq", "1,0,0"), 3)
    q = projective_summary(block("q", "1,0,0"), 3)
    assert sq["P(1,0,0)"] == {"L(1,0,0)": 2, "L(2,1,-2)": 2}
    assert q["P(1,0,0)"] == {"L(1,0,0)": 4, "L(2,1,-2)": 2}
    assert q["P(2,1,-2)"] == {"L(1,0,0)": 2, "L(2,1,-2)": 2, "L(3,1,-3)": 1}


def test_principal_b_row(block):
    row = b_matrix(block("sq", "0,0,0")).row(Weight.of(2, 0, -2))
    assert row.entries == {SimpleLabel(Weight.of(0, 0, 0)): 2, SimpleLabel(Weight.of(1, 0, -1)): 1,
                           SimpleLabel(Weight.of(2, 0, -2)): 1}


def test_a_coefficients_use_gamma_and_type(block):
    acoef = a_coefficients(block("q", "1,0,0"), 3)
    # No zero coordinate at (2,1,-2), so gamma = 1; both simples are type Q.
    assert acoef[(Weight.of(1, 0, 0), Weight.of(2, 1, -2))] == 2
    assert acoef[(Weight.of(2, 1, -2), Weight.of(2, 1, -2))] == 1
    # In the principal block gamma = 2 and L(0) is type M while L(2) is not.
    acoef = a_coefficients(block("q", "0,0,0"), 3)
    assert acoef[(Weight.of(0, 0, 0), Weight.of(2, 0, -2))] == 4


def test_typical_projective_table(block):
    table = projective_table(block("q", "2,0,-1"), 3)
    assert table.multiplicities[Weight.of(2, 0, -1)].total == 2
    table = projective_table(block("q", "3,2,1"), 3)
    assert table.multiplicities[Weight.of(3, 2, 1)].total == 1


def test_non_canonical_block_is_unsupported(block):
    with pytest.raises((UnsupportedBlock, ValueError)):
        projective_table(block("q", "2,0,0"), 3)


def test_grothendieck_vectors():
    tracked = GrothendieckVector({SimpleLabel(Weight.zero(3)): 1,
                                  SimpleLabel(Weight.zero(3), True): 2}, TRACKED)
    assert tracked.collapse().entries == {SimpleLabel(Weight.zero(3)): 3}
    with pytest.raises(ValueError):
        GrothendieckVector({SimpleLabel(Weight.zero(3), True): 1}, COLLAPSED)


def test_lift_multiple_balances_parity():
    trivial = FormalCharacter({(0, 0, 0): ONE}, 3)
    assert lift_multiple(trivial, 2).terms == {(0, 0, 0): ONE + EPS}
    with pytest.raises(ArithmeticError):
        lift_multiple(trivial, 3)


@pytest.mark.parametrize("algebra", ["q", "sq"])
def test_trivial_character_is_pinned(algebra):
    """Only c = 1 or c = eps survive, each with 2[C] read as (1+eps) e^0."""
    found = trivial_candidates(algebra, 6)
    assert {(c.c, c.x) for c in found} == {(ONE, ONE + EPS), (EPS, ONE + EPS)}


@pytest.mark.parametrize("weight", ["0,0,0", "1,0,0"])
@pytest.mark.parametrize("algebra", ["q", "sq"])
def test_simple_characters_are_genuine(block, algebra, weight):
    chars = simple_characters(block(algebra, weight), 16, 4)
    for ch in chars.values():
        assert ch.is_nonnegative() and ch.is_sn_invariant()


def test_first_principal_simple_is_its_euler(block):
    chars = simple_characters(block("sq", "0,0,0"), 8, 1)
    assert chars[Weight.of(1, 0, -1)].coeff((2, 0, -2)) == EpsCoeff(1, 1)


def test_minimal_seed_is_an_orbit():
    seed = minimal_seed(Weight.of(1, 0, 0), "q")
    assert len(seed.terms) == 3 and seed.exact


def test_block_report_shape(block):
    report = block_report(block("sq", "0,0,0"), 2)
    assert report["block"] == "sq:Principal:0,0,0"
    assert report["rows"][0] == {"mu": [2, 0, -2], "E": {"2,0,-2": 1}}
    assert report["projectives"][0]["P"] == {"0,0,0": 4, "2,0,-2": 2, "4,0,-4": 2}


@given(st.sampled_from(["q", "sq"]), st.integers(0, 6))
def test_principal_projectives_have_zero_superdimension(algebra, bound):
    for dim, sdim in projective_superdims(block_class(Weight.zero(3), algebra), bound).values():
        assert dim > 0 and sdim == 0


@pytest.mark.parametrize("bound", [0, 1, 2])
def test_small_bounds_still_reach_the_trivial_row(block, bound):
    assert projective_summary(block("sq", "0,0,0"), bound)["P(0)"] == {"C": 4, "L1": 2, "L2": 2}
