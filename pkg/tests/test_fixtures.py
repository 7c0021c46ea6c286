from __future__ import annotations

import pytest

from qblocks import fixtures
from qblocks.fixtures import (
    FILTRATIONS,
    FixtureError,
    expected_layers,
    fixture_cases,
    parse_label,
    verify_against_fixtures,
)
from qblocks.quivers import block_algebra
from qblocks.weights import SimpleLabel, Weight

FAMILIES = [(alg, "1,0,0" if cls.value == "Standard" else "0,0,0") for alg, cls in FILTRATIONS]


def test_label_grammar(block):
    principal = block("q", "0,0,0")
    standard = block("q", "1,0,0")
    assert parse_label("PiL2", principal) == SimpleLabel(Weight.of(2, 0, -2), True)
    assert parse_label("La+1", standard, 4) == SimpleLabel(Weight.of(5, 1, -5))
    assert parse_label("L100", standard) == SimpleLabel(Weight.of(1, 0, 0))
    with pytest.raises(FixtureError):
        parse_label("La", standard)
    with pytest.raises(FixtureError):
        parse_label("M3", standard)


def test_expected_layers_are_sorted(block):
    top, layers = expected_layers(block("sq", "0,0,0"), "0")
    assert top == SimpleLabel(Weight.zero(3))
    assert [len(x) for x in layers] == [1, 2, 2, 2, 1]


@pytest.mark.parametrize("cutoff", [6, 8, 10])
@pytest.mark.parametrize("algebra_name, weight", FAMILIES)
def test_all_fixtures_match(block, algebra_name, weight, cutoff):
    blk = block(algebra_name, weight)
    report = verify_against_fixtures(block_algebra(blk, cutoff, 12), blk)
    assert report.ok, report.to_json()
    assert report.checked >= len(fixture_cases(blk, cutoff))


def test_mismatch_is_reported(block, monkeypatch):
    blk = block("sq", "0,0,0")
    patched = dict(FILTRATIONS)
    patched[("sq", blk.block_class)] = {"1": ["L1", "L0", "L2", "L0", "L1"]}
    monkeypatch.setattr(fixtures, "FILTRATIONS", patched)
    report = verify_against_fixtures(block_algebra(blk, 6, 12), blk)
    assert not report.ok
    assert {m.vertex for m in report.mismatches} == {"L(1,0,-1)", "PiL(1,0,-1)"}
