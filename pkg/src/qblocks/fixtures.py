"""Stored radical filtrations of indecomposable projectives.

Each diagram is a list of layers, top first; a layer is a space separated
multiset of labels.  Label grammar: an optional ``Pi`` prefix, then ``L``
followed by a family index (``0``, ``3``, ``a``, ``a+1``, ``a-1``) or the
literal ``100`` for ``L(1,0,0)``.  In the principal family index ``k`` means
``L(k,0,-k)``; in the standard family it means ``L(k,1,-k)``.  Diagrams keyed
by ``a`` hold for every interior ``a >= 3``.

Parity-shifted vertices are checked through the parity involution, so only
unshifted projectives are stored.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .quivers import PathAlgebra, Quiver
from .weights import BlockClass, BlockDescriptor, SimpleLabel, Weight

FILTRATIONS: dict[tuple[str, BlockClass], dict[str, list[str]]] = {
    ("sq", BlockClass.STANDARD): {
        "100": ["L100", "PiL2 L2", "L100"],
        "2": ["L2", "L3 L100", "L2"],
        "a": ["La", "La+1 La-1", "La"],
    },
    ("sq", BlockClass.PRINCIPAL): {
        "0": ["L0", "L1 PiL2", "PiL0 PiL0", "L2 PiL1", "L0"],
        "1": ["L1", "PiL0", "L2", "L0", "L1"],
        "2": ["L2", "L0 L3", "L1", "PiL0", "L2"],
        "a": ["La", "La+1 La-1", "La"],
    },
    ("q", BlockClass.STANDARD): {
        "100": ["L100", "L100 L2", "L2 L100", "L100"],
        "2": ["L2", "L3 L100", "L100", "L2"],
        "a": ["La", "La+1 La-1", "La"],
    },
    ("q", BlockClass.PRINCIPAL): {
        "0": ["L0", "L1 PiL2 PiL0", "PiL0 PiL0 PiL1 L2", "L2 PiL1 L0 L0",
              "L0 PiL2 L1", "PiL0"],
        "1": ["L1", "PiL0 PiL1", "L2 L0", "L0 PiL2", "L1 PiL0", "PiL1"],
        "2": ["L2", "L0 L3 PiL2", "L1 PiL0 PiL3", "PiL0 PiL1", "L2 L0", "PiL2"],
        "a": ["La", "La+1 La-1 PiLa", "La PiLa+1 PiLa-1", "PiLa"],
    },
}

_LABEL = re.compile(r"^(Pi)?L(100|a[+-]1|a|\d+)$")


class FixtureError(ValueError):
    """Malformed fixture label."""


def parse_label(token: str, block: BlockDescriptor, a: int | None = None) -> SimpleLabel:
    m = _LABEL.match(token)
    if not m:
        raise FixtureError(f"bad fixture label {token!r}")
    shifted, body = bool(m.group(1)), m.group(2)
    if body == "100":
        return SimpleLabel(Weight.of(1, 0, 0), shifted)
    if body.startswith("a"):
        if a is None:
            raise FixtureError(f"label {token!r} needs a parameter")
        k = a + (int(body[1:]) if len(body) > 1 else 0)
    else:
        k = int(body)
    second = 0 if block.block_class is BlockClass.PRINCIPAL else 1
    return SimpleLabel(Weight.of(k, second, -k), shifted)


def expected_layers(block: BlockDescriptor, key: str, a: int | None = None
                    ) -> tuple[SimpleLabel, tuple[tuple[SimpleLabel, ...], ...]]:
    """The vertex and its stored layers, each layer sorted."""
    diagram = FILTRATIONS[(block.algebra, block.block_class)][key]
    layers = tuple(tuple(sorted(parse_label(t, block, a) for t in row.split())) for row in diagram)
    return layers[0][0], layers


@dataclass(frozen=True)
class FixtureMismatch:
    vertex: str
    expected: list[list[str]]
    found: list[list[str]]


@dataclass(frozen=True)
class FixtureReport:
    block: str
    checked: int
    mismatches: tuple[FixtureMismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.checked > 0

    def to_json(self) -> dict:
        return {"block": self.block, "checked": self.checked, "ok": self.ok,
                "mismatches": [m.__dict__ for m in self.mismatches]}


def _shift(quiver: Quiver, layers: tuple[tuple[SimpleLabel, ...], ...]
           ) -> tuple[tuple[SimpleLabel, ...], ...]:
    def image(x: SimpleLabel) -> SimpleLabel:
        return quiver.vertices[quiver.involution[quiver.vertex(x)]]
    return tuple(tuple(sorted(image(x) for x in layer)) for layer in layers)


def has_fixtures(block: BlockDescriptor) -> bool:
    return (block.algebra, block.block_class) in FILTRATIONS and block.is_canonical


def fixture_cases(block: BlockDescriptor, cutoff: int
                  ) -> list[tuple[SimpleLabel, tuple[tuple[SimpleLabel, ...], ...]]]:
    """Every stored diagram instantiated at the interior parameters."""
    table = FILTRATIONS[(block.algebra, block.block_class)]
    cases = []
    for key in table:
        params = range(3, cutoff - 1) if key == "a" else [None]
        for a in params:
            cases.append(expected_layers(block, key, a))
    return cases


def verify_against_fixtures(algebra: PathAlgebra, block: BlockDescriptor) -> FixtureReport:
    """Compare recomputed radical layers with the stored diagrams, as ordered
    lists of multisets, and check each diagram's total against the collapsed
    Hom dimensions.  Parity-shifted copies of the stored projectives are
    checked through the parity involution."""
    quiver = algebra.quiver
    mismatches = []
    cases = fixture_cases(block, quiver.cutoff)
    # Parity-shifted projectives, where they are separate vertices.
    for top, layers in list(cases):
        shifted = _shift(quiver, layers)
        if shifted[0][0] != top:
            cases.append((shifted[0][0], shifted))
    for top, layers in cases:
        v = quiver.vertex(top)
        found = tuple(tuple(sorted(layer)) for layer in algebra.radical_filtration(v).layers)
        totals = Counter(x.weight for layer in layers for x in layer)
        if found != layers or totals != Counter(algebra.collapsed_hom(v)):
            mismatches.append(FixtureMismatch(
                str(top),
                [[str(x) for x in layer] for layer in layers],
                [[str(x) for x in layer] for layer in found]))
    return FixtureReport(block.name, len(cases), tuple(mismatches))
