"""Quivers with relations for the blocks of q(3) and sq(3).

Conventions.  An arrow ``L(l) -> L(m)`` records that ``L(l)`` sits in the
first radical layer of ``P(m)``.  The projective ``P(v)`` is spanned by the
paths that end at ``v``; the composition factor attached to a path is its
source.  Consequently ``Hom(P(i), P(j))`` is spanned by the paths from ``i``
to ``j``.  Relation strings are written as compositions of maps, so a word is
normally read right to left; :func:`resolve_orientation` decides this per
relation by composability.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernels
from .weights import BlockClass, BlockDescriptor, SimpleLabel, Weight, weight_index

MIN_CUTOFF = 4
RTL = "right-to-left"
LTR = "left-to-right"


class QuiverError(ValueError):
    """Malformed quiver or relation data."""


class OrientationError(QuiverError):
    """A relation cannot be read consistently on the quiver."""


class UnstableError(RuntimeError):
    """Hom dimensions changed when the length cap was raised."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """Vertices are simple labels; ``index`` gives each vertex's family index
    and ``involution`` is the vertex permutation induced by parity change."""

    vertices: tuple[SimpleLabel, ...]
    arrows: tuple[Arrow, ...]
    involution: tuple[int, ...]
    index: tuple[int, ...]
    cutoff: int
    name: str = ""

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise QuiverError("duplicate vertex labels")
        if sorted(self.involution) != list(range(n)):
            raise QuiverError("parity involution is not a permutation")
        if any(self.involution[self.involution[v]] != v for v in range(n)):
            raise QuiverError("parity involution is not an involution")
        pairs = Counter((a.source, a.target) for a in self.arrows)
        for (s, t), k in pairs.items():
            if pairs.get((self.involution[s], self.involution[t]), 0) != k:
                raise QuiverError("parity involution does not map arrows to arrows")

    def vertex(self, label: SimpleLabel) -> int:
        return self.vertices.index(label)

    def is_interior(self, v: int) -> bool:
        return self.index[v] <= self.cutoff - 2

    def interior(self) -> list[int]:
        return [v for v in range(len(self.vertices)) if self.is_interior(v)]

    def arrow_count(self, s: int, t: int) -> int:
        return sum(1 for a in self.arrows if a.source == s and a.target == t)

    def arrows_named(self, name: str) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.name == name]


# --- relation strings --------------------------------------------------------

_TOKEN = re.compile(r"\s*(θ|theta|[A-Za-z])(?:\^(\d+)|([²³]))?")
_SUPERSCRIPT = {"²": 2, "³": 3}


def parse_word(text: str) -> tuple[str, ...] | None:
    """Arrow names of a written word, or ``None`` for the zero side."""
    text = text.strip()
    if text == "0":
        return None
    out: list[str] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise QuiverError(f"cannot parse relation word {text!r}")
        name = "θ" if m.group(1) == "theta" else m.group(1)
        power = int(m.group(2)) if m.group(2) else _SUPERSCRIPT.get(m.group(3) or "", 1)
        out.extend([name] * power)
        pos = m.end()
    if not out:
        raise QuiverError(f"empty relation word in {text!r}")
    return tuple(out)


def parse_relation(text: str) -> list[tuple[tuple[str, ...], tuple[str, ...] | None]]:
    """Split ``"xb = dy = 0"`` or ``"xy = yx"`` into (lhs, rhs) pairs.

    A chain ending in ``0`` sets every member to zero; otherwise consecutive
    members are equated.
    """
    sides = [parse_word(s) for s in text.split("=")]
    if len(sides) < 2:
        raise QuiverError(f"relation {text!r} has no '='")
    if sides[-1] is None:
        if any(s is None for s in sides[:-1]):
            raise QuiverError(f"relation {text!r} has a misplaced 0")
        return [(s, None) for s in sides[:-1]]  # type: ignore[misc]
    if any(s is None for s in sides):
        raise QuiverError(f"relation {text!r} has a misplaced 0")
    return [(sides[i], sides[i + 1]) for i in range(len(sides) - 1)]  # type: ignore[misc]


def _instances(quiver: Quiver, traversal: Sequence[str]) -> list[tuple[int, ...]]:
    """All arrow sequences whose names match ``traversal`` and compose."""
    partial: list[tuple[int, ...]] = [(i,) for i in quiver.arrows_named(traversal[0])]
    for name in traversal[1:]:
        options = quiver.arrows_named(name)
        partial = [p + (i,) for p in partial for i in options
                   if quiver.arrows[p[-1]].target == quiver.arrows[i].source]
    return partial


def _ends(quiver: Quiver, word: tuple[int, ...]) -> tuple[int, int]:
    return quiver.arrows[word[0]].source, quiver.arrows[word[-1]].target


@dataclass(frozen=True)
class Relation:
    """One resolved equation; words are arrow names in traversal order."""

    text: str
    lhs: tuple[str, ...]
    rhs: tuple[str, ...] | None
    reading: str


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[Relation, ...]
    zero_words: frozenset[tuple[int, ...]]
    binomials: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    convention: str
    raw: tuple[str, ...] = field(default=())

    @property
    def max_length_gap(self) -> int:
        return max((abs(len(u) - len(v)) for u, v in self.binomials), default=0)


def _instantiate(quiver: Quiver, lhs: tuple[str, ...], rhs: tuple[str, ...] | None,
                 reading: str) -> tuple[list[tuple[int, ...]], list[tuple[tuple[int, ...], tuple[int, ...]]]]:
    order = (lambda w: tuple(reversed(w))) if reading == RTL else (lambda w: tuple(w))
    left = _instances(quiver, order(lhs))
    if rhs is None:
        return left, []
    right = _instances(quiver, order(rhs))
    groups: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for w in left:
        groups.setdefault(_ends(quiver, w), []).append(w)
    pairs = []
    for w in right:
        for u in groups.get(_ends(quiver, w), ()):
            if u != w:
                pairs.append((u, w))
    # A binomial is only imposed where both sides exist with equal endpoints.
    return [], pairs


def _valid(result: tuple[list, list], monomial: bool) -> bool:
    zeros, pairs = result
    return bool(zeros) if monomial else bool(pairs)


def _chain_signature(members: list, reading: str) -> tuple[frozenset, frozenset]:
    zeros: set = set()
    pairs: set = set()
    for _, _, results in members:
        z, p = results[reading]
        zeros.update(z)
        pairs.update(frozenset(x) for x in p)
    return frozenset(zeros), frozenset(pairs)


def resolve_orientation(raw: Iterable[str], quiver: Quiver) -> RelationSet:
    """Resolve how each relation word is read and instantiate it.

    A relation string (possibly a chain such as ``"ab = ba = 0"``) whose only
    composable reading is right to left (or left to right) fixes that
    convention.  Relations readable both ways follow the
    convention fixed by the others; if nothing fixes one, both readings must
    yield the same instances.  Conflicting fixed readings, relations with no
    composable reading and unresolvable ambiguity raise ``OrientationError``.
    """
    raw = tuple(raw)
    parsed = []
    forced: set[str] = set()
    for text in raw:
        members = []
        valid_all = {RTL: True, LTR: True}
        for lhs, rhs in parse_relation(text):
            results = {r: _instantiate(quiver, lhs, rhs, r) for r in (RTL, LTR)}
            for r in (RTL, LTR):
                valid_all[r] &= _valid(results[r], rhs is None)
            members.append((lhs, rhs, results))
        valid = [r for r in (RTL, LTR) if valid_all[r]]
        if not valid:
            raise OrientationError(f"relation {text!r} does not compose on {quiver.name}")
        if len(valid) == 1:
            forced.add(valid[0])
        parsed.append((text, valid, members))
    if len(forced) > 1:
        raise OrientationError(f"relations of {quiver.name} force both reading directions")
    convention = next(iter(forced)) if forced else None
    relations = []
    zeros: set[tuple[int, ...]] = set()
    binomials: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for text, valid, members in parsed:
        if len(valid) == 1:
            reading = valid[0]
        elif convention is not None:
            reading = convention
        elif _chain_signature(members, RTL) == _chain_signature(members, LTR):
            reading = RTL
        else:
            raise OrientationError(f"relation {text!r} is ambiguous on {quiver.name}")
        for lhs, rhs, results in members:
            z, pairs = results[reading]
            zeros.update(z)
            binomials.extend(pairs)
            order = (lambda w: tuple(reversed(w))) if reading == RTL else (lambda w: tuple(w))
            relations.append(Relation(text, order(lhs), None if rhs is None else order(rhs), reading))
    return RelationSet(tuple(relations), frozenset(zeros), tuple(binomials),
                       convention or RTL, raw)


# --- path algebras -----------------------------------------------------------


@dataclass(frozen=True)
class PathClass:
    """A basis element of the quotient: a class of equal nonzero paths.

    ``degree`` is the largest length among its members, i.e. the largest
    ``k`` with the class inside ``rad^k``.
    """

    source: int
    target: int
    min_len: int
    degree: int
    word: tuple[int, ...]


@dataclass(frozen=True)
class RadicalFiltration:
    vertex: SimpleLabel
    layers: tuple[tuple[SimpleLabel, ...], ...]

    def sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def as_strings(self) -> list[list[str]]:
        return [[str(x) for x in layer] for layer in self.layers]


@dataclass(frozen=True)
class PathAlgebra:
    quiver: Quiver
    relations: RelationSet
    cap: int
    classes: tuple[PathClass, ...]

    def hom_dim(self, i: int, j: int) -> int:
        """``dim Hom(P(i), P(j))``: number of path classes from ``i`` to ``j``."""
        return sum(1 for c in self.classes if c.source == i and c.target == j)

    def hom_dims(self, interior_only: bool = True) -> dict[tuple[int, int], int]:
        verts = self.quiver.interior() if interior_only else range(len(self.quiver.vertices))
        counts = Counter((c.source, c.target) for c in self.classes)
        return {(i, j): counts.get((i, j), 0) for i in verts for j in verts}

    def word_name(self, word: tuple[int, ...]) -> str:
        """Composition-order spelling (rightmost arrow acts first)."""
        if not word:
            return "e"
        return "".join(self.quiver.arrows[a].name for a in reversed(word))

    def basis(self, i: int, j: int) -> list[str]:
        return [self.word_name(c.word) for c in self.classes if c.source == i and c.target == j]

    def radical_filtration(self, v: int) -> RadicalFiltration:
        into = [c for c in self.classes if c.target == v]
        depth = max((c.degree for c in into), default=-1)
        layers = []
        for k in range(depth + 1):
            layers.append(tuple(sorted(self.quiver.vertices[c.source] for c in into if c.degree == k)))
        return RadicalFiltration(self.quiver.vertices[v], tuple(layers))

    def collapsed_hom(self, j: int) -> dict[Weight, int]:
        """``[P(j) : L(w)]_Pi`` read off the path classes ending at ``j``."""
        out: Counter[Weight] = Counter()
        for c in self.classes:
            if c.target == j:
                out[self.quiver.vertices[c.source].weight] += 1
        return dict(out)


def _close(quiver: Quiver, relations: RelationSet, cap: int) -> tuple[PathClass, ...]:
    raw = _kernels.close_paths(
        len(quiver.vertices),
        [a.source for a in quiver.arrows],
        [a.target for a in quiver.arrows],
        sorted(relations.zero_words),
        list(relations.binomials),
        cap + relations.max_length_gap,
    )
    return tuple(PathClass(*r) for r in raw)


def build_algebra(quiver: Quiver, relations: RelationSet, cap: int,
                  check_stability: bool = True) -> PathAlgebra:
    """Quotient of the path algebra by the relations and by long paths.

    Paths longer than ``cap`` plus the largest length difference inside a
    binomial relation are discarded, so that mixed-length relations act
    before truncation.  With ``check_stability`` the interior Hom dimensions
    and radical depths are recomputed at ``cap + 2`` and must agree.
    """
    if cap < 1:
        raise ValueError("length cap must be positive")
    algebra = PathAlgebra(quiver, relations, cap, _close(quiver, relations, cap))
    if check_stability:
        wider = PathAlgebra(quiver, relations, cap + 2, _close(quiver, relations, cap + 2))
        if wider.hom_dims() != algebra.hom_dims() or any(
                wider.radical_filtration(v) != algebra.radical_filtration(v)
                for v in quiver.interior()):
            raise UnstableError(f"dimensions of {quiver.name} not stable at cap {cap}")
    return algebra


# --- the block quivers ---------------------------------------------------------

PRINCIPAL_RELATIONS = ("x^2 = y^2 = 0", "xb = dy = bd = ca = 0", "xy = yx",
                       "yx = bacd", "dbac = acdb")
THETA_RELATIONS = ("θ^2 = 0",) + tuple(f"θ{g} = {g}θ" for g in "abcdxy")
Q_STANDARD_RELATIONS = ("x^2 = y^2 = 0", "xa = by = ab = 0", "h^2 = 0", "xy = yx",
                        "bah = hba",
                        # Identifies the two socle paths of P(2,1,-2); without it
                        # L(2,1,-2) would occur three times there.
                        "yx = ahb")
ZIGZAG_RELATIONS = ("a^2 = b^2 = 0", "ab = ba")
TYPICAL_RELATIONS = ("ab = ba = 0",)
LOOP_RELATIONS = ("h^2 = 0",)


class _Builder:
    def __init__(self) -> None:
        self.labels: list[SimpleLabel] = []
        self.index: list[int] = []
        self.arrows: list[Arrow] = []

    def vertex(self, label: SimpleLabel, index: int) -> int:
        self.labels.append(label)
        self.index.append(index)
        return len(self.labels) - 1

    def arrow(self, name: str, s: int, t: int) -> None:
        self.arrows.append(Arrow(name, s, t))

    def build(self, involution: Sequence[int], cutoff: int, name: str) -> Quiver:
        return Quiver(tuple(self.labels), tuple(self.arrows), tuple(involution),
                      tuple(self.index), cutoff, name)


def _principal(block: BlockDescriptor, cutoff: int) -> tuple[Quiver, tuple[str, ...]]:
    b = _Builder()
    rows: list[list[int]] = [[], []]
    for shifted in (0, 1):
        for a in range(cutoff + 1):
            rows[shifted].append(b.vertex(SimpleLabel(Weight.of(a, 0, -a), bool(shifted)), a))
    for r in (0, 1):
        row, other = rows[r], rows[1 - r]
        b.arrow("a", row[1], row[0])
        b.arrow("b", row[0], row[2])
        b.arrow("c", row[0], other[1])
        b.arrow("d", row[2], other[0])
        for k in range(2, cutoff):
            b.arrow("x", row[k], row[k + 1])
            b.arrow("y", row[k + 1], row[k])
    relations = PRINCIPAL_RELATIONS
    if block.algebra == "q":
        for k in range(cutoff + 1):
            b.arrow("θ", rows[0][k], rows[1][k])
            b.arrow("θ", rows[1][k], rows[0][k])
        relations = relations + THETA_RELATIONS
    n = cutoff + 1
    involution = [v + n if v < n else v - n for v in range(2 * n)]
    return b.build(involution, cutoff, block.name), relations


def _q_standard(block: BlockDescriptor, cutoff: int) -> tuple[Quiver, tuple[str, ...]]:
    b = _Builder()
    v = [b.vertex(SimpleLabel(Weight.of(1, 0, 0)), 1)]
    for a in range(2, cutoff + 1):
        v.append(b.vertex(SimpleLabel(Weight.of(a, 1, -a)), a))
    b.arrow("h", v[0], v[0])
    b.arrow("a", v[0], v[1])
    b.arrow("b", v[1], v[0])
    for k in range(1, len(v) - 1):
        b.arrow("x", v[k], v[k + 1])
        b.arrow("y", v[k + 1], v[k])
    return b.build(range(len(v)), cutoff, block.name), Q_STANDARD_RELATIONS


def _sq_standard(block: BlockDescriptor, cutoff: int) -> tuple[Quiver, tuple[str, ...]]:
    b = _Builder()
    positions = range(-(cutoff - 1), cutoff)
    at: dict[int, int] = {}
    for p in positions:
        if p == 0:
            label, idx = SimpleLabel(Weight.of(1, 0, 0)), 1
        else:
            idx = abs(p) + 1
            label = SimpleLabel(Weight.of(idx, 1, -idx), p < 0)
        at[p] = b.vertex(label, idx)
    for p in positions[:-1]:
        b.arrow("a", at[p], at[p + 1])
        b.arrow("b", at[p + 1], at[p])
    involution = [0] * len(at)
    for p, vid in at.items():
        involution[vid] = at[-p]
    return b.build(involution, cutoff, block.name), ZIGZAG_RELATIONS


def _half_standard(block: BlockDescriptor, cutoff: int) -> tuple[Quiver, tuple[str, ...]]:
    # For sq the parity-shifted copies form a second, isomorphic component;
    # only one component is built.
    b = _Builder()
    v = [b.vertex(SimpleLabel(w), weight_index(w)) for w in block.weights(cutoff)]
    for k in range(len(v) - 1):
        b.arrow("a", v[k], v[k + 1])
        b.arrow("b", v[k + 1], v[k])
    return b.build(range(len(v)), cutoff, block.name), ZIGZAG_RELATIONS


def _singleton(block: BlockDescriptor, cutoff: int) -> tuple[Quiver, tuple[str, ...]]:
    b = _Builder()
    top = b.vertex(SimpleLabel(block.base), 0)
    if block.algebra == "q" and block.block_class is BlockClass.TYPICAL:
        bottom = b.vertex(SimpleLabel(block.base, True), 0)
        b.arrow("a", top, bottom)
        b.arrow("b", bottom, top)
        return b.build((1, 0), cutoff, block.name), TYPICAL_RELATIONS
    if block.block_class is BlockClass.SQ_TYPICAL_LOOP:
        b.arrow("h", top, top)
        return b.build((0,), cutoff, block.name), LOOP_RELATIONS
    return b.build((0,), cutoff, block.name), ()


def block_quiver_raw(block: BlockDescriptor, cutoff: int) -> tuple[Quiver, tuple[str, ...]]:
    """The block's quiver and its relation strings (unresolved)."""
    cls = block.block_class
    if cls in (BlockClass.PRINCIPAL, BlockClass.STANDARD, BlockClass.HALF_STANDARD):
        if not block.is_canonical:
            raise QuiverError(f"no quiver for non-canonical block {block.name}")
        if cutoff < MIN_CUTOFF:
            raise QuiverError(f"cutoff must be at least {MIN_CUTOFF}")
    if cls is BlockClass.PRINCIPAL:
        return _principal(block, cutoff)
    if cls is BlockClass.STANDARD:
        return (_q_standard if block.algebra == "q" else _sq_standard)(block, cutoff)
    if cls is BlockClass.HALF_STANDARD:
        return _half_standard(block, cutoff)
    return _singleton(block, cutoff)


def block_quiver(block: BlockDescriptor, cutoff: int) -> tuple[Quiver, RelationSet]:
    quiver, raw = block_quiver_raw(block, cutoff)
    return quiver, resolve_orientation(raw, quiver)


def block_algebra(block: BlockDescriptor, cutoff: int, cap: int,
                  check_stability: bool = True) -> PathAlgebra:
    quiver, relations = block_quiver(block, cutoff)
    return build_algebra(quiver, relations, cap, check_stability)


# --- output ------------------------------------------------------------------


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def quiver_dot(quiver: Quiver) -> str:
    lines = [f'digraph "{_dot_escape(quiver.name or "quiver")}" {{', "  rankdir=LR;"]
    for v, label in enumerate(quiver.vertices):
        lines.append(f'  v{v} [label="{_dot_escape(str(label))}"];')
    for a in quiver.arrows:
        lines.append(f'  v{a.source} -> v{a.target} [label="{_dot_escape(a.name)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def filtration_dot(algebra: PathAlgebra, v: int) -> str:
    """Layered digraph of ``P(v)``: one node per path class, edges for
    one-arrow extensions between consecutive layers."""
    into = [c for c in algebra.classes if c.target == v]
    ids = {c.word: i for i, c in enumerate(into)}
    name = str(algebra.quiver.vertices[v])
    lines = [f'digraph "P({_dot_escape(name)})" {{', "  rankdir=TB;"]
    for k in range(max((c.degree for c in into), default=-1) + 1):
        members = [ids[c.word] for c in into if c.degree == k]
        lines.append("  { rank=same; " + " ".join(f"n{m};" for m in members) + " }")
    for c in into:
        label = str(algebra.quiver.vertices[c.source])
        lines.append(f'  n{ids[c.word]} [label="{_dot_escape(label)}"];')
    for c in into:
        if c.word and c.word[1:] in ids:
            parent = next(p for p in into if p.word == c.word[1:])
            if c.degree == parent.degree + 1:
                lines.append(f"  n{ids[parent.word]} -> n{ids[c.word]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def algebra_json(algebra: PathAlgebra) -> dict:
    q = algebra.quiver
    interior = q.interior()
    return {
        "block": q.name,
        "cap": algebra.cap,
        "vertices": [str(x) for x in q.vertices],
        "interior": [str(q.vertices[v]) for v in interior],
        "hom_dims": [{"from": str(q.vertices[i]), "to": str(q.vertices[j]), "dim": d}
                     for (i, j), d in algebra.hom_dims().items() if d],
        "layers": {str(q.vertices[v]): algebra.radical_filtration(v).as_strings()
                   for v in interior},
    }
