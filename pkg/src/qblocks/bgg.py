"""Grothendieck-group bookkeeping for the q(3) and sq(3) blocks.

Euler characteristics expand in simples as ``E(mu) = sum_l b[mu, l] [L(l)]``
and projective covers as ``[P(l)] = sum_mu a[l, mu] E(mu)``, with
``a[l, mu] = 2**(t(mu) - t(l)) * gamma(mu) * b[mu, l]``.  The ``b`` rows are
stored closed forms in the family parameter; everything else is derived.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .characters import (
    FormalCharacter,
    euler_character,
    finite_euler_character,
    is_even_positive,
    orbit_character,
)
from .eps import EpsCoeff
from .weights import (
    BlockClass,
    BlockDescriptor,
    SimpleLabel,
    Weight,
    block_class,
    clifford_data,
    gamma,
    is_regular_dominant,
    t_exponent,
    weight_index,
)

COLLAPSED = "ParityCollapsed"
TRACKED = "ParityTracked"


@dataclass(frozen=True)
class GrothendieckVector:
    """Finitely supported integer combination of simple classes.

    In collapsed mode every key is unshifted and the entry is ``[X : L]_Pi``;
    in tracked mode ``L`` and ``Pi L`` are separate keys.
    """

    entries: Mapping[SimpleLabel, int] = field(default_factory=dict)
    mode: str = COLLAPSED

    def __post_init__(self) -> None:
        if self.mode not in (COLLAPSED, TRACKED):
            raise ValueError(f"unknown mode {self.mode!r}")
        clean = {k: v for k, v in self.entries.items() if v}
        if self.mode == COLLAPSED and any(k.shifted for k in clean):
            raise ValueError("collapsed vectors only carry unshifted labels")
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @classmethod
    def of(cls, pairs: Iterable[tuple[Weight, int]]) -> GrothendieckVector:
        out: dict[SimpleLabel, int] = {}
        for w, c in pairs:
            key = SimpleLabel(w)
            out[key] = out.get(key, 0) + c
        return cls(out)

    def collapse(self) -> GrothendieckVector:
        out: dict[SimpleLabel, int] = {}
        for k, v in self.entries.items():
            key = SimpleLabel(k.weight)
            out[key] = out.get(key, 0) + v
        return GrothendieckVector(out, COLLAPSED)

    def __getitem__(self, key: SimpleLabel | Weight) -> int:
        if isinstance(key, Weight):
            key = SimpleLabel(key)
        return self.entries.get(key, 0)

    def __add__(self, other: GrothendieckVector) -> GrothendieckVector:
        if self.mode != other.mode:
            raise ValueError("cannot add vectors of different modes")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return GrothendieckVector(out, self.mode)

    def scale(self, c: int) -> GrothendieckVector:
        return GrothendieckVector({k: c * v for k, v in self.entries.items()}, self.mode)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.entries.values())

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self, namer=None) -> dict[str, int]:
        namer = namer or (lambda lab: ",".join(str(d) for d in lab.weight.doubled))
        return {namer(k): v for k, v in self.entries.items()}


class UnsupportedBlock(ValueError):
    """No stored table exists for this block."""


def _family_weight(block: BlockDescriptor, a: int) -> Weight:
    """Member of index ``a`` of a canonical infinite family."""
    cls = block.block_class
    if cls is BlockClass.PRINCIPAL:
        return Weight.of(a, 0, -a)
    if cls is BlockClass.STANDARD:
        return Weight.of(1, 0, 0) if a == 1 else Weight.of(a, 1, -a)
    if cls is BlockClass.HALF_STANDARD:
        return Weight.of("3/2", "1/2", "-1/2") if a == 1 else Weight((2 * a + 1, 3, -(2 * a + 1)))
    raise UnsupportedBlock(f"{block.name} is not an infinite family")


def _closed_row(block: BlockDescriptor, mu: Weight) -> dict[Weight, int]:
    """``b[mu, .]`` as a dict; raises for weights outside the block rows."""
    cls = block.block_class
    if cls in (BlockClass.STRONGLY_TYPICAL, BlockClass.TYPICAL, BlockClass.SQ_TYPICAL_LOOP):
        if mu != block.base:
            raise UnsupportedBlock(f"{mu} is not the weight of {block.name}")
        # Typical simples coincide with their Euler characteristic.
        return {mu: 1}
    if not block.is_canonical:
        raise UnsupportedBlock(f"no table for non-canonical block {block.name}")
    if not is_regular_dominant(mu):
        raise UnsupportedBlock(f"{mu} has no Euler row (not regular dominant)")
    a = weight_index(mu)
    if _family_weight(block, a) != mu:
        raise UnsupportedBlock(f"{mu} is not in {block.name}")
    w = lambda k: _family_weight(block, k)  # noqa: E731
    if cls is BlockClass.PRINCIPAL:
        # sq(3) principal rows; the q(3) rows agree (same Clifford dimensions
        # and the restriction of L_q(a,0,-a) is L_sq(a,0,-a)).
        if a == 1:
            return {w(1): 1}
        if a == 2:
            return {w(2): 1, w(1): 1, w(0): 2}
        return {w(a): 1, w(a - 1): 1}
    if cls is BlockClass.STANDARD:
        if a == 2:
            # For q the row is derived: Ch E_q = 2 Ch E_sq, Ch L_q(2,1,-2) is
            # twice its sq counterpart and Ch L_q(1,0,0) equals its sq one.
            return {w(2): 1, w(1): 2 if block.algebra == "q" else 1}
        return {w(a): 1, w(a - 1): 1}
    # half-standard, identical for q and sq
    if a == 1:
        return {w(1): 1}
    return {w(a): 1, w(a - 1): 1}


@dataclass(frozen=True)
class BMatrix:
    """Rows ``E(mu) = sum b[mu, l] [L(l)]`` generated from closed forms."""

    block: BlockDescriptor

    def row(self, mu: Weight) -> GrothendieckVector:
        return GrothendieckVector.of(_closed_row(self.block, mu).items())

    def row_weights(self, bound: int) -> list[Weight]:
        return [mu for mu in self.block.weights(bound) if is_regular_dominant(mu)]

    def rows(self, bound: int) -> dict[Weight, GrothendieckVector]:
        return {mu: self.row(mu) for mu in self.row_weights(bound)}

    def entry(self, mu: Weight, lam: Weight) -> int:
        return self.row(mu)[lam]


def b_matrix(block: BlockDescriptor) -> BMatrix:
    _closed_row(block, block.base if block.block_class in (
        BlockClass.STRONGLY_TYPICAL, BlockClass.TYPICAL, BlockClass.SQ_TYPICAL_LOOP)
        else _family_weight(block, 2))
    return BMatrix(block)


def dominated(lam: Weight, mu: Weight) -> bool:
    """``lam <= mu``: the difference is a non-negative sum of positive roots."""
    diff = [m - l for m, l in zip(mu.doubled, lam.doubled)]
    if sum(diff) or any(d % 2 for d in diff):
        return False
    partial = 0
    for d in diff[:-1]:
        partial += d
        if partial < 0:
            return False
    return True


# --- reciprocity -----------------------------------------------------------


def a_coefficients(block: BlockDescriptor, bound: int) -> dict[tuple[Weight, Weight], int]:
    """``a[l, mu]`` for rows ``mu`` with index at most ``bound + 2``.

    Every row reaches at most two indices below its own (``E(2)`` contains
    the trivial module), so this covers every projective up to ``bound``.
    """
    bm = b_matrix(block)
    alg = block.algebra
    out: dict[tuple[Weight, Weight], int] = {}
    for mu in bm.row_weights(bound + 2):
        g = gamma(mu, alg)
        for lam, b in bm.row(mu).entries.items():
            lam_w = lam.weight
            num = g * b
            shift = t_exponent(mu, alg) - t_exponent(lam_w, alg)
            if shift >= 0:
                value = num << shift
            else:
                if num % (1 << -shift):
                    raise ArithmeticError(f"a[{lam_w}, {mu}] is not integral")
                value = num >> -shift
            out[(lam_w, mu)] = value
    return out


@dataclass(frozen=True)
class ProjectiveTable:
    block: BlockDescriptor
    a_coeffs: dict[tuple[Weight, Weight], int]
    multiplicities: dict[Weight, GrothendieckVector]


def projective_table(block: BlockDescriptor, bound: int) -> ProjectiveTable:
    """``[P(l) : L(m)]_Pi = sum_nu a[l, nu] b[nu, m]`` for index(l) <= bound."""
    bm = b_matrix(block)
    acoef = a_coefficients(block, bound)
    mults: dict[Weight, GrothendieckVector] = {}
    for lam in block.weights(bound):
        total = GrothendieckVector()
        for (l, nu), a in acoef.items():
            if l == lam:
                total = total + bm.row(nu).scale(a)
        mults[lam] = total
    return ProjectiveTable(block, acoef, mults)


# --- simple characters -----------------------------------------------------


class NegativeCoefficient(ArithmeticError):
    """A recovered simple character had a negative coefficient."""


def minimal_seed(lam: Weight, algebra: str) -> FormalCharacter:
    """Character of a simple whose highest weight is minimal among dominant
    weights: its weights form a single Weyl orbit."""
    return orbit_character(lam, clifford_data(lam, algebra).simple_dim)


def lift_multiple(ch: FormalCharacter, b: int) -> FormalCharacter:
    """Character of ``b [L]`` read in the parity-collapsed group.

    Euler characteristics have parity-symmetric characters, so a multiple of a
    simple whose character is not parity symmetric (the trivial module) has to
    be split evenly between ``L`` and ``Pi L``.
    """
    if ch.is_parity_symmetric():
        return ch.scale(b)
    if b % 2:
        raise ArithmeticError("odd multiple of a parity-asymmetric simple in a symmetric row")
    return (ch + ch.parity_shift()).scale(b // 2)


def simple_characters(block: BlockDescriptor, depth: int, bound: int,
                      seeds: Mapping[Weight, FormalCharacter] | None = None,
                      check: bool = True) -> dict[Weight, FormalCharacter]:
    """Invert the triangular ``b`` table.

    Simples without an Euler row of their own (the non-regular weights) are
    taken from ``seeds`` or, by default, from :func:`minimal_seed`.  With
    ``check`` every character must be non-negative and S_n-invariant inside
    its certified window.
    """
    bm = b_matrix(block)
    weights = block.weights(bound)
    seeds = dict(seeds or {})
    chars: dict[Weight, FormalCharacter] = {}
    for w in weights:
        if not is_regular_dominant(w):
            chars[w] = seeds.get(w) or minimal_seed(w, block.algebra)
    for mu in (w for w in weights if is_regular_dominant(w)):
        row = bm.row(mu)
        acc = euler_character(mu, block.algebra, depth)
        for lab, b in row.entries.items():
            if lab.weight != mu:
                acc = acc - lift_multiple(chars[lab.weight], b)
        chars[mu] = acc.exact_div(row[mu])
    if check:
        for w, ch in chars.items():
            if not ch.is_nonnegative():
                raise NegativeCoefficient(f"Ch L{w} has a negative coefficient")
            if not ch.is_sn_invariant():
                raise NegativeCoefficient(f"Ch L{w} is not S_n-invariant in its window")
    return chars


@dataclass(frozen=True)
class TrivialCandidate:
    """A trial ``Ch C = c e^0`` and the reading ``x e^0`` of ``2[C]``."""

    c: EpsCoeff
    x: EpsCoeff


def trivial_candidates(algebra: str, max_index: int, search: int = 3) -> list[TrivialCandidate]:
    """Trial trivial characters compatible with the principal rows.

    Treats ``Ch C = c e^0`` as unknown, reads ``2[C]`` as ``C+C``, ``C+Pi C``
    or ``Pi C+Pi C``, recovers ``Ch L(2), Ch L(3), ...`` from the rows and
    keeps the trials for which every recovered character up to ``max_index``
    is a genuine (non-negative) gl_3 character.  Nothing about ``C`` beyond
    ``c != 0`` is assumed, so the surviving ``c`` independently pin down the
    trivial character.
    """
    block = block_class(Weight.zero(3), algebra)
    depth = 4 * max_index
    bm = b_matrix(block)
    euler = {a: finite_euler_character(Weight.of(a, 0, -a), algebra, depth)
             for a in range(1, max_index + 1)}
    found = []
    for even, odd in itertools.product(range(search + 1), repeat=2):
        c = EpsCoeff(even, odd)
        if not c:
            continue
        for x in {c * 2, c + c.swap(), c.swap() * 2}:
            chars = {0: FormalCharacter({(0, 0, 0): c}, 3)}
            ok = True
            for a in range(1, max_index + 1):
                mu = Weight.of(a, 0, -a)
                acc = euler[a]
                for lab, b in bm.row(mu).entries.items():
                    k = weight_index(lab.weight)
                    if k == a:
                        continue
                    if k == 0:
                        acc = acc - FormalCharacter({(0, 0, 0): x * (b // 2)}, 3)
                    else:
                        acc = acc - chars[k].scale(b)
                chars[a] = acc
                if not (acc.is_nonnegative() and is_even_positive(acc)):
                    ok = False
                    break
            if ok:
                found.append(TrivialCandidate(c, x))
    return sorted(found, key=lambda t: (t.c.even, t.c.odd, t.x.even, t.x.odd))


# --- reports ---------------------------------------------------------------


def short_name(label: SimpleLabel, block: BlockDescriptor) -> str:
    """Compact names: ``C``, ``L1``, ``PiL2`` in principal blocks, else ``L(2,1,-2)``."""
    prefix = "Pi" if label.shifted else ""
    if block.block_class is BlockClass.PRINCIPAL and block.is_canonical:
        a = weight_index(label.weight)
        return prefix + ("C" if a == 0 else f"L{a}")
    return prefix + "L(" + label.weight.key() + ")"


def projective_name(w: Weight, block: BlockDescriptor) -> str:
    if block.block_class is BlockClass.PRINCIPAL and block.is_canonical:
        return f"P({weight_index(w)})"
    return "P(" + w.key() + ")"


def block_report(block: BlockDescriptor, bound: int) -> dict:
    """``{block, rows: [{mu, E}], projectives: [{lambda, P}]}``."""
    bm = b_matrix(block)
    table = projective_table(block, bound)

    def key(lab: SimpleLabel) -> str:
        return ",".join(str(d) for d in lab.weight.doubled)

    return {
        "block": block.name,
        "rows": [{"mu": list(mu.doubled), "E": row.to_json(key)}
                 for mu, row in bm.rows(bound).items()],
        "projectives": [{"lambda": list(lam.doubled), "P": vec.to_json(key)}
                        for lam, vec in table.multiplicities.items()],
    }


def projective_summary(block: BlockDescriptor, bound: int) -> dict[str, dict[str, int]]:
    """Human-readable table such as ``{"P(0)": {"C": 4, "L1": 2, "L2": 2}}``."""
    table = projective_table(block, bound)
    return {projective_name(lam, block): vec.to_json(lambda lab: short_name(lab, block))
            for lam, vec in table.multiplicities.items()}


__all__ = [
    "COLLAPSED", "TRACKED", "GrothendieckVector", "BMatrix", "ProjectiveTable",
    "UnsupportedBlock", "NegativeCoefficient", "b_matrix", "dominated",
    "a_coefficients", "projective_table", "simple_characters", "minimal_seed",
    "trivial_candidates", "TrivialCandidate", "lift_multiple", "block_report", "projective_summary", "short_name",
    "projective_name",
]
