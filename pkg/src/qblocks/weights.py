"""Exact weight combinatorics for q(n) and sq(n).

Weights are stored as tuples of doubled integers so half-integral
coordinates never touch floating point.  Everything here is a pure function
of immutable values.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .eps import EpsCoeff

ALGEBRAS = ("q", "sq")


class WeightError(ValueError):
    """Raised for malformed or out-of-domain weights."""


@dataclass(frozen=True, order=True)
class Weight:
    """A weight ``(l_1, ..., l_n)`` with every ``2 l_i`` an integer."""

    doubled: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.doubled:
            raise WeightError("weights must have positive rank")
        object.__setattr__(self, "doubled", tuple(int(d) for d in self.doubled))

    @classmethod
    def of(cls, *coords: int | Fraction | str) -> Weight:
        doubled = []
        for c in coords:
            v = Fraction(c)
            if (2 * v).denominator != 1:
                raise WeightError(f"coordinate {c} is not a half-integer")
            doubled.append(int(2 * v))
        return cls(tuple(doubled))

    @classmethod
    def parse(cls, text: str) -> Weight:
        """Parse ``"3/2,1/2,-1/2"`` style input."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(not p for p in parts):
            raise WeightError(f"cannot parse weight {text!r}")
        try:
            return cls.of(*parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise WeightError(f"cannot parse weight {text!r}: {exc}") from None

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.doubled)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self.doubled)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled, strict=True)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled, strict=True)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-d for d in self.doubled))

    def permuted(self, perm: Sequence[int]) -> Weight:
        """Coordinates rearranged so that entry ``i`` becomes entry ``perm[i]``."""
        out = [0] * self.n
        for i, j in enumerate(perm):
            out[j] = self.doubled[i]
        return Weight(tuple(out))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def key(self) -> str:
        """Compact, sortable-enough label used in JSON output."""
        return ",".join(str(c) for c in self.coords)


def is_dominant(lam: Weight) -> bool:
    """Differences are non-negative integers and only zero may repeat."""
    d = lam.doubled
    for a, b in zip(d, d[1:]):
        if a < b or (a - b) % 2:
            return False
    seen: set[int] = set()
    for x in d:
        if x and x in seen:
            return False
        seen.add(x)
    return True


def is_regular_dominant(lam: Weight) -> bool:
    d = lam.doubled
    return all(a > b and (a - b) % 2 == 0 for a, b in zip(d, d[1:]))


@dataclass(frozen=True)
class CentralWeight:
    """Canonical signed multiset ``sum c_a delta_a`` over positive ``a``.

    ``terms`` holds ``(2a, c_a)`` pairs sorted by ``a`` with every ``c_a``
    nonzero, so equality of instances is equality of central characters.
    """

    terms: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return sum(abs(c) for _, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for a2, c in self.terms:
            a = Fraction(a2, 2)
            out.append(f"{c:+d}d[{a}]" if c != 1 else f"+d[{a}]")
        return "".join(out).lstrip("+")

    def to_json(self) -> list[list[object]]:
        return [[str(Fraction(a2, 2)), c] for a2, c in self.terms]


def central_weight(lam: Weight) -> CentralWeight:
    counts: dict[int, int] = {}
    for d in lam.doubled:
        if d:
            counts[abs(d)] = counts.get(abs(d), 0) + (1 if d > 0 else -1)
    return CentralWeight(tuple(sorted((a, c) for a, c in counts.items() if c)))


def reciprocal_sum(lam: Weight) -> Fraction | None:
    """``sum 1/l_i`` or ``None`` when some coordinate vanishes."""
    if any(d == 0 for d in lam.doubled):
        return None
    return sum((Fraction(2, d) for d in lam.doubled), Fraction(0))


class SimpleType(str, enum.Enum):
    M = "M"
    Q = "Q"


@dataclass(frozen=True)
class CliffordData:
    dim_e: int
    dim_kernel: int
    simple_dim: EpsCoeff
    type: SimpleType


def _check_algebra(algebra: str) -> None:
    if algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}; expected 'q' or 'sq'")


def clifford_data(lam: Weight, algebra: str) -> CliffordData:
    _check_algebra(algebra)
    n = lam.n
    zeros = sum(1 for d in lam.doubled if d == 0)
    nonzero = n - zeros
    if algebra == "q":
        dim_e, ker = nonzero, zeros
    elif zeros:
        dim_e, ker = nonzero, zeros - 1
    elif reciprocal_sum(lam) != 0:
        dim_e, ker = n - 1, 0
    else:
        dim_e, ker = n - 2, 1
    if dim_e == 0:
        # The Clifford algebra is trivial; take the purely even line.
        sdim = EpsCoeff(1, 0)
    else:
        k = 2 ** ((dim_e - 1) // 2)
        sdim = EpsCoeff(k, k)
    return CliffordData(dim_e, ker, sdim, SimpleType.Q if dim_e % 2 else SimpleType.M)


def simple_type(lam: Weight, algebra: str) -> SimpleType:
    return clifford_data(lam, algebra).type


def gamma(mu: Weight, algebra: str) -> int:
    """Ratio 1 or 2 entering the reciprocity coefficients.

    Defined through Clifford-kernel degeneracy: 2 exactly when the relevant
    kernel (``K`` for q, ``K'`` for sq) is nonzero.
    """
    if not is_regular_dominant(mu):
        raise WeightError(f"{mu} is not regular dominant")
    return 2 if clifford_data(mu, algebra).dim_kernel else 1


def t_exponent(nu: Weight, algebra: str) -> int:
    return 1 if simple_type(nu, algebra) is SimpleType.M else 0


@dataclass(frozen=True)
class SelfExt:
    """Dimensions of ``Ext^1(L, L)`` and ``Ext^1(L, Pi L)``.

    When ``merged`` is true the simple is isomorphic to its parity shift and
    both numbers describe the same space.
    """

    same: int
    shifted: int
    merged: bool

    @property
    def total(self) -> int:
        return self.shifted if self.merged else self.same + self.shifted


def self_ext(lam: Weight, algebra: str) -> SelfExt:
    _check_algebra(algebra)
    if not is_dominant(lam):
        raise WeightError(f"{lam} is not dominant")
    merged = simple_type(lam, algebra) is SimpleType.Q
    if algebra == "q":
        shifted = 1 if any(d == 0 for d in lam.doubled) else 0
    else:
        shifted = 1 if reciprocal_sum(lam) == 0 else 0
    return SelfExt(shifted if merged else 0, shifted, merged)


class IndResCase(str, enum.Enum):
    ZERO_COORD = "a"
    GENERIC = "b"
    RECIPROCAL_ZERO = "c"


@dataclass(frozen=True)
class IndRes:
    """Restriction of ``L_q`` to sq and induction of ``L_sq`` to q.

    ``res`` and ``ind`` list ``(label, parity_shifted)`` factors; the
    ``*_nonsplit`` flags say whether those factors are glued into a single
    indecomposable with the first entry on top.
    """

    case: IndResCase
    res: tuple[tuple[str, bool], ...]
    res_nonsplit: bool
    ind: tuple[tuple[str, bool], ...]
    ind_nonsplit: bool


def restrict_induce_class(lam: Weight) -> IndRes:
    if not is_dominant(lam):
        raise WeightError(f"{lam} is not dominant")
    s = reciprocal_sum(lam)
    if s is None:
        return IndRes(IndResCase.ZERO_COORD, (("L_sq", False),), False,
                      (("L", False), ("L", True)), True)
    if s != 0:
        return IndRes(IndResCase.GENERIC, (("L_sq", False), ("L_sq", True)), False,
                      (("L", False),), False)
    return IndRes(IndResCase.RECIPROCAL_ZERO, (("L_sq", True), ("L_sq", False)), True,
                  (("L", False),), False)


def standard_reduction(lam: Weight) -> Weight:
    """Map a standard-block weight of rank n to its rank n-1 partner.

    Accepts ``(l_1..l_k, 1, 0..0, -l_k..-l_1)`` with ``l_1 > .. > l_k > 1``
    and returns ``(l_1-1..l_k-1, 0..0, 1-l_k..1-l_1)``.
    """
    d = lam.doubled
    n = lam.n
    try:
        one = d.index(2)
    except ValueError:
        raise WeightError(f"{lam} has no coordinate equal to 1") from None
    k = one
    head, tail = d[:k], d[n - k:] if k else ()
    middle = d[k + 1:n - k]
    ok = (
        n >= 2 * k + 1
        and all(x == 0 for x in middle)
        and tuple(-x for x in reversed(tail)) == head
        and all(x % 2 == 0 and x > 2 for x in head)
        and all(a > b for a, b in zip(head, head[1:]))
    )
    if not ok:
        raise WeightError(f"{lam} is not of standard-block shape")
    new = [x - 2 for x in head] + [0] * len(middle) + [x + 2 for x in tail]
    return Weight(tuple(new))


def partitions_bounded(i: int, n: int) -> int:
    """Number of partitions of ``i`` into parts of size at most ``n``."""
    ways = [1] + [0] * i
    for part in range(1, n + 1):
        for total in range(part, i + 1):
            ways[total] += ways[total - part]
    return ways[i]


def ext_trivial_dim(n: int, i: int, shifted: bool = False) -> int:
    """``dim Ext^i(C, C)`` (or ``Ext^i(C, Pi C)`` when ``shifted``) for q(n).

    The invariant ring of gl_n acting on its symmetric algebra is polynomial
    on trace powers of degrees 1..n, so the invariant count is a bounded
    partition number.
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    if (i % 2 == 1) != shifted:
        return 0
    return partitions_bounded(i, n)


# --- block classification -------------------------------------------------


class BlockClass(str, enum.Enum):
    STRONGLY_TYPICAL = "StronglyTypical"
    TYPICAL = "Typical"
    SQ_TYPICAL_LOOP = "SqTypicalLoop"
    HALF_STANDARD = "HalfStandard"
    STANDARD = "Standard"
    PRINCIPAL = "Principal"


@dataclass(frozen=True, order=True)
class SimpleLabel:
    """A simple module ``L(weight)`` or its parity shift."""

    weight: Weight
    shifted: bool = False

    def __str__(self) -> str:
        return ("Pi" if self.shifted else "") + f"L{self.weight}"

    def flip(self) -> SimpleLabel:
        return SimpleLabel(self.weight, not self.shifted)


CANONICAL_BASE = {
    BlockClass.STANDARD: Weight.of(1, 0, 0),
    BlockClass.PRINCIPAL: Weight.of(0, 0, 0),
    BlockClass.HALF_STANDARD: Weight.of("3/2", "1/2", "-1/2"),
}


@dataclass(frozen=True)
class BlockDescriptor:
    """A block of finite-dimensional modules for q(3) or sq(3).

    Two descriptors compare equal when they describe the same algebra and
    central character; ``base`` is just the weight used to name the block.
    """

    algebra: str
    block_class: BlockClass
    base: Weight
    wt: CentralWeight = field(compare=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlockDescriptor):
            return NotImplemented
        return (self.algebra, self.wt) == (other.algebra, other.wt)

    def __hash__(self) -> int:
        return hash((self.algebra, self.wt))

    @property
    def is_canonical(self) -> bool:
        base = CANONICAL_BASE.get(self.block_class)
        return base is None or central_weight(base) == self.wt

    @property
    def name(self) -> str:
        return f"{self.algebra}:{self.block_class.value}:{self.base.key()}"

    def weights(self, bound: int) -> list[Weight]:
        """Dominant weights of the block with index at most ``bound``.

        The index of a weight is the integer part of its first coordinate,
        which is the parameter ``a`` of the families ``(a,0,-a)``,
        ``(a,1,-a)`` and ``((2a+1)/2, 3/2, -(2a+1)/2)``.
        """
        return list(iter_block_weights(self, bound))

    def regular_weights(self, bound: int) -> list[Weight]:
        return [w for w in self.weights(bound) if is_regular_dominant(w)]

    def labels(self, bound: int) -> list[SimpleLabel]:
        """Simple modules of the block up to isomorphism (parity included).

        Type Q simples contribute one label; type M simples contribute the
        module and its parity shift, except where the shifted copies form a
        separate, isomorphic component of the quiver (sq half-standard and
        sq type-M singleton blocks).
        """
        out = []
        for w in self.weights(bound):
            out.append(SimpleLabel(w))
            if self.tracks_parity() and simple_type(w, self.algebra) is SimpleType.M:
                out.append(SimpleLabel(w, True))
        return out

    def tracks_parity(self) -> bool:
        if self.algebra == "q":
            return True
        return self.block_class in (BlockClass.STANDARD, BlockClass.PRINCIPAL)


def weight_index(w: Weight) -> int:
    return w.doubled[0] // 2


def iter_block_weights(block: BlockDescriptor, bound: int) -> Iterator[Weight]:
    cls = block.block_class
    if cls in (BlockClass.STRONGLY_TYPICAL, BlockClass.TYPICAL, BlockClass.SQ_TYPICAL_LOOP):
        yield block.base
        return
    if not block.is_canonical:
        raise WeightError(f"no weight enumeration for non-canonical block {block.name}")
    if cls is BlockClass.PRINCIPAL:
        for a in range(0, bound + 1):
            yield Weight.of(a, 0, -a)
    elif cls is BlockClass.STANDARD:
        if bound >= 1:
            yield Weight.of(1, 0, 0)
        for a in range(2, bound + 1):
            yield Weight.of(a, 1, -a)
    else:
        if bound >= 1:
            yield Weight.of("3/2", "1/2", "-1/2")
        for a in range(2, bound + 1):
            yield Weight((2 * a + 1, 3, -(2 * a + 1)))


def block_class(lam: Weight, algebra: str) -> BlockDescriptor:
    _check_algebra(algebra)
    if lam.n != 3:
        raise WeightError("block classification is implemented for rank 3 only")
    if not is_dominant(lam):
        raise WeightError(f"{lam} is not dominant")
    wt = central_weight(lam)
    d = lam.doubled
    if lam.is_integral():
        size = wt.size
        if size == 3:
            if algebra == "sq" and reciprocal_sum(lam) == 0:
                cls = BlockClass.SQ_TYPICAL_LOOP
            else:
                cls = BlockClass.STRONGLY_TYPICAL
        elif size == 2:
            cls = BlockClass.TYPICAL
        elif size == 1:
            cls = BlockClass.STANDARD
        else:
            cls = BlockClass.PRINCIPAL
    else:
        cancelling = any(d[i] + d[j] == 0 for i, j in itertools.combinations(range(3), 2))
        cls = BlockClass.HALF_STANDARD if cancelling else BlockClass.STRONGLY_TYPICAL
    base = CANONICAL_BASE.get(cls, lam)
    if central_weight(base) != wt:
        base = lam
    return BlockDescriptor(algebra, cls, base, wt)


def same_block(lam: Weight, mu: Weight) -> bool:
    return central_weight(lam) == central_weight(mu)


def dominant_grid(values: Iterable[Fraction], n: int = 3) -> list[Weight]:
    """All dominant weights with coordinates drawn from ``values``."""
    vals = sorted({Fraction(v) for v in values}, reverse=True)
    out = []
    for combo in itertools.combinations_with_replacement(vals, n):
        w = Weight.of(*sorted(combo, reverse=True))
        if is_dominant(w):
            out.append(w)
    return out
