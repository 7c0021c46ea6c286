"""Formal characters over the weight lattice with Z[eps] coefficients.

A character carries a reliability floor: coefficients are only guaranteed
for weights whose height is at least ``floor``.  Truncated series products
propagate the floor so that every certified coefficient is exact.  Heights
are measured with the linear functional sending each positive root
``e_i - e_j`` to ``j - i``; internally it is scaled by 4 to stay integral.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import _kernels
from .eps import EpsCoeff
from .weights import Weight, clifford_data

Key = tuple[int, ...]


def height4(key: Key) -> int:
    """Four times the height functional of a doubled-coordinate weight."""
    n = len(key)
    return sum((n + 1 - 2 * i) * d for i, d in enumerate(key, start=1))


@dataclass(frozen=True)
class RootSystem:
    """Root data of gl_n: positive roots ``e_i - e_j`` (i < j), doubled."""

    n: int

    @property
    def positive_roots(self) -> list[Key]:
        out = []
        for i, j in itertools.combinations(range(self.n), 2):
            v = [0] * self.n
            v[i], v[j] = 2, -2
            out.append(tuple(v))
        return out

    @property
    def simple_roots(self) -> list[Key]:
        return [r for r in self.positive_roots if height4(r) == 4]

    @staticmethod
    def height(key: Key) -> int:
        h4 = height4(key)
        if h4 % 4:
            raise ValueError(f"{key} is not in the root lattice")
        return h4 // 4


class WindowError(ValueError):
    """A coefficient outside the certified window was requested."""


class FormalCharacter:
    """Sparse map from weights (doubled tuples) to ``EpsCoeff``.

    ``floor`` is ``None`` for exact (finite, fully known) characters.
    Otherwise the coefficient at ``nu`` is certified iff
    ``height4(nu) >= floor``.  ``top`` is an upper bound for ``height4`` over
    all weights the untruncated character could have.
    """

    __slots__ = ("terms", "floor", "top", "n")

    def __init__(self, terms: Mapping[Key, EpsCoeff], n: int,
                 floor: int | None = None, top: int | None = None) -> None:
        self.terms = {k: v for k, v in terms.items() if v}
        self.n = n
        self.floor = floor
        if top is None:
            top = max((height4(k) for k in self.terms), default=floor if floor is not None else 0)
        self.top = top

    # -- construction -------------------------------------------------------
    @classmethod
    def monomial(cls, weight: Weight, coeff: EpsCoeff = EpsCoeff(1, 0)) -> FormalCharacter:
        return cls({weight.doubled: coeff}, weight.n)

    @classmethod
    def zero(cls, n: int) -> FormalCharacter:
        return cls({}, n)

    # -- queries ------------------------------------------------------------
    @property
    def exact(self) -> bool:
        return self.floor is None

    @property
    def window(self) -> int | None:
        """Certified depth below ``top`` in height units (``None`` if exact)."""
        if self.floor is None:
            return None
        return (self.top - self.floor) // 4

    def certified(self, key: Key) -> bool:
        return self.floor is None or height4(key) >= self.floor

    def coeff(self, weight: Weight | Key) -> EpsCoeff:
        key = weight.doubled if isinstance(weight, Weight) else weight
        if not self.certified(key):
            raise WindowError(f"weight {key} lies outside the certified window")
        return self.terms.get(key, EpsCoeff())

    def certified_terms(self) -> dict[Key, EpsCoeff]:
        return {k: v for k, v in self.terms.items() if self.certified(k)}

    def is_zero(self) -> bool:
        return not self.certified_terms()

    def truncate(self, floor: int) -> FormalCharacter:
        """Forget everything below ``floor`` (never raises certification)."""
        new_floor = floor if self.floor is None else max(floor, self.floor)
        return FormalCharacter({k: v for k, v in self.terms.items() if height4(k) >= new_floor},
                               self.n, new_floor, self.top)

    def finite(self, lowest: int) -> FormalCharacter:
        """Exact finite character once every weight with ``height4 >= lowest``
        is certified and the true character is known to vanish below it."""
        if self.floor is not None and self.floor > lowest:
            raise WindowError("window does not reach the lowest weight")
        return FormalCharacter({k: v for k, v in self.terms.items() if height4(k) >= lowest},
                               self.n)

    # -- arithmetic ---------------------------------------------------------
    def _combine_floor(self, other: FormalCharacter) -> int | None:
        if self.floor is None:
            return other.floor
        if other.floor is None:
            return self.floor
        return max(self.floor, other.floor)

    def __add__(self, other: FormalCharacter) -> FormalCharacter:
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, EpsCoeff()) + v
        return FormalCharacter(terms, self.n, self._combine_floor(other), max(self.top, other.top))

    def __neg__(self) -> FormalCharacter:
        return FormalCharacter({k: -v for k, v in self.terms.items()}, self.n, self.floor, self.top)

    def __sub__(self, other: FormalCharacter) -> FormalCharacter:
        return self + (-other)

    def scale(self, c: EpsCoeff | int) -> FormalCharacter:
        c = c if isinstance(c, EpsCoeff) else EpsCoeff(c, 0)
        return FormalCharacter({k: v * c for k, v in self.terms.items()}, self.n, self.floor, self.top)

    def exact_div(self, k: int) -> FormalCharacter:
        return FormalCharacter({w: v.exact_div(k) for w, v in self.terms.items()},
                               self.n, self.floor, self.top)

    def __mul__(self, other: FormalCharacter) -> FormalCharacter:
        floors = []
        if self.floor is not None:
            floors.append(self.floor + other.top)
        if other.floor is not None:
            floors.append(other.floor + self.top)
        floor = max(floors) if floors else None
        raw = _kernels.convolve(
            {k: (v.even, v.odd) for k, v in self.terms.items()},
            {k: (v.even, v.odd) for k, v in other.terms.items()},
            floor,
        )
        terms = {k: EpsCoeff(e, o) for k, (e, o) in raw.items()}
        return FormalCharacter(terms, self.n, floor, self.top + other.top)

    def __eq__(self, other: object) -> bool:
        """Equality on the common certified region."""
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        diff = self - other
        return diff.is_zero()

    def __repr__(self) -> str:
        return f"FormalCharacter({len(self.terms)} terms, window={self.window})"

    # -- symmetry -----------------------------------------------------------
    def parity_shift(self) -> FormalCharacter:
        """Character of the parity-changed module (multiply by eps)."""
        return FormalCharacter({k: v.swap() for k, v in self.terms.items()},
                               self.n, self.floor, self.top)

    def is_parity_symmetric(self) -> bool:
        return all(v.even == v.odd for v in self.certified_terms().values())

    def is_sn_invariant(self) -> bool:
        """Termwise S_n-invariance on pairs of certified weights."""
        cert = self.certified_terms()
        for k, v in cert.items():
            for p in itertools.permutations(k):
                if p != k and self.certified(p) and self.terms.get(p, EpsCoeff()) != v:
                    return False
        return True

    def is_nonnegative(self) -> bool:
        return all(v.is_nonnegative() for v in self.certified_terms().values())

    # -- io -----------------------------------------------------------------
    def dump(self) -> str:
        """One line per certified term, ``2l_1,..,2l_n;even,odd``."""
        lines = [",".join(str(x) for x in k) + f";{v.even},{v.odd}"
                 for k, v in sorted(self.certified_terms().items())]
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def load(cls, text: str, n: int) -> FormalCharacter:
        terms = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            w, c = line.split(";")
            even, odd = (int(x) for x in c.split(","))
            terms[tuple(int(x) for x in w.split(","))] = EpsCoeff(even, odd)
        return cls(terms, n)


def permutation_sign(perm: Iterable[int]) -> int:
    p = list(perm)
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def weyl_numerator(lam: Weight) -> FormalCharacter:
    """Alternating orbit sum ``sum_w sign(w) e^{w lam}`` (unshifted action)."""
    terms: dict[Key, EpsCoeff] = {}
    for perm in itertools.permutations(range(lam.n)):
        key = tuple(lam.doubled[perm[i]] for i in range(lam.n))
        terms[key] = terms.get(key, EpsCoeff()) + EpsCoeff(permutation_sign(perm), 0)
    return FormalCharacter(terms, lam.n)


@functools.lru_cache(maxsize=32)
def d_series(n: int, depth: int) -> FormalCharacter:
    """Truncation of ``prod_{a > 0} (1 + 2 sum_{k>=1} e^{-k a})`` to height <= depth."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    terms: dict[Key, int] = {(0,) * n: 1}
    for root in RootSystem(n).positive_roots:
        h = RootSystem.height(root)
        factor = {(0,) * n: 1}
        for k in range(1, depth // h + 1):
            factor[tuple(-k * r for r in root)] = 2
        nxt: dict[Key, int] = {}
        for a, ca in terms.items():
            ha = -height4(a)
            for b, cb in factor.items():
                if ha - height4(b) > 4 * depth:
                    continue
                key = tuple(x + y for x, y in zip(a, b))
                nxt[key] = nxt.get(key, 0) + ca * cb
        terms = nxt
    return FormalCharacter({k: EpsCoeff(v, 0) for k, v in terms.items()}, n,
                           floor=-4 * depth, top=0)


def dominant_rearrangement(lam: Weight) -> Weight:
    return Weight(tuple(sorted(lam.doubled, reverse=True)))


def euler_character(lam: Weight, algebra: str, depth: int) -> FormalCharacter:
    """Windowed character of the Euler characteristic ``E(lam)``.

    Coefficients are certified for weights ``nu`` with
    ``height(mu - nu) <= depth`` where ``mu`` is the dominant rearrangement
    of ``lam``.
    """
    if depth < 0:
        raise ValueError("depth too small to certify any coefficient")
    num = weyl_numerator(lam)
    if not num.terms:
        return FormalCharacter({}, lam.n, floor=height4(dominant_rearrangement(lam).doubled) - 4 * depth,
                               top=height4(dominant_rearrangement(lam).doubled))
    dim_v = clifford_data(lam, algebra).simple_dim
    return (d_series(lam.n, depth) * num).scale(dim_v)


def span_height(lam: Weight) -> int:
    """Height of ``mu - w0 mu`` for the dominant rearrangement ``mu``."""
    mu = dominant_rearrangement(lam)
    return (height4(mu.doubled) - height4(tuple(reversed(mu.doubled)))) // 4


def completion_margin(lam: Weight, depth: int) -> int:
    """``depth - height(mu - w0 mu)``; non-negative iff the whole finite
    character of ``E(lam)`` is certified."""
    return depth - span_height(lam)


def finite_euler_character(lam: Weight, algebra: str, depth: int) -> FormalCharacter:
    """The exact finite character of ``E(lam)``, requiring a complete window."""
    mu = dominant_rearrangement(lam)
    if completion_margin(lam, depth) < 0:
        raise WindowError(f"depth {depth} does not reach the lowest weight of E{lam}")
    return euler_character(lam, algebra, depth).finite(height4(tuple(reversed(mu.doubled))))


@dataclass(frozen=True)
class CharacterStats:
    total_dim: int
    super_dim: int
    is_sn_invariant: bool


def character_stats(ch: FormalCharacter) -> CharacterStats:
    if not ch.exact:
        raise WindowError("statistics need an exact (fully certified) character")
    total = sum(v.dim for v in ch.terms.values())
    sdim = sum(v.sdim for v in ch.terms.values())
    return CharacterStats(total, sdim, ch.is_sn_invariant())


def even_multiplicities(ch: FormalCharacter) -> dict[Key, EpsCoeff]:
    """Decomposition of an exact character into irreducible gl_n characters.

    Uses the alternating-sum formula ``m(nu) = sum_w sign(w) ch[w(nu + rho) - rho]``
    with ``rho`` doubled as ``(n-1, n-3, ..., 1-n)``.
    """
    if not ch.exact:
        raise WindowError("gl_n multiplicities need an exact character")
    n = ch.n
    rho = tuple(n + 1 - 2 * i for i in range(1, n + 1))
    out: dict[Key, EpsCoeff] = {}
    for key in ch.terms:
        if any(a < b or (a - b) % 2 for a, b in zip(key, key[1:])):
            continue
        shifted = tuple(k + r for k, r in zip(key, rho))
        total = EpsCoeff()
        for perm in itertools.permutations(range(n)):
            probe = tuple(shifted[perm[i]] - rho[i] for i in range(n))
            c = ch.terms.get(probe)
            if c:
                total = total + c * permutation_sign(perm)
        if total:
            out[key] = total
    return out


def is_even_positive(ch: FormalCharacter) -> bool:
    """True when the character is a genuine gl_n character (parts kept apart)."""
    return all(v.is_nonnegative() for v in even_multiplicities(ch).values())


def orbit_character(lam: Weight, coeff: EpsCoeff) -> FormalCharacter:
    """``coeff`` times the sum over the S_n-orbit of ``lam``."""
    keys = set(itertools.permutations(lam.doubled))
    return FormalCharacter({k: coeff for k in keys}, lam.n)
