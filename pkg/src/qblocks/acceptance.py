"""End-to-end checks shared by ``qblocks verify-all`` and the test suite.

Every check compares exact integers.  Expected tables are written out here
independently of the closed forms used by :mod:`qblocks.bgg`, so agreement is
a genuine cross-check rather than a tautology.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bgg import a_coefficients, projective_table, simple_characters, trivial_candidates
from .characters import (
    character_stats,
    completion_margin,
    euler_character,
    finite_euler_character,
    permutation_sign,
    span_height,
)
from .fixtures import FILTRATIONS, expected_layers, verify_against_fixtures
from .quivers import PathAlgebra, block_algebra
from .weights import (
    BlockClass,
    BlockDescriptor,
    IndResCase,
    SimpleLabel,
    SimpleType,
    Weight,
    block_class,
    dominant_grid,
    reciprocal_sum,
    restrict_induce_class,
    self_ext,
    simple_type,
    standard_reduction,
    weight_index,
)

# One weight per block family; sq strongly typical and sq typical share the
# one-point quiver but are kept apart because their Clifford data differ.
REPRESENTATIVES: tuple[tuple[str, str], ...] = (
    ("sq", "3,2,1"), ("sq", "2,0,-1"), ("sq", "6,3,-2"), ("sq", "3/2,1/2,-1/2"),
    ("sq", "1,0,0"), ("sq", "0,0,0"),
    ("q", "3,2,1"), ("q", "2,0,-1"), ("q", "3/2,1/2,-1/2"), ("q", "1,0,0"), ("q", "0,0,0"),
)


@dataclass(frozen=True)
class Settings:
    depth: int = 20
    bound: int = 8
    cap: int = 12


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.ok = False
            self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} criterion {self.number}: {self.title} ({self.checked} checks)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok,
                "checked": self.checked, "failures": self.failures[:20]}


def representative_blocks() -> list[BlockDescriptor]:
    return [block_class(Weight.parse(w), alg) for alg, w in REPRESENTATIVES]


def _block(algebra: str, weight: str) -> BlockDescriptor:
    return block_class(Weight.parse(weight), algebra)


# --- criterion 1 ------------------------------------------------------------


def _principal_row(a: int) -> dict[int, int]:
    if a == 0:
        return {0: 4, 1: 2, 2: 2}
    if a == 1:
        return {0: 2, 1: 2, 2: 1}
    if a == 2:
        return {0: 2, 1: 1, 2: 2, 3: 1}
    return {a - 1: 1, a: 2, a + 1: 1}


def _standard_row(a: int, algebra: str) -> dict[int, int]:
    if a == 1:
        return {1: 4, 2: 2} if algebra == "q" else {1: 2, 2: 2}
    if a == 2:
        return {1: 2 if algebra == "q" else 1, 2: 2, 3: 1}
    return {a - 1: 1, a: 2, a + 1: 1}


def _half_row(a: int) -> dict[int, int]:
    if a == 1:
        return {1: 2, 2: 1}
    return {a - 1: 1, a: 2, a + 1: 1}


def _member(cls: BlockClass, k: int) -> Weight:
    if cls is BlockClass.PRINCIPAL:
        return Weight.of(k, 0, -k)
    if cls is BlockClass.STANDARD:
        return Weight.of(1, 0, 0) if k == 1 else Weight.of(k, 1, -k)
    return Weight.of("3/2", "1/2", "-1/2") if k == 1 else Weight((2 * k + 1, 3, -2 * k - 1))


def expected_projective(block: BlockDescriptor, a: int) -> dict[Weight, int]:
    """Stated multiplicities ``[P : L]_Pi`` for the member of index ``a``."""
    cls = block.block_class
    if cls is BlockClass.PRINCIPAL:
        scale = 2 if block.algebra == "q" else 1
        row = {k: scale * v for k, v in _principal_row(a).items()}
    elif cls is BlockClass.STANDARD:
        row = _standard_row(a, block.algebra)
    else:
        row = _half_row(a)
    return {_member(cls, k): v for k, v in row.items()}


def criterion_1(s: Settings) -> CriterionResult:
    res = CriterionResult(1, "projective multiplicity tables")
    for alg in ("sq", "q"):
        for w in ("1,0,0", "3/2,1/2,-1/2", "0,0,0"):
            block = _block(alg, w)
            table = projective_table(block, s.bound)
            for lam, vec in table.multiplicities.items():
                found = {lab.weight: n for lab, n in vec.collapse().entries.items()}
                expected = expected_projective(block, weight_index(lam))
                res.expect(found == expected, f"{block.name} P{lam}: {found} != {expected}")
            indices = sorted(weight_index(lam) for lam in table.multiplicities)
            first = 0 if block.block_class is BlockClass.PRINCIPAL else 1
            res.expect(indices == list(range(first, s.bound + 1)),
                       f"{block.name}: table covers indices {indices}")
    return res


# --- criterion 2 ------------------------------------------------------------


def sign_grid(size: int = 50) -> list[Weight]:
    """A deterministic grid of dominant weights, integral and half-integral."""
    values = [Fraction(k, 2) for k in range(-6, 7)]
    grid = dominant_grid(values)
    step = max(1, len(grid) // size)
    return grid[::step][:size]


def criterion_2(s: Settings) -> CriterionResult:
    res = CriterionResult(2, "Euler characteristic identities")
    for alg in ("sq", "q"):
        e0 = euler_character(Weight.zero(3), alg, s.depth)
        res.expect(e0.is_zero() and e0.window == s.depth, f"{alg}: Ch E(0,0,0) != 0")
        for lam in sign_grid():
            base = euler_character(lam, alg, s.depth)
            for perm in itertools.permutations(range(3)):
                if list(perm) == [0, 1, 2]:
                    continue
                moved = euler_character(lam.permuted(perm), alg, s.depth)
                sign = permutation_sign(perm)
                res.expect(moved == base.scale(sign), f"{alg}: E(w{lam}) != {sign} E{lam}, w={perm}")
        for lam in typical_weights():
            if completion_margin(lam, s.depth) < 0:
                continue
            ch = finite_euler_character(lam, alg, s.depth)
            res.expect(ch.is_nonnegative() and ch.is_sn_invariant(),
                       f"{alg}: typical E{lam} not a positive symmetric character")
    return res


def typical_weights() -> list[Weight]:
    out = []
    for lam in dominant_grid(range(-4, 5)):
        if block_class(lam, "q").block_class in (BlockClass.STRONGLY_TYPICAL, BlockClass.TYPICAL):
            out.append(lam)
    return out


# --- criterion 3 ------------------------------------------------------------


def criterion_3(s: Settings) -> CriterionResult:
    res = CriterionResult(3, "triangular inversion sanity")
    for alg in ("sq", "q"):
        for w in ("0,0,0", "1,0,0"):
            block = _block(alg, w)
            try:
                chars = simple_characters(block, s.depth, 6, check=False)
            except ArithmeticError as exc:
                res.expect(False, f"{block.name}: {exc}")
                continue
            for lam, ch in chars.items():
                res.expect(ch.is_nonnegative(), f"{block.name}: Ch L{lam} has a negative term")
                res.expect(ch.is_sn_invariant(), f"{block.name}: Ch L{lam} not S_n-invariant")
        found = trivial_candidates(alg, 6)
        res.expect(bool(found), f"{alg}: no trivial character survives")
        for cand in found:
            res.expect(cand.c.dim == 1, f"{alg}: trivial candidate {cand.c} has dimension {cand.c.dim}")
    return res


# --- criterion 4 ------------------------------------------------------------


def collapsed_hom_mismatches(algebra: PathAlgebra, block: BlockDescriptor, bound: int) -> list[str]:
    """Interior pairs where summing ``dim Hom(P(i), P(j))`` over the parity
    class of ``i`` disagrees with ``[P(j) : L(i)]_Pi``."""
    quiver = algebra.quiver
    table = projective_table(block, bound).multiplicities
    out = []
    interior = quiver.interior()
    weights = sorted({quiver.vertices[v].weight for v in interior})
    for j in interior:
        col = table[quiver.vertices[j].weight]
        for w in weights:
            found = sum(algebra.hom_dim(i, j) for i in interior if quiver.vertices[i].weight == w)
            if found != col[w]:
                out.append(f"{block.name}: Hom(P({w}), P({quiver.vertices[j]})) = {found}, "
                           f"table {col[w]}")
    return out


def criterion_4(s: Settings) -> CriterionResult:
    res = CriterionResult(4, "path algebra and Grothendieck group agree")
    for block in representative_blocks():
        algebra = block_algebra(block, s.bound, s.cap)
        bad = collapsed_hom_mismatches(algebra, block, s.bound)
        res.expect(not bad, "; ".join(bad[:3]))
    sq = block_algebra(_block("sq", "0,0,0"), s.bound, s.cap)
    top = sq.quiver.vertex(SimpleLabel(Weight.zero(3)))
    shifted = sq.quiver.vertex(SimpleLabel(Weight.zero(3), True))
    res.expect(sq.hom_dim(top, top) == 2, "dim End P_sq(0) != 2")
    res.expect(sq.hom_dim(top, shifted) == 2, "dim Hom(P_sq(0), Pi P_sq(0)) != 2")
    q = block_algebra(_block("q", "1,0,0"), s.bound, s.cap)
    v = q.quiver.vertex(SimpleLabel(Weight.of(1, 0, 0)))
    res.expect(q.hom_dim(v, v) == 4, "dim End P_q(1,0,0) != 4")
    return res


# --- criterion 5 ------------------------------------------------------------


def fixture_blocks() -> list[BlockDescriptor]:
    return [_block(alg, "1,0,0" if cls is BlockClass.STANDARD else "0,0,0")
            for alg, cls in FILTRATIONS]


def criterion_5(s: Settings) -> CriterionResult:
    res = CriterionResult(5, "radical filtrations match the stored diagrams")
    for block in fixture_blocks():
        report = verify_against_fixtures(block_algebra(block, s.bound, s.cap), block)
        res.expect(report.ok, f"{block.name}: {[m.vertex for m in report.mismatches]}")
        res.checked += report.checked - 1
    return res


# --- criterion 6 ------------------------------------------------------------


def criterion_6(s: Settings) -> CriterionResult:
    from .wild import representation_type

    res = CriterionResult(6, "representation type")
    for block in representative_blocks():
        verdict = representation_type(block, max(s.bound, 6))
        wild = block.algebra == "q" and block.block_class is BlockClass.PRINCIPAL
        res.expect(verdict.verdict == ("Wild" if wild else "Tame"),
                   f"{block.name}: {verdict.verdict}")
        if wild:
            res.expect(bool(verdict.witness.get("degree_3_beyond_index_3")),
                       f"{block.name}: no degree-3 witness beyond index 3")
    return res


# --- criterion 7 ------------------------------------------------------------


def rule_grid() -> list[Weight]:
    return dominant_grid([Fraction(k, 2) for k in range(-8, 9)])


def _has_zero(lam: Weight) -> bool:
    return any(d == 0 for d in lam.doubled)


def expected_shifted_ext(lam: Weight, algebra: str) -> int:
    """``dim Ext^1(L, Pi L)`` as stated for q(n) and sq(n)."""
    if algebra == "q":
        return 1 if _has_zero(lam) else 0
    return 1 if not _has_zero(lam) and reciprocal_sum(lam) == 0 else 0


EXPECTED_IND_RES = {
    IndResCase.ZERO_COORD: ((("L_sq", False),), False, (("L", False), ("L", True)), True),
    IndResCase.GENERIC: ((("L_sq", False), ("L_sq", True)), False, (("L", False),), False),
    IndResCase.RECIPROCAL_ZERO: ((("L_sq", True), ("L_sq", False)), True, (("L", False),), False),
}


def criterion_7(s: Settings) -> CriterionResult:
    res = CriterionResult(7, "rule tables")
    for lam in rule_grid():
        for alg in ("q", "sq"):
            ext = self_ext(lam, alg)
            res.expect(ext.shifted == expected_shifted_ext(lam, alg),
                       f"{alg} {lam}: Ext(L, Pi L) = {ext.shifted}")
            if simple_type(lam, alg) is SimpleType.M:
                res.expect(ext.same == 0 and not ext.merged, f"{alg} {lam}: Ext(L, L) != 0")
            else:
                res.expect(ext.merged and ext.same == ext.shifted, f"{alg} {lam}: type Q not merged")
        if _has_zero(lam):
            case = IndResCase.ZERO_COORD
        elif reciprocal_sum(lam) != 0:
            case = IndResCase.GENERIC
        else:
            case = IndResCase.RECIPROCAL_ZERO
        got = restrict_induce_class(lam)
        res.expect(got.case is case and (got.res, got.res_nonsplit, got.ind, got.ind_nonsplit)
                   == EXPECTED_IND_RES[case], f"{lam}: Ind/Res case {got.case.value}")
    for lam in _block("q", "1,0,0").weights(s.bound):
        a = weight_index(lam)
        expected = Weight.of(0, 0) if a == 1 else Weight.of(a - 1, 1 - a)
        res.expect(standard_reduction(lam) == expected, f"reduction of {lam}")
    return res


# --- criterion 8 ------------------------------------------------------------


def is_palindromic(layers) -> bool:
    seq = [tuple(sorted(layer)) for layer in layers]
    return seq == seq[::-1]


def parity_failures(algebra: PathAlgebra) -> list[str]:
    q = algebra.quiver
    sigma = q.involution
    out = []
    for (i, j), d in algebra.hom_dims().items():
        if algebra.hom_dim(sigma[i], sigma[j]) != d:
            out.append(f"Hom dims not parity invariant at {q.vertices[i]} -> {q.vertices[j]}")
    for v in q.interior():
        layers = algebra.radical_filtration(v).layers
        image = tuple(tuple(sorted(q.vertices[sigma[q.vertex(x)]] for x in layer)) for layer in layers)
        moved = algebra.radical_filtration(sigma[v]).layers
        if tuple(tuple(sorted(layer)) for layer in moved) != image:
            out.append(f"filtration of P({q.vertices[v]}) not parity equivariant")
    return out


def projective_superdims(block: BlockDescriptor, bound: int) -> dict[Weight, tuple[int, int]]:
    """``(dim, sdim)`` of ``Ch P(l) = sum a[l, nu] Ch E(nu)`` for index(l) <= bound."""
    acoef = a_coefficients(block, bound)
    rows = sorted({nu for _, nu in acoef})
    depth = max(span_height(nu) for nu in rows)
    euler = {nu: finite_euler_character(nu, block.algebra, depth) for nu in rows}
    out = {}
    for lam in block.weights(bound):
        dim = sdim = 0
        for (l, nu), a in acoef.items():
            if l == lam:
                st = character_stats(euler[nu])
                dim += a * st.total_dim
                sdim += a * st.super_dim
        out[lam] = (dim, sdim)
    return out


def criterion_8(s: Settings) -> CriterionResult:
    res = CriterionResult(8, "property suites")
    for alg in ("sq", "q"):
        for lam in sign_grid(12):
            n = euler_character(lam, alg, s.depth)
            wider = euler_character(lam, alg, s.depth + 1)
            res.expect(n == wider, f"{alg} E{lam}: depth {s.depth} vs {s.depth + 1}")
    for block in representative_blocks():
        algebra = block_algebra(block, s.bound, s.cap)
        bad = parity_failures(algebra)
        res.expect(not bad, f"{block.name}: {bad[:2]}")
    for block in fixture_blocks():
        algebra = block_algebra(block, s.bound, s.cap)
        for key in FILTRATIONS[(block.algebra, block.block_class)]:
            a = 3 if key == "a" else None
            top, layers = expected_layers(block, key, a)
            if is_palindromic(layers):
                found = algebra.radical_filtration(algebra.quiver.vertex(top)).layers
                res.expect(is_palindromic(found), f"{block.name} P({top}) not palindromic")
    for alg in ("sq", "q"):
        block = _block(alg, "0,0,0")
        for lam, (dim, sdim) in projective_superdims(block, s.bound).items():
            res.expect(dim > 0 and sdim == 0, f"{block.name} P{lam}: dim {dim}, sdim {sdim}")
    return res


CRITERIA: tuple[Callable[[Settings], CriterionResult], ...] = (
    criterion_1, criterion_2, criterion_3, criterion_4,
    criterion_5, criterion_6, criterion_7, criterion_8,
)


def run_all(settings: Settings | None = None) -> list[CriterionResult]:
    settings = settings or Settings()
    return [check(settings) for check in CRITERIA]


__all__ = ["Settings", "CriterionResult", "CRITERIA", "run_all", "REPRESENTATIVES",
           "representative_blocks", "expected_projective"]
