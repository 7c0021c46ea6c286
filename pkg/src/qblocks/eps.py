"""Coefficients in Z[eps]/(eps^2 - 1), the ring recording even and odd parts."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class EpsCoeff:
    """``even + odd * eps`` with ``eps**2 == 1``.

    Evaluating at ``eps = 1`` gives a total dimension and at ``eps = -1`` a
    superdimension.
    """

    even: int = 0
    odd: int = 0

    def __add__(self, other: EpsCoeff) -> EpsCoeff:
        return EpsCoeff(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: EpsCoeff) -> EpsCoeff:
        return EpsCoeff(self.even - other.even, self.odd - other.odd)

    def __neg__(self) -> EpsCoeff:
        return EpsCoeff(-self.even, -self.odd)

    def __mul__(self, other: EpsCoeff | int) -> EpsCoeff:
        if isinstance(other, int):
            return EpsCoeff(self.even * other, self.odd * other)
        return EpsCoeff(
            self.even * other.even + self.odd * other.odd,
            self.even * other.odd + self.odd * other.even,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.even or self.odd)

    def exact_div(self, k: int) -> EpsCoeff:
        if self.even % k or self.odd % k:
            raise ArithmeticError(f"{self} is not divisible by {k}")
        return EpsCoeff(self.even // k, self.odd // k)

    def swap(self) -> EpsCoeff:
        """Multiply by eps (parity change)."""
        return EpsCoeff(self.odd, self.even)

    @property
    def dim(self) -> int:
        return self.even + self.odd

    @property
    def sdim(self) -> int:
        return self.even - self.odd

    def is_nonnegative(self) -> bool:
        return self.even >= 0 and self.odd >= 0

    def __str__(self) -> str:
        if not self.odd:
            return str(self.even)
        if not self.even:
            return f"{self.odd}e"
        return f"{self.even}{self.odd:+d}e"


ONE = EpsCoeff(1, 0)
ZERO = EpsCoeff(0, 0)
EPS = EpsCoeff(0, 1)
