"""
Affine Integers - Exact arithmetic on values coeff*s + const for a symbolic s
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

# Concrete values every symbolic comparison is confirmed against
SPOT_CHECKS = (1, 2, 3, 10)


class ArithmeticCheckError(ArithmeticError):
    """A symbolic conclusion disagrees with concrete evaluation."""


Operand = Union["AffineInt", int]


@dataclass(frozen=True)
class AffineInt:
    coeff: int
    const: int = 0

    @staticmethod
    def lift(value: Operand) -> "AffineInt":
        if isinstance(value, AffineInt):
            return value
        if isinstance(value, int):
            return AffineInt(0, value)
        raise TypeError(f"Cannot lift {type(value).__name__} to AffineInt")

    def __add__(self, other: Operand) -> "AffineInt":
        other = AffineInt.lift(other)
        return AffineInt(self.coeff + other.coeff, self.const + other.const)

    __radd__ = __add__

    def __neg__(self) -> "AffineInt":
        return AffineInt(-self.coeff, -self.const)

    def __sub__(self, other: Operand) -> "AffineInt":
        return self + (-AffineInt.lift(other))

    def __rsub__(self, other: Operand) -> "AffineInt":
        return AffineInt.lift(other) - self

    def __mul__(self, factor: int) -> "AffineInt":
        if not isinstance(factor, int):
            raise TypeError("AffineInt only scales by integers")
        return AffineInt(self.coeff * factor, self.const * factor)

    __rmul__ = __mul__

    def at(self, s: int) -> int:
        return self.coeff * s + self.const

    @property
    def is_constant(self) -> bool:
        return self.coeff == 0

    def ceil_div(self, q: int) -> "AffineInt":
        """
        ceil((coeff*s + const) / q), exact for every integer s

        Raises:
            ValueError: q does not divide coeff
        """
        if q <= 0 or self.coeff % q:
            raise ValueError(f"ceil({self} / {q}) is not affine in s")
        return AffineInt(self.coeff // q, -(-self.const // q))

    def floor_div(self, q: int) -> "AffineInt":
        if q <= 0 or self.coeff % q:
            raise ValueError(f"floor({self} / {q}) is not affine in s")
        return AffineInt(self.coeff // q, self.const // q)

    def exact_div(self, q: int) -> "AffineInt | None":
        """Quotient when q divides both parts, else None."""
        if q == 0 or self.coeff % q or self.const % q:
            return None
        return AffineInt(self.coeff // q, self.const // q)

    def __str__(self) -> str:
        if self.coeff == 0:
            return str(self.const)
        head = "s" if self.coeff == 1 else ("-s" if self.coeff == -1 else f"{self.coeff}s")
        if self.const == 0:
            return head
        sign = "+" if self.const > 0 else "-"
        return f"{head} {sign} {abs(self.const)}"


def _spot_check(symbolic: bool, concrete, s_min: int, what: str) -> None:
    if not symbolic:
        return
    for s in SPOT_CHECKS:
        if s >= s_min and not concrete(s):
            raise ArithmeticCheckError(f"{what} claimed for all s >= {s_min} but fails at s = {s}")


def positive_for_all(x: Operand, s_min: int = 1) -> bool:
    """x > 0 for every integer s >= s_min."""
    x = AffineInt.lift(x)
    result = x.coeff >= 0 and x.at(s_min) > 0
    _spot_check(result, lambda s: x.at(s) > 0, s_min, f"{x} > 0")
    return result


def greater_for_all(a: Operand, b: Operand, s_min: int = 1) -> bool:
    a, b = AffineInt.lift(a), AffineInt.lift(b)
    result = positive_for_all(a - b, s_min)
    _spot_check(result, lambda s: a.at(s) > b.at(s), s_min, f"{a} > {b}")
    return result


def equal_for_all(a: Operand, b: Operand, s_min: int = 1) -> bool:
    a, b = AffineInt.lift(a), AffineInt.lift(b)
    result = a == b
    _spot_check(result, lambda s: a.at(s) == b.at(s), s_min, f"{a} == {b}")
    return result


def sigma_affine(n: Operand, k: int, d: Operand) -> AffineInt:
    """sigma = 2^(k-1) n - (2^k - 1) d."""
    return AffineInt.lift(n) * (1 << (k - 1)) - AffineInt.lift(d) * ((1 << k) - 1)


def griesmer_sum_affine(d: Operand, k: int) -> AffineInt:
    """
    Sum of ceil(d / 2^i) for i = 0..k-1

    Raises:
        ValueError: 2^(k-1) does not divide the coefficient of d
    """
    d = AffineInt.lift(d)
    if d.coeff % (1 << (k - 1)):
        raise ValueError(f"Griesmer sum of {d} for k={k} needs 2^{k - 1} | {d.coeff}")
    total = AffineInt(0, 0)
    for i in range(k):
        total = total + d.ceil_div(1 << i)
    return total
