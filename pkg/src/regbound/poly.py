"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import zip_longest
from math import factorial, lcm
from typing import Iterable, Union

Number = Union[int, Fraction]


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, init=False)
class RationalPoly:
    """Polynomial in the monomial basis, lowest degree first.

    The zero polynomial has an empty coefficient tuple, so ``degree`` is
    ``-1`` for it and otherwise the index of the last coefficient.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c: Number) -> RationalPoly:
        return cls([c])

    @classmethod
    def binomial(cls, shift: int, j: int) -> RationalPoly:
        """``s -> gen_binom(s + shift, j)`` as a polynomial in ``s``."""
        return _binomial(shift, j)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @cached_property
    def _integral(self) -> tuple[tuple[int, ...], int]:
        # numerators over a common denominator, for fast evaluation at integers
        den = lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        return tuple((c * den).numerator for c in self.coeffs), den

    def __call__(self, x: Number) -> Fraction:
        if isinstance(x, int):
            nums, den = self._integral
            acc = 0
            for c in reversed(nums):
                acc = acc * x + c
            return Fraction(acc, den)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def value_int(self, x: int) -> int:
        """Evaluate at ``x`` and insist on an integer result."""
        v = self(x)
        if v.denominator != 1:
            raise ValueError(f"polynomial value {v} at {x} is not an integer")
        return v.numerator

    def __add__(self, other: RationalPoly | Number) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            other = RationalPoly.constant(other)
        return RationalPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> RationalPoly:
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other: RationalPoly | Number) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            other = RationalPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Number) -> RationalPoly:
        return RationalPoly.constant(other) - self

    def __mul__(self, other: RationalPoly | Number) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            return RationalPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def shift(self, h: int) -> RationalPoly:
        """Return ``s -> self(s + h)``."""
        acc = RationalPoly()
        step = RationalPoly([h, 1])
        for c in reversed(self.coeffs):
            acc = acc * step + c
        return acc

    def __repr__(self) -> str:
        return f"RationalPoly({[str(c) for c in self.coeffs]})"


@lru_cache(maxsize=4096)
def _binomial(shift: int, j: int) -> RationalPoly:
    if j < 0:
        return RationalPoly()
    p = RationalPoly([1])
    for i in range(j):
        p = p * RationalPoly([shift - i, 1])
    return p * Fraction(1, factorial(j))
