"""Hilbert polynomials in the binomial basis.

A polynomial of dimension ``n`` is stored through integers ``c_0..c_n`` with

    chi(O_X(z)) = sum_j c_j * binom(z + j - 1, j).

``c_n`` is the degree and ``c_j`` is the Euler characteristic of a general
codimension ``j`` linear section, so dropping ``c_0`` is the same as cutting
with a hyperplane. All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DegreeNonPositive,
    DimensionZero,
    DuplicateAbscissa,
    NonIntegralCoefficients,
    ValidationError,
)
from .poly import RationalPoly


def gen_binom(x: int, j: int) -> int:
    """Polynomial binomial coefficient ``x(x-1)...(x-j+1)/j!``.

    Defined for every integer ``x`` (no clamping of negative tops) and zero
    for ``j < 0``.
    """
    if j < 0:
        return 0
    if x >= 0:
        return comb(x, j)
    # binom(x, j) = (-1)^j binom(j - x - 1, j)
    return (-1) ** j * comb(j - x - 1, j)


@dataclass(frozen=True)
class HilbertPoly:
    dim: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if self.dim < 0:
            raise ValidationError(f"dimension must be >= 0, got {self.dim}", "dim")
        if len(coeffs) != self.dim + 1:
            raise ValidationError(
                f"expected {self.dim + 1} coefficients, got {len(coeffs)}", "coeffs")
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValidationError(f"coefficient {c!r} is not an integer", "coeffs")
        if coeffs[-1] < 1:
            raise DegreeNonPositive(f"leading coefficient (degree) must be >= 1, got {coeffs[-1]}",
                                    "coeffs")

    @property
    def degree(self) -> int:
        return self.coeffs[-1]

    def __call__(self, z: int) -> int:
        return hp_eval(self, z)

    def to_poly(self, shift: int = 0) -> RationalPoly:
        """``s -> chi(O_X(s + shift))`` in the monomial basis."""
        p = RationalPoly()
        for j, c in enumerate(self.coeffs):
            p = p + RationalPoly.binomial(j - 1 + shift, j) * c
        return p


def hp_eval(H: HilbertPoly, z: int) -> int:
    return sum(c * gen_binom(z + j - 1, j) for j, c in enumerate(H.coeffs))


def _lagrange_value(points: Sequence[tuple[int, int]], x: int) -> Fraction:
    total = Fraction(0)
    for i, (zi, vi) in enumerate(points):
        term = Fraction(vi)
        for k, (zk, _) in enumerate(points):
            if k != i:
                term *= Fraction(x - zk, zi - zk)
        total += term
    return total


def hp_from_values(n: int, points: Iterable[tuple[int, int]]) -> HilbertPoly:
    """Interpolate a dimension-``n`` Hilbert polynomial through ``n+1`` values.

    The interpolant is evaluated at ``z = 0, -1, ..., -n``; since
    ``binom(z+j-1, j)`` vanishes at ``z = 0`` for ``j >= 1``, the binomial-basis
    coefficients are the iterated backward differences at 0:
    ``c_j = sum_i (-1)^i binom(j, i) chi(-i)``.
    """
    pts = [(int(z), int(v)) for z, v in points]
    if len(pts) != n + 1:
        raise ValidationError(f"need exactly {n + 1} points for dimension {n}, got {len(pts)}",
                              "values")
    if len({z for z, _ in pts}) != len(pts):
        raise DuplicateAbscissa("interpolation abscissae must be distinct", "values")

    vals = [_lagrange_value(pts, -i) for i in range(n + 1)]
    coeffs = []
    for j in range(n + 1):
        c = sum((-1) ** i * comb(j, i) * vals[i] for i in range(j + 1))
        if c.denominator != 1:
            raise NonIntegralCoefficients(
                f"interpolant has non-integral coefficient c_{j} = {c}", "values")
        coeffs.append(c.numerator)
    if coeffs[-1] <= 0:
        raise DegreeNonPositive(f"interpolated degree c_{n} = {coeffs[-1]} is not positive",
                                "values")
    return HilbertPoly(n, tuple(coeffs))


def hp_hyperplane_section(H: HilbertPoly) -> HilbertPoly:
    if H.dim == 0:
        raise DimensionZero("a zero-dimensional scheme has no hyperplane section")
    return HilbertPoly(H.dim - 1, H.coeffs[1:])

