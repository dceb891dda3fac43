"""Linear projections X -> P^m and the guarantee attached to each target.

Projecting ``X`` from a center disjoint from it pushes ``I_X(2)`` forward to
a sheaf on P^m whose Euler characteristics follow from the decomposition

    q_* p^* O(2) = O(2) + (r-m) O(1) + binom(r+1-m, 2) O

and the Hilbert polynomial of ``X``. Whether that sheaf really satisfies
(C_{n+1}) depends on the fibers of the projection; ``projection_status``
records which numerical criterion (if any) certifies it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ck import CkProfile
from .errors import MTooLarge, MTooSmall, ValidationError
from .hilbert import HilbertPoly, gen_binom, hp_eval
from .poly import RationalPoly


@dataclass(frozen=True)
class Curve:
    d: int
    g: int

    n = 1

    def coeffs(self) -> tuple[int, ...]:
        return (1 - self.g, self.d)


@dataclass(frozen=True)
class Surface:
    d: int
    pi: int
    chi: int

    n = 2

    def coeffs(self) -> tuple[int, ...]:
        return (self.chi, 1 - self.pi, self.d)


@dataclass(frozen=True)
class Scroll:
    """Scroll of dimension ``n`` over a curve of genus ``g``."""

    n: int
    d: int
    g: int

    def coeffs(self) -> tuple[int, ...]:
        return (1 - self.g,) * self.n + (self.d,)


Family = Union[Curve, Surface, Scroll]


@dataclass(frozen=True)
class VarietySpec:
    name: str
    n: int
    r: int
    hilbert: HilbertPoly
    family: Family | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"dimension must be >= 1, got {self.n}", "dim")
        if self.r < self.n + 1:
            raise ValidationError(f"ambient r={self.r} must be >= n+1={self.n + 1}", "ambient")
        if self.hilbert.dim != self.n:
            raise ValidationError(
                f"Hilbert polynomial has dimension {self.hilbert.dim}, expected {self.n}", "coeffs")
        if self.family is not None:
            if self.family.n != self.n:
                raise ValidationError(f"family dimension {self.family.n} != {self.n}", "family")
            if self.family.coeffs() != self.hilbert.coeffs:
                raise ValidationError("family parameters do not regenerate the coefficients",
                                      "family")

    @property
    def d(self) -> int:
        return self.hilbert.degree

    @classmethod
    def from_family(cls, family: Family, r: int, name: str | None = None) -> VarietySpec:
        hp = HilbertPoly(family.n, family.coeffs())
        return cls(name or _family_name(family, r), family.n, r, hp, family)


def _family_name(family: Family, r: int) -> str:
    if isinstance(family, Curve):
        return f"curve(d={family.d},g={family.g},r={r})"
    if isinstance(family, Surface):
        return f"surface(d={family.d},pi={family.pi},chi={family.chi},r={r})"
    return f"scroll(n={family.n},d={family.d},g={family.g},r={r})"


def curve(d: int, g: int, r: int, name: str | None = None) -> VarietySpec:
    return VarietySpec.from_family(Curve(d, g), r, name)


def surface(d: int, pi: int, chi: int, r: int, name: str | None = None) -> VarietySpec:
    return VarietySpec.from_family(Surface(d, pi, chi), r, name)


def scroll(n: int, d: int, g: int, r: int, name: str | None = None) -> VarietySpec:
    return VarietySpec.from_family(Scroll(n, d, g), r, name)


def pushforward_chi(spec: VarietySpec, m: int) -> CkProfile:
    """Profile ``s -> chi(q_* p^* I_X(2) (x) O(s))`` on P^m, with ``k = n+1``."""
    if m <= spec.n:
        raise MTooSmall(f"m={m} <= n={spec.n}: the projection cannot be finite")
    if m > spec.r:
        raise MTooLarge(f"m={m} exceeds the ambient dimension r={spec.r}")
    r = spec.r
    ambient = (RationalPoly.binomial(2 + m, m)
               + RationalPoly.binomial(1 + m, m) * (r - m)
               + RationalPoly.binomial(m, m) * gen_binom(r + 1 - m, 2))
    return CkProfile(m, spec.n + 1, ambient - spec.hilbert.to_poly(shift=2))


def pushforward_rank(r: int, m: int) -> int:
    """Rank of ``S^2(O(1) + (r-m) O)`` as the sum of its three summand ranks."""
    return 1 + (r - m) + gen_binom(r + 1 - m, 2)


@dataclass(frozen=True)
class RelationRow:
    j: int
    value: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.value == self.expected


@dataclass(frozen=True)
class RelationReport:
    rows: tuple[RelationRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def table_relation_check(spec: VarietySpec, m: int) -> RelationReport:
    """Check ``chi(F(j-2)) + chi(O_X(j))`` against ``chi(q_*p^*O(2) (x) O(j-2))``.

    Rows run over ``j = 1, 0`` and ``max(2-m, 1-n) <= j <= -1``; below
    ``2-m`` the twist leaves the range where ``chi(O_{P^m}(j-2))`` vanishes.
    """
    profile = pushforward_chi(spec, m)
    expected = {1: spec.r + 1, 0: 1}
    for j in range(max(2 - m, 1 - spec.n), 0):
        expected[j] = 0
    rows = tuple(RelationRow(j, profile(j - 2) + hp_eval(spec.hilbert, j), e)
                 for j, e in sorted(expected.items(), reverse=True))
    return RelationReport(rows)


def m_zero(n: int, r: int) -> int:
    return 2 if n == 1 else min(r, 2 * n - 1)


class Level(enum.Enum):
    """Guarantee levels, strongest first."""

    IDENTITY = "identity"
    THEOREM_A = "theorem_a"
    RAN_EXTENDED = "ran_extended"
    ASSUMED = "assumed"
    UNSUPPORTED = "unsupported"

    @property
    def strength(self) -> int:
        return _ORDER.index(self)

    @property
    def guaranteed(self) -> bool:
        return self in (Level.IDENTITY, Level.THEOREM_A, Level.RAN_EXTENDED)


_ORDER = [Level.UNSUPPORTED, Level.ASSUMED, Level.RAN_EXTENDED, Level.THEOREM_A, Level.IDENTITY]


@dataclass(frozen=True)
class GuaranteeStatus:
    level: Level
    detail: str
    applicable: tuple[Level, ...] = ()

    @property
    def guaranteed(self) -> bool:
        return self.level.guaranteed

    def __str__(self) -> str:
        return self.level.value


def ran_condition(n: int, r: int, m: int) -> str | None:
    """Which fiber-length criterion rules out fibers of length >= 4, if any."""
    if not Fraction(m) > Fraction(4 * n, 3):
        return None
    if m == r - 1:
        return "m = r-1"
    if m == r - 2:
        return "m = r-2"
    if m > 2 * n - r + max(Fraction(n, 3) - 2, Fraction(0)):
        return "m > 2n-r+max(n/3-2,0)"
    return None


def projection_status(n: int, r: int, m: int, assume_fibers: bool = False) -> GuaranteeStatus:
    if m <= n or m > r:
        return GuaranteeStatus(Level.UNSUPPORTED, f"m={m} outside [{n + 1}, {r}]",
                               (Level.UNSUPPORTED,))
    found: list[tuple[Level, str]] = []
    if m == r:
        found.append((Level.IDENTITY, "identity projection"))
    m0 = m_zero(n, r)
    if m0 <= m <= r:
        found.append((Level.THEOREM_A, f"m0={m0} <= m"))
    ran = ran_condition(n, r, m)
    if ran:
        found.append((Level.RAN_EXTENDED, f"no fibers of length >= 4 ({ran}, m > 4n/3)"))
    if assume_fibers:
        found.append((Level.ASSUMED, "fiber vanishing asserted by the user"))
    if not found:
        return GuaranteeStatus(Level.UNSUPPORTED, f"m={m} < m0={m0} and no fiber-length criterion",
                               (Level.UNSUPPORTED,))
    found.sort(key=lambda lv: -lv[0].strength)
    return GuaranteeStatus(found[0][0], "; ".join(d for _, d in found),
                           tuple(lv for lv, _ in found))
