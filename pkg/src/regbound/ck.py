"""Rank tables of the Beilinson complex attached to a (C_k) sheaf.

A coherent sheaf F on P^R with property (C_k) has all cohomology of
``F(-k) (x) Omega^i(i)`` concentrated in degree ``k``, so every rank

    a_i = dim H^k(F(-k) (x) Omega^i(i))

is a signed Euler characteristic. The Koszul complex turns that into an
alternating sum over ``chi(F(t))``, which is all the data we need: the
property itself is a cohomological hypothesis the caller vouches for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import (
    IdentityViolation,
    IndexOutOfRange,
    NegativeRank,
    NegativeRankE,
    ValidationError,
)
from .hilbert import gen_binom
from .poly import RationalPoly


@dataclass(frozen=True)
class CkProfile:
    """Euler characteristic profile ``t -> chi(F(t))`` of a sheaf on P^R."""

    ambient: int
    k: int
    chi: RationalPoly

    def __post_init__(self):
        if self.ambient < 1:
            raise ValidationError(f"ambient dimension must be >= 1, got {self.ambient}", "ambient")
        if not 1 <= self.k <= self.ambient:
            raise ValidationError(f"need 1 <= k <= {self.ambient}, got k={self.k}", "k")
        for t in range(-self.ambient - self.k - 2, self.ambient + 3):
            if self.chi(t).denominator != 1:
                raise ValidationError(f"chi({t}) = {self.chi(t)} is not an integer", "chi")

    def __call__(self, t: int) -> int:
        cache = self.__dict__.setdefault("_values", {})
        if t not in cache:
            cache[t] = self.chi.value_int(t)
        return cache[t]

    def b(self, i: int) -> int:
        """Signed Euler characteristic ``(-1)^k chi(F(i))``, derived on demand."""
        return (-1) ** self.k * self(i)


@dataclass(frozen=True)
class Term:
    """One term of an exact sequence: ``rank`` copies of a twisted sheaf."""

    sheaf: str
    twist: int
    rank: int | None = None

    def __str__(self) -> str:
        tw = f"({self.twist})" if self.twist else ""
        if self.sheaf == "O":
            return f"{self.rank}O{tw}"
        return f"{self.sheaf}{tw}"


@dataclass(frozen=True)
class Resolution:
    """Shapes of the exact sequences extracted from the complex.

    ``extension`` is ``0 -> G(-k-1) -> E(-k) -> F(-k) -> 0``; ``kernel`` is
    ``0 -> E(-k) -> a_k O(-k) -> ... -> a_0 O -> 0``; ``ideal`` splices the
    part of the complex left of position ``k`` onto ``E(-k) -> F(-k)``.
    Terms are listed left to right.
    """

    extension: tuple[Term, ...]
    kernel: tuple[Term, ...]
    ideal: tuple[Term, ...]
    rank_g: int
    rank_f: int

    @staticmethod
    def render(terms: tuple[Term, ...]) -> str:
        return "0 -> " + " -> ".join(str(t) for t in terms) + " -> 0"

    def lines(self) -> list[str]:
        return [self.render(self.extension), self.render(self.kernel), self.render(self.ideal)]


@dataclass(frozen=True)
class RankTable:
    ambient: int
    k: int
    ranks: tuple[int, ...]
    rkE: int
    c1E: int
    bound: int
    resolution: Resolution = field(repr=False)


def rank_entry(p: CkProfile, i: int) -> int:
    """``a_i = (-1)^k sum_{j<=i} (-1)^j binom(R+1, i-j) chi(F(j-k))``; may be negative."""
    if not 0 <= i <= p.ambient:
        raise IndexOutOfRange(f"rank index {i} outside [0, {p.ambient}]")
    R, k = p.ambient, p.k
    s = sum((-1) ** j * gen_binom(R + 1, i - j) * p(j - k) for j in range(i + 1))
    return (-1) ** k * s


def _rank_of(chi: RationalPoly, R: int) -> int:
    # generic rank = R! * [t^R] chi
    if chi.degree < R:
        return 0
    r = chi.coeffs[R] * factorial(R)
    if r.denominator != 1:
        raise ValidationError(f"profile has non-integral generic rank {r}", "chi")
    return r.numerator


def c1_closed_form(p: CkProfile) -> int:
    """``-c1(E)`` as ``sum_j (-1)^j binom(R-1, k-1-j) b_{j-k}``."""
    R, k = p.ambient, p.k
    return sum((-1) ** j * gen_binom(R - 1, k - 1 - j) * p.b(j - k) for j in range(k))


def rank_table(p: CkProfile) -> RankTable:
    R, k = p.ambient, p.k
    ranks = tuple(rank_entry(p, i) for i in range(R + 1))
    for i, a in enumerate(ranks):
        if a < 0:
            raise NegativeRank(i, a)
    rkE = sum((-1) ** (k - i) * ranks[i] for i in range(k + 1))
    if rkE < 0:
        raise NegativeRankE(rkE)
    c1E = sum((-1) ** i * i * ranks[k - i] for i in range(1, k + 1))
    bound = -c1E
    closed = c1_closed_form(p)
    if closed != bound:
        raise IdentityViolation(
            f"-c1(E) from ranks is {bound} but the closed form gives {closed}")

    rank_g = sum((-1) ** (i - k - 1) * ranks[i] for i in range(k + 1, R + 1))
    extension = (Term("G", -k - 1), Term("E", -k), Term("F", -k))
    kernel = (Term("E", -k),) + tuple(Term("O", -i, ranks[i]) for i in range(k, -1, -1))
    ideal = tuple(Term("O", -i, ranks[i]) for i in range(R, k, -1)) + (Term("E", -k), Term("F", -k))
    resolution = Resolution(extension, kernel, ideal, rank_g, _rank_of(p.chi, R))
    return RankTable(R, k, ranks, rkE, c1E, bound, resolution)


def perturb_profile(p: CkProfile, t: int, delta: int = 1) -> CkProfile:
    """Add ``delta`` to ``chi(F(t))`` leaving the other consumed twists alone.

    The twists read by the rank table are ``-k..R-k``; the correction is
    ``delta`` times the Lagrange basis polynomial of ``t`` on that window,
    which stays integer valued. Used to check that corrupted data is caught.
    """
    window = range(-p.k, p.ambient - p.k + 1)
    if t not in window:
        raise IndexOutOfRange(f"twist {t} outside the consumed window [{window[0]}, {window[-1]}]")
    bump = RationalPoly([delta])
    for s in window:
        if s != t:
            bump = bump * RationalPoly([Fraction(-s, t - s), Fraction(1, t - s)])
    return CkProfile(p.ambient, p.k, p.chi + bump)


def beilinson_euler_defect(p: CkProfile, ranks: tuple[int, ...], t: int) -> int:
    """``sum_i (-1)^i a_i chi(O(t-i)) - (-1)^k chi(F(t-k))`` on P^R; zero when consistent."""
    R = p.ambient
    lhs = sum((-1) ** i * a * gen_binom(t - i + R, R) for i, a in enumerate(ranks))
    return lhs - (-1) ** p.k * p(t - p.k)


@dataclass(frozen=True)
class CoeffIdentityReport:
    passed: bool
    checked: int
    counterexample: tuple[int, int, int, int] | None = None  # (r, l, series, closed form)


def _truncated_product(f: list[int], g: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, a in enumerate(f[: n + 1]):
        if a:
            for j, b in enumerate(g[: n + 1 - i]):
                out[i + j] += a * b
    return out


def verify_coeff_identity(r_max: int, l_max: int) -> CoeffIdentityReport:
    """Check ``[t^l] f(t) (1+t)^(r+1) == -binom(r-1, l-1)`` by brute force.

    ``f(t) = sum_i (-1)^i i t^i`` is the expansion of ``-t/(1+t)^2``. The
    left side is formed by truncated series multiplication, not by the
    closed form it is compared against.
    """
    f = [(-1) ** i * i for i in range(l_max + 2)]
    checked = 0
    for r in range(1, r_max + 1):
        g = [1]
        for _ in range(r + 1):
            g = [a + b for a, b in zip(g + [0], [0] + g)]
        prod = _truncated_product(f, g, l_max + 1)
        for l in range(1, l_max + 1):
            rhs = -gen_binom(r - 1, l - 1)
            checked += 1
            if prod[l] != rhs:
                return CoeffIdentityReport(False, checked, (r, l, prod[l], rhs))
    return CoeffIdentityReport(True, checked)
