"""Regularity bounds for smooth projective varieties.

Two independent routes produce the same integer for every projection target
``m``: the closed sum over ``chi(O_X(k+1-n))`` (``theorem_a_bound``) and the
Beilinson rank table of the projected ideal sheaf (``machinery_bound``).
``bound_table`` computes both and refuses to report a number on which they
disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ck import RankTable, rank_table
from .errors import (
    IdentityViolation,
    InconsistentProfile,
    MathematicalInconsistency,
    MOutOfRange,
    NegativeRank,
    NegativeRankE,
    UnknownFamily,
)
from .hilbert import HilbertPoly, gen_binom, hp_eval
from .projection import (
    Curve,
    GuaranteeStatus,
    Scroll,
    Surface,
    VarietySpec,
    projection_status,
    pushforward_chi,
)


def _check_m(spec: VarietySpec, m: int) -> None:
    if not spec.n + 1 <= m <= spec.r:
        raise MOutOfRange(f"m={m} outside [{spec.n + 1}, {spec.r}]")


def theorem_a_bound(spec: VarietySpec, m: int) -> int:
    """``-(r-m) + sum_k (-1)^(n+k) binom(m-1, n-k) chi(O_X(k+1-n))``."""
    _check_m(spec, m)
    n = spec.n
    total = sum((-1) ** (n + k) * gen_binom(m - 1, n - k) * hp_eval(spec.hilbert, k + 1 - n)
                for k in range(n + 1))
    return total - (spec.r - m)


def degree_coefficient(spec: VarietySpec, m: int) -> int:
    """Change in ``theorem_a_bound`` when the degree ``c_n`` grows by one."""
    coeffs = spec.hilbert.coeffs[:-1] + (spec.d + 1,)
    bumped = VarietySpec(spec.name, spec.n, spec.r, HilbertPoly(spec.n, coeffs))
    return theorem_a_bound(bumped, m) - theorem_a_bound(spec, m)


def machinery_rank_table(spec: VarietySpec, m: int) -> RankTable:
    _check_m(spec, m)
    try:
        return rank_table(pushforward_chi(spec, m))
    except (NegativeRank, NegativeRankE) as exc:
        raise InconsistentProfile(f"{spec.name}, m={m}: {exc}") from exc


def machinery_bound(spec: VarietySpec, m: int) -> int:
    """``-c1(E) + 2`` for the bundle of the projected ``I_X(2)``."""
    return machinery_rank_table(spec, m).bound + 2


def closed_form_bound(family, r: int, m: int) -> int:
    """Family closed forms for curves, surfaces and scrolls over a curve."""
    if isinstance(family, Curve):
        return family.d + 2 + (m - 2) * family.g - r
    if isinstance(family, Surface):
        # sign of the chi term is fixed by agreement with theorem_a_bound
        return (family.d + m * (m - 3) // 2 * (family.pi - 1)
                + (m - 2) * (m - 3) // 2 * family.chi - (r - m))
    if isinstance(family, Scroll):
        return family.d + (m - 1 - family.n) * family.g + family.n - r + 1
    raise UnknownFamily(f"no closed form for family {family!r}")


@dataclass(frozen=True)
class Comparisons:
    eisenbud_goto: int
    mumford: int
    bel: int


def comparison_bounds(spec: VarietySpec) -> Comparisons:
    n, r, d = spec.n, spec.r, spec.d
    return Comparisons(
        eisenbud_goto=d + 1 - (r - n),
        mumford=(n + 1) * (d - 2) + 2,
        bel=min(n + 1, r - n) * (d - 1) + 1,
    )


@dataclass(frozen=True)
class BoundRow:
    m: int
    status: GuaranteeStatus
    bound: int
    provenance: str = "theorem-a"
    machinery: int | None = None
    closed_form: int | None = None
    ranks: RankTable | None = field(default=None, repr=False)
    error: str | None = None
    error_kind: str | None = None

    @property
    def rank_summary(self) -> str:
        if self.ranks is None:
            return ""
        return f"a={list(self.ranks.ranks)} rkE={self.ranks.rkE} c1E={self.ranks.c1E}"


@dataclass(frozen=True)
class BoundReport:
    spec: VarietySpec
    rows: tuple[BoundRow, ...]
    comparisons: Comparisons
    best: int | None

    @property
    def inconsistent_rows(self) -> tuple[BoundRow, ...]:
        return tuple(row for row in self.rows if row.error is not None)


def bound_row(spec: VarietySpec, m: int, assume_fibers: bool = False) -> BoundRow:
    status = projection_status(spec.n, spec.r, m, assume_fibers)
    bound = theorem_a_bound(spec, m)
    closed = closed_form_bound(spec.family, spec.r, m) if spec.family is not None else None
    try:
        table = machinery_rank_table(spec, m)
    except MathematicalInconsistency as exc:
        return BoundRow(m, status, bound, closed_form=closed, error=str(exc),
                        error_kind=type(exc).__name__)
    machinery = table.bound + 2
    error = kind = None
    if machinery != bound:
        error = f"route mismatch: theorem-a {bound} vs beilinson-c1 {machinery}"
        kind = IdentityViolation.__name__
    elif closed is not None and closed != bound:
        error = f"closed form {closed} disagrees with theorem-a {bound}"
        kind = IdentityViolation.__name__
    elif degree_coefficient(spec, m) != 1:
        error = f"degree enters the bound with coefficient {degree_coefficient(spec, m)}, not 1"
        kind = IdentityViolation.__name__
    return BoundRow(m, status, bound, machinery=machinery, closed_form=closed, ranks=table,
                    error=error, error_kind=kind)


def bound_table(spec: VarietySpec, m_list=None, assume_fibers: bool = False) -> BoundReport:
    """All rows ``m = n+1..r`` (or ``m_list``) with statuses and cross-checks.

    Row failures are kept as diagnostics on the row; ``best`` only looks at
    rows whose status is a guarantee and whose routes agree.
    """
    ms = sorted(set(m_list)) if m_list is not None else range(spec.n + 1, spec.r + 1)
    rows = tuple(bound_row(spec, m, assume_fibers) for m in ms)
    usable = [row.bound for row in rows if row.error is None and row.status.guaranteed]
    return BoundReport(spec, rows, comparison_bounds(spec), min(usable) if usable else None)


def cubic_adjustment(m: int, rkE: int, h0_I2: int, h1_I1: int, h1_O: int) -> int:
    """Change of the bound when working with ``I_X(3)`` instead of ``I_X(2)``.

    The cohomology dimensions are supplied by the caller; no guarantee
    status is attached.
    """
    return -rkE + h0_I2 + gen_binom(m - 1, 1) * h1_I1 + gen_binom(m - 1, 2) * h1_O
