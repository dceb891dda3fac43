"""Splitting types of the bundle E on lines, for the unprojected case.

On a line L the bundle splits as a sum of ``O_L(s_i)`` with every
``s_i <= 0`` and ``sum s_i = c1(E)``. For a line meeting X in a scheme of
length ``l >= 2`` (and not contained in X) the type is forced: one summand
``O_L(2-l)``, the rest ``O_L(-1)`` and ``O_L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import Incompatible, ValidationError


@dataclass(frozen=True, order=True)
class SplittingType:
    components: tuple[int, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if any(a < b for a, b in zip(comps, comps[1:])):
            raise ValidationError(f"components {comps} are not nonincreasing", "components")
        if any(c > 0 for c in comps):
            raise ValidationError(f"components {comps} contain a positive twist", "components")

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def c1(self) -> int:
        return sum(self.components)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components) + ")"


def component_range(d: int, r: int, n: int) -> tuple[int, int]:
    return (r - n + 1) - d, 0


def secant_splitting(rkE: int, c1E: int, l: int, low: int | None = None) -> SplittingType:
    """Forced splitting on an ``l``-secant line.

    ``low`` optionally enforces the lower component bound as well, which
    rules out the summand ``O(2-l)`` once ``2-l < low``.
    """
    if l < 2:
        raise ValidationError(f"secant length must be >= 2, got {l}", "secant")
    n1 = 2 - l - c1E
    n2 = rkE - 1 - n1
    if n1 < 0 or n2 < 0:
        raise Incompatible(
            f"no {l}-secant line: would need {n1} copies of O(-1) and {n2} of O "
            f"(rkE={rkE}, c1E={c1E})")
    if low is not None and 2 - l < low:
        raise Incompatible(f"no {l}-secant line: summand O({2 - l}) is below the bound {low}")
    comps = sorted([2 - l] + [-1] * n1 + [0] * n2, reverse=True)
    return SplittingType(tuple(comps))


def _bounded(length: int, total: int, low: int, high: int) -> Iterator[tuple[int, ...]]:
    # nonincreasing sequences with entries in [low, high], lexicographically ascending
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(low, high + 1):
        rest = total - first
        if low * (length - 1) <= rest <= first * (length - 1):
            for tail in _bounded(length - 1, rest, low, first):
                yield (first,) + tail


def enumerate_splittings(rkE: int, c1E: int, low: int) -> list[SplittingType]:
    """All splitting types of rank ``rkE`` and degree ``c1E`` with entries in ``[low, 0]``.

    Sorted lexicographically on the component tuples.
    """
    if low > 0:
        raise ValidationError(f"lower component bound must be <= 0, got {low}", "low")
    if c1E > 0 or c1E < rkE * low:
        return []
    return list(iter_splittings(rkE, c1E, low))


def iter_splittings(rkE: int, c1E: int, low: int) -> Iterator[SplittingType]:
    """Lazy form of ``enumerate_splittings``, in the same order."""
    if c1E > 0 or c1E < rkE * low:
        return
    for comps in _bounded(rkE, c1E, low, 0):
        yield SplittingType(comps)


def max_secant_length(rkE: int, c1E: int, low: int) -> int:
    return min(2 - low, 2 - c1E)
