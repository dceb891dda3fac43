import pytest

from oracles import theorem_a_oracle
from regbound.bounds import (
    bound_table,
    closed_form_bound,
    comparison_bounds,
    cubic_adjustment,
    degree_coefficient,
    machinery_bound,
    theorem_a_bound,
)
from regbound.catalog import CATALOG
from regbound.errors import InconsistentProfile, MOutOfRange, UnknownFamily
from regbound.hilbert import HilbertPoly
from regbound.projection import Curve, Level, Scroll, Surface, VarietySpec, curve, scroll

import sweep


def test_theorem_a_examples(elliptic_quartic, veronese):
    assert theorem_a_bound(elliptic_quartic, 2) == 3
    assert theorem_a_bound(elliptic_quartic, 3) == 4
    assert theorem_a_bound(veronese, 3) == 2
    for r in range(2, 9):
        rnc = curve(r, 0, r)
        assert {theorem_a_bound(rnc, m) for m in range(2, r + 1)} == {2}


def test_theorem_a_matches_sympy_oracle():
    for spec in sweep.all_specs()[::31]:
        for m in sweep.targets(spec):
            assert theorem_a_bound(spec, m) == theorem_a_oracle(
                list(spec.hilbert.coeffs), spec.n, spec.r, m)


def test_machinery_examples(elliptic_quartic, twisted_cubic):
    assert machinery_bound(elliptic_quartic, 2) == 3
    assert machinery_bound(elliptic_quartic, 3) == 4
    assert machinery_bound(twisted_cubic, 3) == 2


def test_out_of_range(elliptic_quartic):
    with pytest.raises(MOutOfRange):
        theorem_a_bound(elliptic_quartic, 1)
    with pytest.raises(MOutOfRange):
        machinery_bound(elliptic_quartic, 4)


def test_machinery_flags_degenerate_input():
    line = VarietySpec("line", 1, 3, HilbertPoly(1, (1, 1)))
    with pytest.raises(InconsistentProfile):
        machinery_bound(line, 3)


def test_closed_form_examples():
    assert closed_form_bound(Curve(4, 1), 3, 2) == 3
    assert {closed_form_bound(Scroll(2, 4, 0), 5, m) for m in (3, 4, 5)} == {2}
    assert closed_form_bound(Surface(4, 0, 1), 5, 4) == 2
    with pytest.raises(UnknownFamily):
        closed_form_bound(None, 3, 2)


def test_surface_chi_sign(veronese):
    # expanding binom(m-1,2) - binom(m-1,1) + binom(m-1,0) gives +(m-2)(m-3)/2
    d, pi, chi, r, m = 4, 0, 1, 5, 4
    negated = d + m * (m - 3) // 2 * (pi - 1) - (m - 2) * (m - 3) // 2 * chi - (r - m)
    assert negated == 0
    assert closed_form_bound(Surface(d, pi, chi), r, m) == theorem_a_bound(veronese, m) == 2


def test_closed_forms_match_theorem_a_on_sweep():
    for spec in sweep.all_specs():
        for m in sweep.targets(spec):
            assert closed_form_bound(spec.family, spec.r, m) == theorem_a_bound(spec, m)


def test_closed_forms_recover_eisenbud_goto():
    for d in range(2, 11):
        for g in range(0, 6):
            for r in range(2, 13):
                assert closed_form_bound(Curve(d, g), r, 2) == d + 1 - (r - 1)
                for chi in range(-3, 4):
                    if r >= 3:
                        assert closed_form_bound(Surface(d, g, chi), r, 3) == d + 1 - (r - 2)
                for n in range(1, 5):
                    if r >= n + 1:
                        assert closed_form_bound(Scroll(n, d, g), r, n + 1) == d + 1 - (r - n)


@pytest.mark.parametrize("name, expected", [
    ("elliptic-quartic", (3, 6, 7)),
    ("veronese-surface", (2, 8, 10)),
    ("twisted-cubic", (2, 4, 5)),
])
def test_comparison_examples(name, expected):
    c = comparison_bounds(CATALOG[name].make())
    assert (c.eisenbud_goto, c.mumford, c.bel) == expected


def test_bound_table_examples(elliptic_quartic, veronese):
    rep = bound_table(elliptic_quartic)
    assert [(row.m, row.bound, row.status.level) for row in rep.rows] == [
        (2, 3, Level.THEOREM_A), (3, 4, Level.IDENTITY)]
    assert rep.best == 3
    rep = bound_table(veronese)
    assert [(row.m, row.bound) for row in rep.rows] == [(3, 2), (4, 2), (5, 2)]
    assert rep.best == 2
    rns = scroll(2, 4, 0, 5)
    rep = bound_table(rns)
    assert {row.bound for row in rep.rows if row.status.guaranteed} == {2}
    assert rep.best == 2 == rep.comparisons.eisenbud_goto


def test_bound_table_rows_carry_both_routes():
    for spec in sweep.all_specs()[::11]:
        rep = bound_table(spec)
        for row in rep.rows:
            assert row.error is None, row
            assert row.machinery == row.bound
        guaranteed = [row.bound for row in rep.rows if row.status.guaranteed]
        if guaranteed:
            assert rep.best == min(guaranteed)


def test_bound_table_row_diagnostics():
    line = VarietySpec("line", 1, 3, HilbertPoly(1, (1, 1)))
    rep = bound_table(line)
    assert all(row.error_kind == "InconsistentProfile" for row in rep.rows)
    assert rep.best is None
    assert [row.m for row in bound_table(scroll(2, 4, 0, 5), [5, 3, 5]).rows] == [3, 5]


def test_unsupported_rows_still_reported():
    spec = scroll(4, 6, 0, 9)
    rep = bound_table(spec)
    row5 = rep.rows[0]
    assert row5.m == 5 and not row5.status.guaranteed
    assert row5.bound == theorem_a_bound(spec, 5)


def test_degree_coefficient_is_one():
    for spec in sweep.all_specs()[::3]:
        for m in sweep.targets(spec):
            assert degree_coefficient(spec, m) == 1


@pytest.mark.parametrize("args, expected", [
    ((3, 5, 2, 0, 1), -2), ((5, 7, 7, 0, 0), 0), ((4, 0, 0, 1, 1), 6)])
def test_cubic_adjustment(args, expected):
    assert cubic_adjustment(*args) == expected
