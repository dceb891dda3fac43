from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import falling_binom
from regbound.errors import (
    DegreeNonPositive,
    DimensionZero,
    DuplicateAbscissa,
    NonIntegralCoefficients,
    ValidationError,
)
from regbound.hilbert import HilbertPoly, gen_binom, hp_eval, hp_from_values, hp_hyperplane_section
from regbound.catalog import catalog_instances


@pytest.mark.parametrize("x, j, expected", [(5, 2, 10), (-1, 2, 1), (-4, 3, -20), (7, -1, 0)])
def test_gen_binom_examples(x, j, expected):
    assert gen_binom(x, j) == expected


def test_gen_binom_matches_falling_factorial():
    for x in range(-30, 31):
        for j in range(0, 31):
            assert gen_binom(x, j) == falling_binom(x, j), (x, j)


def test_hp_eval_examples():
    assert hp_eval(HilbertPoly(1, (0, 4)), 1) == 4
    veronese = HilbertPoly(2, (1, 1, 4))
    assert hp_eval(veronese, 1) == 6
    assert hp_eval(veronese, -1) == 0
    # 2z^2 + 3z + 1
    assert all(hp_eval(veronese, z) == 2 * z * z + 3 * z + 1 for z in range(-10, 11))


def test_from_values_examples():
    assert hp_from_values(1, [(0, 0), (1, 4)]).coeffs == (0, 4)
    assert hp_from_values(2, [(-1, 0), (0, 1), (1, 6)]).coeffs == (1, 1, 4)
    assert hp_eval(hp_from_values(1, [(0, 0), (1, 3)]), 2) == 6


def test_from_values_errors():
    with pytest.raises(DuplicateAbscissa):
        hp_from_values(1, [(0, 0), (0, 4)])
    with pytest.raises(NonIntegralCoefficients):
        hp_from_values(1, [(0, 0), (2, 1)])
    with pytest.raises(DegreeNonPositive):
        hp_from_values(1, [(0, 3), (1, 3)])
    with pytest.raises(ValidationError):
        hp_from_values(2, [(0, 0), (1, 4)])


def test_invalid_polys_rejected():
    with pytest.raises(ValidationError):
        HilbertPoly(2, (1, 4))
    with pytest.raises(DegreeNonPositive):
        HilbertPoly(1, (1, 0))
    with pytest.raises(ValidationError):
        HilbertPoly(1, (1, Fraction(1, 2)))


def test_hyperplane_section_examples():
    g = 2
    scroll = HilbertPoly(2, (1 - g, 1 - g, 7))
    assert hp_hyperplane_section(scroll).coeffs == (1 - g, 7)
    assert hp_hyperplane_section(HilbertPoly(2, (1, 1, 4))).coeffs == (1, 4)
    with pytest.raises(DimensionZero):
        hp_hyperplane_section(HilbertPoly(0, (5,)))


hilbert_polys = st.integers(0, 5).flatmap(
    lambda n: st.tuples(st.lists(st.integers(-50, 50), min_size=n, max_size=n),
                        st.integers(1, 60)).map(lambda t: HilbertPoly(n, tuple(t[0]) + (t[1],))))


@given(hilbert_polys)
def test_section_is_first_difference(H):
    if H.dim == 0:
        return
    sec = hp_hyperplane_section(H)
    for z in range(-5, 6):
        assert hp_eval(sec, z) == hp_eval(H, z) - hp_eval(H, z - 1)


@given(hilbert_polys)
def test_iterated_section_gives_degree(H):
    for _ in range(H.dim):
        H = hp_hyperplane_section(H)
    assert H.dim == 0 and H.coeffs == (H.degree,)


@given(hilbert_polys, st.lists(st.integers(-40, 40), min_size=6, max_size=6, unique=True))
def test_interpolation_roundtrip(H, zs):
    pts = [(z, hp_eval(H, z)) for z in zs[: H.dim + 1]]
    assert hp_from_values(H.dim, pts) == H


@given(hilbert_polys)
def test_to_poly_agrees_with_eval(H):
    p = H.to_poly(shift=2)
    for z in range(-6, 7):
        assert p(z) == hp_eval(H, z + 2)


def test_catalog_values_are_integers():
    for _, spec in catalog_instances():
        for z in range(-20, 21):
            assert isinstance(hp_eval(spec.hilbert, z), int)
