from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from looijenga.geometry import (
    CurveClass,
    Family,
    InvalidClass,
    Kind,
    NotInImage,
    boundary_degrees,
    class_of_winding,
    classes_up_to,
    coprime_pairs,
    is_zero_region,
    validate,
    winding_of,
)


def test_family_checks():
    assert Family("y3", 1, 2).l == 3
    assert Family(Kind.P1AB, 2, 3).l == 2
    with pytest.raises(ValueError):
        Family("p1ab", 2, 4)
    with pytest.raises(ValueError):
        Family("y2", 0, 1)
    with pytest.raises(ValueError):
        Family("y4", 1, 1)


def test_framings():
    assert Family("p1ab", 2, 3).framings() == [Fraction(3, 2)]
    assert Family("y2", 2, 3).framings() == [Fraction(1, 2)]
    assert Family("y3", 2, 3).framings() == [Fraction(-1, 3), 0]
    assert Family("y3", 2, 3).isotropy() == [3, 1]
    assert Family("p1ab", 2, 3).isotropy() == [2]


def test_boundary_examples():
    assert boundary_degrees(Family("p1ab", 2, 3), 1) == (1, 5)
    assert boundary_degrees(Family("y2", 1, 1), (1, 1)) == (1, 2)
    assert boundary_degrees(Family("y3", 1, 2), (1, 0)) == (1, 1, 1)


def test_winding_examples():
    assert winding_of(Family("p1ab", 3, 2), 2) == (6,)
    assert winding_of(Family("y3", 1, 2), (1, 1)) == (2, 2)
    with pytest.raises(NotInImage):
        class_of_winding(Family("p1ab", 3, 2), 4)


def test_invalid_classes():
    with pytest.raises(InvalidClass):
        validate(Family("p1ab", 1, 1), 0)
    with pytest.raises(InvalidClass):
        validate(Family("y2", 1, 1), (0, 0))
    with pytest.raises(InvalidClass):
        validate(Family("y3", 1, 1), (1, 2))
    with pytest.raises(InvalidClass):
        # d . D_2 = (b-1) d0 + d1 = 0
        validate(Family("y3", 1, 1), (1, 0))
    with pytest.raises(InvalidClass):
        validate(Family("y2", 1, 1), (1, 1, 1))


def test_zero_region():
    fam = Family("y2", 1, 2)
    assert is_zero_region(fam, (1, 3))
    assert validate(fam, (1, 3)) == CurveClass((1, 3))
    assert not is_zero_region(fam, (3, 1))
    assert not is_zero_region(Family("y3", 1, 2), (1, 1))


def test_coprime_pairs():
    assert coprime_pairs(3) == [(1, 1), (1, 2), (1, 3), (2, 3)]
    assert len(coprime_pairs(5, ordered=False)) == 19
    assert len(coprime_pairs(5)) == 10


def test_classes_up_to():
    assert len(classes_up_to(Family("p1ab", 1, 1), 4)) == 4
    assert len(classes_up_to(Family("y2", 1, 2), 3)) == 9
    assert len(classes_up_to(Family("y2", 1, 2), 3, include_zero_region=True)) == 12
    # b = 1 removes the (d0, 0) classes of Y3
    assert len(classes_up_to(Family("y3", 2, 1), 3)) == 6


kinds = st.sampled_from(list(Kind))
pairs = st.sampled_from(coprime_pairs(6, ordered=False))


@given(kinds, pairs, st.integers(1, 6), st.integers(0, 6))
def test_winding_round_trip(kind, ab, d0, d1):
    fam = Family(kind, *ab)
    d = (d0,) if kind is Kind.P1AB else (d0, d1)
    try:
        c = validate(fam, d)
    except InvalidClass:
        return
    assert class_of_winding(fam, winding_of(fam, c)) == c
    assert all(x >= 1 for x in boundary_degrees(fam, c))


@given(pairs, st.integers(1, 30))
def test_windings_off_lattice(ab, j):
    fam = Family("p1ab", *ab)
    if j % fam.a:
        with pytest.raises(NotInImage):
            class_of_winding(fam, j)
    else:
        assert winding_of(fam, class_of_winding(fam, j)) == (j,)
