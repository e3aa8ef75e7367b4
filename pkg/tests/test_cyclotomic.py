from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from theta_harmonics.cyclotomic import (
    CUBE_ROOTS,
    Cyclotomic,
    NINTH_ROOTS,
    ONE,
    ZERO,
    ZETA,
    ZETA3,
    zeta_pow,
)
from theta_harmonics.errors import NotRationalInteger

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
cyclotomics = st.builds(
    Cyclotomic.from_rationals, st.tuples(*([rationals] * 6))
)


def test_cube_root_products():
    w, w2 = ZETA3, zeta_pow(6)
    assert (ONE + w) * (ONE + w2) == ONE
    assert w * w == Cyclotomic.from_rationals((-1, 0, 0, -1, 0, 0))
    a = ONE + 2 * w
    assert a * a.conj() == Cyclotomic.integer(3)


def test_cube_root_relation():
    assert ZETA3 * ZETA3 + ZETA3 + ONE == ZERO
    assert ZETA ** 9 == ONE
    assert ZETA ** 3 == ZETA3


def test_as_integer():
    assert Cyclotomic.integer(3).as_integer() == 3
    assert (ZETA3 + zeta_pow(6) + ONE).as_integer() == 0
    with pytest.raises(NotRationalInteger):
        (ONE + ZETA).as_integer()
    with pytest.raises(NotRationalInteger):
        Cyclotomic.rational(Fraction(1, 2)).as_integer()


def test_ninth_roots_distinct_and_cyclic():
    assert len(set(NINTH_ROOTS)) == 9
    for k, r in enumerate(NINTH_ROOTS):
        assert ZETA ** k == r, k
        assert r ** 9 == ONE
    assert set(CUBE_ROOTS) == {r for r in NINTH_ROOTS if r ** 3 == ONE}


@given(cyclotomics, cyclotomics, cyclotomics)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(cyclotomics, cyclotomics)
def test_conjugation_is_an_automorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@given(cyclotomics)
def test_norm_is_fixed_by_conjugation(a):
    nrm = a * a.conj()
    assert nrm.conj() == nrm


@given(cyclotomics)
def test_scalar_division_roundtrip(a):
    assert (a / 7) * 7 == a
    assert (a / Fraction(3, 2)) * Fraction(3, 2) == a


def test_representation_is_canonical():
    # same value built with unreduced data compares equal
    a = Cyclotomic((2, 4, 0, 0, 0, 0), 2)
    b = Cyclotomic((1, 2, 0, 0, 0, 0), 1)
    assert a == b and hash(a) == hash(b)
    assert Cyclotomic((1, 0, 0, 0, 0, 0), -1) == Cyclotomic.integer(-1)


def test_zeta_pow_reduction():
    # z^6 = -1 - z^3, z^7 = -z - z^4, z^8 = -z^2 - z^5
    assert zeta_pow(6) == Cyclotomic((-1, 0, 0, -1, 0, 0))
    assert zeta_pow(7) == Cyclotomic((0, -1, 0, 0, -1, 0))
    assert zeta_pow(8) == Cyclotomic((0, 0, -1, 0, 0, -1))
    assert zeta_pow(-1) == zeta_pow(8)
