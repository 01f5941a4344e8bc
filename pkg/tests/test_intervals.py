"""Unit tests for integer roots and the rational enclosure algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from semireg.intervals import Enclosure, iroot, nth_root_enclosure, sqrt_enclosure


# ---------------------------------------------------------------- iroot


def test_iroot_small_exhaustive():
    for x in range(0, 200):
        for r in (1, 2, 3, 5, 6):
            b = iroot(x, r)
            assert b**r <= x < (b + 1) ** r


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**40), st.integers(1, 9))
def test_iroot_defining_property(x, r):
    b = iroot(x, r)
    assert b**r <= x < (b + 1) ** r


def test_iroot_rejects_bad_arguments():
    with pytest.raises(ValueError):
        iroot(-1, 2)
    with pytest.raises(ValueError):
        iroot(5, 0)


# ---------------------------------------------------------------- enclosures


@settings(max_examples=150, deadline=None)
@given(
    st.fractions(min_value=0, max_value=10**9),
    st.integers(2, 6),
    st.integers(4, 64),
)
def test_nth_root_enclosure_contains_root(x, r, bits):
    enc = nth_root_enclosure(x, r, bits)
    assert enc.lo >= 0
    assert enc.lo**r <= x <= enc.hi**r
    assert enc.width <= Fraction(1, 1 << bits)


def test_nth_root_exact_hit_is_point():
    assert sqrt_enclosure(36, 8) == Enclosure.point(6)
    assert nth_root_enclosure(Fraction(27, 8), 3, 4).is_point


def test_odd_root_of_negative_mirrors():
    enc = nth_root_enclosure(Fraction(-27), 3, 8)
    assert enc.lo <= -3 <= enc.hi
    with pytest.raises(ValueError):
        nth_root_enclosure(Fraction(-4), 2, 8)


def test_enclosure_validation_and_predicates():
    with pytest.raises(ValueError):
        Enclosure(Fraction(2), Fraction(1))
    e = Enclosure(Fraction(1, 3), Fraction(1, 2))
    assert e.contains(Fraction(2, 5))
    assert e.strictly_above(0)
    assert e.strictly_below(1)
    assert not e.strictly_above(Fraction(1, 3))


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_enclosure_arithmetic_is_sound(data):
    def enc_and_point(name):
        a = data.draw(st.fractions(min_value=-50, max_value=50), label=f"{name}_lo")
        w = data.draw(st.fractions(min_value=0, max_value=10), label=f"{name}_w")
        lam = data.draw(st.fractions(min_value=0, max_value=1), label=f"{name}_t")
        enc = Enclosure(a, a + w)
        return enc, a + lam * w

    e1, p1 = enc_and_point("x")
    e2, p2 = enc_and_point("y")
    assert (e1 + e2).contains(p1 + p2)
    assert (e1 - e2).contains(p1 - p2)
    assert (e1 * e2).contains(p1 * p2)
    assert (-e1).contains(-p1)
    assert (e1 + Fraction(3, 7)).contains(p1 + Fraction(3, 7))
    assert (Fraction(2) * e1).contains(2 * p1)
    assert (Fraction(1, 2) - e1).contains(Fraction(1, 2) - p1)


def test_reciprocal_soundness_and_zero_guard():
    e = Enclosure(Fraction(1, 4), Fraction(1, 2))
    r = e.reciprocal()
    assert r.lo == 2 and r.hi == 4
    with pytest.raises(ValueError):
        Enclosure(Fraction(-1), Fraction(1)).reciprocal()
