"""Tests for certified root enclosures and Golub-Kahan eigenvalue counting."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semireg.exact import SystemShape, degree_of_regularity_exact
from semireg.krawtchouk import KrawtchoukParams, eval_exact
from semireg.roots import (
    GolubKahanSpectrum,
    RootInterval,
    dreg_via_eigenvalues,
    dreg_via_roots,
    eigenvalue_count_below,
    largest_eigenvalue,
    smallest_root,
    smallest_root_chain,
)

WIDTH = Fraction(1, 10**6)


# ---------------------------------------------------------------- roots


def test_smallest_root_k1_is_exact_half():
    ri = smallest_root(36, 1, WIDTH)
    assert ri.is_exact
    assert ri.lo == 18


def test_smallest_root_figure_values():
    r3 = smallest_root(36, 3, Fraction(1, 100))
    assert Fraction("12.84") < r3.lo and r3.hi < Fraction("12.86")
    r6 = smallest_root(36, 6, Fraction(1, 100))
    assert Fraction("8.44") < r6.lo and r6.hi < Fraction("8.46")


def test_smallest_root_d3_closed_form():
    # K_3^36 roots solve (36 - 2t)^2 = 106: smallest root (36 - sqrt(106)) / 2
    ri = smallest_root(36, 3, Fraction(1, 10**9))
    target = (36 - math.sqrt(106)) / 2
    assert abs(float(ri.mid) - target) < 1e-8


def test_smallest_root_width_and_signs():
    for N, k in [(20, 2), (36, 5), (47, 11), (61, 30)]:
        ri = smallest_root(N, k, WIDTH)
        assert ri.width <= WIDTH
        if not ri.is_exact:
            assert eval_exact(KrawtchoukParams(N, k), ri.lo) > 0
            assert eval_exact(KrawtchoukParams(N, k), ri.hi) < 0
        else:
            assert eval_exact(KrawtchoukParams(N, k), ri.lo) == 0


def test_smallest_root_validates_k():
    with pytest.raises(ValueError):
        smallest_root(36, 0)
    with pytest.raises(ValueError):
        smallest_root(36, 37)


def test_root_interval_invariants():
    with pytest.raises(ValueError):
        RootInterval(KrawtchoukParams(36, 2), Fraction(3), Fraction(2))
    with pytest.raises(ValueError):
        RootInterval(KrawtchoukParams(36, 2), Fraction(0), Fraction(2))


def test_chain_is_strictly_decreasing():
    for N in (12, 36, 53):
        chain = smallest_root_chain(N, N, Fraction(1, 4096))
        for prev, cur in zip(chain, chain[1:]):
            assert cur.hi < prev.lo or (cur.is_exact and prev.is_exact and cur.lo < prev.lo)


def test_dreg_via_roots_examples():
    assert dreg_via_roots(SystemShape(24, 12)) == 4
    assert dreg_via_roots(SystemShape(2, 1)) == degree_of_regularity_exact(SystemShape(2, 1))
    assert dreg_via_roots(SystemShape(512, 256), ceiling=1024) == 29


def test_dreg_via_roots_respects_ceiling():
    with pytest.raises(ValueError):
        dreg_via_roots(SystemShape(512, 256))  # N = 768 > default 512


# ---------------------------------------------------------------- eigenvalues


def test_largest_eigenvalue_trivial_sizes():
    assert largest_eigenvalue(36, 1, WIDTH).is_point
    assert largest_eigenvalue(36, 1, WIDTH).lo == 0
    e2 = largest_eigenvalue(36, 2, WIDTH)
    assert e2.lo <= 6 <= e2.hi  # eigenvalues of the 2x2 matrix are +-6
    e2_16 = largest_eigenvalue(16, 2, WIDTH)
    assert e2_16.contains(4)


def test_largest_eigenvalue_hand_oracles():
    # k = 3: lambda^3 - 106 lambda = 0 -> sqrt(106)
    e3 = largest_eigenvalue(36, 3, Fraction(1, 10**6))
    assert abs(float(e3.mid) - math.sqrt(106)) < 1e-5
    # k = 4: lambda^4 - 208 lambda^2 + 3672 = 0 -> sqrt((208 + sqrt(28576)) / 2)
    e4 = largest_eigenvalue(36, 4, Fraction(1, 10**6))
    target = math.sqrt((208 + math.sqrt(208**2 - 4 * 3672)) / 2)
    assert abs(float(e4.mid) - target) < 1e-5


def test_eigenvalue_width_honored():
    for N, k in [(36, 5), (61, 13), (100, 40)]:
        enc = largest_eigenvalue(N, k, WIDTH)
        assert enc.width <= WIDTH


def _dense_matrix(N, k):
    a = np.zeros((k, k))
    for i in range(k - 1):
        b = math.sqrt((i + 1) * (N - i))
        a[i, i + 1] = a[i + 1, i] = b
    return a


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 24), st.data())
def test_sturm_count_matches_numpy(N, data):
    k = data.draw(st.integers(1, min(N, 9)))
    num = data.draw(st.integers(-N * 8, N * 8))
    x = Fraction(num, 8)
    eigs = np.linalg.eigvalsh(_dense_matrix(N, k))
    if min(abs(float(x) - ev) for ev in eigs) < 1e-6:
        return  # too close to an eigenvalue for the float oracle to arbitrate
    assert eigenvalue_count_below(N, k, x) == int((eigs < float(x)).sum())


def test_count_below_at_exact_eigenvalue_is_strict():
    # 2x2 with N = 16 has eigenvalues -4, 4: strictly-below counts at the
    # eigenvalues themselves must exclude them.
    assert eigenvalue_count_below(16, 2, 4) == 1
    assert eigenvalue_count_below(16, 2, -4) == 0
    assert eigenvalue_count_below(16, 2, 0) == 1


def test_golub_kahan_spectrum_record():
    gk = GolubKahanSpectrum.compute(36, 4, WIDTH)
    assert gk.squared_offdiagonals == (36, 70, 102)
    lam = gk.lambda_max
    d4 = smallest_root(36, 4, WIDTH)
    # duality lambda = N - 2 d_k(1) within combined widths
    assert abs(float((36 - 2 * d4.mid) - lam.mid)) <= float(2 * d4.width + lam.width)


def test_dreg_via_eigenvalues_examples():
    assert dreg_via_eigenvalues(SystemShape(24, 12)) == 4
    s = SystemShape(2, 1)
    assert dreg_via_eigenvalues(s) == degree_of_regularity_exact(s)
    assert dreg_via_eigenvalues(SystemShape(356, 256)) == 48  # N = 456 within ceiling


def test_dreg_via_eigenvalues_respects_ceiling():
    with pytest.raises(ValueError):
        dreg_via_eigenvalues(SystemShape(512, 256))  # N = 768 > default 512


def test_tie_shapes_where_threshold_is_hit_exactly():
    # (3, 2) has K_2^4(1) = 0: the smallest root sits exactly on t and the
    # top eigenvalue exactly on n, so both strict tests must exclude k = 2.
    for m, n in [(3, 2), (6, 3), (5, 4), (10, 4)]:
        s = SystemShape(m, n)
        d = degree_of_regularity_exact(s)
        assert eval_exact(KrawtchoukParams(s.N, d), s.t) == 0
        assert dreg_via_roots(s) == d
        assert dreg_via_eigenvalues(s) == d
