"""Certified localization of smallest Krawtchouk roots and matching eigenvalues.

Two independent re-derivations of the degree of regularity live here:

* via roots: d_reg = 1 + max{k : d_k(1) > m-n}, where d_k(1) is the smallest
  root of K_k^N.  Roots are enclosed by exact-sign bisection inside brackets
  supplied by interlacing (d_k(1) < d_{k-1}(1) < d_k(2)).
* via eigenvalues: d_reg = 1 + max{k : lambda_k < n}, where lambda_k is the
  largest eigenvalue of the k x k Golub-Kahan matrix with zero diagonal and
  off-diagonal entries sqrt((i+1)(N-i)).  Eigenvalues are counted by Sturm
  sequences of the leading principal minors.

All bisection points are dyadic rationals, so every sign and every count is
an exact integer computation; no comparison is ever made in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import SystemShape
from .intervals import Enclosure
from .krawtchouk import KrawtchoukParams, eval_integer

__all__ = [
    "DEFAULT_WIDTH",
    "CROSS_VALIDATION_CEILING",
    "RootInterval",
    "GolubKahanSpectrum",
    "smallest_root",
    "smallest_root_chain",
    "dreg_via_roots",
    "largest_eigenvalue",
    "eigenvalue_count_below",
    "dreg_via_eigenvalues",
]

DEFAULT_WIDTH = Fraction(1, 1 << 20)

# The root/eigenvalue paths exist to validate the coefficient stream, not to
# replace it; refuse accidental huge sweeps beyond this family size.
CROSS_VALIDATION_CEILING = 512


def _sign_at_dyadic(N: int, k: int, p: int, e: int) -> int:
    """Exact sign of K_k^N(p / 2^e).

    Uses B_j = 2^(j e) j! K_j(p/2^e), which satisfies the integer recurrence
    B_{j+1} = S B_j - j (N-j+1) 4^e B_{j-1} with S = N 2^e - 2p.
    """
    if k == 0:
        return 1
    s = (N << e) - 2 * p
    b_prev, b_cur = 1, s
    four_e = 1 << (2 * e)
    for j in range(1, k):
        b_prev, b_cur = b_cur, s * b_cur - j * (N - j + 1) * four_e * b_prev
    return (b_cur > 0) - (b_cur < 0)


class _Bracket:
    """Dyadic bracket around d_k(1): sign + at lo, sign - at hi, or an exact hit.

    The right endpoint is certified to lie below d_k(2) at construction time
    and bisection only ever moves it left, so the enclosed sign change is the
    smallest root and no other.
    """

    __slots__ = ("num_lo", "num_hi", "e", "exact")

    def __init__(self, num_lo: int, num_hi: int, e: int, exact: bool = False):
        self.num_lo = num_lo
        self.num_hi = num_hi
        self.e = e
        self.exact = exact

    @property
    def lo(self) -> Fraction:
        return Fraction(self.num_lo, 1 << self.e)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.num_hi, 1 << self.e)

    @property
    def width(self) -> Fraction:
        return Fraction(self.num_hi - self.num_lo, 1 << self.e)

    def _set_exact(self, num: int, e: int) -> None:
        self.num_lo = self.num_hi = num
        self.e = e
        self.exact = True

    def bisect_step(self, N: int, k: int) -> None:
        if self.exact:
            return
        mid = self.num_lo + self.num_hi  # numerator at exponent e + 1
        sign = _sign_at_dyadic(N, k, mid, self.e + 1)
        if sign == 0:
            self._set_exact(mid, self.e + 1)
            return
        self.num_lo *= 2
        self.num_hi *= 2
        self.e += 1
        if sign > 0:
            self.num_lo = mid
        else:
            self.num_hi = mid

    def refine(self, N: int, k: int, width: Fraction) -> None:
        # lo must end up strictly positive so the interval certifies 0 < root
        while not self.exact and (self.width > width or self.num_lo == 0):
            self.bisect_step(N, k)


class _RootChain:
    """Enclosures of d_k^N(1) for k = 1, 2, ... built through interlacing."""

    def __init__(self, N: int):
        self.N = N
        self._brackets: list[_Bracket] = []

    def bracket(self, k: int) -> _Bracket:
        if not 1 <= k <= self.N:
            raise ValueError(f"requires 1 <= k <= N={self.N}; got k={k}")
        while len(self._brackets) < k:
            self._extend()
        return self._brackets[k - 1]

    def _extend(self) -> None:
        N = self.N
        k = len(self._brackets) + 1
        if k == 1:
            # K_1(0) = N > 0 and K_1(N) = -N < 0; the single root is inside.
            self._brackets.append(_Bracket(0, N, 0))
            return
        prev = self._brackets[-1]
        while True:
            sign = _sign_at_dyadic(N, k, prev.num_lo, prev.e)
            if sign < 0:
                # prev.lo <= d_{k-1}(1) < d_k(2), and K_k < 0 there, so the
                # bracket (0, prev.lo) isolates d_k(1).
                self._brackets.append(_Bracket(0, prev.num_lo, prev.e))
                return
            if sign == 0:
                # A root of K_k at or below d_{k-1}(1) can only be d_k(1).
                self._brackets.append(
                    _Bracket(prev.num_lo, prev.num_lo, prev.e, exact=True)
                )
                return
            if prev.exact:
                raise AssertionError(
                    "K_k must be negative at the exact previous smallest root"
                )
            prev.bisect_step(N, k - 1)

    def interval(self, k: int) -> "RootInterval":
        br = self.bracket(k)
        return RootInterval(KrawtchoukParams(self.N, k), br.lo, br.hi)


@dataclass(frozen=True)
class RootInterval:
    """Certified rational enclosure of the smallest root d_k^N(1).

    lo == hi marks an exact rational root (bisection landed on it); otherwise
    K_k is positive at lo and negative at hi.
    """

    params: KrawtchoukParams
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.lo <= self.hi < self.params.N:
            raise ValueError("root enclosure must satisfy 0 < lo <= hi < N")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def strictly_above(self, q: Fraction | int) -> bool:
        return self.lo > q

    def strictly_below(self, q: Fraction | int) -> bool:
        return self.hi < q


def smallest_root(N: int, k: int, width: Fraction = DEFAULT_WIDTH) -> RootInterval:
    """Certified enclosure of d_k^N(1) with hi - lo <= width.

    An exact rational hit (for instance d_1 = N/2) collapses to a zero-width
    interval instead of failing.
    """
    if k < 1:
        raise ValueError(f"requires k >= 1; got k={k}")
    chain = _RootChain(N)
    chain.bracket(k).refine(N, k, Fraction(width))
    return chain.interval(k)


def smallest_root_chain(
    N: int, k_max: int, width: Fraction = DEFAULT_WIDTH
) -> list[RootInterval]:
    """Enclosures of d_k^N(1) for all k = 1..k_max off one shared chain."""
    chain = _RootChain(N)
    chain.bracket(k_max)
    out = []
    for k in range(1, k_max + 1):
        chain.bracket(k).refine(N, k, Fraction(width))
        out.append(chain.interval(k))
    return out


def dreg_via_roots(
    shape: SystemShape,
    width: Fraction = DEFAULT_WIDTH,
    ceiling: int = CROSS_VALIDATION_CEILING,
) -> int:
    """Degree of regularity recovered from certified smallest-root enclosures.

    Walks k = 1, 2, ... while the enclosure of d_k(1) lies strictly above
    t = m - n.  When an enclosure straddles t it is refined with t itself as
    the pivot, whose exact sign settles the side; K_k(t) = 0 is the tie
    d_k(1) = t, which the strict comparison excludes.
    """
    N, t = shape.N, shape.t
    if N > ceiling:
        raise ValueError(
            f"N={N} exceeds the cross-validation ceiling {ceiling}"
        )
    width = Fraction(width)
    chain = _RootChain(N)
    k = 1
    while True:
        sign_at_t = _sign_at_dyadic(N, k, t, 0)
        if sign_at_t == 0:
            return k
        br = chain.bracket(k)
        br.refine(N, k, width)
        if not _decided_above(br, N, k, t, sign_at_t):
            return k
        k += 1
        if k > N:
            raise AssertionError("accept set cannot extend past degree N")


def _decided_above(br: _Bracket, N: int, k: int, t: int, sign_at_t: int) -> bool:
    """Certified comparison of the enclosed root against the integer t."""
    if br.exact:
        return br.lo > t
    if br.lo >= t:
        return True
    if br.hi <= t:
        return False
    # t lies inside the bracket; adopt it as a bisection point.  Inside the
    # bracket t < d_k(2), so a positive sign certifies t < d_k(1).
    t_num = t << br.e
    if sign_at_t > 0:
        br.num_lo = t_num
        return True
    br.num_hi = t_num
    return False


def _sturm_count_below(N: int, k: int, p: int, e: int) -> tuple[int, bool]:
    """Eigenvalues of the k x k Golub-Kahan matrix strictly below p / 2^e.

    Evaluates the leading-principal-minor sequence q_j = 2^(j e) p_j(x) with
    p_j(x) = x p_{j-1}(x) - (j-1)(N-j+2) p_{j-2}(x) (zero diagonal keeps all
    coefficients integral).  Counting sign agreements of consecutive terms,
    where a zero term takes the sign opposite to its predecessor, yields the
    number of eigenvalues strictly below the evaluation point; the second
    return value reports whether the point is itself an eigenvalue.
    """
    count = 0
    sign_prev = 1
    four_e = 1 << (2 * e)
    q_jm2, q_jm1 = None, 1  # q_0 = 1
    q_j = 1
    for j in range(1, k + 1):
        if j == 1:
            q_j = p
        else:
            q_j = p * q_jm1 - (j - 1) * (N - j + 2) * four_e * q_jm2
        sign = (q_j > 0) - (q_j < 0)
        if sign == 0:
            sign = -sign_prev
        if sign == sign_prev:
            count += 1
        sign_prev = sign
        q_jm2, q_jm1 = q_jm1, q_j
    return count, q_j == 0


def eigenvalue_count_below(N: int, k: int, x: Fraction | int) -> int:
    """Number of eigenvalues of the k x k matrix strictly below rational x.

    x must have a power-of-two denominator (every bisection point does).
    """
    x = Fraction(x)
    den = x.denominator
    e = den.bit_length() - 1
    if 1 << e != den:
        raise ValueError(f"requires a dyadic rational; got denominator {den}")
    count, _ = _sturm_count_below(N, k, x.numerator, e)
    return count


@dataclass(frozen=True)
class GolubKahanSpectrum:
    """The k x k zero-diagonal tridiagonal matrix and its top eigenvalue.

    Off-diagonal entries are sqrt of the stored integers (i+1)(N-i); only the
    squares are ever touched, which keeps Sturm counts exact.
    """

    N: int
    k: int
    squared_offdiagonals: tuple[int, ...]
    lambda_max: Enclosure

    @classmethod
    def compute(
        cls, N: int, k: int, width: Fraction = DEFAULT_WIDTH
    ) -> "GolubKahanSpectrum":
        return cls(
            N=N,
            k=k,
            squared_offdiagonals=tuple((i + 1) * (N - i) for i in range(k - 1)),
            lambda_max=largest_eigenvalue(N, k, width),
        )


def largest_eigenvalue(N: int, k: int, width: Fraction = DEFAULT_WIDTH) -> Enclosure:
    """Certified enclosure of the largest eigenvalue lambda_k, width <= width.

    Bisection on [0, N]: the matrix has zero trace so lambda_k >= 0, and
    lambda_k = N - 2 d_k(1) < N.  An exact rational eigenvalue hit collapses
    to a point enclosure.
    """
    if not 1 <= k <= N:
        raise ValueError(f"requires 1 <= k <= N={N}; got k={k}")
    if k == 1:
        return Enclosure.point(0)
    width = Fraction(width)
    num_lo, num_hi, e = 0, N, 0
    while Fraction(num_hi - num_lo, 1 << e) > width:
        mid = num_lo + num_hi  # numerator at exponent e + 1
        count, singular = _sturm_count_below(N, k, mid, e + 1)
        if singular and count == k - 1:
            exact = Fraction(mid, 1 << (e + 1))
            return Enclosure.point(exact)
        num_lo *= 2
        num_hi *= 2
        e += 1
        if count == k:
            num_hi = mid
        else:
            num_lo = mid
    return Enclosure(Fraction(num_lo, 1 << e), Fraction(num_hi, 1 << e))


def dreg_via_eigenvalues(
    shape: SystemShape,
    width: Fraction = DEFAULT_WIDTH,
    ceiling: int = CROSS_VALIDATION_CEILING,
) -> int:
    """Degree of regularity recovered from the Golub-Kahan eigenvalue test.

    For each k the Sturm count at the integer threshold n decides exactly
    whether lambda_k < n (count == k).  A singular hit with count k - 1 means
    lambda_k = n, the tie case: it corresponds to K_k(m-n) = 0, is confirmed
    through that sign, and the strict inequality excludes k.  The width
    argument only controls enclosures materialized elsewhere; the decision
    itself is exact integer arithmetic at every k.
    """
    N, n = shape.N, shape.n
    if N > ceiling:
        raise ValueError(
            f"N={N} exceeds the cross-validation ceiling {ceiling}"
        )
    k = 1
    while True:
        count, singular = _sturm_count_below(N, k, n, 0)
        if count == k:
            k += 1
            if k > N:
                raise AssertionError("accept set cannot extend past degree N")
            continue
        if singular and count == k - 1:
            if eval_integer(N, k, shape.t) != 0:
                raise AssertionError(
                    "lambda_k = n must coincide with a vanishing Krawtchouk value"
                )
        return k
