"""Cross-validation suites tying the three characterizations together.

Each check returns a CheckResult naming the first counterexample if one is
found.  The suites are what `semireg verify` runs; the pytest acceptance
module drives the same functions at the scales fixed there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .bounds import kz_lower, l_upper, ls_lower, ls_upper
from .exact import SystemShape, binomial, degree_of_regularity_exact
from .krawtchouk import gf_identity_check, integer_values
from .roots import (
    _RootChain,
    dreg_via_eigenvalues,
    dreg_via_roots,
    largest_eigenvalue,
)

__all__ = [
    "CheckResult",
    "enumerate_shapes",
    "check_interlacing",
    "check_gf_identity",
    "check_orthogonality",
    "check_three_way_agreement",
    "check_eigenvalue_root_duality",
    "check_sandwich",
    "run_all",
]

ORTHOGONALITY_ENVELOPE = 40  # exact orthogonality sweep is asserted up to here


@dataclass(frozen=True)
class CheckResult:
    name: str
    checked: int
    passed: bool
    detail: str = ""

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{self.name}: {status} ({self.checked} cases){extra}"


def enumerate_shapes(max_N: int, min_n: int = 1) -> Iterator[SystemShape]:
    """All valid shapes (m, n) with 2m - n <= max_N, ordered by (n, m)."""
    for n in range(min_n, max_N):
        m = n + 1
        while 2 * m - n <= max_N:
            yield SystemShape(m, n)
            m += 1


def check_interlacing(max_N: int, width: Fraction = Fraction(1, 1024)) -> CheckResult:
    """Strictly decreasing smallest roots: d_{k+1}(1) < d_k(1) for all k < N.

    Adjacent enclosures are refined until disjoint, so the comparison is
    certified, not approximate.
    """
    checked = 0
    for N in range(2, max_N + 1):
        chain = _RootChain(N)
        chain.bracket(N)
        prev = None
        for k in range(1, N + 1):
            br = chain.bracket(k)
            br.refine(N, k, width)
            if prev is not None:
                w = width
                while br.hi >= prev.lo:
                    # overlap: sharpen both until the strict order is visible
                    w /= 2
                    prev.refine(N, k - 1, w)
                    br.refine(N, k, w)
                    if w < Fraction(1, 1 << 128):
                        return CheckResult(
                            "interlacing", checked, False,
                            f"could not separate roots at N={N}, k={k}",
                        )
                checked += 1
            prev = br
    return CheckResult("interlacing", checked, True)


def check_gf_identity(max_N: int) -> CheckResult:
    """Coefficient stream equals the Krawtchouk value stream, exactly."""
    checked = 0
    for shape in enumerate_shapes(max_N):
        if not gf_identity_check(shape.m, shape.n, shape.N):
            return CheckResult(
                "gf_identity", checked, False, f"mismatch at m={shape.m}, n={shape.n}"
            )
        checked += 1
    return CheckResult("gf_identity", checked, True)


def check_orthogonality(max_N: int) -> CheckResult:
    """Exact binomial-weighted orthogonality for every pair (l, k), N <= 40."""
    top = min(max_N, ORTHOGONALITY_ENVELOPE)
    checked = 0
    for N in range(1, top + 1):
        table = [integer_values(N, i, N) for i in range(N + 1)]
        weights = [binomial(N, i) for i in range(N + 1)]
        for l in range(N + 1):
            expected_diag = (1 << N) * binomial(N, l)
            for k in range(l, N + 1):
                total = sum(table[i][l] * table[i][k] * weights[i] for i in range(N + 1))
                expected = expected_diag if l == k else 0
                if total != expected:
                    return CheckResult(
                        "orthogonality", checked, False,
                        f"failure at N={N}, l={l}, k={k}",
                    )
                checked += 1
    return CheckResult("orthogonality", checked, True)


def check_three_way_agreement(
    max_N: int,
    ceiling: int | None = None,
    width: Fraction = Fraction(1, 1024),
) -> CheckResult:
    """degree_of_regularity_exact == dreg_via_roots == dreg_via_eigenvalues."""
    checked = 0
    ceiling = ceiling if ceiling is not None else max(max_N, 1)
    for shape in enumerate_shapes(max_N):
        d_exact = degree_of_regularity_exact(shape)
        d_roots = dreg_via_roots(shape, width=width, ceiling=ceiling)
        d_eigen = dreg_via_eigenvalues(shape, width=width, ceiling=ceiling)
        if not d_exact == d_roots == d_eigen:
            return CheckResult(
                "three_way_agreement", checked, False,
                f"m={shape.m}, n={shape.n}: exact={d_exact}, "
                f"roots={d_roots}, eigenvalues={d_eigen}",
            )
        checked += 1
    return CheckResult("three_way_agreement", checked, True)


def check_eigenvalue_root_duality(
    max_N: int, width: Fraction = Fraction(1, 1024)
) -> CheckResult:
    """|(N - 2 mid(d_k(1))) - mid(lambda_k)| <= sum of enclosure widths."""
    checked = 0
    for N in range(2, max_N + 1):
        chain = _RootChain(N)
        chain.bracket(N)
        for k in range(1, N + 1):
            br = chain.bracket(k)
            br.refine(N, k, width)
            root_mid = (br.lo + br.hi) / 2
            root_width = br.hi - br.lo
            lam = largest_eigenvalue(N, k, width)
            if abs((N - 2 * root_mid) - lam.mid) > 2 * root_width + lam.width:
                return CheckResult(
                    "eigenvalue_root_duality", checked, False,
                    f"duality gap at N={N}, k={k}",
                )
            checked += 1
    return CheckResult("eigenvalue_root_duality", checked, True)


def check_sandwich(shapes: Iterable[SystemShape]) -> CheckResult:
    """kz_lower, ls_lower <= d_reg <= ls_upper, l_upper (where applicable)."""
    checked = 0
    for shape in shapes:
        d = degree_of_regularity_exact(shape)
        lo_kz = kz_lower(shape).value
        lo_ls = ls_lower(shape).value
        up_ls = ls_upper(shape)
        up_l = l_upper(shape)
        ok = lo_kz <= d and lo_ls <= d
        if up_ls.applicable:
            ok = ok and d <= up_ls.value
        if up_l.applicable:
            ok = ok and d <= up_l.value
        if not ok:
            return CheckResult(
                "sandwich", checked, False,
                f"violated at m={shape.m}, n={shape.n}: d_reg={d}, "
                f"kz={lo_kz}, ls_lower={lo_ls}, "
                f"ls_upper={up_ls.value}, l_upper={up_l.value}",
            )
        checked += 1
    return CheckResult("sandwich", checked, True)


def run_all(
    max_N: int,
    ceiling: int | None = None,
    width: Fraction = Fraction(1, 1024),
) -> list[CheckResult]:
    """The verification battery behind `semireg verify`."""
    return [
        check_interlacing(max_N, width=width),
        check_gf_identity(max_N),
        check_orthogonality(max_N),
        check_three_way_agreement(max_N, ceiling=ceiling, width=width),
        check_eigenvalue_root_duality(max_N, width=width),
        check_sandwich(enumerate_shapes(max_N)),
    ]
