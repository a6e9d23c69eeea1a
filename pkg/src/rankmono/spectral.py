"""Certified statements about dominant eigenvalues and eigenvectors of small nonnegative matrices.

Everything here is exact: eigenvalues are pinned inside rational intervals by
Sturm counting, and eigenvector comparisons go through the polynomial
row sums of adj(I - aB) evaluated near a = 1/rho.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    DomainError,
    RatPoly,
    adjugate_row_sums,
    char_poly,
    count_roots,
    poly_gcd,
    squarefree_part,
    sturm_chain,
)


@dataclass(frozen=True)
class RootInterval:
    """A half-open interval (lo, hi] holding exactly one root of ``poly``."""

    lo: Fraction
    hi: Fraction
    poly: RatPoly  # squarefree

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def max_row_sum(B: Sequence[Sequence]) -> Fraction:
    return max(sum(Fraction(e) for e in row) for row in B)


def dominant_root_interval(B: Sequence[Sequence], width=Fraction(1, 2**20)) -> RootInterval:
    """Isolate the spectral radius of a nonnegative irreducible matrix.

    The Perron root is the largest real eigenvalue and is bounded by the
    largest row sum, so we bisect on (lo, hi] keeping at least one root in the
    upper part until exactly one root remains and the interval is narrow.
    """
    p = squarefree_part(char_poly(B))
    chain = sturm_chain(p)
    hi = max_row_sum(B)
    lo = -hi - 1
    if count_roots(p, lo, hi, chain) == 0:
        raise DomainError("no real eigenvalue found")
    while True:
        if count_roots(p, lo, hi, chain) == 1 and hi - lo <= width:
            return RootInterval(lo, hi, p)
        mid = (lo + hi) / 2
        if count_roots(p, mid, hi, chain) >= 1:
            lo = mid
        else:
            hi = mid


def refine(iv: RootInterval, width) -> RootInterval:
    chain = sturm_chain(iv.poly)
    lo, hi = iv.lo, iv.hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots(iv.poly, mid, hi, chain) == 1:
            lo = mid
        else:
            hi = mid
    return RootInterval(lo, hi, iv.poly)


def _no_roots_in_closed(p: RatPoly, a: Fraction, b: Fraction) -> bool:
    if p(a) == 0:
        return False
    return count_roots(p, a, b) == 0


def sign_at_dominant(d: RatPoly, iv: RootInterval, max_steps: int = 400) -> int:
    """Exact sign of d(1/rho), rho being the unique root of iv.poly in (iv.lo, iv.hi], iv.lo > 0."""
    while iv.lo <= 0:
        if iv.hi <= 0:
            raise DomainError("dominant root must be positive")
        iv = refine(iv, iv.width / 2)
    if d.is_zero():
        return 0
    # exact zero test: d(1/rho) = 0 iff rho is a root of the reversed polynomial
    rev = d.reversed()
    g = poly_gcd(iv.poly, rev)
    if g.degree > 0 and count_roots(squarefree_part(g), iv.lo, iv.hi) == 1:
        return 0
    q = squarefree_part(d)
    if q.degree == 0:
        return 1 if d.lead > 0 else -1
    chain = sturm_chain(iv.poly)
    lo, hi = iv.lo, iv.hi
    for _ in range(max_steps):
        a, b = 1 / hi, 1 / lo
        if _no_roots_in_closed(q, a, b):
            return d.sign_at(a)
        mid = (lo + hi) / 2
        if count_roots(iv.poly, mid, hi, chain) == 1:
            lo = mid
        else:
            hi = mid
    raise DomainError("could not separate 1/rho from the roots of d")  # pragma: no cover


def compare_dominant_eigenvector(B: Sequence[Sequence], x: int, y: int,
                                 iv: RootInterval | None = None,
                                 row_sums: Sequence[RatPoly] | None = None) -> int:
    """Sign of e_x - e_y for the (left) Perron eigenvector e of B, exactly.

    Near a = 1/rho the row vector 1*adj(I - aB) is a nonnegative multiple of
    e, so the sign of its x-y difference at 1/rho is the answer.
    """
    iv = iv or dominant_root_interval(B)
    r = row_sums if row_sums is not None else adjugate_row_sums(B)
    return sign_at_dominant(r[x] - r[y], iv)


def katz_certified_alpha(x: Sequence[Fraction]) -> bool:
    """Collatz-Wielandt certificate: if x(I - aA) = 1 has a positive solution, then rho(A) < 1/a.

    Indeed xA = (x - 1)/a < x/a componentwise.
    """
    return all(v > 0 for v in x)
