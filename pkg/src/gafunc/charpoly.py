"""Characteristic polynomial of a multivector.

The Faddeev-LeVerrier-Souriau recursion runs entirely in exact rational
arithmetic:

    A_(1) = A,   C_(k) = (d/k) <A_(k)>_0,   A_(k+1) = A (A_(k) - C_(k)),

with d = 2^ceil(n/2).  The sign convention keeps the leading coefficient
C_(0) = -1, so the trace is C_(1) = d <A>_0 and the determinant is -C_(d).
The (d+1)-th iterate vanishes identically (Cayley-Hamilton), which
:func:`char_poly` asserts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ga import Multivector, mv_powers
from .poly import Poly


@dataclass(frozen=True)
class CharPolyResult:
    chi: Poly  # leading coefficient -1
    coefficients: tuple  # C_(0) .. C_(d)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def trace(self) -> Fraction:
        return self.coefficients[1]

    @property
    def determinant(self) -> Fraction:
        return -self.coefficients[-1]

    @property
    def monic(self) -> Poly:
        """chi / (-1): the polynomial the minimal polynomial divides."""
        return -self.chi


def char_poly(a: Multivector) -> CharPolyResult:
    d = a.sig.char_degree
    cs = [Fraction(-1)]
    ak = a
    for k in range(1, d + 1):
        ck = Fraction(d, k) * ak.scalar_part()
        cs.append(ck)
        ak = a * (ak - Multivector.scalar(a.sig, ck))
    assert ak.is_zero(), "FLS recursion did not terminate at zero"
    # chi(x) = sum_k C_(d-k) x^k
    chi = Poly.make([cs[d - k] for k in range(d + 1)])
    return CharPolyResult(chi, tuple(cs))


def determinant(a: Multivector) -> Fraction:
    return char_poly(a).determinant


def cayley_hamilton_check(a: Multivector) -> bool:
    """Substitute A into chi via geometric powers; exact zero test."""
    res = char_poly(a)
    powers = mv_powers(a, res.degree)
    acc = Multivector.zero(a.sig)
    for k, c in enumerate(res.chi.coeffs):
        if c != 0:
            acc = acc + powers[k].scale(c)
    return acc.is_zero()
