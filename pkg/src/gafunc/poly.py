"""Dense univariate polynomials.

One class serves two rings.  Structural work (divmod, gcd, square-free
decomposition) is restricted to exact coefficients (Fraction or exact complex
rationals); polynomials with mpmath coefficients are used for evaluation and
for the numeric spectral-basis recursion only, and never enter gcd.

Coefficients are stored in ascending power order with exact trailing zeros
stripped, so ``degree == len(coeffs) - 1`` and the zero polynomial has an
empty coefficient tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import to_mpc


@dataclass(frozen=True)
class Poly:
    coeffs: tuple  # ascending powers

    @staticmethod
    def make(seq) -> "Poly":
        coeffs = list(seq)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return Poly(tuple(coeffs))

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def constant(c) -> "Poly":
        return Poly.make([c])

    @staticmethod
    def x_power(k: int, c=Fraction(1)) -> "Poly":
        return Poly.make([Fraction(0)] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def constant_term(self):
        return self.coeff(0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly.make(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly.make(out)

    def scale(self, c) -> "Poly":
        if c == 0:
            return Poly.zero()
        return Poly.make([c * a for a in self.coeffs])

    def shift_up(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def shift_down(self) -> "Poly":
        """Divide by x; requires zero constant term."""
        if not self.is_zero() and self.coeffs[0] != 0:
            raise ValueError("constant term is nonzero")
        return Poly(self.coeffs[1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.leading()
        if lc == 1:
            return self
        return Poly(tuple(c / lc for c in self.coeffs))

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> "Poly":
        return Poly.make([k * c for k, c in enumerate(self.coeffs)][1:])

    def weighted_derivative(self, k: int) -> "Poly":
        """(1/k!) d^k/dx^k; coefficient at x^(j-k) becomes C(j,k)*coeff_j."""
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        if k == 0:
            return self
        if k > self.degree:
            return Poly.zero()
        return Poly.make(
            [math.comb(j, k) * self.coeffs[j] for j in range(k, len(self.coeffs))]
        )

    # -- evaluation --------------------------------------------------------

    def eval_exact(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_mpc(self, z):
        """Horner evaluation at working precision."""
        z = to_mpc(z)
        acc = to_mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * z + to_mpc(c)
        return acc


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg(remainder) < deg(b).

    Requires an invertible leading coefficient of ``b``; exact over exact
    rings, floating otherwise.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.degree < b.degree:
        return Poly.zero(), a
    lead = b.leading()
    rem = list(a.coeffs)
    q = [0] * (a.degree - b.degree + 1)
    for k in range(a.degree - b.degree, -1, -1):
        c = rem[k + b.degree] / lead
        q[k] = c
        if c != 0:
            for j, bj in enumerate(b.coeffs):
                rem[k + j] = rem[k + j] - c * bj
    return Poly.make(q), Poly.make(rem[: b.degree])


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divmod(a, b)[1]


# -- exact gcd over the rationals -----------------------------------------
#
# Fractions are cleared to primitive integer polynomials and reduced with a
# primitive pseudo-remainder sequence; dividing out the content each step
# keeps coefficient growth polynomial even for the degree-6 irreducible
# factors the pipeline meets.


def _integer_primitive(p: Poly) -> list[int]:
    den = math.lcm(*(Fraction(c).denominator for c in p.coeffs))
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = math.gcd(*ints)
    if g > 1:
        ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        la = a[-1]
        shift = len(a) - len(b)
        a = [c * lb for c in a]
        for j, bj in enumerate(b):
            a[shift + j] -= la * bj
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of two polynomials over the rationals, exact."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    pa, pb = _integer_primitive(a), _integer_primitive(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        r = _int_pseudo_rem(pa, pb)
        if r:
            g = math.gcd(*r)
            if g > 1:
                r = [c // g for c in r]
        pa, pb = pb, r
    return Poly.make([Fraction(c) for c in pa]).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: P = lc * prod(factor^mult), factors monic, squarefree,
    pairwise coprime, multiplicities strictly increasing."""
    if p.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    w, _ = poly_divmod(p, g)
    y, _ = poly_divmod(p.derivative(), g)
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        f = poly_gcd(w, z)
        if f.degree > 0:
            out.append((f, i))
        w, _ = poly_divmod(w, f)
        y, _ = poly_divmod(z, f)
        z = y - w.derivative()
        i += 1
    return out


# -- text form -------------------------------------------------------------


def _format_coeff(c) -> str:
    from .scalars import ComplexRational

    if isinstance(c, ComplexRational):
        if c.im == 0:
            return _format_coeff(c.re)
        return f"({c.re}{'+' if c.im > 0 else '-'}{abs(c.im)}i)"
    return str(c)


def format_poly(p: Poly, var: str = "x") -> str:
    """Render in descending powers: ``x^4 + 4 x^3 + 8 x^2 + 8 x + 4``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        txt = _format_coeff(c)
        neg = txt.startswith("-")
        if neg:
            txt = txt[1:]
        if k > 0 and txt == "1":
            txt = ""
        if k == 0:
            term = txt or "1"
        else:
            xpart = var if k == 1 else f"{var}^{k}"
            term = f"{txt} {xpart}".strip()
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)
