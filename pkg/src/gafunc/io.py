"""Text and structured I/O.

Multivector text: terms like ``-1 + 2*e1 - 2*e12 - e123``; generator indices
1..n (single digits, so the text form covers n <= 9), coefficients as
integers, decimals, or rationals ``p/q``; whitespace-insensitive; the ``*``
is optional.

Structured records are canonical JSON carrying exact rationals as strings
and floats as decimal strings with the precision recorded alongside, so that
parsing and re-emitting a record is byte-identical.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

import mpmath as mp

from .errors import ParseError
from .ga import Multivector, Signature, blade_order, blade_name, _blade_position
from .poly import Poly, format_poly
from .scalars import working

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?P<coeff>\d+(?:\.\d+)?(?:\s*/\s*\d+)?)?\s*"
    r"\*?\s*"
    r"(?P<blade>e\d+)?"
)


def _parse_coeff(text: str) -> Fraction:
    text = text.replace(" ", "")
    if "/" in text:
        num, den = text.split("/")
        if "." in num or "." in den:
            raise ParseError(f"bad rational coefficient {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(text)


def parse_mv(text: str, sig: Signature) -> Multivector:
    """Parse the multivector text format into an exact multivector."""
    pos = _blade_position(sig.n)
    coeffs = [Fraction(0)] * sig.dim
    i = 0
    text = text.strip()
    if not text:
        raise ParseError("empty multivector text")
    seen_any = False
    while i < len(text):
        m = _TERM_RE.match(text, i)
        if not m or (m.group("coeff") is None and m.group("blade") is None):
            raise ParseError(f"cannot parse multivector near {text[i:i+20]!r}")
        if seen_any and m.group("sign") is None:
            raise ParseError(f"missing sign before {text[i:i+20]!r}")
        coeff = (
            _parse_coeff(m.group("coeff"))
            if m.group("coeff") is not None
            else Fraction(1)
        )
        if m.group("sign") == "-":
            coeff = -coeff
        blade = m.group("blade")
        if blade is None:
            mask = 0
        else:
            mask = 0
            for ch in blade[1:]:
                idx = int(ch)
                if not 1 <= idx <= sig.n:
                    raise ParseError(f"generator index {idx} outside 1..{sig.n}")
                bit = 1 << (idx - 1)
                if mask & bit:
                    raise ParseError(f"repeated generator in blade {blade!r}")
                mask |= bit
        coeffs[pos[mask]] += coeff
        seen_any = True
        i = m.end()
    return Multivector(sig, tuple(coeffs))


def _coeff_text(c, precision: int | None) -> str:
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, int):
        return str(c)
    # mpc() rounds to the ambient precision, so widen it first
    with working(precision or 50):
        c = mp.mpc(c)
        if mp.im(c) == 0:
            return mp.nstr(mp.re(c), precision or 17)
        return f"({mp.nstr(mp.re(c), precision or 17)}{'+' if mp.im(c) >= 0 else '-'}{mp.nstr(abs(mp.im(c)), precision or 17)}i)"


def format_mv(a: Multivector, precision: int | None = None) -> str:
    """Render in canonical blade order; zero multivector renders as ``0``."""
    parts = []
    for mask, c in zip(blade_order(a.sig), a.coeffs):
        if c == 0:
            continue
        txt = _coeff_text(c, precision)
        neg = txt.startswith("-")
        if neg:
            txt = txt[1:]
        name = blade_name(mask)
        if mask == 0:
            term = txt
        elif txt == "1":
            term = name
        else:
            term = f"{txt}*{name}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts) if parts else "0"


def parse_matrix(text: str) -> "list[list[Fraction]]":
    """Whitespace/newline separated rational entries, one row per line
    (or rows separated by ``;``)."""
    rows = []
    for line in re.split(r"[;\n]+", text.strip()):
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([Fraction(tok) for tok in line.split()])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad matrix row {line!r}: {exc}") from None
    if not rows:
        raise ParseError("empty matrix text")
    if any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square")
    return rows


# -- structured records ----------------------------------------------------


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def mv_record(a: Multivector, precision: int | None = None) -> dict:
    ring = "rational"
    coeffs = []
    with working(precision or 50):
        for c in a.coeffs:
            if isinstance(c, (int, Fraction)):
                coeffs.append(str(Fraction(c)))
                continue
            c = mp.mpc(c)
            if mp.im(c) == 0:
                ring = "real" if ring != "complex" else ring
                coeffs.append(mp.nstr(mp.re(c), precision or 17))
            else:
                ring = "complex"
                coeffs.append(
                    [
                        mp.nstr(mp.re(c), precision or 17),
                        mp.nstr(mp.im(c), precision or 17),
                    ]
                )
    return {
        "kind": "multivector",
        "signature": [a.sig.p, a.sig.q],
        "ring": ring,
        "precision": precision,
        "coefficients": coeffs,
    }


def record_to_mv(record: dict) -> Multivector:
    if record.get("kind") != "multivector":
        raise ParseError("record is not a multivector")
    sig = Signature(*record["signature"])
    precision = record.get("precision") or 50
    coeffs = []
    with working(precision):
        for c in record["coefficients"]:
            if isinstance(c, str):
                if record["ring"] == "rational":
                    coeffs.append(Fraction(c))
                else:
                    coeffs.append(mp.mpf(c))
            else:
                coeffs.append(mp.mpc(mp.mpf(c[0]), mp.mpf(c[1])))
    if len(coeffs) != sig.dim:
        raise ParseError("coefficient count does not match signature")
    return Multivector(sig, tuple(coeffs))


def poly_record(p: Poly, precision: int | None = None) -> dict:
    return {
        "kind": "polynomial",
        "precision": precision,
        "coefficients": [
            str(c) if isinstance(c, (int, Fraction)) else _coeff_text(c, precision)
            for c in p.coeffs
        ],
        "text": format_poly(p),
    }
