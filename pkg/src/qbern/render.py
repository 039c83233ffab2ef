"""Text renderings used by the command line: LaTeX, plain and JSON helpers."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .exactq import QRat, _pdivexact, format_fraction, parse_fraction
from .xpoly import DensePoly, XPoly

__all__ = [
    "latex_qpoly",
    "latex_qrat",
    "latex_poly",
    "latex_scalar_qrat",
    "bracket_factors",
    "rational_poly_to_dict",
    "rational_poly_from_dict",
]


def latex_qpoly(cs, var: str = "q") -> str:
    """Integer or rational coefficients, descending powers."""
    out = ""
    for k in range(len(cs) - 1, -1, -1):
        c = Fraction(cs[k])
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
        if not mono:
            body = _latex_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_latex_scalar(mag)} {mono}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def _latex_scalar(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return rf"\frac{{{x.numerator}}}{{{x.denominator}}}"


def bracket_factors(den: tuple, max_bracket: int = 24) -> Optional[list[int]]:
    """Write an integer polynomial as a product of q-brackets, if possible.

    Returns the bracket indices in increasing order, or ``None`` when ``den``
    is not such a product.  Backtracking search over [2]_q .. [max_bracket]_q.
    """
    def search(rest: tuple, top: int) -> Optional[list[int]]:
        if rest == (1,):
            return []
        for m in range(min(top, len(rest)), 1, -1):
            try:
                quot = _pdivexact(rest, (1,) * m)
            except ArithmeticError:
                continue
            found = search(quot, m)
            if found is not None:
                return found + [m]
        return None

    return search(tuple(den), max_bracket)


def latex_qrat(r: QRat, bracket_notation: bool = False) -> tuple[str, str, bool]:
    """Return ``(sign, body, compound)`` for a coefficient.

    ``compound`` tells the caller the body is a sum and needs parentheses
    when multiplied by a monomial.
    """
    n, d = r.int_parts()
    if not n:
        return "+", "0", False
    sign = "-" if n[-1] < 0 else "+"
    if sign == "-":
        n = tuple(-c for c in n)
    num = latex_qpoly(n)
    compound = sum(1 for c in n if c) > 1
    if d == (1,):
        return sign, num, compound
    den = None
    if bracket_notation:
        fac = bracket_factors(d)
        if fac is not None:
            den = " ".join(f"[{m}]_q" for m in fac)
    if den is None:
        den = latex_qpoly(d)
    return sign, rf"\frac{{{num}}}{{{den}}}", False


def latex_poly(P: DensePoly, bracket_notation: bool = False) -> str:
    """Descending powers of the polynomial's variable; Y is shown as q^{X}."""
    if not P.coeffs:
        return "0"

    def mono(k):
        if P.variable == "Y":
            return "q^{X}" if k == 1 else f"q^{{{k} X}}"
        return P.variable if k == 1 else f"{P.variable}^{{{k}}}"

    out = ""
    for k in range(P.degree, -1, -1):
        c = P.coeffs[k]
        if c.is_zero():
            continue
        sign, body, compound = latex_qrat(c, bracket_notation)
        if k:
            if body == "1":
                body = mono(k)
            elif compound:
                body = rf"\left({body}\right) {mono(k)}"
            else:
                body = f"{body} {mono(k)}"
        if not out:
            out = ("-" if sign == "-" else "") + body
        else:
            out += (" - " if sign == "-" else " + ") + body
    return out


def latex_scalar_qrat(r: QRat, bracket_notation: bool = False) -> str:
    sign, body, _ = latex_qrat(r, bracket_notation)
    return ("-" if sign == "-" else "") + body


def rational_poly_to_dict(P: XPoly) -> dict:
    """A polynomial over Q: coefficients as "a/b" strings."""
    return {"variable": P.variable, "field": "Q",
            "coefficients": [format_fraction(c.const_value()) for c in P.coeffs]}


def rational_poly_from_dict(d: dict) -> XPoly:
    if d.get("field") != "Q":
        raise ValueError("not a rational polynomial record")
    return XPoly(parse_fraction(c) for c in d["coefficients"])
