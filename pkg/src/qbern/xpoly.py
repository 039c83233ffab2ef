"""Polynomials in X over Q(q) and the q-calculus operators acting on them."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Union

from .exactq import ONE, ZERO, QRat, bracket

__all__ = [
    "XPoly",
    "X",
    "q_derivative",
    "q_antiderivative",
    "jackson_integral",
    "classical_derivative",
    "classical_antiderivative",
    "substitute",
]

Coeff = Union[QRat, int, Fraction]


def _qrat(c) -> QRat:
    return c if isinstance(c, QRat) else QRat.const(c)


class DensePoly:
    """Dense little-endian polynomial with :class:`QRat` coefficients.

    Subclasses only fix the name of the indeterminate; arithmetic never mixes
    two different subclasses.
    """

    variable = "T"
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_qrat(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[QRat, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: Coeff = 1):
        return cls([ZERO] * k + [_qrat(c)])

    @classmethod
    def const(cls, c: Coeff):
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> QRat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return type(self) is type(other) and self.coeffs == other.coeffs
        if isinstance(other, (QRat, int, Fraction)):
            return self.coeffs == type(self).const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (QRat, int, Fraction)):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return type(self)(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (QRat, int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return type(self)()
        out = [ZERO] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return type(self)(out)

    __rmul__ = __mul__

    def scale(self, c: Coeff):
        c = _qrat(c)
        return type(self)(a * c for a in self.coeffs)

    def __truediv__(self, c: Coeff):
        if isinstance(c, DensePoly):
            return NotImplemented
        return self.scale(ONE / _qrat(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = type(self).const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __call__(self, value):
        """Horner evaluation at a scalar or at another polynomial."""
        acc = value * 0 if isinstance(value, DensePoly) else ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coeffs(self, f):
        return type(self)(f(c) for c in self.coeffs)

    # -- serialisation -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"variable": self.variable,
                "coefficients": [c.to_dict() for c in self.coeffs]}

    @classmethod
    def from_dict(cls, d: dict):
        if d.get("variable") != cls.variable:
            raise ValueError(f"expected variable {cls.variable!r}, got {d.get('variable')!r}")
        return cls(QRat.from_dict(c) for c in d["coefficients"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, s: str):
        return cls.from_dict(json.loads(s))

    # -- display --------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            sign = "-" if c.sign() < 0 else "+"
            mag = -c if sign == "-" else c
            if k == 0:
                term = str(mag)
            else:
                mono = self.variable if k == 1 else f"{self.variable}^{k}"
                if mag == 1:
                    term = mono
                else:
                    body = str(mag)
                    if " " in body and not body.startswith("("):
                        body = f"({body})"
                    term = f"{body}*{mono}"
            parts.append((sign, term))
        sign, term = parts[0]
        out = ("-" if sign == "-" else "") + term
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class XPoly(DensePoly):
    """Polynomial in the indeterminate X with coefficients in Q(q)."""

    variable = "X"
    __slots__ = ()


X = XPoly.monomial(1)


def q_derivative(P: XPoly) -> XPoly:
    """D_q, acting by ``X^k -> [k]_q X^(k-1)``."""
    return XPoly(P[k] * bracket(k) for k in range(1, len(P)))


def q_antiderivative(P: XPoly) -> XPoly:
    """The unique polynomial F with D_q F = P and F(0) = 0."""
    return XPoly([ZERO] + [c / bracket(k + 1) for k, c in enumerate(P.coeffs)])


def substitute(P: XPoly, s: XPoly) -> XPoly:
    """Composition P(s(X))."""
    return P(s)


def jackson_integral(P: XPoly, a: XPoly, b: XPoly) -> XPoly:
    """Jackson integral of P between polynomial bounds ``a`` and ``b``.

    Evaluated as F(b) - F(a) with F the q-antiderivative vanishing at 0.
    """
    a = a if isinstance(a, XPoly) else XPoly.const(a)
    b = b if isinstance(b, XPoly) else XPoly.const(b)
    F = q_antiderivative(P)
    return F(b) - F(a)


def classical_derivative(P: XPoly) -> XPoly:
    return XPoly(P[k] * k for k in range(1, len(P)))


def classical_antiderivative(P: XPoly) -> XPoly:
    return XPoly([ZERO] + [c * Fraction(1, k + 1) for k, c in enumerate(P.coeffs)])
