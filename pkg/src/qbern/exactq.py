"""Exact arithmetic in Q and in the rational-function field Q(q).

Scalars of Q are :class:`fractions.Fraction`.  Polynomials in ``q`` are
little-endian tuples of coefficients.  A :class:`QRat` stores an element of
Q(q) in one fixed canonical form::

    value = content * prim / den

where ``prim`` and ``den`` are primitive integer polynomials with positive
leading coefficient, ``gcd(prim, den) = 1`` and ``content`` is a Fraction.
Structural equality of canonical forms is equality in Q(q).
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence, Union

from .errors import DomainError, PoleError

__all__ = [
    "QRat",
    "Q",
    "ONE",
    "ZERO",
    "bracket",
    "qpoly_gcd",
    "qrat_add",
    "qrat_mul",
    "qrat_neg",
    "qrat_div",
    "qrat_eval",
    "qrat_limit_at_1",
    "format_fraction",
    "parse_fraction",
]

IntPoly = tuple  # tuple[int, ...], little-endian, trimmed
Scalar = Union[int, Fraction]

# Mersenne prime used for the cheap "gcd is trivial" test.
_PRIME = (1 << 31) - 1


# ---------------------------------------------------------------------------
# integer polynomial kernel
# ---------------------------------------------------------------------------

def _trim(cs) -> IntPoly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pscale(a: IntPoly, k: int) -> IntPoly:
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def _pmul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _pscale(b, a[0])
    if len(b) == 1:
        return _pscale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _primitive(a: IntPoly) -> tuple[int, IntPoly]:
    """Split ``a`` into ``(content, prim)`` with ``prim`` positive-leading."""
    if not a:
        return 0, ()
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    if a[-1] < 0:
        g = -g
    if g == 1:
        return 1, a
    return g, tuple(c // g for c in a)


def _pdivexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient ``a / b`` over Z; ``b`` must divide ``a``."""
    if len(b) == 1 and b[0] == 1:
        return a
    if not a:
        return ()
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                r[k + i] -= c * bc
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(q)


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of ``a`` by ``b`` (lc(b)^k * a mod b)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lr * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _gcd_degree_mod_p(a: IntPoly, b: IntPoly) -> int:
    # The degree here bounds the true gcd degree from above when p divides
    # neither leading coefficient, so a 0 answer is always trustworthy.
    p = _PRIME
    x = [c % p for c in a]
    y = [c % p for c in b]
    while y and y[-1] == 0:
        y.pop()
    while y:
        inv = pow(y[-1], -1, p)
        y = [c * inv % p for c in y]  # monic
        dy = len(y) - 1
        body = y[:-1]
        while len(x) > dy and x:
            f = x.pop()
            if f:
                shift = len(x) - dy
                x[shift:] = [(c - f * d) % p for c, d in zip(x[shift:], body)]
            while x and x[-1] == 0:
                x.pop()
        x, y = y, x
    return len(x) - 1


@lru_cache(maxsize=1 << 16)
def _pgcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """GCD of two primitive, positive-leading integer polynomials.

    Memoized: denominators are mostly products of a few q-brackets, so the
    same pairs recur constantly.
    """
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return (1,)
    if a == b:
        return a
    if a[-1] % _PRIME and b[-1] % _PRIME and _gcd_degree_mod_p(a, b) == 0:
        return (1,)
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)[1]
    return a


def _peval(a: IntPoly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _clear_denominators(cs: Sequence[Scalar]) -> tuple[Fraction, IntPoly]:
    """Write a rational-coefficient polynomial as ``scale * int_poly``."""
    cs = [Fraction(c) for c in cs]
    m = 1
    for c in cs:
        m = lcm(m, c.denominator)
    return Fraction(1, m), _trim(int(c * m) for c in cs)


# ---------------------------------------------------------------------------
# Rational formatting helpers (JSON convention "a/b" in lowest terms)
# ---------------------------------------------------------------------------

def format_fraction(x: Scalar) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: Union[str, int, Fraction]) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# Q(q)
# ---------------------------------------------------------------------------

class QRat:
    """An element of Q(q), always kept in canonical reduced form."""

    __slots__ = ("_c", "_p", "_d", "_hash")

    def __init__(self, num: Union["QRat", Scalar, Sequence[Scalar]] = 0,
                 den: Union[Scalar, Sequence[Scalar]] = 1):
        if isinstance(num, QRat) and den == 1:
            self._set(num._c, num._p, num._d)
            return
        nscale, n = _clear_denominators(_as_coeffs(num))
        dscale, d = _clear_denominators(_as_coeffs(den))
        if not d:
            raise DomainError("zero denominator in QRat")
        dc, d = _primitive(d)
        nc, n = _primitive(n)
        if not n:
            self._set(Fraction(0), (), (1,))
            return
        g = _pgcd(n, d)
        if g != (1,):
            n = _pdivexact(n, g)
            d = _pdivexact(d, g)
        self._set(nscale / dscale * Fraction(nc, dc), n, d)

    def _set(self, c, p, d):
        self._c = c
        self._p = p
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, c: Fraction, p: IntPoly, d: IntPoly) -> "QRat":
        obj = object.__new__(cls)
        if c == 0:
            obj._set(Fraction(0), (), (1,))
        else:
            obj._set(c, p, d)
        return obj

    @classmethod
    def const(cls, x: Scalar) -> "QRat":
        x = Fraction(x)
        return cls._raw(x, (1,), (1,))

    @classmethod
    def from_poly(cls, coeffs: Sequence[Scalar]) -> "QRat":
        return cls(coeffs, 1)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "QRat":
        """``c * q**k`` for ``k >= 0``."""
        return cls._raw(Fraction(c), (0,) * k + (1,), (1,))

    # -- canonical components ------------------------------------------------

    @property
    def num(self) -> tuple[Fraction, ...]:
        return tuple(self._c * c for c in self._p)

    @property
    def den(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self._d)

    def int_parts(self) -> tuple[IntPoly, IntPoly]:
        """Integer numerator and denominator with no common integer factor."""
        c = self._c
        return _pscale(self._p, c.numerator), _pscale(self._d, c.denominator)

    def is_zero(self) -> bool:
        return not self._p

    def is_const(self) -> bool:
        return len(self._p) <= 1 and len(self._d) == 1

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise DomainError(f"{self} is not constant in q")
        return self._c

    def __bool__(self):
        return bool(self._p)

    def sign(self) -> int:
        """Sign of the leading numerator coefficient (0 for zero)."""
        return (self._c > 0) - (self._c < 0)

    # -- comparison ----------------------------------------------------------

    def _key(self):
        return (self._c, self._p, self._d)

    def __eq__(self, other):
        if isinstance(other, QRat):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return self.is_const() and self._c == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_const():
                self._hash = hash(self._c)
            else:
                self._hash = hash(self._key())
        return self._hash

    # -- field operations -----------------------------------------------------

    def __neg__(self):
        return QRat._raw(-self._c, self._p, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._p:
            return other
        if not other._p:
            return self
        a_c, a_p, a_d = self._key()
        b_c, b_p, b_d = other._key()
        if a_d == b_d:
            g = a_d
            e1 = e2 = (1,)
        else:
            g = _pgcd(a_d, b_d)
            e1 = _pdivexact(a_d, g)
            e2 = _pdivexact(b_d, g)
        u1, v1 = a_c.numerator, a_c.denominator
        u2, v2 = b_c.numerator, b_c.denominator
        m = _padd(_pscale(_pmul(a_p, e2), u1 * v2), _pscale(_pmul(b_p, e1), u2 * v1))
        if not m:
            return ZERO
        mc, m = _primitive(m)
        d = _pmul(a_d, e2)
        # m is coprime to e1*e2, so only the shared factor g can cancel
        h = _pgcd(m, g) if len(g) > 1 else (1,)
        if h != (1,):
            m = _pdivexact(m, h)
            d = _pdivexact(d, h)
        return QRat._raw(Fraction(mc, v1 * v2), m, d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QRat._raw(self._c * other, self._p, self._d)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c = self._c * other._c
        if c == 0:
            return ZERO
        g1 = _pgcd(self._p, other._d)
        g2 = _pgcd(other._p, self._d)
        p = _pmul(_pdivexact(self._p, g1), _pdivexact(other._p, g2))
        d = _pmul(_pdivexact(self._d, g2), _pdivexact(other._d, g1))
        return QRat._raw(c, p, d)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if not self._p:
            raise DomainError("division by the zero rational function")
        return QRat._raw(1 / self._c, self._d, self._p)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return ONE
        base = self if k > 0 else self.inverse()
        k = abs(k)
        # powers of coprime primitive polynomials stay coprime and primitive
        p, d = (1,), (1,)
        bp, bd = base._p, base._d
        e = k
        while e:
            if e & 1:
                p, d = _pmul(p, bp), _pmul(d, bd)
            e >>= 1
            if e:
                bp, bd = _pmul(bp, bp), _pmul(bd, bd)
        return QRat._raw(base._c ** k, p, d)

    # -- evaluation ---------------------------------------------------------------

    def evaluate(self, q0: Scalar) -> Fraction:
        q0 = Fraction(q0)
        dv = _peval(self._d, q0)
        if dv == 0:
            raise PoleError(q0)
        return self._c * _peval(self._p, q0) / dv

    def limit_at_1(self) -> Fraction:
        return self.evaluate(1)

    # -- serialisation --------------------------------------------------------

    def to_dict(self) -> dict:
        return {"num": [format_fraction(c) for c in self.num],
                "den": [format_fraction(c) for c in self.den]}

    @classmethod
    def from_dict(cls, d: dict) -> "QRat":
        return cls([parse_fraction(c) for c in d["num"]],
                   [parse_fraction(c) for c in d["den"]])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, s: str) -> "QRat":
        return cls.from_dict(json.loads(s))

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"QRat({self})"

    def __str__(self):
        n, d = self.int_parts()
        if not n:
            return "0"
        ns = format_qpoly(n)
        if d == (1,):
            return ns
        if len([c for c in n if c]) > 1:
            ns = f"({ns})"
        ds = format_qpoly(d)
        if len([c for c in d if c]) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"


def _as_coeffs(x) -> Sequence[Scalar]:
    if isinstance(x, (int, Fraction)):
        return (x,)
    if isinstance(x, QRat):
        raise TypeError("nested QRat construction; use QRat arithmetic")
    return tuple(x)


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, (int, Fraction)):
        return QRat.const(x)
    return NotImplemented


def format_qpoly(cs: Sequence[Scalar], var: str = "q") -> str:
    """Plain-text rendering of a polynomial in ``var``, descending powers."""
    terms = []
    for k in range(len(cs) - 1, -1, -1):
        c = Fraction(cs[k])
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


ZERO = QRat._raw(Fraction(0), (), (1,))
ONE = QRat.const(1)
Q = QRat.monomial(1)


# ---------------------------------------------------------------------------
# functional surface
# ---------------------------------------------------------------------------

def qrat_add(a: QRat, b: QRat) -> QRat:
    return a + b


def qrat_mul(a: QRat, b: QRat) -> QRat:
    return a * b


def qrat_neg(a: QRat) -> QRat:
    return -a


def qrat_div(a: QRat, b: QRat) -> QRat:
    return a / b


def qpoly_gcd(a: Sequence[Scalar], b: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """GCD in Q[q], returned unit-normal: primitive over Z, leading term > 0.

    ``a`` and ``b`` are little-endian coefficient sequences.
    """
    _, ai = _clear_denominators(a)
    _, bi = _clear_denominators(b)
    if not ai and not bi:
        raise DomainError("gcd(0, 0) is undefined")
    ap = _primitive(ai)[1]
    bp = _primitive(bi)[1]
    if not ap:
        g = bp
    elif not bp:
        g = ap
    else:
        g = _pgcd(ap, bp)
    return tuple(Fraction(c) for c in g)


@lru_cache(maxsize=None)
def bracket(n: int) -> QRat:
    """The q-integer ``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise DomainError(f"bracket needs n >= 0, got {n}")
    if n == 0:
        return ZERO
    return QRat._raw(Fraction(1), (1,) * n, (1,))


def qrat_eval(r: QRat, q0: Scalar) -> Fraction:
    return r.evaluate(q0)


def qrat_limit_at_1(r: QRat) -> Fraction:
    """Value at ``q = 1`` of a coefficient known to be regular there.

    Only the cancellation done by canonical reduction is used; a pole that
    survives it raises :class:`PoleError`.
    """
    return r.evaluate(1)
