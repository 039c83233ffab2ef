"""q-polynomials: polynomials in Y = q^X with coefficients in Q(q).

Carlitz's sequences eta_n and beta_n live here, together with the mixed basis
``Y^k [X]_q^(n-k)`` and the bridge ``t -> [X]_q = (Y - 1)/(q - 1)`` that carries
an ordinary polynomial in t to a q-polynomial.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import UsageError
from .exactq import ONE, Q, ZERO, QRat, bracket
from .xpoly import DensePoly, XPoly

__all__ = [
    "QExpPoly",
    "Y",
    "QBRACKET_X",
    "binomial_row",
    "eta",
    "beta",
    "eta_number",
    "beta_number",
    "mixed_basis_expansion",
    "scaled_x_derivative",
    "from_xpoly",
    "eval_at_integer",
    "at_zero",
    "power_sum",
]


class QExpPoly(DensePoly):
    """Polynomial in Y, where Y stands for q^X."""

    variable = "Y"
    __slots__ = ()

    def to_dict(self) -> dict:
        d = super().to_dict()
        return {"variable": "Y", "meaning": "q^X", "coefficients": d["coefficients"]}


Y = QExpPoly.monomial(1)
# [X]_q = (q^X - 1)/(q - 1)
QBRACKET_X = (Y - 1) / (Q - 1)


@lru_cache(maxsize=None)
def binomial_row(n: int) -> tuple[int, ...]:
    """Row n of Pascal's triangle, built by the additive recurrence."""
    if n == 0:
        return (1,)
    prev = binomial_row(n - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(n - 1)) + (1,)


def _k_over_bracket(k: int) -> QRat:
    # k/[k]_q with the value 1 at k = 0
    return ONE if k == 0 else QRat.const(k) / bracket(k)


def _carlitz(n: int, shift: int) -> QExpPoly:
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")
    row = binomial_row(n)
    pref = (Q - 1) ** -n
    coeffs = []
    for k in range(n + 1):
        sign = -1 if (n - k) % 2 else 1
        coeffs.append(pref * (sign * row[k]) * _k_over_bracket(k + shift))
    return QExpPoly(coeffs)


@lru_cache(maxsize=None)
def eta(n: int) -> QExpPoly:
    """Carlitz's eta_n as a polynomial in Y."""
    return _carlitz(n, 0)


@lru_cache(maxsize=None)
def beta(n: int) -> QExpPoly:
    """Carlitz's q-Bernoulli polynomial beta_n as a polynomial in Y."""
    return _carlitz(n, 1)


def at_zero(P: QExpPoly) -> QRat:
    """Value at X = 0, i.e. at Y = 1."""
    acc = ZERO
    for c in P.coeffs:
        acc = acc + c
    return acc


def eta_number(n: int) -> QRat:
    return at_zero(eta(n))


def beta_number(n: int) -> QRat:
    return at_zero(beta(n))


def mixed_basis_expansion(coeffs: Sequence[QRat], n: int) -> QExpPoly:
    """Sum of ``C(n,k) c_k Y^k [X]_q^(n-k)`` over ``0 <= k <= n``."""
    if len(coeffs) != n + 1:
        raise UsageError(f"expected {n + 1} coefficients, got {len(coeffs)}")
    row = binomial_row(n)
    powers = [QExpPoly.const(1)]
    for _ in range(n):
        powers.append(powers[-1] * QBRACKET_X)
    total = QExpPoly()
    for k, c in enumerate(coeffs):
        total = total + QExpPoly.monomial(k, c) * powers[n - k] * row[k]
    return total


def scaled_x_derivative(P: QExpPoly) -> QExpPoly:
    """d/dX with the factor log q divided out: ``Y^k -> k Y^k``."""
    return QExpPoly(c * k for k, c in enumerate(P.coeffs))


def from_xpoly(P: XPoly) -> QExpPoly:
    """Substitute ``t = [X]_q`` into an ordinary polynomial."""
    return P(QBRACKET_X)


def eval_at_integer(P: QExpPoly, N: int) -> QRat:
    """Value at X = N, i.e. with Y replaced by q^N."""
    if N < 0:
        raise UsageError(f"N must be >= 0, got {N}")
    return P(QRat.monomial(N))


def power_sum(n: int, N: int) -> QRat:
    """``sum_{k=0}^{N-1} q^k [k]_q^(n-1)`` by direct summation."""
    if n < 1 or N < 1:
        raise UsageError(f"power_sum needs n, N >= 1, got n={n}, N={N}")
    total = ZERO
    for k in range(N):
        total = total + QRat.monomial(k) * bracket(k) ** (n - 1)
    return total
