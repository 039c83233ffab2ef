"""q-Bernoulli polynomials built from their Jackson-integral characterisation.

B_n(X) is the unique polynomial whose Jackson integral from X to qX + 1
equals ``(q - 1) X^(n+1) + X^n``.  Writing B_n with unknown coefficients and
comparing powers of X gives a square linear system over Q(q), which
:func:`build_system` assembles and :func:`solve_system` solves exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InconsistencyError, PoleError, UsageError
from .exactq import ONE, Q, ZERO, QRat, bracket
from .qexp import QExpPoly, beta_number, binomial_row, from_xpoly
from .xpoly import (
    X,
    XPoly,
    classical_antiderivative,
    classical_derivative,
    jackson_integral,
    q_antiderivative,
)

__all__ = [
    "LinearSystem",
    "QBernoulliResult",
    "build_system",
    "solve_system",
    "qbernoulli",
    "qbernoulli_double_sum",
    "eq1_rhs",
    "eq1_residual",
    "classical_bernoulli",
    "limit_q_to_1",
    "beta_via_remark",
    "beta_via_F",
]

UPPER_BOUND = Q * X + 1


@dataclass(frozen=True)
class LinearSystem:
    matrix: tuple[tuple[QRat, ...], ...]
    rhs: tuple[QRat, ...]

    @property
    def size(self) -> int:
        return len(self.rhs)


@dataclass(frozen=True)
class QBernoulliResult:
    n: int
    poly: XPoly            # B_n(X)
    antiderivative: XPoly  # F_n(X), q-antiderivative with F_n(0) = 0
    number: QRat           # B_n(0)


def eq1_rhs(n: int) -> XPoly:
    """``(q - 1) X^(n+1) + X^n``."""
    return XPoly.monomial(n + 1, Q - 1) + XPoly.monomial(n)


def eq1_residual(P: XPoly, n: int) -> XPoly:
    return jackson_integral(P, X, UPPER_BOUND) - eq1_rhs(n)


@lru_cache(maxsize=None)
def _monomial_image(k: int) -> XPoly:
    # Jackson integral of t^k from X to qX + 1
    return jackson_integral(XPoly.monomial(k), X, UPPER_BOUND)


def build_system(n: int) -> LinearSystem:
    """Coefficient-matching system for B_n; row j is the X^j coefficient.

    All n + 1 coefficients are unknowns, including the leading one.  The
    remaining X^(n+1) equation is left out here and checked by
    :func:`qbernoulli` once the solution is known.
    """
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")
    columns = [_monomial_image(k) for k in range(n + 1)]
    for k, col in enumerate(columns):
        # the image of t^k has degree k + 1, so the system has n + 2 rows at most
        assert col.degree == k + 1
    matrix = tuple(tuple(columns[k][j] for k in range(n + 1)) for j in range(n + 1))
    target = eq1_rhs(n)
    rhs = tuple(target[j] for j in range(n + 1))
    return LinearSystem(matrix, rhs)


def solve_system(sys: LinearSystem, *, check: bool = True) -> list:
    """Exact Gaussian elimination, first nonzero pivot in each column.

    Works over any exact field whose elements support ``+ - * /`` and a
    truthiness test for zero (QRat, Fraction).  The residual is checked
    before returning unless ``check`` is false, for callers that run a
    stronger check of their own.
    """
    n = sys.size
    if any(len(row) != n for row in sys.matrix):
        raise UsageError("matrix must be square and match the rhs length")
    a = [list(row) + [b] for row, b in zip(sys.matrix, sys.rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise InconsistencyError(f"singular system: no pivot in column {col}")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
        prow = a[col]
        inv = 1 / prow[col]
        for r in range(col + 1, n):
            f = a[r][col]
            if not f:
                continue
            f = f * inv
            row = a[r]
            row[col] = row[col] * 0
            for c in range(col + 1, n + 1):
                if prow[c]:
                    row[c] = row[c] - f * prow[c]
    x = [None] * n
    for r in range(n - 1, -1, -1):
        acc = a[r][n]
        for c in range(r + 1, n):
            if a[r][c]:
                acc = acc - a[r][c] * x[c]
        x[r] = acc / a[r][r]
    if not check:
        return x
    for row, b in zip(sys.matrix, sys.rhs):
        lhs = b * 0
        for m, v in zip(row, x):
            if m:
                lhs = lhs + m * v
        if lhs != b:
            raise InconsistencyError("residual check failed after elimination")
    return x


@lru_cache(maxsize=None)
def qbernoulli(n: int) -> QBernoulliResult:
    """Solve for B_n(X) and check everything the construction promises."""
    # eq1_residual below re-checks every row of the system plus the X^(n+1)
    # equation, so the solver's own residual pass would be redundant
    sol = solve_system(build_system(n), check=False)
    if sol[n] != ONE:
        raise InconsistencyError(f"leading coefficient of B_{n} solved to {sol[n]}, not 1")
    poly = XPoly(sol)
    if eq1_residual(poly, n):
        raise InconsistencyError(f"B_{n} does not satisfy the defining integral identity")
    F = q_antiderivative(poly)
    number = poly[0]
    if F[0] or classical_derivative(F)[0] != number:
        raise InconsistencyError(f"F_{n} is inconsistent with B_{n}")
    return QBernoulliResult(n=n, poly=poly, antiderivative=F, number=number)


def qbernoulli_double_sum(n: int) -> XPoly:
    """B_n(X) rebuilt from the Carlitz numbers through a double binomial sum.

    ``sum_{k<=n} sum_{i<=k} C(n,k) C(k,i) beta_k (q-1)^i [m]_q/m X^(m-1)``
    with ``m = n + i - k + 1``.  Shares no code with the linear solver.
    """
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")
    coeffs = [ZERO] * (n + 1)
    rn = binomial_row(n)
    for k in range(n + 1):
        bk = beta_number(k)
        rk = binomial_row(k)
        for i in range(k + 1):
            m = n + i - k + 1
            term = bk * (Q - 1) ** i * bracket(m) * Fraction(rn[k] * rk[i], m)
            coeffs[m - 1] = coeffs[m - 1] + term
    return XPoly(coeffs)


@lru_cache(maxsize=None)
def classical_bernoulli(n: int) -> XPoly:
    """Classical B_n(X) from ``integral_X^{X+1} P(t) dt = X^n`` over Q.

    Matching the X^j coefficients for j = 0..n gives an upper-triangular
    system with unit diagonal, solved by back substitution in Fractions.
    """
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")

    # image of t^k is ((X+1)^(k+1) - X^(k+1))/(k+1); its X^j coefficient:
    def entry(j: int, k: int) -> Fraction:
        return Fraction(binomial_row(k + 1)[j], k + 1) if j <= k else Fraction(0)

    a = [Fraction(0)] * (n + 1)
    for j in range(n, -1, -1):
        s = Fraction(int(j == n))
        for k in range(j + 1, n + 1):
            s -= entry(j, k) * a[k]
        a[j] = s / entry(j, j)
    P = XPoly(a)
    G = classical_antiderivative(P)
    if G(X + 1) - G(X) != XPoly.monomial(n):
        raise InconsistencyError(f"classical system for n={n} is inconsistent")
    return P


def limit_q_to_1(P: XPoly) -> XPoly:
    """Coefficientwise value at q = 1; a surviving pole is an error."""
    out = []
    for k, c in enumerate(P.coeffs):
        try:
            out.append(c.limit_at_1())
        except PoleError as exc:
            raise PoleError(1, index=k) from exc
    return XPoly(out)


def _y_from_s(P: XPoly) -> QExpPoly:
    return QExpPoly(P.coeffs)


def beta_via_remark(n: int) -> QExpPoly:
    """beta_n from the q-integral of ``((t - 1)/(q - 1))^n`` on [0, s], s = q^X."""
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")
    base = (X - 1) / (Q - 1)
    G = q_antiderivative(base ** n)
    return _y_from_s(classical_derivative(G))


def beta_via_F(n: int) -> QExpPoly:
    """beta_n as F_n' evaluated at ``[X]_q``."""
    return from_xpoly(classical_derivative(qbernoulli(n).antiderivative))
