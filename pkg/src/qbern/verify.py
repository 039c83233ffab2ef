"""Identity checks with structured reports, and the numeric Jackson-series check.

Every exact identity is decided by comparing canonical forms in Q(q), Q(q)[X]
or Q(q)[Y]; no floating point is involved.  Only ``NUM_JACKSON`` evaluates the
defining series of the Jackson integral in double precision.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Optional

from .bernoulli import (
    UPPER_BOUND,
    beta_via_F,
    beta_via_remark,
    classical_bernoulli,
    eq1_rhs,
    limit_q_to_1,
    qbernoulli,
    qbernoulli_double_sum,
)
from .errors import QBernError, UsageError
from .exactq import Q, QRat, bracket, format_fraction
from .qexp import (
    QBRACKET_X,
    Y,
    beta,
    beta_number,
    eta,
    eta_number,
    eval_at_integer,
    from_xpoly,
    mixed_basis_expansion,
    power_sum,
    scaled_x_derivative,
)
from .xpoly import X, XPoly, classical_derivative, jackson_integral

__all__ = [
    "Identity",
    "VerifyReport",
    "NumericSample",
    "DEFAULT_MAX_N",
    "CARLITZ_TABLE",
    "numeric_jackson",
    "check_eq1",
    "run_identity",
    "run_suite",
    "suite_grid",
    "numeric_fixtures",
    "report_lines",
    "summary",
]

DEFAULT_MAX_N = 12
DEFAULT_TRUNCATION = 200
DEFAULT_TOLERANCE = 1e-10
DOUBLE_SUM_MAX_N = 8
NUMERIC_Q0 = (Fraction(1, 2), Fraction(2))


class Identity(str, enum.Enum):
    EQ1 = "EQ1"
    EQ6 = "EQ6"
    EQ7 = "EQ7"
    EQ8 = "EQ8"
    PROP2 = "PROP2"
    PROP3 = "PROP3"
    PROP4 = "PROP4"
    THM1 = "THM1"
    COR1 = "COR1"
    COR2 = "COR2"
    THM2 = "THM2"
    REMARK_F = "REMARK_F"
    REMARK_BETA = "REMARK_BETA"
    NUM_JACKSON = "NUM_JACKSON"

    @classmethod
    def parse(cls, tag) -> "Identity":
        try:
            return cls(tag) if not isinstance(tag, cls) else tag
        except ValueError:
            raise UsageError(f"unknown identity tag {tag!r}") from None


# first four Carlitz numbers, written exactly as the closed forms in brackets
CARLITZ_TABLE = {
    0: QRat.const(1),
    1: -1 / bracket(2),
    2: Q / (bracket(2) * bracket(3)),
    3: -Q * (Q - 1) / (bracket(3) * bracket(4)),
}


@dataclass(frozen=True)
class VerifyReport:
    identity: Identity
    params: dict
    passed: bool
    lhs: Any = None
    rhs: Any = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"identity": self.identity.value,
               "params": _params_json(self.params),
               "passed": self.passed}
        if not self.passed:
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        out["detail"] = self.detail
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"), sort_keys=False)


@dataclass(frozen=True)
class NumericSample:
    q0: Fraction
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(1)
    truncation: int = DEFAULT_TRUNCATION
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        object.__setattr__(self, "q0", Fraction(self.q0))
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.q0 <= 0 or self.q0 == 1:
            raise UsageError(f"q0 must be positive and different from 1, got {self.q0}")
        if self.truncation < 1:
            raise UsageError("truncation must be >= 1")
        if not self.tolerance > 0:
            raise UsageError("tolerance must be > 0")


def _params_json(params: dict) -> dict:
    return {k: (format_fraction(v) if isinstance(v, Fraction) else v)
            for k, v in params.items()}


def _canon(obj) -> Any:
    return obj.to_dict() if hasattr(obj, "to_dict") else obj


# ---------------------------------------------------------------------------
# numeric Jackson series
# ---------------------------------------------------------------------------

def _series(coeffs: list[float], q: float, bound: float, terms: int) -> float:
    def f(x):
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    if q < 1:
        parts = (q ** n * f(q ** n * bound) for n in range(terms))
        return (1 - q) * bound * math.fsum(parts)
    # for q > 1 the telescoping sum F(b) - F(0) starts at n = 1
    parts = (q ** -n * f(q ** -n * bound) for n in range(1, terms + 1))
    return (q - 1) * bound * math.fsum(parts)


def _tail_bound(coeffs: list[float], q: float, bound: float, terms: int) -> float:
    # |f| <= M on [0, |bound|]; the dropped terms form a geometric tail
    m = sum(abs(c) * abs(bound) ** k for k, c in enumerate(coeffs))
    if q < 1:
        return abs(bound) * m * q ** terms
    return abs(bound) * m * q ** -terms


def numeric_jackson(P: XPoly, sample: NumericSample) -> tuple[float, float]:
    """Truncated Jackson series of P on [a, b] next to the closed form.

    The branch (0 < q0 < 1 or q0 > 1) follows q0.  Raises
    :class:`~qbern.errors.PoleError` if a coefficient of P has a pole at q0
    and :class:`UsageError` if the truncation cannot meet the tolerance.
    """
    q0 = sample.q0
    exact = [c.evaluate(q0) for c in P.coeffs]
    coeffs = [float(c) for c in exact]
    qf = float(q0)
    tail = sum(_tail_bound(coeffs, qf, float(x), sample.truncation)
               for x in (sample.a, sample.b))
    if tail >= sample.tolerance / 10:
        raise UsageError(f"truncation {sample.truncation} leaves a tail bound of {tail:.3g}")
    series = (_series(coeffs, qf, float(sample.b), sample.truncation)
              - _series(coeffs, qf, float(sample.a), sample.truncation))
    closed = jackson_integral(P, XPoly.const(sample.a), XPoly.const(sample.b))
    return series, float(closed[0].evaluate(q0))


def numeric_fixtures() -> list[XPoly]:
    """The integrands 1, t, t^2, t^3."""
    return [XPoly.monomial(k) for k in range(4)]


# ---------------------------------------------------------------------------
# exact identities
# ---------------------------------------------------------------------------

def _compare(tag, params, lhs, rhs, detail="") -> VerifyReport:
    passed = lhs == rhs
    if not detail:
        detail = "sides agree" if passed else "sides differ"
    return VerifyReport(tag, dict(params), passed, _canon(lhs), _canon(rhs), detail)


def check_eq1(poly: XPoly, n: int) -> VerifyReport:
    """Integral of ``poly`` from X to qX + 1 against ``(q-1)X^(n+1) + X^n``."""
    lhs = jackson_integral(poly, X, UPPER_BOUND)
    return _compare(Identity.EQ1, {"n": n}, lhs, eq1_rhs(n))


def _eq6(n):
    return mixed_basis_expansion([eta_number(k) for k in range(n + 1)], n), eta(n)


def _eq7(n):
    return mixed_basis_expansion([beta_number(k) for k in range(n + 1)], n), beta(n)


def _prop2(n, N):
    return power_sum(n, N), (eval_at_integer(eta(n), N) - eta_number(n)) / n


def _prop3(n):
    return scaled_x_derivative(eta(n)), Y * beta(n - 1) * (QRat.const(n) / (Q - 1))


def _prop4(n):
    r = qbernoulli(n)
    return r.poly[0], classical_derivative(r.antiderivative)[0]


def _thm1(n):
    F = qbernoulli(n).antiderivative
    return from_xpoly(F), (eta(n + 1) - eta_number(n + 1)) / (n + 1)


def _remark_f(n):
    # q-integral of B_n from 0 to s taken literally, then d/ds at s = [X]_q
    G = jackson_integral(qbernoulli(n).poly, XPoly(), X)
    return classical_derivative(G)(QBRACKET_X), beta(n)


def _thm2(n) -> tuple[Any, Any, str]:
    lim, oracle = limit_q_to_1(qbernoulli(n).poly), classical_bernoulli(n)
    if lim != oracle:
        return lim, oracle, "limit at q = 1 differs from the classical polynomial"
    if n <= DOUBLE_SUM_MAX_N:
        rebuilt, solved = qbernoulli_double_sum(n), qbernoulli(n).poly
        if rebuilt != solved:
            return rebuilt, solved, "double-sum construction differs from the solver"
        return lim, oracle, "limit matches; double-sum construction matches"
    return lim, oracle, "limit matches"


_EXACT = {
    Identity.EQ6: _eq6,
    Identity.EQ7: _eq7,
    Identity.EQ8: lambda n: (beta_number(n), CARLITZ_TABLE[n]),
    Identity.PROP3: _prop3,
    Identity.PROP4: _prop4,
    Identity.THM1: _thm1,
    Identity.COR1: lambda n: (beta_via_F(n), beta(n)),
    Identity.COR2: lambda n: (qbernoulli(n).number, beta_number(n)),
    Identity.REMARK_F: _remark_f,
    Identity.REMARK_BETA: lambda n: (beta_via_remark(n), beta(n)),
}


def _need_int(params, name, lo, hi):
    if name not in params:
        raise UsageError(f"missing parameter {name!r}")
    v = params[name]
    if isinstance(v, bool) or not isinstance(v, int):
        raise UsageError(f"parameter {name!r} must be an integer")
    if not lo <= v <= hi:
        raise UsageError(f"parameter {name}={v} outside [{lo}, {hi}]")
    return v


def run_identity(tag, params: Optional[dict] = None, *, cap: int = DEFAULT_MAX_N,
                 **kw) -> VerifyReport:
    """Check one identity at one parameter set.

    Parameters may come as a dict or as keywords: ``n`` (degree), ``N``
    (evaluation point, PROP2 only) and ``q0`` (NUM_JACKSON only).  Failure of
    the identity is reported, not raised.
    """
    tag = Identity.parse(tag)
    params = dict(params or {}, **kw)
    lo = 1 if tag in (Identity.PROP2, Identity.PROP3) else 0
    hi = 3 if tag is Identity.EQ8 else cap
    n = _need_int(params, "n", lo, hi)
    extra = set(params) - {"n", "N", "q0"}
    if extra:
        raise UsageError(f"unexpected parameters {sorted(extra)}")

    if tag is Identity.NUM_JACKSON:
        q0 = params.get("q0", NUMERIC_Q0[0])
        try:
            sample = NumericSample(Fraction(q0))
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad q0: {exc}") from None
        series, closed = numeric_jackson(XPoly.monomial(n), sample)
        err = abs(series - closed)
        return VerifyReport(tag, {"n": n, "q0": sample.q0}, err <= sample.tolerance,
                            series, closed,
                            f"integrand t^{n} on [0, 1], |series - closed| = {err:.3e}")

    if tag is Identity.EQ1:
        return check_eq1(qbernoulli(n).poly, n)
    if tag is Identity.PROP2:
        N = _need_int(params, "N", 1, 10**6)
        lhs, rhs = _prop2(n, N)
        return _compare(tag, {"n": n, "N": N}, lhs, rhs)
    if tag is Identity.THM2:
        lhs, rhs, detail = _thm2(n)
        return _compare(tag, {"n": n}, lhs, rhs, detail)
    lhs, rhs = _EXACT[tag](n)
    return _compare(tag, {"n": n}, lhs, rhs)


def suite_grid(max_n: int, max_N: int) -> list[tuple[Identity, dict]]:
    """Every (tag, params) pair run by :func:`run_suite`, in output order."""
    if max_n < 0 or max_N < 1:
        raise UsageError("need max_n >= 0 and max_N >= 1")
    ns = range(max_n + 1)
    pos = range(1, max(max_n, 1) + 1)
    grid = []
    for tag in Identity:
        if tag is Identity.PROP2:
            cells = [{"n": n, "N": N} for n in pos for N in range(1, max_N + 1)]
        elif tag is Identity.PROP3:
            cells = [{"n": n} for n in pos]
        elif tag is Identity.EQ8:
            cells = [{"n": n} for n in range(min(max_n, 3) + 1)]
        elif tag is Identity.NUM_JACKSON:
            cells = [{"n": n, "q0": q0} for n in range(min(max_n, 3) + 1) for q0 in NUMERIC_Q0]
        else:
            cells = [{"n": n} for n in ns]
        cells.sort(key=lambda p: tuple((k, p[k]) for k in sorted(p)))
        grid.extend((tag, p) for p in cells)
    return grid


def run_suite(max_n: int, max_N: int, tags=None) -> list[VerifyReport]:
    """Run every identity over its grid; ordering is by tag, then parameters."""
    wanted = None if tags is None else {Identity.parse(t) for t in tags}
    cap = max(max_n, DEFAULT_MAX_N)
    out = []
    for tag, params in suite_grid(max_n, max_N):
        if wanted is not None and tag not in wanted:
            continue
        try:
            out.append(run_identity(tag, params, cap=cap))
        except QBernError as exc:
            if isinstance(exc, UsageError):
                raise
            out.append(VerifyReport(tag, params, False, None, None,
                                    f"{type(exc).__name__}: {exc}"))
    return out


def summary(reports, elapsed_ms: float) -> dict:
    passed = sum(r.passed for r in reports)
    return {"total": len(reports), "passed": passed,
            "failed": len(reports) - passed, "elapsed_ms": round(elapsed_ms, 3)}


def report_lines(reports, elapsed_ms: Optional[float] = None) -> Iterator[str]:
    """JSON lines: one report per line, then the summary object."""
    for r in reports:
        yield r.to_json()
    if elapsed_ms is not None:
        yield json.dumps(summary(reports, elapsed_ms), separators=(",", ":"))
