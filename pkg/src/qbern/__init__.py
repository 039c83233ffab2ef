"""Exact q-Bernoulli polynomials defined through the Jackson integral.

The polynomials B_n(X) are obtained from an exact linear solve over the field
Q(q) and checked against Carlitz's q-Bernoulli polynomials and numbers.
"""
from .bernoulli import (
    QBernoulliResult,
    beta_via_F,
    beta_via_remark,
    classical_bernoulli,
    limit_q_to_1,
    qbernoulli,
    qbernoulli_double_sum,
)
from .errors import DomainError, InconsistencyError, PoleError, QBernError, UsageError
from .exactq import ONE, Q, ZERO, QRat, bracket
from .qexp import QExpPoly, Y, beta, beta_number, eta, eta_number
from .verify import Identity, VerifyReport, run_identity, run_suite
from .xpoly import X, XPoly, jackson_integral, q_antiderivative, q_derivative

__all__ = [
    "DomainError", "Identity", "InconsistencyError", "ONE", "PoleError", "Q",
    "QBernError", "QBernoulliResult", "QExpPoly", "QRat", "UsageError", "VerifyReport",
    "X", "XPoly", "Y", "ZERO", "beta", "beta_number", "beta_via_F", "beta_via_remark",
    "bracket", "classical_bernoulli", "eta", "eta_number", "jackson_integral",
    "limit_q_to_1", "q_antiderivative", "q_derivative", "qbernoulli",
    "qbernoulli_double_sum", "run_identity", "run_suite",
]

__version__ = "0.1.0"
