"""The Jackson integral as an actual series, next to the exact answer.

For 0 < q < 1 the series samples the integrand at b q^k; for q > 1 at b q^-k.
Both truncated sums are compared with the closed form from the
antiderivative.

Run:  python3 demos/06_numeric_jackson.py
"""
from fractions import Fraction

from qbern import X, qbernoulli
from qbern.verify import NumericSample, numeric_jackson

for q0 in (Fraction(1, 2), Fraction(2)):
    print(f"q0 = {q0}")
    for k in range(4):
        series, closed = numeric_jackson(X**k, NumericSample(q0))
        print(f"  t^{k}: series {series:.15f}  closed {closed:.15f}  diff {abs(series - closed):.1e}")
    # over [0, 1] the integral of B_n vanishes for n >= 1 (set X = 0 in the
    # defining identity), so take [0, 2] for something less trivial
    series, closed = numeric_jackson(qbernoulli(3).poly, NumericSample(q0, 0, 2))
    print(f"  B_3 on [0, 2]: series {series:.15f}  closed {closed:.15f}  diff {abs(series - closed):.1e}")
