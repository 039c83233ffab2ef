"""q-Bernoulli polynomials from their defining integral.

B_n(X) is the monic degree-n polynomial whose Jackson integral from X to
qX + 1 is (q - 1) X^(n+1) + X^n.  Matching coefficients gives a square
linear system over Q(q), solved exactly here.

Run:  python3 demos/04_qbernoulli.py
"""
from qbern import X, Q, beta_number, jackson_integral, qbernoulli
from qbern.bernoulli import build_system

sys = build_system(2)
print("system for n = 2 (row j is the X^j coefficient):")
for row, rhs in zip(sys.matrix, sys.rhs):
    print("  [", " | ".join(str(c) for c in row), "]  =", rhs)

for n in range(5):
    r = qbernoulli(n)
    print(f"\nB_{n}(X) = {r.poly}")
    check = jackson_integral(r.poly, X, Q * X + 1)
    print(f"  integral from X to qX+1 = {check}")
    print(f"  B_{n}(0) = {r.number}   Carlitz beta_{n} agrees: {r.number == beta_number(n)}")
