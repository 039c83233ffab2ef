"""As q -> 1 the q-Bernoulli polynomials become the classical ones.

Run:  python3 demos/05_limit_q_to_1.py
"""
from qbern import classical_bernoulli, limit_q_to_1, qbernoulli

print(f"{'n':>2}  limit of B_n(X) as q -> 1")
for n in range(7):
    lim = limit_q_to_1(qbernoulli(n).poly)
    ok = "ok" if lim == classical_bernoulli(n) else "MISMATCH"
    print(f"{n:>2}  {lim}   [{ok}]")
