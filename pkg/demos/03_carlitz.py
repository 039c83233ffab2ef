"""Carlitz's eta and beta sequences, written in Y = q^X.

Run:  python3 demos/03_carlitz.py
"""
from qbern import beta, beta_number, eta, eta_number
from qbern.qexp import eval_at_integer, power_sum

for n in range(4):
    print(f"beta_{n}(X) = {beta(n)}")
print()
for n in range(4):
    print(f"beta_{n}     = {beta_number(n)}")

print("\neta_n at X = N minus eta_n(0) is n times a q-power sum:")
n = 2
for N in range(1, 5):
    lhs = n * power_sum(n, N)
    rhs = eval_at_integer(eta(n), N) - eta_number(n)
    print(f"  N = {N}: {lhs}   {'==' if lhs == rhs else '!='}   eta_2({N}) - eta_2(0)")
