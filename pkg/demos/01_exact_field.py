"""Arithmetic in Q(q): every value is kept in one canonical reduced form.

Run:  python3 demos/01_exact_field.py
"""
from qbern import Q, QRat, bracket

print("q-brackets [n]_q = 1 + q + ... + q^(n-1):")
for n in range(1, 6):
    print(f"  [{n}]_q = {bracket(n)}")

x = (Q**2 - 1) / (Q - 1)
print("\n(q^2 - 1)/(q - 1) reduces on construction to", x)

y = 1 / (Q + 1) + Q / (Q**2 + Q + 1)
print("1/(q+1) + q/(q^2+q+1) =", y)
print("  its value at q = 2:", y.evaluate(2))
print("  its limit as q -> 1:", y.limit_at_1())

# equal values compare equal whatever route built them
a = bracket(6) / bracket(3)
b = Q**3 + 1
print("\n[6]_q/[3]_q == q^3 + 1 ?", a == b)

print("\nJSON form of 1/[2]_q:", (1 / bracket(2)).to_json())
print("and back:", QRat.from_json((1 / bracket(2)).to_json()))
