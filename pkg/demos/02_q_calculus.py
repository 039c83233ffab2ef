"""The q-derivative, the q-antiderivative and the Jackson integral.

For polynomials the Jackson integral is exact: it is a difference of
antiderivative values, just as in ordinary calculus.

Run:  python3 demos/02_q_calculus.py
"""
from qbern import Q, X, XPoly, jackson_integral, q_antiderivative, q_derivative

P = X**3 + 2 * X
print("P(X)       =", P)
print("D_q P      =", q_derivative(P))
print("q-antideriv =", q_antiderivative(P))
print("round trip D_q(antideriv P) == P ?", q_derivative(q_antiderivative(P)) == P)

zero, one = XPoly.const(0), XPoly.const(1)
I = jackson_integral(X**2, zero, one)[0]
print("\nintegral_0^1 t^2 d_q t =", I)
print("  at q = 1/2:", I.evaluate("1/2"), "  at q = 2:", I.evaluate(2), "  q -> 1:", I.limit_at_1())

# the bounds may themselves be polynomials in X
print("\nintegral from X to qX + 1 of 1 =", jackson_integral(XPoly.const(1), X, Q * X + 1))
