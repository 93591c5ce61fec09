"""
A walk through the coefficient ring Z[s, s^-1].

Everything in this package is exact: coefficients are arbitrary-precision
integers and there is never a float in sight.  Run me with

    python demos/01_laurent_ring.py
"""

from qyoung.laurent import LaurentPoly, ONE, S, qint

# Build values from the variable itself, from (exponent, coefficient)
# pairs, or from plain integers.
z = S - S**-1
print("the quadratic-relation parameter z =", z)

x = LaurentPoly.from_pairs([(-1, 1), (0, 2), (3, 1)])
print("a value built from pairs:", x)

# Arithmetic is the usual ring arithmetic, always in canonical form.
print("(s - s^-1)(s + s^-1) =", z * (S + S**-1))
print("(1 + s)(1 - s + s^2)  =", (ONE + S) * LaurentPoly.from_pairs([(0, 1), (1, -1), (2, 1)]))

# Exact division either succeeds exactly or refuses loudly.
top = LaurentPoly.monomial(5) - LaurentPoly.monomial(-5)
print("(s^5 - s^-5) / (s - s^-1) =", top.exact_div(z))

# Quantum integers are the balanced ones: [k] = s^(k-1) + s^(k-3) + ...
for k in range(1, 6):
    print(f"[{k}] =", qint(k))

# They specialize to the classical integers at s = 1 and are palindromic.
print("[5] at s=1:", qint(5).eval_at_one())
print("[5] under s -> s^-1:", qint(5).invert_variable())
