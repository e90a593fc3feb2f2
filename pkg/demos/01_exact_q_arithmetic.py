#!/usr/bin/env python3
"""Tour of the exact arithmetic layer.

Everything lives in the field of rational functions of q^(1/2), stored in
the variable Q = q^(1/2) so half powers stay integral.  No floats anywhere:
equality below is structural equality of canonical forms.
"""

from fractions import Fraction

from qcactus.qexact import (
    ONE,
    Qpow,
    is_regular_at_infinity,
    monomial_sqrt,
    parse_qrational,
    qpow,
    quantum_int,
    reduce_mod_qhalf,
)

q, qi, Q = qpow(1), qpow(-1), Qpow(1)

print("balanced q-integers")
for n in range(5):
    print(f"  [{n}] = {quantum_int(n)}   (value at q=1: {quantum_int(n).evaluate(1)})")

print("\nthe defining quotient reproduces them exactly:")
lhs = (qpow(3) - qpow(-3)) / (q - qi)
print(f"  (q^3 - q^-3)/(q - q^-1) = {lhs}  ==  [3] ? {lhs == quantum_int(3)}")

print("\nfield arithmetic is exact:")
x = (q * q - 1) / (1 + q * q)
y = (2 * q) / (1 + q * q)
print(f"  x = {x}")
print(f"  y = {y}")
print(f"  x + y = {x + y}")
print(f"  x * (1/x) = {x * (ONE / x)}")

print("\nregularity at q = infinity decides membership in the lattice ring:")
for a in (y, Q, (q - qi) * Qpow(-1)):
    print(f"  {str(a):24} regular? {is_regular_at_infinity(a)}")

print("\nreduction at q = infinity (constant term in q^(-1/2)):")
for a in (x, y):
    print(f"  {str(a):24} -> {reduce_mod_qhalf(a)}")

print("\nmonomial square roots with the positive branch:")
for a in (q, qpow(-3), 4 * q * q):
    print(f"  sqrt({a}) = {monomial_sqrt(a)}")

print("\ncanonical strings round-trip through the parser:")
s = str(x)
print(f"  parse({s!r}) == x ? {parse_qrational(s) == x}")

print("\nexact evaluation anywhere:")
print(f"  x at Q=2 is {x.evaluate(2)}, at Q=3 is {x.evaluate(Fraction(3))}")
