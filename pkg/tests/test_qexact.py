import random
from fractions import Fraction

import pytest

from qcactus.qexact import (
    ONE,
    ZERO,
    HalfLaurent,
    QRational,
    Qpow,
    is_regular_at_infinity,
    monomial_sqrt,
    parse_qrational,
    qpow,
    quantum_factorial,
    quantum_int,
    reduce_mod_qhalf,
)

q = qpow(1)
qi = qpow(-1)
Q = Qpow(1)


def test_inverse_of_q_minus_qinv():
    x = q - qi
    assert x * (ONE / x) == ONE


def test_half_power_squares_to_q():
    assert Q * Q == q


def test_addition_with_common_denominator():
    lhs = (q * q - 1) / (1 + q * q) + (2 * q) / (1 + q * q)
    rhs = (q * q + 2 * q - 1) / (1 + q * q)
    assert lhs == rhs
    # cross-check by exact evaluation at two sample points
    for x in (Fraction(2), Fraction(3)):
        assert lhs.evaluate(x) == rhs.evaluate(x)


def test_quantum_int_small_values():
    assert quantum_int(0) == ZERO
    assert quantum_int(1) == ONE
    assert quantum_int(2) == q + qi
    # [3] must agree with the defining quotient (q^3 - q^-3)/(q - q^-1)
    assert quantum_int(3) == q * q + 1 + qi * qi
    assert quantum_int(3) == (qpow(3) - qpow(-3)) / (q - qi)
    assert quantum_int(-2) == -quantum_int(2)


def test_quantum_int_classical_limit():
    for n in range(-6, 7):
        assert quantum_int(n).evaluate(1) == n


def test_quantum_factorial():
    assert quantum_factorial(0) == ONE
    assert quantum_factorial(3) == quantum_int(2) * quantum_int(3)


def test_regularity_at_infinity():
    assert is_regular_at_infinity((2 * q) / (1 + q * q))
    assert not is_regular_at_infinity(Q)
    assert not is_regular_at_infinity((q - qi) * Qpow(-1))
    assert is_regular_at_infinity(ZERO)
    assert is_regular_at_infinity(QRational(7))


def test_reduce_mod_qhalf_values():
    assert reduce_mod_qhalf((q * q - 1) / (1 + q * q)) == 1
    assert reduce_mod_qhalf((2 * q) / (1 + q * q)) == 0
    assert reduce_mod_qhalf(QRational(7)) == 7
    with pytest.raises(ValueError):
        reduce_mod_qhalf(Q)


def _random_regular(rng):
    # regular elements are fractions with numerator degree <= denominator degree
    num = HalfLaurent({k: rng.randint(-3, 3) for k in range(rng.randint(1, 3))})
    den = HalfLaurent({0: 1})
    for _ in range(rng.randint(0, 2)):
        den = den * HalfLaurent({0: rng.randint(1, 3), 1: rng.randint(-2, 2)})
    a = QRational(num, den)
    if not is_regular_at_infinity(a):
        return QRational(1, 1 + rng.randint(1, 3)) * (ONE / a if a else ONE)
    return a


def test_reduce_mod_qhalf_is_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(50):
        a, b = _random_regular(rng), _random_regular(rng)
        if not (is_regular_at_infinity(a) and is_regular_at_infinity(b)):
            continue
        assert reduce_mod_qhalf(a * b) == reduce_mod_qhalf(a) * reduce_mod_qhalf(b)
        assert reduce_mod_qhalf(a + b) == reduce_mod_qhalf(a) + reduce_mod_qhalf(b)


def test_monomial_sqrt():
    assert monomial_sqrt(q) == Q
    assert monomial_sqrt(qpow(-3)) == Qpow(-3)
    assert monomial_sqrt(4 * q * q) == 2 * q
    for bad in (q + 1, -q, Q):
        with pytest.raises(ValueError):
            monomial_sqrt(bad)


def test_monomial_sqrt_squares_back():
    rng = random.Random(3)
    for _ in range(30):
        c = Fraction(rng.randint(1, 9) ** 2, rng.randint(1, 9) ** 2)
        e = 2 * rng.randint(-5, 5)
        a = QRational(HalfLaurent.monomial(c, e))
        r = monomial_sqrt(a)
        assert r * r == a


def _random_qrational(rng):
    def poly():
        return HalfLaurent(
            {rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(rng.randint(1, 4))}
        )

    den = poly()
    while den.is_zero():
        den = poly()
    return QRational(poly(), den)


def test_field_axioms_on_random_triples():
    rng = random.Random(11)
    for _ in range(40):
        a, b, c = (_random_qrational(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a - a == ZERO
        if not a.is_zero():
            assert a * (ONE / a) == ONE


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        QRational(1, 0)


def test_canonical_form_is_reduced():
    a = QRational(
        HalfLaurent({2: 2, 0: -2}),  # 2Q^2 - 2
        HalfLaurent({2: 4, 1: 4}),  # 4Q^2 + 4Q
    )
    # common factor Q+1 cancels; the denominator is made integer-primitive
    assert a.denominator == HalfLaurent({1: 1})
    assert a.numerator == HalfLaurent({1: Fraction(1, 2), 0: Fraction(-1, 2)})


def test_canonical_string_round_trip():
    samples = [
        (q * q - 1) / (q * q + 1),
        QRational(7),
        QRational(Fraction(-3, 2)),
        Qpow(-5) * (1 + q),
        ZERO,
        quantum_int(4),
        -Q,
    ]
    for a in samples:
        assert parse_qrational(str(a)) == a


def test_documented_string_form():
    assert str((q * q - 1) / (q * q + 1)) == "(Q^4 - 1)/(Q^4 + 1)"
    assert str(quantum_int(2)) == "(Q^4 + 1)/(Q^2)"
    assert str(QRational(7)) == "7"


def test_halflaurent_rejects_mutation():
    h = HalfLaurent({1: 1})
    with pytest.raises(AttributeError):
        h._coeffs = {}
    a = QRational(1)
    with pytest.raises(AttributeError):
        a._num = h


def test_hashable_and_structural_equality():
    a = (q * q - 1) / (q * q + 1)
    b = ((q - qi) * q) / ((q + qi) * q)
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1
