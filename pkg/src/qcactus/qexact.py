"""Exact arithmetic in the field of rational functions of q^(1/2).

Everything is stored in the variable Q = q^(1/2) with integer exponents,
so "half powers of q" never need fractional bookkeeping.  Two objects do
all of the work:

  HalfLaurent -- a Laurent polynomial in Q with exact rational coefficients,
                 kept as a sparse exponent -> Fraction map;
  QRational   -- a quotient of two HalfLaurents in canonical form.

Canonical form: numerator and denominator are honest polynomials in Q
(no negative exponents, not both divisible by Q), coprime over the
rationals, and the denominator is integer-primitive with a positive
leading coefficient.  With that normalization, equality of values is
structural equality of the stored data, which is what every verification
routine in this package relies on.

The subring of elements regular at q = infinity consists of the fractions
whose numerator Q-degree does not exceed the denominator Q-degree; on it,
``reduce_mod_qhalf`` evaluates the power series in q^(-1/2) at zero.
There is no floating point anywhere.

All values are immutable after construction and every operation is a pure
function, so they are safe to share between threads.
"""

from fractions import Fraction
from math import isqrt
import re

__all__ = [
    "HalfLaurent",
    "QRational",
    "ZERO",
    "ONE",
    "Qpow",
    "qpow",
    "quantum_int",
    "quantum_factorial",
    "is_regular_at_infinity",
    "reduce_mod_qhalf",
    "monomial_sqrt",
    "parse_qrational",
]


def _fr(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class HalfLaurent:
    """Laurent polynomial in Q = q^(1/2) with Fraction coefficients.

    The coefficient map never stores zeros, so equality and hashing are
    structural.  Exponents count powers of Q; the exponent of q is half
    the stored key.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, HalfLaurent):
            data = dict(coeffs._coeffs)
        elif isinstance(coeffs, dict):
            for k, v in coeffs.items():
                if not isinstance(k, int):
                    raise TypeError("exponents must be integers (powers of Q)")
                v = _fr(v)
                if v:
                    data[k] = v
        else:
            v = _fr(coeffs)
            if v:
                data[0] = v
        object.__setattr__(self, "_coeffs", data)

    def __setattr__(self, name, value):
        raise AttributeError("HalfLaurent is immutable")

    @classmethod
    def monomial(cls, coeff, exp: int = 0) -> "HalfLaurent":
        return cls({exp: _fr(coeff)})

    def items(self):
        return self._coeffs.items()

    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int:
        """Largest Q-exponent; raises on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def valuation(self) -> int:
        """Smallest Q-exponent; raises on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self._coeffs)

    def leading_coefficient(self) -> Fraction:
        return self._coeffs[self.degree()]

    def shift(self, k: int) -> "HalfLaurent":
        """Multiply by Q^k."""
        return HalfLaurent({e + k: c for e, c in self._coeffs.items()})

    def __add__(self, other):
        other = other if isinstance(other, HalfLaurent) else HalfLaurent(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return HalfLaurent(out)

    def __neg__(self):
        return HalfLaurent({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = other if isinstance(other, HalfLaurent) else HalfLaurent(other)
        return self + (-other)

    def __mul__(self, other):
        other = other if isinstance(other, HalfLaurent) else HalfLaurent(other)
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return HalfLaurent(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HalfLaurent(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def evaluate(self, x) -> Fraction:
        """Value at Q = x for a nonzero exact rational x (exact)."""
        x = _fr(x)
        if x == 0 and self._coeffs and min(self._coeffs) < 0:
            raise ZeroDivisionError("negative exponent at Q = 0")
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += c * x ** e
        return total

    def __str__(self):
        return _poly_str(self)

    def __repr__(self):
        return f"HalfLaurent({dict(sorted(self._coeffs.items()))!r})"


# -- dense polynomial helpers (exponents >= 0, index = Q-exponent) --------

def _to_list(h: HalfLaurent) -> list:
    deg = h.degree()
    out = [Fraction(0)] * (deg + 1)
    for e, c in h.items():
        out[e] = c
    return out


def _from_list(cs) -> HalfLaurent:
    return HalfLaurent({e: c for e, c in enumerate(cs) if c})


def _trim(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _poly_divmod(a, b):
    a = list(a)
    if not _trim(list(b)):
        raise ZeroDivisionError("polynomial division by zero")
    b = _trim(list(b))
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    return _trim(q), _trim(a)


def _poly_gcd(a, b):
    """Monic gcd over the rationals."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


class QRational:
    """A rational function of q^(1/2) in canonical form.

    Construct from ints, Fractions, HalfLaurents or another QRational;
    an optional second argument is the denominator.  Arithmetic is exact
    field arithmetic; two values are equal iff their canonical forms
    coincide.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        if isinstance(num, QRational) or isinstance(den, QRational):
            a = num if isinstance(num, QRational) else QRational(num)
            b = den if isinstance(den, QRational) else QRational(den)
            combined = a / b
            object.__setattr__(self, "_num", combined._num)
            object.__setattr__(self, "_den", combined._den)
            return
        num = num if isinstance(num, HalfLaurent) else HalfLaurent(num)
        den = den if isinstance(den, HalfLaurent) else HalfLaurent(den)
        n, d = _canonical(num, den)
        object.__setattr__(self, "_num", n)
        object.__setattr__(self, "_den", d)

    def __setattr__(self, name, value):
        raise AttributeError("QRational is immutable")

    @property
    def numerator(self) -> HalfLaurent:
        return self._num

    @property
    def denominator(self) -> HalfLaurent:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def __bool__(self):
        return bool(self._num)

    @staticmethod
    def _coerce(x):
        if isinstance(x, QRational):
            return x
        if isinstance(x, (int, Fraction, HalfLaurent)):
            return QRational(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QRational(
            self._num * other._den + other._num * self._den,
            self._den * other._den,
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        out = object.__new__(QRational)
        object.__setattr__(out, "_num", -self._num)
        object.__setattr__(out, "_den", self._den)
        return out

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QRational(self._num * other._num, self._den * other._den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero QRational")
        return QRational(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return ONE / (self ** (-n))
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def evaluate(self, x) -> Fraction:
        """Exact value at Q = x.

        Canonical form has coprime numerator and denominator, so any
        removable singularity has already been cancelled; a vanishing
        denominator therefore means the value genuinely diverges.
        """
        d = self._den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at Q = {x}")
        return self._num.evaluate(x) / d

    def __str__(self):
        if self._den == HalfLaurent(1):
            return _poly_str(self._num)
        return f"({_poly_str(self._num)})/({_poly_str(self._den)})"

    def __repr__(self):
        return f"QRational({str(self)!r})"


def _canonical(num: HalfLaurent, den: HalfLaurent):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return HalfLaurent(), HalfLaurent(1)
    shift = -min(num.valuation(), den.valuation())
    a = _to_list(num.shift(shift))
    b = _to_list(den.shift(shift))
    g = _poly_gcd(a, b)
    if len(g) > 1:
        a, _ = _poly_divmod(a, g)
        b, _ = _poly_divmod(b, g)
    # scale so the denominator is integer-primitive with positive lead
    denoms = 1
    for c in b:
        if c:
            denoms = denoms * c.denominator // _int_gcd(denoms, c.denominator)
    numers = 0
    for c in b:
        if c:
            numers = _int_gcd(numers, abs(c.numerator * (denoms // c.denominator)))
    scale = Fraction(denoms, numers)
    if b[-1] < 0:
        scale = -scale
    a = [c * scale for c in a]
    b = [c * scale for c in b]
    return _from_list(a), _from_list(b)


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


ZERO = QRational(0)
ONE = QRational(1)


def Qpow(k: int) -> QRational:
    """Q^k = q^(k/2) as a QRational."""
    return QRational(HalfLaurent.monomial(1, k))


def qpow(n: int) -> QRational:
    """q^n as a QRational."""
    return Qpow(2 * n)


def quantum_int(n: int) -> QRational:
    """The balanced q-integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    [0] = 0 and [-n] = -[n]; the substitution q -> 1 sends [n] to n.
    """
    if n < 0:
        return -quantum_int(-n)
    out = ZERO
    for i in range(n):
        out = out + qpow(n - 1 - 2 * i)
    return out


def quantum_factorial(n: int) -> QRational:
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for k in range(2, n + 1):
        out = out * quantum_int(k)
    return out


def is_regular_at_infinity(a: QRational) -> bool:
    """True iff ``a`` stays finite as q -> infinity.

    Equivalently, ``a`` can be written as g1(q^(-1/2)) / g2(q^(-1/2))
    with g2(0) != 0; in canonical form this is just a degree comparison.
    """
    if a.is_zero():
        return True
    return a.numerator.degree() <= a.denominator.degree()


def reduce_mod_qhalf(a: QRational) -> Fraction:
    """Constant term of ``a`` as a power series in q^(-1/2).

    Defined only on elements regular at infinity, where it is a ring
    homomorphism onto the exact rationals.
    """
    if a.is_zero():
        return Fraction(0)
    dn, dd = a.numerator.degree(), a.denominator.degree()
    if dn > dd:
        raise ValueError(f"{a} is not regular at q = infinity")
    if dn < dd:
        return Fraction(0)
    return a.numerator.leading_coefficient() / a.denominator.leading_coefficient()


def _fraction_sqrt(c: Fraction) -> Fraction:
    if c < 0:
        raise ValueError("square root of a negative coefficient")
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn != c.numerator or rd * rd != c.denominator:
        raise ValueError(f"{c} is not the square of a rational")
    return Fraction(rn, rd)


def monomial_sqrt(a: QRational) -> QRational:
    """Square root of a monomial c * Q^(2k) with c a positive rational square.

    Returns the root with positive coefficient; anything that is not such
    a monomial is rejected.  This is the branch used when unitarizing a
    braiding block by block.
    """
    num_terms = dict(a.numerator.items())
    den_terms = dict(a.denominator.items())
    if len(num_terms) != 1 or len(den_terms) != 1:
        raise ValueError(f"{a} is not a monomial")
    (en, cn), = num_terms.items()
    (ed, cd), = den_terms.items()
    exp = en - ed
    if exp % 2:
        raise ValueError(f"{a} has odd Q-exponent {exp}")
    coeff = _fraction_sqrt(cn / cd)
    return QRational(HalfLaurent.monomial(coeff, exp // 2))


# -- canonical string form -------------------------------------------------

def _term_str(c: Fraction, e: int) -> str:
    if e == 0:
        return str(c)
    qpart = "Q" if e == 1 else f"Q^{e}"
    if c == 1:
        return qpart
    if c == -1:
        return f"-{qpart}"
    return f"{c}*{qpart}"


def _poly_str(h: HalfLaurent) -> str:
    if h.is_zero():
        return "0"
    parts = []
    for e in sorted(dict(h.items()), reverse=True):
        c = h.coefficient(e)
        term = _term_str(abs(c), e) if parts else _term_str(c, e)
        if parts:
            parts.append(" - " if c < 0 else " + ")
        parts.append(term)
    return "".join(parts)


_TERM_RE = re.compile(
    r"^(?P<sign>[+-])?\s*(?P<coeff>\d+(?:/\d+)?)?\s*\*?\s*"
    r"(?P<q>Q(?:\^(?P<exp>-?\d+))?)?$"
)


def _parse_poly(s: str) -> HalfLaurent:
    s = s.strip()
    if not s:
        raise ValueError("empty polynomial")
    s = s.replace(" - ", " + -").replace(" + ", "\x00")
    out = HalfLaurent()
    for raw in s.split("\x00"):
        raw = raw.strip()
        m = _TERM_RE.match(raw)
        if not m or (m.group("coeff") is None and m.group("q") is None):
            raise ValueError(f"cannot parse term {raw!r}")
        c = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        if m.group("q"):
            e = int(m.group("exp")) if m.group("exp") else 1
        else:
            e = 0
        out = out + HalfLaurent.monomial(c, e)
    return out


def parse_qrational(s: str) -> QRational:
    """Parse the canonical string form, e.g. ``"(Q^4 - 1)/(Q^4 + 1)"``."""
    s = s.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        idx = s.index(")/(")
        return QRational(_parse_poly(s[1:idx]), _parse_poly(s[idx + 3:-1]))
    return QRational(_parse_poly(s))
