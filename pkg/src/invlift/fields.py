"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Rational coefficients are plain ``fractions.Fraction`` values (always in
lowest terms with positive denominator).  Prime-field coefficients are
``ModInt`` values, reduced into ``[0, p)``.  A field descriptor object
(``QQ`` or ``PrimeField(p)``) creates and converts elements; every
polynomial, series, and program in this package carries its descriptor so
that mixed-field arithmetic is rejected instead of silently coerced.
"""

from __future__ import annotations

from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the fixed base set is exact for n < 3.3e24.
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ModInt:
    """An element of the integers mod an odd prime p.

    Supports +, -, *, /, ** with other ModInt values of the same modulus;
    plain Python ints are embedded on the fly.  Values are always reduced
    into [0, p).
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"mixed moduli {self.modulus} and {other.modulus}"
                )
            return other
        if isinstance(other, int):
            return ModInt(other, self.modulus)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModInt(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModInt(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModInt(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModInt(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return ModInt(pow(self.value, exponent, self.modulus), self.modulus)

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def inverse(self) -> "ModInt":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return ModInt(pow(self.value, self.modulus - 2, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModInt({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


class RationalField:
    """Descriptor for the field of rationals; elements are Fraction."""

    name = "rational"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, fr: Fraction) -> Fraction:
        return fr

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Descriptor for the integers mod an odd word-sized prime."""

    def __init__(self, p: int):
        if p < 3 or p >= 2**63:
            raise ValueError(f"modulus must be an odd prime below 2**63, got {p}")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"fp:{p}"

    def zero(self) -> ModInt:
        return ModInt(0, self.p)

    def one(self) -> ModInt:
        return ModInt(1, self.p)

    def from_int(self, n: int) -> ModInt:
        return ModInt(n, self.p)

    def from_fraction(self, fr: Fraction) -> ModInt:
        if fr.denominator % self.p == 0:
            raise ZeroDivisionError(
                f"denominator {fr.denominator} vanishes mod {self.p}"
            )
        return self.from_int(fr.numerator) / self.from_int(fr.denominator)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = RationalField()


def field_from_name(name: str):
    """Parse a field descriptor from its CLI spelling: 'rational' or 'fp:<p>'."""
    if name == "rational":
        return QQ
    if name.startswith("fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ValueError(f"bad prime field spec {name!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field {name!r}")
