"""Exact arithmetic in Q(zeta_9).

Elements are stored on the power basis 1, z, ..., z^5 of the ninth
cyclotomic field, where z is a fixed primitive ninth root of unity and
z^6 = -z^3 - 1 (the minimal polynomial is x^6 + x^3 + 1).  The embedded
primitive cube root of unity is z^3.  Rational scalars are
``fractions.Fraction``; internally a common positive denominator is kept
so that multiplication runs on plain integers.

Everything here is exact.  There is no floating point anywhere in the
package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NotRationalInteger

# Rational scalars throughout the package are arbitrary-precision
# fractions in lowest terms with positive denominator, which is exactly
# the contract fractions.Fraction already enforces.
BigRational = Fraction

_DIM = 6

# z^k for k = 6..10 rewritten on the basis 1..z^5 (z^6 = -z^3 - 1).
_FOLD = {
    6: ((0, -1), (3, -1)),
    7: ((1, -1), (4, -1)),
    8: ((2, -1), (5, -1)),
    9: ((0, 1),),
    10: ((1, 1),),
}

# Images of the basis powers under complex conjugation z -> z^8.
_CONJ = (
    ((0, 1),),
    ((2, -1), (5, -1)),   # z^8
    ((1, -1), (4, -1)),   # z^16 = z^7
    ((0, -1), (3, -1)),   # z^24 = z^6
    ((5, 1),),            # z^32 = z^5
    ((4, 1),),            # z^40 = z^4
)


class Cyclotomic:
    """An element c0 + c1*z + ... + c5*z^5 of Q(zeta_9), immutable and hashable."""

    __slots__ = ("nums", "den")

    def __init__(self, nums, den=1):
        if den == 0:
            raise ZeroDivisionError("cyclotomic denominator is zero")
        if den < 0:
            nums = tuple(-v for v in nums)
            den = -den
        g = den
        for v in nums:
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            nums = tuple(v // g for v in nums)
            den //= g
        object.__setattr__(self, "nums", tuple(nums))
        object.__setattr__(self, "den", den)
        if len(self.nums) != _DIM:
            raise ValueError("expected 6 coefficients")

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rationals(coeffs) -> "Cyclotomic":
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return Cyclotomic(tuple(int(c * den) for c in coeffs), den)

    @staticmethod
    def integer(v: int) -> "Cyclotomic":
        return Cyclotomic((int(v), 0, 0, 0, 0, 0), 1)

    @staticmethod
    def rational(v) -> "Cyclotomic":
        v = Fraction(v)
        return Cyclotomic((v.numerator, 0, 0, 0, 0, 0), v.denominator)

    # -- ring structure -----------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, int):
            return Cyclotomic.integer(other)
        if isinstance(other, Fraction):
            return Cyclotomic.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        return Cyclotomic(
            tuple(x * b.den + y * a.den for x, y in zip(a.nums, b.nums)),
            a.den * b.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(tuple(-v for v in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.nums, o.nums
        conv = [0] * (2 * _DIM - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:_DIM]
        for k in range(_DIM, 2 * _DIM - 1):
            c = conv[k]
            if c:
                for idx, sign in _FOLD[k]:
                    out[idx] += sign * c
        return Cyclotomic(tuple(out), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; field inversion is never needed here
        if isinstance(other, int):
            return Cyclotomic(self.nums, self.den * other)
        if isinstance(other, Fraction):
            return Cyclotomic(
                tuple(v * other.denominator for v in self.nums),
                self.den * other.numerator,
            )
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _mapped(self, table):
        out = [0] * _DIM
        for i, c in enumerate(self.nums):
            if c:
                for idx, sign in table[i]:
                    out[idx] += sign * c
        return Cyclotomic(tuple(out), self.den)

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, the field automorphism z -> z^-1."""
        return self._mapped(_CONJ)

    # -- predicates and extraction ------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.nums == o.nums and self.den == o.den

    def __hash__(self):
        return hash((self.nums, self.den))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.nums)

    def is_rational(self) -> bool:
        return all(v == 0 for v in self.nums[1:])

    @property
    def coefficients(self):
        """The six coordinates on 1, z, ..., z^5 as Fractions."""
        return tuple(Fraction(v, self.den) for v in self.nums)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise NotRationalInteger(f"nonzero zeta-part in {self}")
        return Fraction(self.nums[0], self.den)

    def as_integer(self) -> int:
        """The value as a plain integer, or NotRationalInteger.

        Multiplicities and character sums in this package are always
        rational integers; anything else means an upstream bug.
        """
        if not self.is_rational() or self.den != 1:
            raise NotRationalInteger(f"{self} is not a rational integer")
        return self.nums[0]

    def sort_key(self):
        return (self.den,) + self.nums

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, v in enumerate(self.nums):
            if v == 0:
                continue
            c = Fraction(v, self.den)
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"z^{i}" if i > 1 else "z")
            elif c == -1:
                terms.append(f"-z^{i}" if i > 1 else "-z")
            else:
                terms.append(f"{c}*z^{i}" if i > 1 else f"{c}*z")
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


def zeta_pow(k: int) -> Cyclotomic:
    """z^k for any integer k, reduced to the power basis."""
    k %= 9
    if k < _DIM:
        nums = [0] * _DIM
        nums[k] = 1
        return Cyclotomic(tuple(nums), 1)
    nums = [0] * _DIM
    for idx, sign in _FOLD[k]:
        nums[idx] += sign
    return Cyclotomic(tuple(nums), 1)


ZERO = Cyclotomic.integer(0)
ONE = Cyclotomic.integer(1)
ZETA = zeta_pow(1)
ZETA3 = zeta_pow(3)

#: The three cube roots of unity inside Q(zeta_9).
CUBE_ROOTS = (ONE, ZETA3, zeta_pow(6))

#: All nine ninth roots of unity.
NINTH_ROOTS = tuple(zeta_pow(k) for k in range(9))
