"""Rational functions of one symbol ``d`` with rational coefficients.

Thin wrapper over sympy's univariate fraction field ``QQ(d)``. Values are
always kept reduced with a monic denominator; coefficients leave this module
as :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from sympy import QQ
from sympy.polys.fields import field

__all__ = ["RationalFunction", "D", "to_fraction"]

_FIELD, _SYM = field("d", QQ)


def to_fraction(q) -> Fraction:
    """Convert a ground-domain rational (gmpy2 or python mpq) to Fraction."""
    return Fraction(int(q.numerator), int(q.denominator))


def _coeffs(poly) -> list[Fraction]:
    """Ascending coefficient list of a univariate PolyElement."""
    deg = poly.degree()
    if deg < 0:
        return []
    out = [Fraction(0)] * (deg + 1)
    for (e,), c in poly.terms():
        out[e] = to_fraction(c)
    return out


def _horner(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


class RationalFunction:
    """Reduced ratio of polynomials in ``d``.

    >>> d = RationalFunction.symbol()
    >>> f = 1 / (d**2 - 1)
    >>> f(2)
    Fraction(1, 3)
    """

    __slots__ = ("_f",)

    def __init__(self, value=0):
        if isinstance(value, RationalFunction):
            self._f = value._f
        elif isinstance(value, (int, Rational)):
            self._f = _FIELD(QQ(int(value.numerator), int(value.denominator)))
        else:
            self._f = _FIELD(value)

    @classmethod
    def _wrap(cls, f) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj._f = f
        return obj

    @classmethod
    def symbol(cls) -> "RationalFunction":
        return cls._wrap(_SYM)

    @classmethod
    def from_coeffs(cls, numerator, denominator=(1,)) -> "RationalFunction":
        """Build from ascending coefficient lists."""
        num = sum((RationalFunction(c) * D**i for i, c in enumerate(numerator)), RationalFunction(0))
        den = sum((RationalFunction(c) * D**i for i, c in enumerate(denominator)), RationalFunction(0))
        return num / den

    # arithmetic ------------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other._f
        if isinstance(other, (int, Rational)):
            return _FIELD(QQ(int(other.numerator), int(other.denominator)))
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else RationalFunction._wrap(self._f + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else RationalFunction._wrap(self._f - o)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else RationalFunction._wrap(o - self._f)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else RationalFunction._wrap(self._f * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction._wrap(self._f / o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self._f:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction._wrap(o / self._f)

    def __pow__(self, n: int):
        return RationalFunction._wrap(self._f**n)

    def __neg__(self):
        return RationalFunction._wrap(-self._f)

    def __pos__(self):
        return self

    def __bool__(self) -> bool:
        return bool(self._f)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._f == o

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.constant_value())
        return hash((tuple(self.numerator_coeffs()), tuple(self.denominator_coeffs())))

    # inspection ------------------------------------------------------------

    def numerator_coeffs(self) -> list[Fraction]:
        """Ascending numerator coefficients, normalized so the denominator is monic."""
        lc = to_fraction(self._f.denom.LC)
        return [c / lc for c in _coeffs(self._f.numer)]

    def denominator_coeffs(self) -> list[Fraction]:
        """Ascending coefficients of the monic denominator."""
        den = _coeffs(self._f.denom)
        return [c / den[-1] for c in den]

    @property
    def is_polynomial(self) -> bool:
        return self._f.denom.degree() == 0

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and self._f.numer.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self(0)

    def __call__(self, value) -> Fraction:
        """Evaluate at a rational point; raises ZeroDivisionError at a pole."""
        x = Fraction(value)
        den = _horner(self.denominator_coeffs(), x)
        if den == 0:
            raise ZeroDivisionError(f"{self} has a pole at d={value}")
        return _horner(self.numerator_coeffs(), x) / den

    def pole_order(self, at: int) -> int:
        """Multiplicity of ``at`` as a root of the reduced denominator."""
        den = self.denominator_coeffs()
        order = 0
        x = Fraction(at)
        while len(den) > 1 and _horner(den, x) == 0:
            # synthetic division by (d - at), highest coefficient first
            quot = [Fraction(0)] * (len(den) - 1)
            carry = Fraction(0)
            for i in range(len(den) - 1, 0, -1):
                carry = den[i] + carry * x
                quot[i - 1] = carry
            den = quot
            order += 1
        return order

    def laurent_at_infinity(self, min_power: int) -> dict[int, Fraction]:
        """Expansion ``sum_m c_m d^m`` at ``d = oo`` for ``m`` from the
        leading power down to ``min_power`` (inclusive). Zero terms omitted."""
        num = self.numerator_coeffs()
        den = self.denominator_coeffs()
        if not num:
            return {}
        # Work with descending coefficient lists and long division.
        n = list(reversed(num))
        q = list(reversed(den))
        lead = (len(num) - 1) - (len(den) - 1)
        out: dict[int, Fraction] = {}
        rem = n + [Fraction(0)] * max(0, lead - min_power + len(q))
        power = lead
        i = 0
        while power >= min_power:
            c = rem[i] / q[0]
            if c:
                out[power] = c
                for j in range(1, len(q)):
                    if i + j < len(rem):
                        rem[i + j] -= c * q[j]
            i += 1
            power -= 1
        return out

    def as_expr(self):
        """The value as a sympy expression in the symbol ``d``."""
        return self._f.as_expr()

    def __str__(self) -> str:
        return str(self._f.as_expr().factor())

    def __repr__(self) -> str:
        return f"RationalFunction({self._f.as_expr()})"


D = RationalFunction.symbol()
