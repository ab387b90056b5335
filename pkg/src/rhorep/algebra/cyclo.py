"""
Exact arithmetic in the cyclotomic field Q(zeta), zeta a primitive 4r-th root of unity.

An element is a dense polynomial in zeta over QQ, reduced modulo the 4r-th
cyclotomic polynomial, so equality and the zero test are exact. The distinguished
constants are

    q = zeta^2      (the primitive 2r-th root e^{i pi / r})
    s = q^(r-1)     (= -q^{-1})

Polynomial kernels are sympy's dense univariate routines (leading coefficient first).
"""

from __future__ import annotations

import cmath
import functools
import logging
import math
from fractions import Fraction
from typing import Union

from sympy.polys.densearith import dup_add, dup_div, dup_mul, dup_neg, dup_rem, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from ..errors import FieldMismatchError, NotInvertibleError, ParameterError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _to_qq(value: Rational):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(int(value))


@functools.lru_cache(maxsize=None)
def cyclotomic(m: int) -> tuple[int, ...]:
    """
    Integer coefficients of the m-th cyclotomic polynomial, constant term first.

    Starts from x^m - 1 and divides out the cyclotomic polynomial of every proper divisor.

    >>> cyclotomic(8)
    (1, 0, 0, 0, 1)
    >>> cyclotomic(12)
    (1, 0, -1, 0, 1)
    """
    if m <= 0:
        raise ParameterError(f"cyclotomic index must be positive, got {m}")

    poly = [ZZ.one] + [ZZ.zero] * (m - 1) + [-ZZ.one]
    for d in range(1, m):
        if m % d:
            continue
        divisor = [ZZ(c) for c in reversed(cyclotomic(d))]
        poly, rem = dup_div(poly, divisor, ZZ)
        assert not dup_strip(rem), f"x^{m} - 1 not divisible by cyclotomic({d})"

    return tuple(int(c) for c in reversed(poly))


class CycField:
    """
    The field Q(zeta_{4r}) for a fixed r >= 2.

    Use make_field(r) rather than the constructor; fields are cached per r so
    elements of equal fields can be mixed freely.
    """

    def __init__(self, r: int):
        self.r = r
        self.order = 4 * r
        self.modulus = cyclotomic(self.order)
        self.degree = len(self.modulus) - 1
        self._modulus_rep = [QQ(c) for c in reversed(self.modulus)]

        self.zero = CycNum(self, [])
        self.one = CycNum(self, [QQ.one])
        self.zeta = CycNum(self, [QQ.one, QQ.zero])

        powers = [self.one]
        for _ in range(self.order - 1):
            powers.append(powers[-1] * self.zeta)
        self._zeta_powers = tuple(powers)

        self.qhalf = self.zeta
        self.q = self.q_pow(1)
        self.s = self.s_pow(1)
        logger.debug("built Q(zeta_%d), degree %d", self.order, self.degree)

    def __repr__(self) -> str:
        return f"CycField(r={self.r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CycField) and other.r == self.r

    def __hash__(self) -> int:
        return hash(("CycField", self.r))

    def __call__(self, value: Union[Rational, "CycNum"]) -> "CycNum":
        """Coerce an integer, Fraction or CycNum of this field into the field."""
        if isinstance(value, CycNum):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field!r} used in {self!r}")
            return value
        if isinstance(value, (int, Fraction)):
            return CycNum(self, dup_strip([_to_qq(value)]))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def reduce(self, rep: list) -> "CycNum":
        return CycNum(self, dup_rem(dup_strip(rep), self._modulus_rep, QQ))

    def zeta_pow(self, k: int) -> "CycNum":
        return self._zeta_powers[k % self.order]

    def q_pow(self, k: int) -> "CycNum":
        return self.zeta_pow(2 * k)

    def s_pow(self, k: int) -> "CycNum":
        return self.q_pow((self.r - 1) * k)

    # Quantum numbers {x} = q^x - q^-x and [x] = {x}/{1}.

    @functools.lru_cache(maxsize=None)
    def qnum(self, x: int) -> "CycNum":
        return self.q_pow(x) - self.q_pow(-x)

    @functools.lru_cache(maxsize=None)
    def qint(self, x: int) -> "CycNum":
        return self.qnum(x) / self.qnum(1)

    @functools.lru_cache(maxsize=None)
    def qfact(self, n: int) -> "CycNum":
        if not 0 <= n < self.r:
            raise ParameterError(f"quantum factorial [{n}]! needs 0 <= n < r = {self.r}")
        result = self.one
        for k in range(1, n + 1):
            result = result * self.qint(k)
        return result

    @functools.lru_cache(maxsize=None)
    def qbinom(self, n: int, m: int) -> "CycNum":
        if not 0 <= m <= n < self.r:
            raise ParameterError(f"quantum binomial [{n} {m}] needs 0 <= m <= n < r = {self.r}")
        return self.qfact(n) / (self.qfact(m) * self.qfact(n - m))


@functools.lru_cache(maxsize=None)
def make_field(r: int) -> CycField:
    """Cyclotomic field housing q = e^{i pi / r}, its square root and s = q^(r-1)."""
    if not isinstance(r, int) or r < 2:
        raise ParameterError(f"r must be an integer >= 2, got {r!r}")
    return CycField(r)


class CycNum:
    """
    Immutable element of a CycField.

    The representation is a stripped dense coefficient list (leading first) of
    degree below field.degree; `coeffs` exposes the canonical padded vector.
    """

    __slots__ = ("field", "_rep")

    def __init__(self, field: CycField, rep: list):
        self.field = field
        self._rep = rep

    @property
    def ring(self) -> CycField:
        return self.field

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        ascending = [_to_fraction(c) for c in reversed(self._rep)]
        return tuple(ascending + [Fraction(0)] * (self.field.degree - len(ascending)))

    @property
    def complexity(self) -> int:
        return len(self._rep)

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum(self.field, dup_add(self._rep, other._rep, QQ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum(self.field, dup_sub(self._rep, other._rep, QQ))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> "CycNum":
        return CycNum(self.field, dup_neg(self._rep, QQ))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._rep or not other._rep:
            return self.field.zero
        product = dup_mul(self._rep, other._rep, QQ)
        if len(product) > self.field.degree:
            product = dup_rem(product, self.field._modulus_rep, QQ)
        return CycNum(self.field, product)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Inverse by the extended Euclidean algorithm against the modulus."""
        if not self._rep:
            raise NotInvertibleError(f"zero has no inverse in {self.field!r}")
        try:
            inv = dup_invert(self._rep, self.field._modulus_rep, QQ)
        except NotInvertible as exc:
            raise NotInvertibleError(str(exc)) from exc
        return CycNum(self.field, dup_strip(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.field == other.field and self._rep == other._rep

    def __hash__(self) -> int:
        return hash((self.field.r, tuple(self._rep)))

    def __bool__(self) -> bool:
        return bool(self._rep)

    def is_zero(self) -> bool:
        return not self._rep

    def is_rational(self) -> bool:
        return len(self._rep) <= 1

    def to_complex(self) -> complex:
        """Evaluate at zeta = e^{i pi / (2r)}."""
        zeta = cmath.exp(1j * math.pi / (2 * self.field.r))
        return sum((float(c) * zeta**k for k, c in enumerate(self.coeffs) if c), 0j)

    def __repr__(self) -> str:
        if not self._rep:
            return f"CycNum(r={self.field.r}, 0)"
        parts = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = "" if k == 0 else "z" if k == 1 else f"z^{k}"
            coeff = str(mag) if (mag != 1 or not term) else ""
            body = coeff + ("*" if coeff and term else "") + term
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return f"CycNum(r={self.field.r}, {text})"
