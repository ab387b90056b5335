"""
Laurent polynomials in q and s with a polynomial variable t, and their fractions.

    LPoly3   element of Z[q^{+-1}, s^{+-1}][t], stored as {(a, b, c): coeff}
    LRat     num / den with LPoly3 parts

Both are immutable values. `specialize` evaluates into any ring whose elements
support +, * and integer powers (in practice CycNum).
"""

from __future__ import annotations

import logging
import math
from typing import Iterable, Iterator, Optional, Union

from ..errors import NotInvertibleError, SpecializationError

logger = logging.getLogger(__name__)

Exponent = tuple[int, int, int]


class LPoly3:
    """Integer Laurent polynomial in (q, s), polynomial in t."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[dict[Exponent, int]] = None):
        clean: dict[Exponent, int] = {}
        for key, coeff in (terms or {}).items():
            if coeff:
                if key[2] < 0:
                    raise ValueError(f"negative t exponent in {key}")
                clean[key] = int(coeff)
        self._terms = clean

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 0, coeff: int = 1) -> "LPoly3":
        return cls({(a, b, c): coeff})

    @classmethod
    def const(cls, value: int) -> "LPoly3":
        return cls({(0, 0, 0): value})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    @property
    def ring(self) -> "LaurentRing":
        return LAURENT

    @property
    def complexity(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def t_degree(self) -> int:
        return max((c for (_, _, c) in self._terms), default=0)

    @staticmethod
    def _lift(other) -> Union["LPoly3", None]:
        if isinstance(other, LPoly3):
            return other
        if isinstance(other, int):
            return LPoly3.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            out[key] = out.get(key, 0) + coeff
        return LPoly3(out)

    __radd__ = __add__

    def __neg__(self) -> "LPoly3":
        return LPoly3({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for (a1, b1, c1), x in self._terms.items():
            for (a2, b2, c2), y in other._terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0) + x * y
        return LPoly3(out)

    __rmul__ = __mul__

    def unit_inverse(self) -> "LPoly3":
        """Inverse of a unit +-q^a s^b; anything else is not invertible in the ring."""
        if self.is_monomial():
            (a, b, c), coeff = next(iter(self._terms.items()))
            if c == 0 and coeff in (1, -1):
                return LPoly3.monomial(-a, -b, 0, coeff)
        raise NotInvertibleError(f"{self!r} is not a unit of Z[q, 1/q, s, 1/s][t]")

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.unit_inverse()

    def __pow__(self, k: int) -> "LPoly3":
        if k < 0:
            return self.unit_inverse() ** (-k)
        result, base = LPoly3.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def map_exponents(self, fn) -> "LPoly3":
        out: dict[Exponent, int] = {}
        for key, coeff in self._terms.items():
            new = fn(key)
            out[new] = out.get(new, 0) + coeff
        return LPoly3(out)

    def at_unity(self) -> "LPoly3":
        """Collapse q and s to 1, keeping t symbolic."""
        return self.map_exponents(lambda k: (0, 0, k[2]))

    def specialize(self, q0, s0, t0):
        """Evaluate at q = q0, s = s0, t = t0; the values must share a ring."""
        zero = q0 * 0
        cache: dict[tuple[int, int], object] = {}

        def power(base, which: int, k: int):
            key = (which, k)
            if key not in cache:
                cache[key] = base**k
            return cache[key]

        total = zero
        for (a, b, c), coeff in self._terms.items():
            total = total + coeff * power(q0, 0, a) * power(s0, 1, b) * power(t0, 2, c)
        return total

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (a, b, c), coeff in sorted(self._terms.items(), reverse=True):
            factors = [f"{name}^{e}" if e != 1 else name for name, e in (("q", a), ("s", b), ("t", c)) if e]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            pieces.append(("-" if coeff < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def _content(poly: LPoly3) -> int:
    return math.gcd(*poly.terms.values()) if poly else 0


def _min_exponents(polys: Iterable[LPoly3]) -> tuple[int, int]:
    keys = [k for p in polys for k in p.terms]
    return min(k[0] for k in keys), min(k[1] for k in keys)


class LRat:
    """
    Fraction num/den over LPoly3.

    Only monomial shifts, integer content and the sign of den's leading term are
    normalized; equality is tested by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[LPoly3, int], den: Union[LPoly3, int] = 1):
        num = LPoly3._lift(num)
        den = LPoly3._lift(den)
        if den.is_zero():
            raise NotInvertibleError("LRat with zero denominator")
        if num.is_zero():
            self.num, self.den = num, LPoly3.const(1)
            return

        da, db = _min_exponents([den])
        shift = LPoly3.monomial(-da, -db)
        num, den = num * shift, den * shift

        g = math.gcd(_content(num), _content(den))
        if max(den.terms.items())[1] < 0:
            g = -g
        if g not in (0, 1):
            num = LPoly3({k: v // g for k, v in num.terms.items()})
            den = LPoly3({k: v // g for k, v in den.terms.items()})
        self.num, self.den = num, den

    @property
    def ring(self) -> "LaurentFractions":
        return LAURENT_FRACTIONS

    @property
    def complexity(self) -> int:
        return self.num.complexity + self.den.complexity

    @staticmethod
    def _lift(other) -> Union["LRat", None]:
        if isinstance(other, LRat):
            return other
        if isinstance(other, (LPoly3, int)):
            return LRat(other)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return LRat(self.num + other.num, self.den)
        return LRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "LRat":
        return LRat(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return LRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "LRat":
        if self.is_zero():
            raise NotInvertibleError("division by zero in Q(q, s, t)")
        return LRat(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "LRat":
        if k < 0:
            return self.inverse() ** (-k)
        return LRat(self.num**k, self.den**k)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def specialize(self, q0, s0, t0):
        den = self.den.specialize(q0, s0, t0)
        if den == 0:
            raise SpecializationError(f"denominator {self.den!r} vanishes at the specialization point", denominator=self.den)
        return self.num.specialize(q0, s0, t0) / den

    def __repr__(self) -> str:
        if self.den == LPoly3.const(1):
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


class LaurentRing:
    """Coercion point for Z[q^{+-1}, s^{+-1}][t]."""

    zero = LPoly3()
    one = LPoly3.const(1)
    q = LPoly3.monomial(1, 0, 0)
    s = LPoly3.monomial(0, 1, 0)
    t = LPoly3.monomial(0, 0, 1)

    def __call__(self, value) -> LPoly3:
        lifted = LPoly3._lift(value)
        if lifted is None:
            raise TypeError(f"cannot coerce {type(value).__name__} into LPoly3")
        return lifted

    def q_pow(self, k: int) -> LPoly3:
        return LPoly3.monomial(k, 0, 0)

    def s_pow(self, k: int) -> LPoly3:
        return LPoly3.monomial(0, k, 0)

    def __repr__(self) -> str:
        return "LaurentRing()"


class LaurentFractions:
    """Coercion point for the fraction field Q(q, s, t)."""

    zero = LRat(0)
    one = LRat(1)

    def __call__(self, value) -> LRat:
        lifted = LRat._lift(value)
        if lifted is None:
            raise TypeError(f"cannot coerce {type(value).__name__} into LRat")
        return lifted

    def __repr__(self) -> str:
        return "LaurentFractions()"


LAURENT = LaurentRing()
LAURENT_FRACTIONS = LaurentFractions()

Q = LaurentRing.q
S = LaurentRing.s
T = LaurentRing.t
