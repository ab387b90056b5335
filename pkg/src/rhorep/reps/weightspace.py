"""
Strong-weight spaces V_{n,l} inside the n-th tensor power of the Steinberg module.

The Steinberg module V_{r-1} has basis u_0, ..., u_{r-1} with

    K u_m = s q^{-2m} u_m,   E u_m = u_{m-1},   F u_m = [m+1][r-1-m] u_{m+1}.

V_{n,l} is spanned by u_{e_1} (x) ... (x) u_{e_n} with sum(e) = l. E, F act through the
iterated coproducts Delta(E) = 1 (x) E + E (x) K and Delta(F) = K^{-1} (x) F + F (x) 1.
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional

from ..algebra import CycField, CycNum, RepMatrix, make_field
from ..errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Composition:
    """Weak composition (e_1, ..., e_n) with every part in [0, r-1]."""

    parts: tuple[int, ...]
    r: int = field(compare=False)

    def __post_init__(self):
        if any(not 0 <= e < self.r for e in self.parts):
            raise ParameterError(f"composition {self.parts} has a part outside [0, {self.r - 1}]")

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def l(self) -> int:
        return sum(self.parts)

    def first_nonzero(self) -> Optional[int]:
        """0-based slot of the first nonzero part, or None for u_0^n."""
        return next((i for i, e in enumerate(self.parts) if e), None)

    def slot_word(self) -> tuple[int, ...]:
        """1-based slot indices repeated by multiplicity: (0,1,0,1) -> (2, 4)."""
        return tuple(i + 1 for i, e in enumerate(self.parts) for _ in range(e))

    def is_A(self) -> bool:
        """Membership in the A part of V_{n,l} (first nonzero part equal to 1, with the l <= 1 exceptions)."""
        l = self.l
        if l == 0:
            return True
        if l == 1:
            return self.parts[-1] == 0
        return self.parts[self.first_nonzero()] == 1

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def kappa(l: int, r: int, n: int) -> int:
    """Number of weak n-compositions of l with each part below r (inclusion-exclusion)."""
    if l < 0:
        return 0
    total = 0
    for s in range(l // r + 1):
        t = l - s * r
        total += (-1) ** s * comb(n + t - 1, t) * comb(n, s)
    return total


def d_nl(n: int, l: int) -> int:
    """Dimension of the highest strong weight space W_{n,l}, valid for l < r."""
    if n < 2:
        return 1 if l == 0 else 0
    return comb(n + l - 2, l)


@dataclass(frozen=True)
class SpaceBasis:
    """Ordered basis of V_{n,l}: ascending lexicographic compositions."""

    n: int
    l: int
    r: int
    order: tuple[Composition, ...]

    @functools.cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {c.parts: k for k, c in enumerate(self.order)}

    @property
    def dim(self) -> int:
        return len(self.order)

    @property
    def strong_weight(self) -> int:
        return strong_weight(self.n, self.l, self.r)

    @functools.cached_property
    def a_positions(self) -> tuple[int, ...]:
        """Positions of A-compositions, listed in slot-word order."""
        picked = [k for k, c in enumerate(self.order) if c.is_A()]
        return tuple(sorted(picked, key=lambda k: self.order[k].slot_word()))

    @functools.cached_property
    def b_positions(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.order) if not c.is_A())

    def position(self, parts: Iterable[int]) -> int:
        key = tuple(parts)
        if key not in self.index:
            raise ParameterError(f"{key} is not a basis composition of V_{{{self.n},{self.l}}} at r={self.r}")
        return self.index[key]

    def __len__(self) -> int:
        return len(self.order)


@functools.lru_cache(maxsize=None)
def enumerate_basis(n: int, l: int, r: int) -> SpaceBasis:
    if n < 1 or r < 2:
        raise ParameterError(f"need n >= 1 and r >= 2, got n={n}, r={r}")
    if l < 0 or l > n * (r - 1):
        return SpaceBasis(n, l, r, ())
    order = tuple(Composition(p, r) for p in itertools.product(range(r), repeat=n) if sum(p) == l)
    return SpaceBasis(n, l, r, order)


def strong_weight(n: int, l: int, r: int) -> int:
    return n * (r - 1) - 2 * l


class SpaceVec:
    """Sparse vector of V_{n,l}: {basis position: coefficient}, zeros dropped."""

    __slots__ = ("basis", "entries", "field")

    def __init__(self, basis: SpaceBasis, entries: dict[int, CycNum], field: Optional[CycField] = None):
        self.basis = basis
        self.field = field or make_field(basis.r)
        self.entries = {k: v for k, v in entries.items() if v}

    @classmethod
    def from_dense(cls, basis: SpaceBasis, values: list) -> "SpaceVec":
        return cls(basis, dict(enumerate(values)))

    @classmethod
    def unit(cls, basis: SpaceBasis, parts: Iterable[int]) -> "SpaceVec":
        f = make_field(basis.r)
        return cls(basis, {basis.position(parts): f.one})

    def dense(self) -> list[CycNum]:
        zero = self.field.zero
        return [self.entries.get(k, zero) for k in range(self.basis.dim)]

    def __add__(self, other: "SpaceVec") -> "SpaceVec":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return SpaceVec(self.basis, out, self.field)

    def __sub__(self, other: "SpaceVec") -> "SpaceVec":
        return self + other.scale(self.field(-1))

    def scale(self, c) -> "SpaceVec":
        return SpaceVec(self.basis, {k: c * v for k, v in self.entries.items()}, self.field)

    def __eq__(self, other) -> bool:
        return isinstance(other, SpaceVec) and self.basis == other.basis and self.dense() == other.dense()

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.entries

    def __repr__(self) -> str:
        terms = ", ".join(f"{self.basis.order[k]}: {v!r}" for k, v in sorted(self.entries.items()))
        return f"SpaceVec(V_{self.basis.n},{self.basis.l}; {terms})"


# operators

def _k_eigen_exponents(parts: tuple[int, ...], r: int) -> tuple[int, int]:
    """(s exponent, q exponent) of the K-eigenvalue of a pure tensor."""
    return len(parts), -2 * sum(parts)


@functools.lru_cache(maxsize=None)
def op_E(n: int, l: int, r: int) -> RepMatrix:
    """Matrix of E: V_{n,l} -> V_{n,l-1}."""
    f = make_field(r)
    src, dst = enumerate_basis(n, l, r), enumerate_basis(n, l - 1, r)
    entries: dict[tuple[int, int], CycNum] = {}
    for col, comp in enumerate(src.order):
        p = comp.parts
        for i, e in enumerate(p):
            if e == 0:
                continue
            s_exp, q_exp = _k_eigen_exponents(p[i + 1:], r)
            target = p[:i] + (e - 1,) + p[i + 1:]
            key = (dst.index[target], col)
            entries[key] = entries.get(key, f.zero) + f.s_pow(s_exp) * f.q_pow(q_exp)
    logger.debug("op_E n=%d l=%d r=%d: %dx%d", n, l, r, dst.dim, src.dim)
    return RepMatrix.from_dict(f, dst.dim, src.dim, entries)


@functools.lru_cache(maxsize=None)
def op_F(n: int, l: int, r: int) -> RepMatrix:
    """Matrix of F: V_{n,l} -> V_{n,l+1}."""
    f = make_field(r)
    src, dst = enumerate_basis(n, l, r), enumerate_basis(n, l + 1, r)
    entries: dict[tuple[int, int], CycNum] = {}
    for col, comp in enumerate(src.order):
        p = comp.parts
        for i, e in enumerate(p):
            if e == r - 1:
                continue
            s_exp, q_exp = _k_eigen_exponents(p[:i], r)
            coeff = f.s_pow(-s_exp) * f.q_pow(-q_exp) * f.qint(e + 1) * f.qint(r - 1 - e)
            target = p[:i] + (e + 1,) + p[i + 1:]
            key = (dst.index[target], col)
            entries[key] = entries.get(key, f.zero) + coeff
    logger.debug("op_F n=%d l=%d r=%d: %dx%d", n, l, r, dst.dim, src.dim)
    return RepMatrix.from_dict(f, dst.dim, src.dim, entries)


def op_K(n: int, l: int, r: int) -> CycNum:
    """The scalar s^n q^{-2l} by which K acts on V_{n,l}."""
    f = make_field(r)
    return f.s_pow(n) * f.q_pow(-2 * l)


@functools.lru_cache(maxsize=None)
def op_FE(n: int, l: int, r: int) -> RepMatrix:
    """F o E as an endomorphism of V_{n,l}."""
    f = make_field(r)
    dim = enumerate_basis(n, l, r).dim
    if l == 0:
        return RepMatrix.zeros(f, dim, dim)
    return op_F(n, l - 1, r) @ op_E(n, l, r)


def op_E_power(n: int, l: int, r: int, k: int) -> RepMatrix:
    """E^k: V_{n,l} -> V_{n,l-k}."""
    f = make_field(r)
    result = RepMatrix.identity(f, enumerate_basis(n, l, r).dim)
    for step in range(k):
        result = op_E(n, l - step, r) @ result
    return result


def op_F_power(n: int, l: int, r: int, k: int) -> RepMatrix:
    """F^k: V_{n,l} -> V_{n,l+k}."""
    f = make_field(r)
    result = RepMatrix.identity(f, enumerate_basis(n, l, r).dim)
    for step in range(k):
        result = op_F(n, l + step, r) @ result
    return result


# named vectors

def _slots(n: int, values: dict[int, int]) -> tuple[int, ...]:
    parts = [0] * n
    for slot, e in values.items():
        parts[slot - 1] += e
    return tuple(parts)


def vacuum(n: int, r: int) -> SpaceVec:
    """u_0^{(x) n}."""
    return SpaceVec.unit(enumerate_basis(n, 0, r), (0,) * n)


def c_vec(n: int, r: int, i: int) -> SpaceVec:
    """c_i: u_1 in slot i, u_0 elsewhere."""
    return SpaceVec.unit(enumerate_basis(n, 1, r), _slots(n, {i: 1}))


def a_vec(n: int, r: int, i: int, j: int) -> SpaceVec:
    """a_{i,j}: u_1 in slots i < j."""
    if not 1 <= i < j <= n:
        raise ParameterError(f"a_{{{i},{j}}} needs 1 <= i < j <= {n}")
    return SpaceVec.unit(enumerate_basis(n, 2, r), _slots(n, {i: 1, j: 1}))


def b_vec(n: int, r: int, i: int) -> SpaceVec:
    """b_i: u_2 in slot i."""
    if r < 3:
        raise ParameterError("b_i needs u_2, i.e. r >= 3")
    return SpaceVec.unit(enumerate_basis(n, 2, r), _slots(n, {i: 2}))


def space_dims(n: int, l: int, r: int) -> dict[str, int]:
    """kappa and the A/B/W dimensions reported by the `dims` command."""
    basis = enumerate_basis(n, l, r)
    out = {"kappa": kappa(l, r, n), "dimA": len(basis.a_positions), "dimB": len(basis.b_positions)}
    if l < r:
        out["dimW"] = d_nl(n, l)
    return out
