"""
Braid generators on V_{n,l}: the normalized R-matrix on adjacent slots, braid words and
their evaluation against any family of generator matrices.
"""

from __future__ import annotations

import functools
import logging
import threading
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..algebra import CycNum, RepMatrix, make_field
from ..errors import NotInvertibleError, ParameterError
from .weightspace import enumerate_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidWord:
    """Signed generator indices; -i stands for the inverse of sigma_i."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"braid group needs n >= 1 strands, got {self.n}")
        for g in self.letters:
            if g == 0 or abs(g) > self.n - 1:
                raise ParameterError(f"letter {g} out of range for B_{self.n}")

    @classmethod
    def parse(cls, text: str, n: int) -> "BraidWord":
        """'1,2,-1' -> sigma_1 sigma_2 sigma_1^{-1}. An empty string is the identity."""
        text = (text or "").strip()
        if not text:
            return cls(n, ())
        try:
            letters = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
        except ValueError as exc:
            raise ParameterError(f"malformed braid word {text!r}") from exc
        return cls(n, letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-g for g in reversed(self.letters)))

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ParameterError(f"cannot concatenate words in B_{self.n} and B_{other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def shifted(self, offset: int, n: Optional[int] = None) -> "BraidWord":
        """sigma_i -> sigma_{i+offset}, e.g. for the inclusion B_{n-1} -> B_n on the last strands."""
        return BraidWord(n or self.n + offset, tuple(g + offset if g > 0 else g - offset for g in self.letters))

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))


def delta_word(i: int, n: int) -> BraidWord:
    """delta_i = sigma_1 ... sigma_{i-1} in B_n."""
    return BraidWord(n, tuple(range(1, i)))


def half_twist_word(n: int) -> BraidWord:
    """Delta_n = delta_n delta_{n-1} ... delta_2."""
    if n < 2:
        raise ParameterError("half twist needs n >= 2")
    word = BraidWord(n)
    for i in range(n, 1, -1):
        word = word + delta_word(i, n)
    return word


def full_twist_word(n: int) -> BraidWord:
    """theta_n written as delta_n^n (shorter than Delta_n^2)."""
    if n < 2:
        raise ParameterError("full twist needs n >= 2")
    return delta_word(n, n) ** n


@dataclass
class BraidAction:
    """
    A B_n action given by its generator matrices.

    Inverses are either supplied (rings without division) or computed on first use by
    exact elimination and kept in a lock-guarded cache.
    """

    name: str
    ring: object
    generators: tuple[RepMatrix, ...]
    inverses: Optional[tuple[RepMatrix, ...]] = None
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def n(self) -> int:
        return len(self.generators) + 1

    @property
    def dim(self) -> int:
        return self.generators[0].nrows if self.generators else 1

    def generator(self, g: int) -> RepMatrix:
        if g > 0:
            return self.generators[g - 1]
        if self.inverses is not None:
            return self.inverses[-g - 1]
        with self._lock:
            if g not in self._cache:
                try:
                    self._cache[g] = self.generators[-g - 1].inverse()
                except NotInvertibleError as exc:
                    raise NotInvertibleError(f"generator sigma_{-g} of {self.name} is singular") from exc
            return self._cache[g]

    def evaluate(self, word: BraidWord) -> RepMatrix:
        if word.n != self.n:
            raise ParameterError(f"word in B_{word.n} evaluated on a B_{self.n} representation")
        return evaluate_letters(word.letters, self.generator, self.ring, self.dim)

    def relation_defects(self) -> list[str]:
        return check_braid_relations(self.generators)

    def map(self, fn, ring, name: Optional[str] = None) -> "BraidAction":
        """Entrywise image of the action, e.g. a specialization."""
        gens = tuple(g.map(fn, ring) for g in self.generators)
        invs = tuple(g.map(fn, ring) for g in self.inverses) if self.inverses is not None else None
        return BraidAction(name or self.name, ring, gens, invs)


def evaluate_letters(letters: Sequence[int], generator, ring, dim: int) -> RepMatrix:
    """M_{a_1} M_{a_2} ... M_{a_m} for the word sigma_{a_1} ... sigma_{a_m}."""
    result = RepMatrix.identity(ring, dim)
    for g in letters:
        result = result @ generator(g)
    return result


def check_braid_relations(generators: Sequence[RepMatrix]) -> list[str]:
    """Names of the braid or far-commutation relations that fail; empty when all hold."""
    failures = []
    k = len(generators)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = generators[i], generators[j]
            if j == i + 1:
                if a @ b @ a != b @ a @ b:
                    failures.append(f"s{i + 1} s{j + 1} s{i + 1} = s{j + 1} s{i + 1} s{j + 1}")
            elif a @ b != b @ a:
                failures.append(f"s{i + 1} s{j + 1} = s{j + 1} s{i + 1}")
    return failures


# R-matrix

def rhat_terms(i: int, j: int, r: int) -> list[tuple[int, int, CycNum]]:
    """Image of u_i (x) u_j under the normalized braiding, as (left, right, coefficient) triples."""
    f = make_field(r)
    prefactor = f.s_pow(-(i + j))
    terms = []
    for k in range(min(i, r - j - 1) + 1):
        coeff = f.q_pow(2 * (i - k) * (j + k) + k * (k - 1) // 2) * f.qbinom(k + j, j)
        for m in range(k):
            coeff = coeff * f.qnum(m + j + 1)
        if coeff:
            terms.append((j + k, i - k, prefactor * coeff))
    return terms


@functools.lru_cache(maxsize=None)
def rhat_pair(r: int) -> RepMatrix:
    """The braiding on V_{r-1} (x) V_{r-1} in the basis u_a (x) u_b, index a*r + b."""
    f = make_field(r)
    entries = {}
    for i in range(r):
        for j in range(r):
            for a, b, coeff in rhat_terms(i, j, r):
                entries[(a * r + b, i * r + j)] = coeff
    return RepMatrix.from_dict(f, r * r, r * r, entries)


@functools.lru_cache(maxsize=None)
def sigma_matrix(n: int, l: int, r: int, i: int) -> RepMatrix:
    """sigma_i = 1^{i-1} (x) R (x) 1^{n-i-1} restricted to V_{n,l}."""
    if not 1 <= i <= n - 1:
        raise ParameterError(f"sigma_{i} not a generator of B_{n}")
    f = make_field(r)
    basis = enumerate_basis(n, l, r)
    entries: dict[tuple[int, int], CycNum] = {}
    for col, comp in enumerate(basis.order):
        p = comp.parts
        for a, b, coeff in rhat_terms(p[i - 1], p[i], r):
            target = p[: i - 1] + (a, b) + p[i + 1:]
            key = (basis.index[target], col)
            entries[key] = entries.get(key, f.zero) + coeff
    logger.debug("sigma_%d on V_{%d,%d} r=%d built (%d)", i, n, l, r, basis.dim)
    return RepMatrix.from_dict(f, basis.dim, basis.dim, entries)


@functools.lru_cache(maxsize=None)
def sigma_inverse(n: int, l: int, r: int, i: int) -> RepMatrix:
    return sigma_matrix(n, l, r, i).inverse()


@functools.lru_cache(maxsize=None)
def v_action(n: int, l: int, r: int) -> BraidAction:
    """The B_n action on V_{n,l}."""
    gens = tuple(sigma_matrix(n, l, r, i) for i in range(1, n))
    invs = tuple(sigma_inverse(n, l, r, i) for i in range(1, n))
    return BraidAction(f"V_{n},{l}", make_field(r), gens, invs)


def eval_word(word: BraidWord, n: int, l: int, r: int) -> RepMatrix:
    if word.n != n:
        raise ParameterError(f"word in B_{word.n} evaluated on V_{{{n},{l}}}")
    if n == 1:
        return RepMatrix.identity(make_field(r), enumerate_basis(n, l, r).dim)
    return v_action(n, l, r).evaluate(word)
