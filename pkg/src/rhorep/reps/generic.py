"""
Three-variable representations over Z[q^{+-1}, s^{+-1}][t].

    N20(n): basis b, w_{1,2}, ..., w_{n-1,n};          sigma_i b = b + t w_{i,i+1}
    N21(n): basis b'_1, ..., b'_{n-1}, w_{1,2}, ...;     five-case action on the b'_j

The w-block is the two-variable LKB action in both. At t = s^-3 (1 - q^2) and the root of
unity they become the dominant spaces N_{n,2,0} and N_{n,2,1}.
"""

from __future__ import annotations

import functools
import logging
from typing import Optional

from ..algebra import LAURENT, LAURENT_FRACTIONS, CycNum, LPoly3, LRat, RepMatrix, make_field
from ..errors import ParameterError, SpecializationError
from .braid import BraidAction, BraidWord, half_twist_word
from .lawrence import lkb_closed_form, pair_index, pair_list

logger = logging.getLogger(__name__)

q, s, t = LAURENT.q, LAURENT.s, LAURENT.t

# p(X) = X^3 + a X^2 + b X + c, roots 1, -s^-2, s^-4 q^2
MINPOL_A = -LAURENT.one + s**-2 - s**-4 * q**2
MINPOL_B = -(s**-2) + s**-4 * q**2 - s**-6 * q**2
MINPOL_C = s**-6 * q**2

REPS = ("N20", "N21")


def _with_head(head_dim: int, head_entries: dict, lkb: RepMatrix) -> RepMatrix:
    """Block matrix [[H, 0], [T, LKB]] from the head columns and the LKB block."""
    dim = head_dim + lkb.nrows
    entries = dict(head_entries)
    for a in range(lkb.nrows):
        for b in range(lkb.ncols):
            if lkb[a, b]:
                entries[(head_dim + a, head_dim + b)] = lkb[a, b]
    return RepMatrix.from_dict(LAURENT, dim, dim, entries)


@functools.lru_cache(maxsize=None)
def generic_N20(n: int) -> tuple[RepMatrix, ...]:
    if n < 2:
        raise ParameterError("N20 needs n >= 2")
    lkb = lkb_closed_form(n, q, s, LAURENT)
    gens = []
    for i in range(1, n):
        head = {(0, 0): LAURENT.one, (1 + pair_index(n, i, i + 1), 0): t}
        gens.append(_with_head(1, head, lkb[i - 1]))
    logger.debug("generic N20 for n=%d built", n)
    return tuple(gens)


@functools.lru_cache(maxsize=None)
def generic_N21(n: int) -> tuple[RepMatrix, ...]:
    if n < 3:
        raise ParameterError("N21 needs n >= 3")
    lkb = lkb_closed_form(n, q, s, LAURENT)
    h = n - 1
    gens = []
    for i in range(1, n):
        head: dict[tuple[int, int], LPoly3] = {}
        w = h + pair_index(n, i, i + 1)
        for j in range(1, n):
            col = j - 1
            if i != n - 1:
                if j == i:
                    head[(w, col)] = s ** (i - n) * t
                    head[(col, col)] = LAURENT.one - s**-2
                    head[(col + 1, col)] = s**-1
                elif j == i + 1:
                    head[(col - 1, col)] = s**-1
                else:
                    head[(col, col)] = LAURENT.one
            elif j == n - 1:
                head[(w, col)] = s**-1 * t
                head[(col, col)] = -(s**-2)
            else:
                head[(col, col)] = LAURENT.one
                head[(n - 2, col)] = -(s ** (n - j - 1))
        gens.append(_with_head(h, head, lkb[i - 1]))
    logger.debug("generic N21 for n=%d built", n)
    return tuple(gens)


def generic_inverse(g: RepMatrix) -> RepMatrix:
    """sigma^-1 = -c^-1 (sigma^2 + a sigma + b); exact because c is a unit."""
    ident = RepMatrix.identity(LAURENT, g.nrows)
    return ((g @ g) + g.scale(MINPOL_A) + ident.scale(MINPOL_B)).scale(-(MINPOL_C ** -1))


def generic_N20_inverses(n: int) -> tuple[RepMatrix, ...]:
    return tuple(generic_inverse(g) for g in generic_N20(n))


def generic_N21_inverses(n: int) -> tuple[RepMatrix, ...]:
    return tuple(generic_inverse(g) for g in generic_N21(n))


def generic_generators(rep: str, n: int) -> tuple[RepMatrix, ...]:
    builders = {"N20": generic_N20, "N21": generic_N21}
    if rep not in builders:
        raise ParameterError(f"unknown generic representation {rep!r}; choose from {', '.join(REPS)}")
    return builders[rep](n)


@functools.lru_cache(maxsize=None)
def generic_action(rep: str, n: int) -> BraidAction:
    gens = generic_generators(rep, n)
    return BraidAction(f"{rep}({n})", LAURENT, gens, tuple(generic_inverse(g) for g in gens))


def head_dim(rep: str, n: int) -> int:
    return 1 if rep == "N20" else n - 1


def w_subspace(n: int, ring, rep: str = "N20") -> list[list]:
    """The w_{i,j} as unit vectors after the head."""
    h = head_dim(rep, n)
    dim = h + len(pair_list(n))
    return [[ring.one if a == h + k else ring.zero for a in range(dim)] for k in range(dim - h)]


# splitting over the fraction field

def section_coefficient(n: int, i: int, j: int) -> LRat:
    """lambda_{i,j} = s^{2n-i-j-1} s^4 t / (s^{2n} - q^2)."""
    return LRat(s ** (2 * n - i - j - 1 + 4) * t, s ** (2 * n) - q**2)


def split_generic_N20(n: int) -> dict:
    """
    Fixed vector b + sum lambda_{i,j} w_{i,j} of N20 over the fraction field, checked against
    every generator, with the recursion lambda_{k+1,j} = s^-1 lambda_{k,j} and the s^2 = 1 branch.
    """
    pairs = pair_list(n)
    lambdas = {p: section_coefficient(n, *p) for p in pairs}
    vector = [LAURENT_FRACTIONS.one] + [lambdas[p] for p in pairs]
    fixed = True
    for g in generic_N20(n):
        g_frac = g.map(LRat, LAURENT_FRACTIONS)
        if g_frac.apply(vector) != vector:
            fixed = False
    recursion = all(
        lambdas[(k + 1, j)] == lambdas[(k, j)] * LRat(s**-1)
        for (k, j) in pairs
        if (k + 1, j) in lambdas
    )
    # s = 1: numerator and denominator lose their s-dependence
    degenerate = LRat(
        lambdas[(n - 1, n)].num.map_exponents(lambda e: (e[0], 0, e[2])),
        lambdas[(n - 1, n)].den.map_exponents(lambda e: (e[0], 0, e[2])),
    )
    inverse_on_b = all(
        inv.column(0) == [LAURENT.one if a == 0 else (-(s**4) * q**-2 * t if a == 1 + pair_index(n, i, i + 1) else LAURENT.zero) for a in range(inv.nrows)]
        for i, inv in enumerate(generic_N20_inverses(n), start=1)
    )
    return {
        "n": n,
        "lambdas": lambdas,
        "fixed": fixed,
        "recursion": recursion,
        "inverse_on_b": inverse_on_b,
        "s_squared_one": {"lambda_last": degenerate, "matches": degenerate == LRat(t, LAURENT.one - q**2)},
    }


# specialization at the root of unity

def specialize_point(r: int) -> tuple[CycNum, CycNum, CycNum]:
    """(q, s, t) with t = s^-3 (1 - q^2)."""
    if r < 3:
        raise ParameterError("specialization needs r >= 3")
    f = make_field(r)
    return f.q, f.s, f.s_pow(-3) * (f.one - f.q_pow(2))


def specialize_matrix(M: RepMatrix, r: int) -> RepMatrix:
    q0, s0, t0 = specialize_point(r)
    return M.map(lambda x: x.specialize(q0, s0, t0), make_field(r))


@functools.lru_cache(maxsize=None)
def specialized_action(rep: str, n: int, r: int) -> BraidAction:
    point = specialize_point(r)
    return generic_action(rep, n).map(lambda x: x.specialize(*point), make_field(r), f"{rep}({n}) r={r}")


def specialized_N20(n: int, r: int) -> BraidAction:
    return specialized_action("N20", n, r)


def specialize_and_compare(n: int, r: int, rep: str = "N20") -> dict:
    """
    Specialize at the root of unity, compare with the tensor-space N when the modular
    condition holds, and look for an invariant complement of the w-span.
    """
    from .dominant import braid_on_N, find_equivariant_section

    f = make_field(r)
    action = specialized_action(rep, n, r)
    modular = (n + 1) % r == 0 if rep == "N20" else (n + 2) % r == 0
    matches: Optional[bool] = None
    if modular:
        matches = all(action.generators[i - 1] == braid_on_N(n, 2, r, i) for i in range(1, n))
    section = find_equivariant_section(list(action.generators), w_subspace(n, f, rep), f)

    report = {
        "rep": rep,
        "n": n,
        "r": r,
        "dim": action.dim,
        "modular": modular,
        "matches_tensor_space": matches,
        "split": section.split,
        "certificate": section.certificate(),
    }
    if rep == "N20":
        q0, s0, t0 = specialize_point(r)
        try:
            values = [section_coefficient(n, *p).specialize(q0, s0, t0) for p in pair_list(n)]
        except SpecializationError:
            report["lambda_singular"] = True
            report["lambdas_match"] = None
        else:
            vector = [f.one] + values
            fixed = all(g.apply(vector) == vector for g in action.generators)
            if section.unique:
                fixed = fixed and [section.coefficients[k, 0] for k in range(len(values))] == values
            report["lambda_singular"] = False
            report["lambdas_match"] = fixed
    return report


# s = q = 1

@functools.lru_cache(maxsize=None)
def sq1_action(n: int) -> BraidAction:
    return generic_action("N20", n).map(lambda x: x.at_unity(), LAURENT, f"N20({n}) s=q=1")


def sq1_delta_powers(n: int, k: int) -> dict:
    """Delta_n^k b at s = q = 1 against b + k t sum_{i<j} w_{i,j}."""
    action = sq1_action(n)
    image = action.evaluate(half_twist_word(n) ** k).column(0)
    expected = [LAURENT.one] + [t * k for _ in pair_list(n)]
    w_block = action.generators[0].submatrix(range(1, action.dim), range(1, action.dim))
    permutation = _is_permutation_block(action)
    return {
        "n": n,
        "k": k,
        "image": image,
        "matches": image == expected,
        "w_block_permutation": permutation,
        "w_block_dim": w_block.nrows,
    }


def _is_permutation_block(action: BraidAction) -> bool:
    for g in action.generators:
        block = g.submatrix(range(1, action.dim), range(1, action.dim))
        for row in block.to_lists():
            nonzero = [x for x in row if x]
            if len(nonzero) != 1 or nonzero[0] != LAURENT.one:
                return False
    return True


def sq1_kernel_check(n: int) -> bool:
    """(sigma_i sigma_{i+1}^-1)^3 acts trivially at s = q = 1."""
    if n < 3:
        raise ParameterError("kernel check needs n >= 3")
    action = sq1_action(n)
    return all(action.evaluate(BraidWord(n, (i, -(i + 1)) * 3)).is_identity() for i in range(1, n - 1))


def restriction_embedding(n: int, ring=LAURENT) -> RepMatrix:
    """N20(n-1) -> N20(n): b -> b, w_{i,j} -> w_{i+1,j+1}."""
    if n < 3:
        raise ParameterError("restriction needs n >= 3")
    small = pair_list(n - 1)
    entries = {(0, 0): ring.one}
    for col, (i, j) in enumerate(small, start=1):
        entries[(1 + pair_index(n, i + 1, j + 1), col)] = ring.one
    return RepMatrix.from_dict(ring, 1 + len(pair_list(n)), 1 + len(small), entries)
