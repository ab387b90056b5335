"""
Dominant spaces N_{n,l} = ker (FE)^2 in V_{n,l}, the structure of W_{n,l} inside them, and
split / non-split certification of invariant subspaces.

Modular data: j in [0, r-1] with j = n + 2(l-1) mod r, and l' = l-1-j when j < l.
When l' exists, N_{n,l} = H + W_{n,l} with the head H mapped onto W_{n,l'} by E^{j+1}.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from ..algebra import CycNum, RepMatrix, complete_basis, coordinates, make_field, row_reduce, span_contains
from ..errors import ConsistencyError, InconsistentSystemError, ParameterError
from .braid import BraidAction, full_twist_word, sigma_inverse, sigma_matrix
from .lawrence import (
    WBasis,
    braid_on_W,
    cbar_vectors,
    e_power_rank_on_W,
    pair_index,
    w_basis,
)
from .reports import CSRReport, TwistReport
from .weightspace import (
    b_vec,
    c_vec,
    d_nl,
    enumerate_basis,
    op_E,
    op_E_power,
    op_F,
    op_F_power,
    op_FE,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModularData:
    n: int
    l: int
    r: int
    j: int
    lprime: Optional[int]


def modular_data(n: int, l: int, r: int) -> ModularData:
    if n < 1 or r < 2 or not 0 <= l < r:
        raise ParameterError(f"modular data needs n >= 1, r >= 2, 0 <= l < r; got n={n}, l={l}, r={r}")
    j = (n + 2 * (l - 1)) % r
    lprime = l - 1 - j if j < l else None
    return ModularData(n, l, r, j, lprime)


@dataclass(frozen=True)
class NBasis:
    """Head vectors first, then the W_{n,l} basis."""

    modular: ModularData
    w: WBasis
    h: tuple[tuple[CycNum, ...], ...]

    @property
    def vectors(self) -> list[tuple[CycNum, ...]]:
        return list(self.h) + list(self.w.vectors)

    @property
    def dim(self) -> int:
        return len(self.h) + self.w.dim

    @property
    def head_dim(self) -> int:
        return len(self.h)

    def coordinates(self, vectors: Sequence[Sequence[CycNum]]) -> RepMatrix:
        return coordinates(make_field(self.modular.r), self.vectors, vectors)


# explicit l = 2 head vectors

def b_sum(n: int, r: int) -> list[CycNum]:
    """b = b_1 + ... + b_n."""
    total = b_vec(n, r, 1)
    for i in range(2, n + 1):
        total = total + b_vec(n, r, i)
    return total.dense()


def b_prime(n: int, r: int, j: int) -> list[CycNum]:
    """b'_j = s^{j-n} b_j - s^{n-j} b_n."""
    f = make_field(r)
    return (b_vec(n, r, j).scale(f.s_pow(j - n)) - b_vec(n, r, n).scale(f.s_pow(n - j))).dense()


def _is_zero_vec(v) -> bool:
    return all(not x for x in v)


def _head_vectors(n: int, l: int, r: int, md: ModularData, wb: WBasis, null: list) -> list[list[CycNum]]:
    if md.lprime is None:
        return []
    if l == 2 and md.lprime == 0:
        return [b_sum(n, r)]
    if l == 2 and md.lprime == 1:
        return [b_prime(n, r, j) for j in range(1, n)]
    # Clearing A-entries with W leaves the B-only part of N, whose reduced echelon form
    # on the B columns is the same whatever nullspace basis came in.
    f = make_field(r)
    b_positions = enumerate_basis(n, l, r).b_positions
    b_parts = []
    for v in null:
        rest = [x - y for x, y in zip(v, wb.combine([v[k] for k in wb.a_positions]))]
        b_parts.append([rest[k] for k in b_positions])
    rows, pivots = row_reduce(b_parts, len(b_positions))
    chosen: list[list[CycNum]] = []
    for row in rows[: len(pivots)]:
        vec = [f.zero] * len(null[0])
        for pos, value in zip(b_positions, row):
            vec[pos] = value
        chosen.append(vec)
    return chosen


@functools.lru_cache(maxsize=None)
def n_space(n: int, l: int, r: int) -> NBasis:
    md = modular_data(n, l, r)
    wb = w_basis(n, l, r)
    FE = op_FE(n, l, r)
    FE2 = FE @ FE
    null = FE2.nullspace()
    expected = wb.dim + (d_nl(n, md.lprime) if md.lprime is not None else 0)
    if len(null) != expected:
        raise ConsistencyError(
            f"dim N_{{{n},{l}}} = {len(null)} at r={r}, expected {expected}",
            detail={"n": n, "l": l, "r": r, "dim": len(null), "expected": expected},
        )
    head = _head_vectors(n, l, r, md, wb, null)
    E = op_E(n, l, r)
    for v in head:
        if not _is_zero_vec(FE2.apply(v)) or _is_zero_vec(E.apply(v)):
            raise ConsistencyError(f"head vector of N_{{{n},{l}}} at r={r} is not dominant or lies in W")
    if len(head) != expected - wb.dim:
        raise ConsistencyError(f"head of N_{{{n},{l}}} has {len(head)} vectors, expected {expected - wb.dim}")
    logger.debug("N_{%d,%d} r=%d: dim %d (head %d)", n, l, r, expected, len(head))
    return NBasis(md, wb, tuple(tuple(v) for v in head))


def _restrict_to_N(M: RepMatrix, nb: NBasis) -> RepMatrix:
    return nb.coordinates([M.apply(list(v)) for v in nb.vectors])


@functools.lru_cache(maxsize=None)
def braid_on_N(n: int, l: int, r: int, i: int) -> RepMatrix:
    """sigma_i on N_{n,l} in the basis (head, W)."""
    return _restrict_to_N(sigma_matrix(n, l, r, i), n_space(n, l, r))


@functools.lru_cache(maxsize=None)
def n_action(n: int, l: int, r: int) -> BraidAction:
    nb = n_space(n, l, r)
    gens = tuple(braid_on_N(n, l, r, i) for i in range(1, n))
    invs = tuple(_restrict_to_N(sigma_inverse(n, l, r, i), nb) for i in range(1, n))
    return BraidAction(f"N_{n},{l}", make_field(r), gens, invs)


def basis_N20(n: int, r: int) -> NBasis:
    """N_{n,2,0} with head b = b_1 + ... + b_n; needs n = -1 mod r."""
    if r < 3 or (n + 1) % r:
        raise ParameterError(f"N_{{n,2,0}} needs r >= 3 and n = -1 mod r, got n={n}, r={r}")
    return n_space(n, 2, r)


def basis_N21(n: int, r: int) -> NBasis:
    """N_{n,2,1} with head b'_1, ..., b'_{n-1}; needs n = -2 mod r."""
    if r < 3 or n < 3 or (n + 2) % r:
        raise ParameterError(f"N_{{n,2,1}} needs r >= 3, n >= 3 and n = -2 mod r, got n={n}, r={r}")
    return n_space(n, 2, r)


# explicit l = 2 actions, checked on the tensor space

def _lin(f, terms) -> list[CycNum]:
    """Sum of coefficient * dense vector."""
    out = None
    for coeff, vec in terms:
        scaled = [coeff * x for x in vec]
        out = scaled if out is None else [a + b for a, b in zip(out, scaled)]
    return out


def check_action_b(n: int, r: int) -> list[str]:
    """
    sigma_i b_j = b_j (j != i, i+1), sigma_i b_i = t w_{i,i+1} + (1-q^2) b_i + b_{i+1},
    sigma_i b_{i+1} = q^2 b_i and sigma_i b = b + t w_{i,i+1}, with t = s^-3 (1-q^2).
    Returns the failing statements.
    """
    f = make_field(r)
    q2 = f.q_pow(2)
    t = f.s_pow(-3) * (f.one - q2)
    wb = w_basis(n, 2, r)
    b = {i: b_vec(n, r, i).dense() for i in range(1, n + 1)}
    total = b_sum(n, r)
    failures = []
    for i in range(1, n):
        M = sigma_matrix(n, 2, r, i)
        w = list(wb.vectors[pair_index(n, i, i + 1)])
        if M.apply(b[i]) != _lin(f, [(t, w), (f.one - q2, b[i]), (f.one, b[i + 1])]):
            failures.append(f"sigma_{i} b_{i}")
        if M.apply(b[i + 1]) != _lin(f, [(q2, b[i])]):
            failures.append(f"sigma_{i} b_{i + 1}")
        for j in range(1, n + 1):
            if j not in (i, i + 1) and M.apply(b[j]) != b[j]:
                failures.append(f"sigma_{i} b_{j}")
        if M.apply(total) != _lin(f, [(f.one, total), (t, w)]):
            failures.append(f"sigma_{i} b")
    return failures


def check_action_bprime(n: int, r: int) -> list[str]:
    """The action on b'_j for n = -2 mod r, plus E b'_j = c_j - s^{n-j} c_n."""
    f = make_field(r)
    t = f.s_pow(-3) * (f.one - f.q_pow(2))
    wb = w_basis(n, 2, r)
    bp = {j: b_prime(n, r, j) for j in range(1, n)}
    failures = []
    for i in range(1, n):
        M = sigma_matrix(n, 2, r, i)
        w = list(wb.vectors[pair_index(n, i, i + 1)])
        for j in range(1, n):
            image = M.apply(bp[j])
            if i != n - 1:
                if j == i:
                    expected = _lin(f, [(f.s_pow(i - n) * t, w), (f.one - f.s_pow(-2), bp[i]), (f.s_pow(-1), bp[i + 1])])
                elif j == i + 1:
                    expected = _lin(f, [(f.s_pow(-1), bp[i])])
                else:
                    expected = bp[j]
            elif j == n - 1:
                expected = _lin(f, [(f.s_pow(-1) * t, w), (-f.s_pow(-2), bp[n - 1])])
            else:
                expected = _lin(f, [(f.one, bp[j]), (-f.s_pow(n - j - 1), bp[n - 1])])
            if image != expected:
                failures.append(f"sigma_{i} b'_{j}")
    E = op_E(n, 2, r)
    for j, cbar in enumerate(cbar_vectors(n, r), start=1):
        if E.apply(bp[j]) != cbar:
            failures.append(f"E b'_{j}")
    return failures


def beta_coefficient(n: int, r: int, i: int) -> CycNum:
    """1 + q^{-2i} (1 - q^{2n+4}) / (1 - q^2)."""
    f = make_field(r)
    q2 = f.q_pow(2)
    return f.one + f.q_pow(-2 * i) * (f.one - f.q_pow(2 * n + 4)) / (f.one - q2)


def lin_sys_matrix(n: int, r: int) -> RepMatrix:
    """Row j, column i: s^{-2i-j} off the diagonal, s^{-3j} beta_j on it."""
    f = make_field(r)
    rows = []
    for j in range(1, n + 1):
        rows.append([f.s_pow(-3 * j) * beta_coefficient(n, r, j) if i == j else f.s_pow(-2 * i - j) for i in range(1, n + 1)])
    return RepMatrix(f, rows, n)


def efe_on_b(n: int, r: int) -> RepMatrix:
    """EFE restricted to span{b_i}, in the c_j coordinates of V_{n,1}."""
    EFE = op_E(n, 2, r) @ op_F(n, 1, r) @ op_E(n, 2, r)
    cols = [next(iter(b_vec(n, r, i).entries)) for i in range(1, n + 1)]
    rows = [next(iter(c_vec(n, r, j).entries)) for j in range(1, n + 1)]
    return EFE.submatrix(rows, cols)


def lin_sys_check(n: int, r: int) -> bool:
    f = make_field(r)
    return efe_on_b(n, r) == lin_sys_matrix(n, r).scale(f.s_pow(2 * n + 1))


# quotient N / W

def quotient_action_check(n: int, l: int, r: int) -> bool:
    """The action induced on N/W equals braid_on_W(n, l') after identifying N/W with W_{n,l'} by E^{j+1}."""
    nb = n_space(n, l, r)
    md = nb.modular
    if md.lprime is None:
        return nb.head_dim == 0
    h = nb.head_dim
    f = make_field(r)
    target = w_basis(n, md.lprime, r)
    Ej = op_E_power(n, l, r, md.j + 1)
    try:
        P = RepMatrix.from_columns(f, [target.coordinates(Ej.apply(list(v))) for v in nb.h], target.dim)
    except InconsistentSystemError:
        return False
    if P.rank() != h:
        return False
    for i in range(1, n):
        M = braid_on_N(n, l, r, i)
        if not M.submatrix(range(h), range(h, nb.dim)).is_zero():
            return False
        Q = M.submatrix(range(h), range(h))
        if P @ Q != braid_on_W(n, md.lprime, r, i) @ P:
            return False
    return True


# C / S / R structure of W

def _independent(ring, vectors: list[list]) -> list[list]:
    kept: list[list] = []
    for v in vectors:
        if not span_contains(ring, kept, v):
            kept.append(v)
    return kept


def decompose_CSR(n: int, l: int, r: int) -> CSRReport:
    md = modular_data(n, l, r)
    f = make_field(r)
    wb = w_basis(n, l, r)
    d = wb.dim
    dim_C = e_power_rank_on_W(n, l, r, r - 1)

    s_vectors: list[list[CycNum]] = []
    s_in_W = True
    s_action: Optional[bool] = None
    s_coords: list[list[CycNum]] = []
    if md.lprime is not None:
        source = w_basis(n, md.lprime, r)
        Fk = op_F_power(n, md.lprime, r, md.j + 1)
        images = [Fk.apply(list(v)) for v in source.vectors]
        s_vectors = _independent(f, images)
        try:
            s_coords = [wb.coordinates(v) for v in s_vectors]
        except InconsistentSystemError:
            s_in_W = False
        if s_in_W and len(s_vectors) == source.dim:
            s_action = True
            for i in range(1, n):
                moved = [sigma_matrix(n, l, r, i).apply(v) for v in images]
                try:
                    local = coordinates(f, images, moved)
                except InconsistentSystemError:
                    s_action = False
                    break
                if local != braid_on_W(n, md.lprime, r, i):
                    s_action = False
                    break
    dim_S = len(s_vectors)
    dim_R = d - dim_S - dim_C

    if md.j == r - 1:
        case, ok = "C", dim_C == d and dim_S == 0
    elif md.j >= l:
        case, ok = "R", dim_C == 0 and dim_S == 0
    elif n >= 3:
        case, ok = "S+R", dim_C == 0 and dim_S == d_nl(n, md.lprime) and dim_R > 0
    else:
        case, ok = "S", dim_S == d and dim_C == 0
    return CSRReport(
        n=n, l=l, r=r, j=md.j, lprime=md.lprime, case=case,
        dim_W=d, dim_C=dim_C, dim_S=dim_S, dim_R=dim_R,
        s_in_W=s_in_W, s_action_matches=s_action, matches_case=ok and s_in_W,
        s_basis=s_coords,
    )


# full twist

def twist_scalar_exponent(n: int, l: int) -> int:
    return 2 * l * (n + l - 1)


def twist_formula(n: int, l: int, r: int) -> RepMatrix:
    """q^{2l(n+l-1)} (Id + s^n q^{1-l-l'} (l-l') {1}^2 / {l-l'} FE) in the N basis; scalar only without l'."""
    nb = n_space(n, l, r)
    f = make_field(r)
    scalar = f.q_pow(twist_scalar_exponent(n, l))
    ident = RepMatrix.identity(f, nb.dim)
    lp = nb.modular.lprime
    if lp is None:
        return ident.scale(scalar)
    FE = op_FE(n, l, r)
    fe_local = nb.coordinates([FE.apply(list(v)) for v in nb.vectors])
    coeff = f.s_pow(n) * f.q_pow(1 - l - lp) * (l - lp) * f.qnum(1) ** 2 / f.qnum(l - lp)
    return (ident + fe_local.scale(coeff)).scale(scalar)


def full_twist_matrix(n: int, l: int, r: int) -> RepMatrix:
    return n_action(n, l, r).evaluate(full_twist_word(n))


def full_twist_check(n: int, l: int, r: int) -> TwistReport:
    if n < 2:
        raise ParameterError("full twist needs n >= 2")
    nb = n_space(n, l, r)
    f = make_field(r)
    exponent = twist_scalar_exponent(n, l)
    scalar = f.q_pow(exponent)
    theta = full_twist_matrix(n, l, r)
    nil = theta - RepMatrix.identity(f, nb.dim).scale(scalar)
    h = nb.head_dim
    on_W = nil.submatrix(range(nb.dim), range(h, nb.dim)).is_zero()
    # theta^r acts on W as scalar^r, which must be 1
    theta_r_on_W = theta.power(r).submatrix(range(h, nb.dim), range(h, nb.dim))
    report = TwistReport(
        n=n, l=l, r=r, lprime=nb.modular.lprime,
        scalar_exponent=exponent,
        dim_N=nb.dim,
        nilpotent_rank=nil.rank(),
        nilpotent_nonzero=not nil.is_zero(),
        nilpotent_square_zero=(nil @ nil).is_zero(),
        scalar_on_W=on_W,
        power_r_identity_on_W=on_W and theta_r_on_W.is_identity(),
        matches_formula=theta == twist_formula(n, l, r),
    )
    if nb.modular.lprime is None and report["nilpotent_nonzero"]:
        logger.warning("full twist on N_{%d,%d} r=%d has a nilpotent part without l'", n, l, r)
    return report


# sections

@dataclass
class SectionResult:
    """An invariant complement (split) or the rank certificate that none exists."""

    split: bool
    complement: Optional[list[list]]
    coefficients: Optional[RepMatrix]
    rank: Optional[int]
    augmented_rank: Optional[int]
    unknowns: int

    @property
    def unique(self) -> bool:
        return self.split and self.rank == self.unknowns

    def certificate(self) -> dict:
        return {
            "unknowns": self.unknowns,
            "rank": self.rank,
            "augmented_rank": self.augmented_rank,
            "unique": self.unique,
        }


def find_equivariant_section(generators: Sequence[RepMatrix], subspace: Sequence[Sequence], ring=None) -> SectionResult:
    """
    Look for a complement of `subspace` that every generator preserves.

    With P = [subspace | unit vectors], P^-1 G P = [[X, Z], [0, Y]]; a complement
    U = units + subspace * L is invariant iff X L - L Y = -Z for every generator.
    """
    ring = ring or generators[0].ring
    dim = generators[0].nrows
    sub = [list(v) for v in subspace]
    k = len(sub)
    extra = complete_basis(ring, sub, dim)
    units = [[ring.one if a == e else ring.zero for a in range(dim)] for e in extra]
    m = len(units)
    if k == 0 or m == 0:
        return SectionResult(True, units, RepMatrix.zeros(ring, k, m), 0, 0, 0)

    P = RepMatrix.from_columns(ring, sub + units)
    P_inv = P.inverse()
    rows, rhs = [], []
    for g in generators:
        Gp = P_inv @ g @ P
        if not Gp.submatrix(range(k, dim), range(k)).is_zero():
            raise ParameterError("subspace is not invariant under the generators")
        for a in range(k):
            for c in range(m):
                row = [ring.zero] * (k * m)
                for b in range(k):
                    row[b * m + c] = row[b * m + c] + Gp[a, b]
                for d in range(m):
                    row[a * m + d] = row[a * m + d] - Gp[k + d, k + c]
                rows.append(row)
                rhs.append([-Gp[a, k + c]])

    A = RepMatrix(ring, rows, k * m)
    B = RepMatrix(ring, rhs, 1)
    try:
        sol = A.solve(B)
    except InconsistentSystemError as exc:
        logger.debug("no invariant complement: rank %s < %s", exc.rank, exc.augmented_rank)
        return SectionResult(False, None, None, exc.rank, exc.augmented_rank, k * m)
    rank = A.rank()
    L = RepMatrix(ring, [[sol[b * m + c, 0] for c in range(m)] for b in range(k)], m)
    complement = []
    for c in range(m):
        vec = list(units[c])
        for b in range(k):
            coeff = L[b, c]
            if coeff:
                vec = [x + coeff * y for x, y in zip(vec, sub[b])]
        complement.append(vec)
    return SectionResult(True, complement, L, rank, rank, k * m)


def w_subspace_of_N(nb: NBasis) -> list[list]:
    """W inside N in N-coordinates: the unit vectors after the head."""
    f = make_field(nb.modular.r)
    return [[f.one if a == nb.head_dim + k else f.zero for a in range(nb.dim)] for k in range(nb.w.dim)]


def split_check_N(n: int, l: int, r: int) -> SectionResult:
    nb = n_space(n, l, r)
    return find_equivariant_section(list(n_action(n, l, r).generators), w_subspace_of_N(nb), make_field(r))


def split_check_SR(n: int, l: int, r: int) -> SectionResult:
    """Does S inside W_{n,l} have an invariant complement?"""
    csr = decompose_CSR(n, l, r)
    if not csr["s_basis"]:
        raise ParameterError(f"S_{{{n},{l}}} is zero at r={r}")
    gens = [braid_on_W(n, l, r, i) for i in range(1, n)]
    return find_equivariant_section(gens, csr["s_basis"], make_field(r))


def restriction_check(n: int, r: int) -> dict:
    """
    The embedding w_{i,j} -> w_{i+1,j+1}, b -> b of N~_{n-1,2,0} into N~_{n,2,0} intertwines
    sigma_i with sigma_{i+1}, and N_{n,2,0} restricted to <sigma_2, ..., sigma_{n-1}> splits.
    """
    from . import generic

    if n < 3 or (n + 1) % r:
        raise ParameterError(f"restriction check needs n >= 3 and n = -1 mod r, got n={n}, r={r}")
    big = generic.specialized_N20(n, r)
    small = generic.specialized_N20(n - 1, r)
    iota = generic.restriction_embedding(n, make_field(r))
    equivariant = all(
        big.generators[i] @ iota == iota @ small.generators[i - 1] for i in range(1, n - 1)
    )
    section = find_equivariant_section(list(big.generators[1:]), generic.w_subspace(n, make_field(r)), make_field(r))
    return {
        "n": n,
        "r": r,
        "equivariant": equivariant,
        "restricted_split": section.split,
        "certificate": section.certificate(),
    }


def sr_action(n: int, l: int, r: int) -> BraidAction:
    """W_{n,l} in a basis S first, then unit vectors completing it; S is an invariant block."""
    csr = decompose_CSR(n, l, r)
    f = make_field(r)
    wb = w_basis(n, l, r)
    sub = [list(v) for v in csr["s_basis"]]
    units = [[f.one if a == e else f.zero for a in range(wb.dim)] for e in complete_basis(f, sub, wb.dim)]
    P = RepMatrix.from_columns(f, sub + units, wb.dim)
    P_inv = P.inverse()
    gens = tuple(P_inv @ braid_on_W(n, l, r, i) @ P for i in range(1, n))
    return BraidAction(f"SR_{n},{l}", f, gens)
