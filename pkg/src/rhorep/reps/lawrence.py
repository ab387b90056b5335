"""
Highest strong weight spaces W_{n,l} = ker E in V_{n,l} and their closed forms.

The basis of W_{n,l} is Phi(a_e) for the A-compositions a_e, where Phi is the unipotent
change of basis that corrects each a_e by B-vectors until E kills it. Because
Phi(a_e) = a_e + (B part), the W-coordinates of a vector of W are read off its A-entries;
every such read-off is certified by re-expanding.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass

from ..algebra import CycNum, RepMatrix, make_field
from ..errors import InconsistentSystemError, ParameterError
from .braid import BraidAction, sigma_inverse, sigma_matrix
from .weightspace import Composition, c_vec, d_nl, enumerate_basis, op_E, op_E_power, op_F, op_F_power

logger = logging.getLogger(__name__)


def phi_coefficient(n: int, l: int, r: int, p: int, m: int) -> CycNum:
    """Coefficient of the u_m term in Phi(a_e), p the 1-based slot of the leading u_1."""
    f = make_field(r)
    sign = -1 if (m - 1) % 2 else 1
    return sign * f.s_pow((m - 1) * (p - n)) * f.q_pow((m - 1) * (2 * l - m - 2))


def _b_preimage(k: int, l: int, r: int, target: tuple[int, ...]) -> list[CycNum]:
    """The unique x in B_{k,l} with E x = u_target, as a dense vector of V_{k,l}."""
    f = make_field(r)
    src, dst = enumerate_basis(k, l, r), enumerate_basis(k, l - 1, r)
    E_B = op_E(k, l, r).submatrix(range(dst.dim), src.b_positions)
    rhs = [f.zero] * dst.dim
    rhs[dst.index[target]] = f.one
    sol = E_B.solve(RepMatrix.from_columns(f, [rhs]), require_unique=True)
    out = [f.zero] * src.dim
    for pos, value in zip(src.b_positions, sol.column(0)):
        out[pos] = value
    return out


def _phi_column(comp: Composition, r: int) -> dict[tuple[int, ...], CycNum]:
    n, l = comp.n, comp.l
    f = make_field(r)
    p = comp.first_nonzero() + 1
    head = (0,) * (p - 1)
    tail = comp.parts[p:]
    k = n - p
    image: dict[tuple[int, ...], CycNum] = {}

    def add(parts: tuple[int, ...], coeff: CycNum):
        if coeff:
            image[parts] = image.get(parts, f.zero) + coeff

    for m in range(0, l + 1):
        if m >= r:
            raise ParameterError(f"Phi needs u_{m}, which does not exist for r={r}")
        b_m = phi_coefficient(n, l, r, p, m)
        if m == 0:
            pre = _b_preimage(k, l, r, tail)
            tail_basis = enumerate_basis(k, l, r)
            for pos, value in enumerate(pre):
                add(head + (0,) + tail_basis.order[pos].parts, b_m * value)
            continue
        tail_basis = enumerate_basis(k, l - 1, r)
        target_basis = enumerate_basis(k, l - m, r)
        vec = [f.zero] * tail_basis.dim
        vec[tail_basis.index[tail]] = f.one
        pushed = op_E_power(k, l - 1, r, m - 1).apply(vec)
        for pos, value in enumerate(pushed):
            add(head + (m,) + target_basis.order[pos].parts, b_m * value)
    return image


@functools.lru_cache(maxsize=None)
def phi(n: int, l: int, r: int) -> RepMatrix:
    """Matrix of Phi on V_{n,l}: identity on B, a_e -> Phi(a_e) on A."""
    if not 0 <= l < r:
        raise ParameterError(f"Phi is defined for 0 <= l < r, got l={l}, r={r}")
    f = make_field(r)
    basis = enumerate_basis(n, l, r)
    cols = []
    a_set = set(basis.a_positions) if l > 0 else set()
    for k, comp in enumerate(basis.order):
        col = [f.zero] * basis.dim
        if k in a_set and n > 1:
            for parts, value in _phi_column(comp, r).items():
                col[basis.index[parts]] = value
        else:
            col[k] = f.one
        cols.append(col)
    return RepMatrix.from_columns(f, cols, basis.dim)


@dataclass(frozen=True)
class WBasis:
    """Phi(a_e) for the A-compositions of V_{n,l}, in slot-word order."""

    n: int
    l: int
    r: int
    a_positions: tuple[int, ...]
    vectors: tuple[tuple[CycNum, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def labels(self) -> list[tuple[int, ...]]:
        basis = enumerate_basis(self.n, self.l, self.r)
        return [basis.order[k].slot_word() for k in self.a_positions]

    def combine(self, coords) -> list[CycNum]:
        f = make_field(self.r)
        out = [f.zero] * len(self.vectors[0]) if self.vectors else []
        for c, vec in zip(coords, self.vectors):
            if c:
                out = [x + c * y for x, y in zip(out, vec)]
        return out

    def coordinates(self, vector) -> list[CycNum]:
        """W-coordinates of a vector of W_{n,l}; raises InconsistentSystemError when it is outside W."""
        coords = [vector[k] for k in self.a_positions]
        if self.combine(coords) != list(vector):
            raise InconsistentSystemError(f"vector is not in W_{{{self.n},{self.l}}} at r={self.r}")
        return coords


@functools.lru_cache(maxsize=None)
def w_basis(n: int, l: int, r: int) -> WBasis:
    if not 0 <= l < r:
        raise ParameterError(f"W_{{n,l}} basis needs 0 <= l < r, got l={l}, r={r}")
    basis = enumerate_basis(n, l, r)
    if l == 0 or n == 1:
        positions = tuple(range(basis.dim)) if l == 0 else ()
    else:
        positions = basis.a_positions
    P = phi(n, l, r)
    vectors = tuple(tuple(P.column(k)) for k in positions)
    logger.debug("W_{%d,%d} r=%d: %d vectors", n, l, r, len(vectors))
    return WBasis(n, l, r, positions, vectors)


def _restrict_to_W(M: RepMatrix, wb: WBasis) -> RepMatrix:
    f = make_field(wb.r)
    cols = [wb.coordinates(M.apply(list(v))) for v in wb.vectors]
    return RepMatrix.from_columns(f, cols, wb.dim)


@functools.lru_cache(maxsize=None)
def braid_on_W(n: int, l: int, r: int, i: int) -> RepMatrix:
    """sigma_i on W_{n,l} in the Phi(a_e) basis."""
    return _restrict_to_W(sigma_matrix(n, l, r, i), w_basis(n, l, r))


@functools.lru_cache(maxsize=None)
def w_action(n: int, l: int, r: int) -> BraidAction:
    wb = w_basis(n, l, r)
    gens = tuple(braid_on_W(n, l, r, i) for i in range(1, n))
    invs = tuple(_restrict_to_W(sigma_inverse(n, l, r, i), wb) for i in range(1, n))
    return BraidAction(f"W_{n},{l}", make_field(r), gens, invs)


# closed forms

def pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def pair_index(n: int, i: int, j: int) -> int:
    """Position of w_{i,j} (i < j) in the order (1,2), (1,3), ..., (n-1,n)."""
    if not 1 <= i < j <= n:
        raise ParameterError(f"w_{{{i},{j}}} needs 1 <= i < j <= {n}")
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


def lkb_closed_form(n: int, q, s, ring) -> list[RepMatrix]:
    """
    Two-variable LKB generators on the pairs w_{i,j}, over any ring holding q and s.

    sigma_i w_{i,i+1} = s^-4 q^2 w_{i,i+1}
    sigma_i w_{i+1,k} = s^-1 w_{i,k}          sigma_i w_{j,i+1} = s^-1 w_{j,i}
    sigma_i w_{i,k}   = s^-1 w_{i+1,k} + (1-s^-2) w_{i,k} - s^{i-k-1}(1-s^-2) q^2 w_{i,i+1}
    sigma_i w_{j,i}   = s^-1 w_{j,i+1} + (1-s^-2) w_{j,i} - s^{i-j-1}(1-s^-2) w_{i,i+1}
    and sigma_i fixes w_{j,k} with {j,k} disjoint from {i,i+1}.
    """
    if n < 2:
        raise ParameterError("LKB needs n >= 2")
    pairs = pair_list(n)
    dim = len(pairs)
    one = ring.one
    s_inv = s**-1
    damp = one - s**-2
    gens = []
    for i in range(1, n):
        entries: dict[tuple[int, int], object] = {}

        def put(row_pair, col, value):
            key = (pair_index(n, *row_pair), col)
            entries[key] = entries[key] + value if key in entries else value

        for col, (j, k) in enumerate(pairs):
            if (j, k) == (i, i + 1):
                put((i, i + 1), col, s**-4 * q**2)
            elif j == i + 1:
                put((i, k), col, s_inv)
            elif k == i + 1:
                put((j, i), col, s_inv)
            elif j == i:
                put((i + 1, k), col, s_inv)
                put((i, k), col, damp)
                put((i, i + 1), col, -(s ** (i - k - 1)) * damp * q**2)
            elif k == i:
                put((j, i + 1), col, s_inv)
                put((j, i), col, damp)
                put((i, i + 1), col, -(s ** (i - j - 1)) * damp)
            else:
                put((j, k), col, one)
        gens.append(RepMatrix.from_dict(ring, dim, dim, entries))
    return gens


def burau_unreduced(n: int, t, ring) -> list[RepMatrix]:
    """sigma_i c^_i = t c^_{i+1} + (1-t) c^_i, sigma_i c^_{i+1} = c^_i, other c^_j fixed."""
    if n < 2:
        raise ParameterError("Burau needs n >= 2")
    gens = []
    for i in range(1, n):
        entries = {(j, j): ring.one for j in range(n) if j not in (i - 1, i)}
        entries[(i, i - 1)] = t
        entries[(i - 1, i - 1)] = ring.one - t
        entries[(i - 1, i)] = ring.one
        gens.append(RepMatrix.from_dict(ring, n, n, entries))
    return gens


def burau_conjugator(n: int, r: int) -> RepMatrix:
    """Columns c^_i = s^i c_i in the c-basis of V_{n,1} (the c_i sit in reverse lexicographic order)."""
    f = make_field(r)
    basis = enumerate_basis(n, 1, r)
    entries = {}
    for i in range(1, n + 1):
        row = basis.position(tuple(1 if k == i else 0 for k in range(1, n + 1)))
        entries[(row, i - 1)] = f.s_pow(i)
    return RepMatrix.from_dict(f, n, n, entries)


def reduced_burau_cbar(n: int, s, ring) -> list[RepMatrix]:
    """
    Action on c-bar_j = c_j - s^{n-j} c_n (j < n), a basis of W_{n,1}:

    sigma_i cb_i = (1-s^-2) cb_i + s^-1 cb_{i+1},  sigma_i cb_{i+1} = s^-1 cb_i   (i != n-1)
    sigma_{n-1} cb_j = cb_j - s^{n-j-1} cb_{n-1},  sigma_{n-1} cb_{n-1} = -s^-2 cb_{n-1}
    """
    dim = n - 1
    gens = []
    for i in range(1, n):
        entries: dict[tuple[int, int], object] = {}
        if i != n - 1:
            for j in range(1, n):
                if j not in (i, i + 1):
                    entries[(j - 1, j - 1)] = ring.one
            entries[(i - 1, i - 1)] = ring.one - s**-2
            entries[(i, i - 1)] = s**-1
            entries[(i - 1, i)] = s**-1
        else:
            for j in range(1, n - 1):
                entries[(j - 1, j - 1)] = ring.one
                entries[(n - 2, j - 1)] = -(s ** (n - j - 1))
            entries[(n - 2, n - 2)] = -(s**-2)
        gens.append(RepMatrix.from_dict(ring, dim, dim, entries))
    return gens


def cbar_vectors(n: int, r: int) -> list[list[CycNum]]:
    """c-bar_i = c_i - s^{n-i} c_n, i = 1..n-1, dense in V_{n,1}."""
    f = make_field(r)
    cn = c_vec(n, r, n)
    return [(c_vec(n, r, i) - cn.scale(f.s_pow(n - i))).dense() for i in range(1, n)]


def phi_burau_vectors(n: int, r: int) -> list[list[CycNum]]:
    """F c-bar_i, i = 1..n-1, dense in V_{n,2}."""
    F = op_F(n, 1, r)
    return [F.apply(v) for v in cbar_vectors(n, r)]


def f_cbar_closed_form(n: int, r: int) -> list[list[CycNum]]:
    """W_{n,2}-coordinates of F c-bar_i predicted for n = -2 mod r."""
    f = make_field(r)
    q2 = f.q_pow(2)
    dim = d_nl(n, 2)
    out = []
    for i in range(1, n):
        coords = [f.zero] * dim
        for j in range(1, n - i + 1):
            k = pair_index(n, i, i + j)
            coords[k] = coords[k] + f.s_pow(-(i - 1)) * q2 * f.s_pow(-j)
        for j in range(1, i):
            k = pair_index(n, j, i)
            coords[k] = coords[k] + f.s_pow(-(j - 1))
        for j in range(1, n):
            k = pair_index(n, j, n)
            coords[k] = coords[k] - f.s_pow(n - i) * f.s_pow(-(j - 1))
        out.append(coords)
    return out


def f2_vacuum_closed_form(n: int, r: int) -> list[CycNum]:
    """
    W_{n,2}-coordinates of F^2 u_0^{(x)n}: (1 + q^2) s^{2-i-j} on w_{i,j}.

    F^2 u_0^{(x)n} lies in W_{n,2} only when n = -1 mod r.

    The two orders of applying F to slots i < j contribute s^{-(i-1)} s^{-(j-1)} q^2 and
    s^{-(j-1)} s^{-(i-1)}.
    """
    f = make_field(r)
    factor = f.one + f.q_pow(2)
    return [factor * f.s_pow(2 - i - j) for i, j in pair_list(n)]


def e_power_rank_on_W(n: int, l: int, r: int, k: int) -> int:
    """Rank of E^k F^k restricted to W_{n,l}."""
    wb = w_basis(n, l, r)
    if wb.dim == 0:
        return 0
    f = make_field(r)
    M = op_E_power(n, l + k, r, k) @ op_F_power(n, l, r, k)
    return RepMatrix.from_columns(f, [M.apply(list(v)) for v in wb.vectors]).rank()
