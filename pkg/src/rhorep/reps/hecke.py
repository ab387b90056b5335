"""
Minimal polynomials and generator orders on the l = 2 dominant spaces, the 3-dimensional
cubic Hecke representation of B_4, and its appearance as W_{4,2} / S_{4,2} at r = 3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from ..algebra import CycNum, RepMatrix, coordinates, make_field
from ..errors import ConsistencyError, InconsistentSystemError, NotInvertibleError, ParameterError
from .braid import check_braid_relations
from .dominant import basis_N20, basis_N21, braid_on_N
from .lawrence import braid_on_W, f_cbar_closed_form, pair_index, phi_burau_vectors, reduced_burau_cbar, w_basis

logger = logging.getLogger(__name__)


def minimal_polynomial(M: RepMatrix) -> list:
    """
    Monic minimal polynomial of a square matrix, ascending coefficients.

    The first power M^k lying in the span of I, M, ..., M^{k-1} gives the relation.
    """
    if M.nrows != M.ncols:
        raise ParameterError("minimal polynomial of a non-square matrix")
    ring = M.ring
    flat = lambda A: [x for row in A.to_lists() for x in row]  # noqa: E731
    powers = [RepMatrix.identity(ring, M.nrows)]
    while True:
        nxt = powers[-1] @ M
        try:
            coeffs = coordinates(ring, [flat(P) for P in powers], [flat(nxt)])
        except InconsistentSystemError:
            powers.append(nxt)
            continue
        return [-coeffs[k, 0] for k in range(len(powers))] + [ring.one]


def evaluate_polynomial(coeffs, M: RepMatrix) -> RepMatrix:
    """Horner evaluation of sum coeffs[k] M^k."""
    result = RepMatrix.zeros(M.ring, M.nrows, M.ncols)
    ident = RepMatrix.identity(M.ring, M.nrows)
    for c in reversed(coeffs):
        result = result @ M + ident.scale(c)
    return result


def _n_sigma(n: int, r: int, rep: str, i: int = 1) -> RepMatrix:
    if rep == "N20":
        basis_N20(n, r)
    elif rep == "N21":
        basis_N21(n, r)
    else:
        raise ParameterError(f"unknown dominant representation {rep!r}")
    return braid_on_N(n, 2, r, i)


def cubic_roots(r: int) -> list[CycNum]:
    """1, -s^-2 = q^{r+2} and s^-4 q^2 = q^6."""
    f = make_field(r)
    return [f.one, -f.s_pow(-2), f.s_pow(-4) * f.q_pow(2)]


def min_pol_check(n: int, r: int, rep: str) -> dict[str, Any]:
    """p(sigma_i) = 0 on N for every generator, and the exact minimal polynomial of sigma_1."""
    f = make_field(r)
    roots = cubic_roots(r)
    # (X - 1)(X + s^-2)(X - s^-4 q^2)
    p = [f.one]
    for root in roots:
        shifted = [f.zero] * (len(p) + 1)
        for k, c in enumerate(p):
            shifted[k + 1] = shifted[k + 1] + c
            shifted[k] = shifted[k] - root * c
        p = shifted
    annihilates = all(evaluate_polynomial(p, _n_sigma(n, r, rep, i)).is_zero() for i in range(1, n))
    minimal = minimal_polynomial(_n_sigma(n, r, rep))
    return {
        "n": n,
        "r": r,
        "rep": rep,
        "annihilates": annihilates,
        "minimal_degree": len(minimal) - 1,
        "minimal_is_p": len(minimal) == len(p) and all(a == b for a, b in zip(minimal, p)),
    }


def generator_order(n: int, r: int, rep: str) -> Optional[int]:
    """Least k >= 1 with sigma_1^k = Id, searched up to 4r; None when no such k exists there."""
    sigma = _n_sigma(n, r, rep)
    power = sigma
    for k in range(1, 4 * r + 1):
        if power.is_identity():
            return k
        power = power @ sigma
    return None


def eigenvalue_report(n: int, r: int, rep: str) -> dict[str, Any]:
    f = make_field(r)
    roots = cubic_roots(r)
    order = generator_order(n, r, rep)
    if order is None:
        logger.warning("sigma_1 on %s has no order <= %d at n=%d, r=%d", rep, 4 * r, n, r)
    return {
        "n": n,
        "r": r,
        "rep": rep,
        "roots": [str(x) for x in roots],
        "roots_are_powers": roots[1] == f.q_pow(r + 2) and roots[2] == f.q_pow(6),
        "distinct": len({tuple(x.coeffs) for x in roots}) == 3,
        "order_found": order is not None,
        "order": order,
        "order_divides_2r": order is not None and (2 * r) % order == 0,
        "order_divides_r": order is not None and r % order == 0,
    }


# cubic Hecke representation

@dataclass(frozen=True)
class CubicParams:
    x: Any
    y: Any
    z: Any


def cubic_rep(params: CubicParams) -> tuple[RepMatrix, RepMatrix, RepMatrix]:
    x, y, z = params.x, params.y, params.z
    ring = x.ring
    s13 = RepMatrix(ring, [[z, 0, 0], [x * z + y * y, y, 0], [y, 1, x]], 3)
    s2 = RepMatrix(ring, [[x, -1, y], [0, y, -(x * z) - y * y], [0, 0, z]], 3)
    return s13, s2, s13


def cubic_relation(params: CubicParams) -> list[RepMatrix]:
    """(sigma - x)(sigma - y)(sigma - z) for each generator."""
    out = []
    for g in cubic_rep(params):
        ident = RepMatrix.identity(g.ring, 3)
        out.append((g - ident.scale(params.x)) @ (g - ident.scale(params.y)) @ (g - ident.scale(params.z)))
    return out


def cubic_braid_defects(params: CubicParams) -> list[str]:
    return check_braid_relations(cubic_rep(params))


# r = 3, n = 4 quotient

def g_basis_r3() -> list[list[CycNum]]:
    """The complement vectors g_1, g_2, g_3 in W_{4,2} coordinates at r = 3."""
    f = make_field(3)
    q = f.q
    n = 4

    def vec(terms):
        coords = [f.zero] * 6
        for (i, j), c in terms.items():
            coords[pair_index(n, i, j)] = f(c)
        return coords

    g1 = vec({(1, 2): 1, (1, 3): -q**2, (2, 4): q, (3, 4): 1})
    quarter = -Fraction(1, 4) * q**2
    g2 = vec({(1, 2): quarter, (1, 3): 2 * quarter, (1, 4): quarter, (2, 3): quarter, (2, 4): 2 * quarter, (3, 4): quarter})
    g3 = vec({(1, 3): -q, (1, 4): -1, (2, 3): -1, (2, 4): q - 1})
    return [g1, g2, g3]


def f_cbar_coordinates(n: int, r: int) -> list[list[CycNum]]:
    wb = w_basis(n, 2, r)
    return [wb.coordinates(v) for v in phi_burau_vectors(n, r)]


def f_cbar_action_check(n: int = 4, r: int = 3) -> dict[str, Any]:
    """
    On S = span{F cbar_i} the W_{n,2} action is the reduced Burau action on cbar_i, and the
    W-coordinates of F cbar_i match the closed form, for n = -2 mod r.
    """
    if (n + 2) % r:
        raise ParameterError(f"F cbar closed form needs n = -2 mod r, got n={n}, r={r}")
    f = make_field(r)
    S = f_cbar_coordinates(n, r)
    burau = reduced_burau_cbar(n, f.s, f)
    action = []
    for i in range(1, n):
        moved = [braid_on_W(n, 2, r, i).apply(v) for v in S]
        action.append(coordinates(f, S, moved) == burau[i - 1])
    return {
        "n": n,
        "r": r,
        "closed_form": S == f_cbar_closed_form(n, r),
        "action_is_reduced_burau": all(action),
    }


def cubic_quotient_42() -> dict[str, Any]:
    """Quotient W_{4,2} / S_{4,2} at r = 3 in the basis [g_1], [g_2], [g_3], against cubic_rep(q^5, 1, 1)."""
    n, r = 4, 3
    f = make_field(r)
    basis = g_basis_r3() + f_cbar_coordinates(n, r)
    P = RepMatrix.from_columns(f, basis)
    try:
        P_inv = P.inverse()
    except NotInvertibleError as exc:
        raise ConsistencyError("g-basis together with F cbar is not a basis of W_{4,2}") from exc
    quotient = []
    for i in range(1, n):
        G = P_inv @ braid_on_W(n, 2, r, i) @ P
        if not G.submatrix(range(3), range(3, 6)).is_zero():
            raise ConsistencyError(f"S_{{4,2}} is not sigma_{i}-invariant at r=3")
        quotient.append(G.submatrix(range(3), range(3)))
    expected = cubic_rep(CubicParams(f.q_pow(5), f.one, f.one))
    logger.debug("cubic quotient at r=3 computed")
    return {
        "quotient": quotient,
        "expected": list(expected),
        "matches": all(a == b for a, b in zip(quotient, expected)),
    }
