"""
Floating-point oracle for the braid generators.

Builds the R-matrix on V_{r-1} (x) V_{r-1} directly from its weight-module form

    R = q^{H (x) H / 2} sum_k {1}^{2k} / {k}! q^{k(k-1)/2} E^k (x) F^k

with numpy at q = e^{i pi / r}, flips, normalizes by q^{-(r-1)^2/2}, and never touches the
exact closed formula. Agreement with the exact matrices is the cross-check.
"""

import cmath
import functools
import math

import numpy as np

from ..algebra import RepMatrix
from .weightspace import enumerate_basis


def _q(r: int, x: float) -> complex:
    """q^x for real x, q = e^{i pi / r}."""
    return cmath.exp(1j * math.pi * x / r)


def _qnum(r: int, x: int) -> complex:
    return _q(r, x) - _q(r, -x)


def _qint(r: int, x: int) -> complex:
    return _qnum(r, x) / _qnum(r, 1)


@functools.lru_cache(maxsize=None)
def module_operators(r: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(E, F, H) on V_{r-1}; column m is the image of u_m."""
    E = np.zeros((r, r), dtype=complex)
    F = np.zeros((r, r), dtype=complex)
    for m in range(1, r):
        E[m - 1, m] = 1.0
    for m in range(r - 1):
        F[m + 1, m] = _qint(r, m + 1) * _qint(r, r - 1 - m)
    H = np.diag([float(r - 1 - 2 * m) for m in range(r)])
    return E, F, H


@functools.lru_cache(maxsize=None)
def rhat_float(r: int) -> np.ndarray:
    """Normalized braiding on V_{r-1} (x) V_{r-1}; index a*r + b for u_a (x) u_b."""
    E, F, H = module_operators(r)
    weights = np.diag(H)
    qhh = np.diag([_q(r, wa * wb / 2) for wa in weights for wb in weights])

    total = np.zeros((r * r, r * r), dtype=complex)
    Ek = np.eye(r, dtype=complex)
    Fk = np.eye(r, dtype=complex)
    qfact = 1.0 + 0j
    for k in range(r):
        if k > 0:
            Ek = E @ Ek
            Fk = F @ Fk
            qfact *= _qnum(r, k)
        coeff = _qnum(r, 1) ** (2 * k) / qfact * _q(r, k * (k - 1) / 2)
        total += coeff * np.kron(Ek, Fk)

    flip = np.zeros((r * r, r * r))
    for a in range(r):
        for b in range(r):
            flip[b * r + a, a * r + b] = 1.0
    return _q(r, -((r - 1) ** 2) / 2) * (flip @ qhh @ total)


def sigma_float(n: int, l: int, r: int, i: int) -> np.ndarray:
    """sigma_i on V_{n,l} from the float braiding."""
    basis = enumerate_basis(n, l, r)
    R = rhat_float(r)
    out = np.zeros((basis.dim, basis.dim), dtype=complex)
    for col, comp in enumerate(basis.order):
        p = comp.parts
        column = R[:, p[i - 1] * r + p[i]]
        for idx in np.nonzero(np.abs(column) > 1e-14)[0]:
            a, b = divmod(int(idx), r)
            target = p[: i - 1] + (a, b) + p[i + 1:]
            out[basis.index[target], col] += column[idx]
    return out


def max_deviation(exact: RepMatrix, approx: np.ndarray) -> float:
    """Largest entrywise distance between the complex image of an exact matrix and a float matrix."""
    if exact.nrows == 0 or exact.ncols == 0:
        return 0.0
    return float(np.max(np.abs(exact.to_complex() - approx)))
