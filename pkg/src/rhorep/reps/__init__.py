"""Braid group representations on weight spaces of tensor powers of the Steinberg module."""

from .braid import BraidAction, BraidWord, eval_word, sigma_matrix, v_action
from .dominant import decompose_CSR, find_equivariant_section, full_twist_check, n_space
from .lawrence import braid_on_W, phi, w_action, w_basis
from .weightspace import Composition, SpaceVec, enumerate_basis, space_dims

__all__ = [
    "BraidAction",
    "BraidWord",
    "Composition",
    "SpaceVec",
    "braid_on_W",
    "decompose_CSR",
    "enumerate_basis",
    "eval_word",
    "find_equivariant_section",
    "full_twist_check",
    "n_space",
    "phi",
    "sigma_matrix",
    "space_dims",
    "v_action",
    "w_action",
    "w_basis",
]
