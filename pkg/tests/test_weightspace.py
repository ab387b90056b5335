import pytest

from rhorep.algebra import make_field
from rhorep.errors import ParameterError
from rhorep.reps.weightspace import (
    Composition,
    SpaceVec,
    a_vec,
    b_vec,
    c_vec,
    d_nl,
    enumerate_basis,
    kappa,
    op_E,
    op_F,
    op_K,
    space_dims,
    vacuum,
)


def test_kappa():
    assert kappa(2, 4, 3) == 6
    assert kappa(3, 2, 3) == 1
    assert kappa(2, 2, 3) == 3
    assert kappa(-1, 3, 3) == 0


@pytest.mark.parametrize("n,l,r", [(2, 1, 3), (3, 2, 4), (4, 3, 3), (3, 4, 3), (5, 2, 5)])
def test_basis_size_is_kappa(n, l, r):
    assert enumerate_basis(n, l, r).dim == kappa(l, r, n)


def test_dims_command_values():
    assert space_dims(3, 2, 4) == {"kappa": 6, "dimA": 3, "dimB": 3, "dimW": 3}


def test_a_positions_follow_slot_words():
    basis = enumerate_basis(3, 2, 4)
    words = [basis.order[k].slot_word() for k in basis.a_positions]
    assert words == [(1, 2), (1, 3), (2, 3)]


def test_l1_excludes_last_slot_from_A():
    basis = enumerate_basis(3, 1, 4)
    assert [basis.order[k].slot_word() for k in basis.a_positions] == [(1,), (2,)]


def test_composition():
    comp = Composition((0, 1, 0, 1), 4)
    assert comp.slot_word() == (2, 4)
    assert comp.first_nonzero() == 1
    assert comp.is_A()
    assert not Composition((0, 2, 0), 4).is_A()
    with pytest.raises(ParameterError):
        Composition((0, 4), 4)


@pytest.mark.parametrize("n,l,r", [(3, 2, 4), (4, 2, 5), (3, 3, 4), (4, 1, 3)])
def test_kernel_of_E_has_dimension_d(n, l, r):
    assert len(op_E(n, l, r).nullspace()) == d_nl(n, l)


def test_single_slot_operators():
    f = make_field(4)
    assert op_E(1, 1, 4).to_lists() == [[1]]
    # [1][r-1] = 1
    assert op_F(1, 0, 4).to_lists() == [[1]]
    assert op_F(1, 1, 4).to_lists() == [[f.qint(2) * f.qint(2)]]


def test_K_scalar():
    f = make_field(5)
    assert op_K(3, 2, 5) == f.s_pow(3) * f.q_pow(-4)


def test_named_vectors():
    assert c_vec(3, 4, 2).dense() == [0, 1, 0]
    assert a_vec(3, 4, 1, 3).entries == {enumerate_basis(3, 2, 4).position((1, 0, 1)): 1}
    assert b_vec(3, 4, 1) != b_vec(3, 4, 2)
    assert vacuum(2, 3).basis.dim == 1
    with pytest.raises(ParameterError):
        b_vec(3, 2, 1)
    with pytest.raises(ParameterError):
        a_vec(3, 4, 2, 2)


def test_space_vec_arithmetic():
    basis = enumerate_basis(2, 1, 3)
    f = make_field(3)
    u = SpaceVec.unit(basis, (1, 0))
    v = SpaceVec.unit(basis, (0, 1))
    w = u + v.scale(f.q)
    assert w.dense() == [f.q, 1]
    assert (w - w).is_zero()
