import pytest

from rhorep.algebra import RepMatrix, make_field
from rhorep.errors import InconsistentSystemError, ParameterError
from rhorep.reps.braid import sigma_matrix
from rhorep.reps.lawrence import (
    braid_on_W,
    burau_conjugator,
    burau_unreduced,
    cbar_vectors,
    f2_vacuum_closed_form,
    f_cbar_closed_form,
    lkb_closed_form,
    pair_index,
    pair_list,
    phi,
    phi_burau_vectors,
    reduced_burau_cbar,
    w_action,
    w_basis,
)
from rhorep.reps.weightspace import d_nl, op_E, op_F_power, vacuum


def test_pair_order():
    assert pair_list(3) == [(1, 2), (1, 3), (2, 3)]
    assert [pair_index(4, *p) for p in pair_list(4)] == list(range(6))
    with pytest.raises(ParameterError):
        pair_index(4, 2, 2)


@pytest.mark.parametrize("n,l,r", [(3, 2, 4), (4, 2, 3), (3, 1, 3), (4, 3, 4), (2, 2, 5), (3, 0, 3)])
def test_w_basis_is_killed_by_E(n, l, r):
    wb = w_basis(n, l, r)
    assert wb.dim == d_nl(n, l)
    if l:
        E = op_E(n, l, r)
        assert all(all(not x for x in E.apply(list(v))) for v in wb.vectors)


def test_phi_is_unipotent():
    P = phi(3, 2, 4)
    assert all(P[k, k] == 1 for k in range(P.nrows))
    with pytest.raises(ParameterError):
        phi(3, 4, 4)


def test_w32_fixture_at_r4():
    f = make_field(4)
    q = f.q
    s1 = RepMatrix(f, [[q**6, q**3 - q, 0], [0, 1 - q**2, q**5], [0, q**5, 0]], 3)
    s2 = RepMatrix(f, [[1 - q**2, q**5, 0], [q**5, 0, 0], [q**2 - 1, 0, q**6]], 3)
    assert braid_on_W(3, 2, 4, 1) == s1
    assert braid_on_W(3, 2, 4, 2) == s2


def test_f2_vacuum_fixture():
    f = make_field(4)
    q = f.q
    image = op_F_power(3, 0, 4, 2).apply(vacuum(3, 4).dense())
    coords = w_basis(3, 2, 4).coordinates(image)
    assert coords == [-(q + q**3) * c for c in (f.one, q**5, q**2)]
    # the displayed combination is a q^-2 multiple
    displayed = [-(q + q**3) * c for c in (q**6, q**3, f.one)]
    assert coords == [q**2 * c for c in displayed]


@pytest.mark.parametrize("n, r", [(2, 3), (3, 4), (4, 5), (5, 3)])
def test_f2_vacuum_closed_form(n, r):
    image = op_F_power(n, 0, r, 2).apply(vacuum(n, r).dense())
    assert w_basis(n, 2, r).coordinates(image) == f2_vacuum_closed_form(n, r)


def test_coordinates_reject_vectors_outside_W():
    wb = w_basis(3, 2, 4)
    f = make_field(4)
    outside = [f.zero] * len(wb.vectors[0])
    outside[wb.a_positions[0]] = f.one
    with pytest.raises(InconsistentSystemError):
        wb.coordinates(outside)


@pytest.mark.parametrize("n,r", [(3, 3), (4, 5), (4, 3), (5, 4)])
def test_lkb_closed_form(n, r):
    f = make_field(r)
    closed = lkb_closed_form(n, f.q, f.s, f)
    for i in range(1, n):
        assert braid_on_W(n, 2, r, i) == closed[i - 1]


@pytest.mark.parametrize("n,r", [(3, 3), (4, 5), (5, 3)])
def test_reduced_burau_on_W1(n, r):
    f = make_field(r)
    closed = reduced_burau_cbar(n, f.s, f)
    for i in range(1, n):
        assert braid_on_W(n, 1, r, i) == closed[i - 1]


def test_W1_basis_is_cbar():
    n, r = 4, 5
    wb = w_basis(n, 1, r)
    assert [list(v) for v in wb.vectors] == cbar_vectors(n, r)


@pytest.mark.parametrize("n,r", [(3, 3), (4, 5)])
def test_burau_conjugacy_on_V1(n, r):
    f = make_field(r)
    D = burau_conjugator(n, r)
    unreduced = burau_unreduced(n, f.q_pow(2), f)
    for i in range(1, n):
        assert D.inverse() @ sigma_matrix(n, 1, r, i) @ D == unreduced[i - 1]


@pytest.mark.parametrize("n,r", [(4, 3), (3, 5)])
def test_f_cbar_closed_form(n, r):
    wb = w_basis(n, 2, r)
    assert [wb.coordinates(v) for v in phi_burau_vectors(n, r)] == f_cbar_closed_form(n, r)


def test_w_action_relations():
    assert w_action(4, 2, 3).relation_defects() == []


def test_w_labels_are_slot_words():
    assert w_basis(3, 2, 4).labels == [(1, 2), (1, 3), (2, 3)]
    assert w_basis(4, 1, 3).labels == [(1,), (2,), (3,)]


def test_f2_vacuum_outside_W_when_n_not_minus_one():
    image = op_F_power(3, 0, 3, 2).apply(vacuum(3, 3).dense())
    with pytest.raises(InconsistentSystemError):
        w_basis(3, 2, 3).coordinates(image)
