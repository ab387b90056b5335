import pytest

from rhorep.algebra import RepMatrix, make_field
from rhorep.errors import ParameterError
from rhorep.reps import dominant
from rhorep.reps.weightspace import enumerate_basis
from rhorep.reps.dominant import (
    basis_N20,
    basis_N21,
    beta_coefficient,
    check_action_b,
    check_action_bprime,
    decompose_CSR,
    find_equivariant_section,
    full_twist_check,
    lin_sys_check,
    modular_data,
    n_action,
    n_space,
    quotient_action_check,
    restriction_check,
    split_check_N,
    split_check_SR,
    sr_action,
)


@pytest.mark.parametrize(
    "n,l,r,j,lprime",
    [(3, 2, 4, 1, 0), (4, 2, 3, 0, 1), (2, 2, 5, 4, None), (3, 1, 3, 0, 0)],
)
def test_modular_data(n, l, r, j, lprime):
    md = modular_data(n, l, r)
    assert (md.j, md.lprime) == (j, lprime)


def test_modular_data_rejects_l_at_r():
    with pytest.raises(ParameterError):
        modular_data(3, 4, 4)


@pytest.mark.parametrize("n,l,r,dim,head", [(3, 2, 4, 4, 1), (4, 2, 3, 9, 3), (2, 2, 5, 1, 0), (4, 1, 4, 4, 1)])
def test_n_space_dimension(n, l, r, dim, head):
    nb = n_space(n, l, r)
    assert nb.dim == dim
    assert nb.head_dim == head


def test_modular_bases_guard_their_condition():
    assert basis_N20(3, 4).head_dim == 1
    assert basis_N21(4, 3).head_dim == 3
    with pytest.raises(ParameterError):
        basis_N20(4, 4)
    with pytest.raises(ParameterError):
        basis_N21(3, 4)


def test_n_action_braid_relations():
    assert n_action(4, 2, 3).relation_defects() == []


def test_full_twist_with_head():
    report = full_twist_check(3, 2, 4)
    assert report["scalar_exponent"] == 16
    assert report["lprime"] == 0
    assert report["nilpotent_nonzero"]
    assert report["nilpotent_square_zero"]
    assert report["scalar_on_W"]
    assert report["matches_formula"]
    assert report["power_r_identity_on_W"]


def test_full_twist_scalar_without_head():
    report = full_twist_check(2, 2, 5)
    assert report["lprime"] is None
    assert not report["nilpotent_nonzero"]
    assert report["matches_formula"]


def test_full_twist_power_r_detects_wrong_scalar(monkeypatch):
    f = make_field(4)
    honest = dominant.full_twist_matrix(3, 2, 4)
    monkeypatch.setattr(dominant, "full_twist_matrix", lambda n, l, r: honest.scale(f.q))
    report = full_twist_check(3, 2, 4)
    assert not report["power_r_identity_on_W"]
    assert not report["matches_formula"]


@pytest.mark.parametrize("n,l,r", [(4, 2, 3), (3, 1, 3), (4, 2, 5), (2, 2, 5)])
def test_full_twist_power_r_is_identity_on_W(n, l, r):
    assert full_twist_check(n, l, r)["power_r_identity_on_W"]


@pytest.mark.parametrize(
    "n,l,r,case",
    [
        (3, 2, 4, "S+R"),
        (2, 2, 3, "S"),
        (3, 1, 4, "C"),
        (2, 2, 5, "C"),
        (3, 1, 5, "R"),
        (2, 2, 6, "R"),
        (4, 2, 3, "S+R"),
    ],
)
def test_csr_cases(n, l, r, case):
    report = decompose_CSR(n, l, r)
    assert report["case"] == case
    assert report["matches_case"]


def test_csr_top_row_case_is_all_C():
    # j = (2 + 2) mod 5 = r - 1
    report = decompose_CSR(2, 2, 5)
    assert report["j"] == 4
    assert (report["dim_C"], report["dim_S"], report["dim_R"]) == (1, 0, 0)


def test_csr_r_branch_has_no_c_or_s():
    report = decompose_CSR(3, 1, 5)
    assert report["j"] == 3
    assert report["lprime"] is None
    assert (report["dim_C"], report["dim_S"], report["dim_R"]) == (0, 0, 2)


def test_csr_dimensions_at_3_2_4():
    report = decompose_CSR(3, 2, 4)
    assert (report["dim_C"], report["dim_S"], report["dim_R"]) == (0, 1, 2)
    assert report["s_action_matches"]


def test_section_of_jordan_block_does_not_exist():
    f = make_field(3)
    jordan = RepMatrix(f, [[1, 1], [0, 1]], 2)
    result = find_equivariant_section([jordan], [[f.one, f.zero]], f)
    assert not result.split
    assert (result.rank, result.augmented_rank) == (0, 1)
    assert result.certificate()["unique"] is False


def test_section_of_diagonal_is_unique():
    f = make_field(3)
    diag = RepMatrix(f, [[1, 0], [0, 2]], 2)
    result = find_equivariant_section([diag], [[f.one, f.zero]], f)
    assert result.split
    assert result.unique
    assert result.complement == [[f.zero, f.one]]


def test_section_rejects_non_invariant_subspace():
    f = make_field(3)
    g = RepMatrix(f, [[1, 0], [1, 1]], 2)
    with pytest.raises(ParameterError):
        find_equivariant_section([g], [[f.one, f.zero]], f)


def test_N20_at_minus_one_does_not_split():
    assert not split_check_N(3, 2, 4).split


def test_S_inside_W():
    result = split_check_SR(3, 2, 4)
    assert result.certificate()["unknowns"] == 2
    action = sr_action(3, 2, 4)
    for g in action.generators:
        assert g.submatrix(range(1, 3), range(1)).is_zero()


@pytest.mark.parametrize("n,r", [(3, 4), (4, 5), (2, 3)])
def test_action_on_b(n, r):
    assert check_action_b(n, r) == []


@pytest.mark.parametrize("n,r", [(4, 3), (3, 5)])
def test_action_on_b_prime(n, r):
    assert check_action_bprime(n, r) == []


@pytest.mark.parametrize("n,r", [(3, 4), (4, 3), (4, 5)])
def test_lin_sys(n, r):
    assert lin_sys_check(n, r)


def test_beta_values():
    f = make_field(4)
    for i in range(1, 4):
        assert beta_coefficient(3, 4, i) == f.s_pow(2 * i) + 1
    for i in range(1, 5):
        assert beta_coefficient(4, 3, i) == 1


@pytest.mark.parametrize("n,l,r", [(4, 1, 4), (3, 1, 3), (2, 3, 4)])
def test_head_vectors_are_b_pivoted(n, l, r):
    basis = enumerate_basis(n, l, r)
    nb = n_space(n, l, r)
    assert nb.head_dim > 0
    pivots = []
    for v in nb.h:
        assert all(not v[k] for k in basis.a_positions)
        pivot = next(k for k in basis.b_positions if v[k])
        assert v[pivot] == 1
        pivots.append(pivot)
    assert pivots == sorted(pivots)
    for v in nb.h:
        assert [bool(v[p]) for p in pivots].count(True) == 1


@pytest.mark.parametrize("n,l,r", [(3, 2, 4), (4, 2, 3), (2, 2, 5), (4, 1, 4), (3, 1, 3), (2, 3, 4)])
def test_quotient_action(n, l, r):
    assert quotient_action_check(n, l, r)


def test_restriction_to_last_strands():
    report = restriction_check(3, 4)
    assert report["equivariant"]
    assert report["restricted_split"]
    with pytest.raises(ParameterError):
        restriction_check(4, 4)
