import pytest

from rhorep.algebra import LAURENT, LRat, make_field
from rhorep.errors import NotInvertibleError, ParameterError
from rhorep.reps import generic
from rhorep.reps.braid import check_braid_relations

q, s, t = generic.q, generic.s, generic.t


@pytest.mark.parametrize("rep,n", [("N20", 2), ("N20", 3), ("N20", 4), ("N21", 3), ("N21", 4)])
def test_generic_braid_relations(rep, n):
    gens = generic.generic_generators(rep, n)
    assert len(gens) == n - 1
    assert check_braid_relations(gens) == []


@pytest.mark.parametrize("rep,n", [("N20", 3), ("N21", 4)])
def test_generic_inverses(rep, n):
    for g in generic.generic_generators(rep, n):
        assert (g @ generic.generic_inverse(g)).is_identity()
        assert (generic.generic_inverse(g) @ g).is_identity()


def test_N20_head_column():
    n = 4
    g = generic.generic_N20(n)[1]
    column = g.column(0)
    assert column[0] == LAURENT.one
    # sigma_2 b = b + t w_{2,3}
    assert column[1 + 3] == t
    assert sum(1 for x in column if x) == 2


def test_unknown_generic_rep():
    with pytest.raises(ParameterError):
        generic.generic_generators("N22", 3)
    with pytest.raises(ParameterError):
        generic.generic_N21(2)


def test_minimal_polynomial_constant_is_a_unit():
    assert generic.MINPOL_C * generic.MINPOL_C**-1 == LAURENT.one
    with pytest.raises(NotInvertibleError):
        generic.MINPOL_A**-1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generic_split_over_fractions(n):
    report = generic.split_generic_N20(n)
    assert report["fixed"]
    assert report["recursion"]
    assert report["inverse_on_b"]
    assert report["s_squared_one"]["matches"]


def test_section_coefficient_last_pair():
    n = 3
    assert generic.section_coefficient(n, n - 1, n) == LRat(s**4 * t, s ** (2 * n) - q**2)


def test_specialize_point_needs_r3():
    with pytest.raises(ParameterError):
        generic.specialize_point(2)
    q0, s0, t0 = generic.specialize_point(4)
    f = make_field(4)
    assert t0 == f.s_pow(-3) * (f.one - f.q_pow(2))


@pytest.mark.parametrize("n,r", [(3, 4), (2, 3), (4, 5), (5, 3)])
def test_specialized_N20_at_minus_one(n, r):
    report = generic.specialize_and_compare(n, r, "N20")
    assert report["modular"]
    assert report["matches_tensor_space"] is True
    assert report["split"] is False
    assert report["lambda_singular"] is True
    assert report["certificate"]["augmented_rank"] > report["certificate"]["rank"]


@pytest.mark.parametrize("n,r", [(3, 5), (2, 4), (4, 3), (5, 4), (6, 5), (6, 3)])
def test_specialized_N20_away_from_minus_one(n, r):
    report = generic.specialize_and_compare(n, r, "N20")
    assert not report["modular"]
    assert report["matches_tensor_space"] is None
    assert report["split"] is True
    assert report["lambda_singular"] is False
    assert report["lambdas_match"] is True


def test_specialized_N21_matches_tensor_space():
    report = generic.specialize_and_compare(4, 3, "N21")
    assert report["modular"]
    assert report["matches_tensor_space"] is True
    assert report["dim"] == 3 + 6


@pytest.mark.parametrize("k", range(-3, 4))
def test_half_twist_powers_at_s_q_one(k):
    report = generic.sq1_delta_powers(3, k)
    assert report["matches"]
    assert report["w_block_permutation"]


def test_sq1_kernel():
    assert generic.sq1_kernel_check(3)
    assert generic.sq1_kernel_check(4)
    with pytest.raises(ParameterError):
        generic.sq1_kernel_check(2)


def test_restriction_embedding_shape():
    iota = generic.restriction_embedding(4)
    assert iota.shape == (7, 4)
    assert iota[0, 0] == LAURENT.one
    # w_{1,2} of the small space lands on w_{2,3}
    assert iota[1 + 3, 1] == LAURENT.one


def test_N21_inverses():
    for g, inv in zip(generic.generic_N21(4), generic.generic_N21_inverses(4)):
        assert (g @ inv).is_identity()
