import pytest

from rhorep.algebra import make_field
from rhorep.errors import ParameterError
from rhorep.reps.braid import (
    BraidWord,
    check_braid_relations,
    eval_word,
    full_twist_word,
    half_twist_word,
    rhat_terms,
    sigma_inverse,
    sigma_matrix,
    v_action,
)


def test_parse_words():
    assert BraidWord.parse("1,2,-1", 3).letters == (1, 2, -1)
    assert BraidWord.parse(" 1, 2 ", 3).letters == (1, 2)
    assert BraidWord.parse("", 3).letters == ()
    with pytest.raises(ParameterError):
        BraidWord.parse("1,3", 3)
    with pytest.raises(ParameterError):
        BraidWord.parse("x", 3)
    with pytest.raises(ParameterError):
        BraidWord(3, (0,))


def test_word_algebra():
    w = BraidWord(3, (1, -2))
    assert w.inverse().letters == (2, -1)
    assert (w + w).letters == (1, -2, 1, -2)
    assert (w**-1).letters == (2, -1)
    assert BraidWord(3, (1, -2)).shifted(1).letters == (2, -3)
    assert str(w) == "1,-2"


def test_twist_words():
    assert half_twist_word(3).letters == (1, 2, 1)
    assert full_twist_word(3).letters == (1, 2, 1, 2, 1, 2)
    assert len(full_twist_word(4)) == 12


def test_rhat_on_vacuum():
    f = make_field(3)
    assert rhat_terms(0, 0, 3) == [(0, 0, f.one)]


@pytest.mark.parametrize("n,l,r", [(3, 1, 3), (3, 2, 3), (3, 2, 4), (4, 2, 3), (4, 3, 4)])
def test_braid_relations(n, l, r):
    assert check_braid_relations(v_action(n, l, r).generators) == []


@pytest.mark.parametrize("n,l,r", [(3, 2, 4), (2, 2, 3)])
def test_inverses(n, l, r):
    for i in range(1, n):
        assert (sigma_matrix(n, l, r, i) @ sigma_inverse(n, l, r, i)).is_identity()
    assert eval_word(BraidWord.parse("1,-1", n), n, l, r).is_identity()


def test_full_twist_is_square_of_half_twist():
    n, l, r = 3, 2, 3
    assert eval_word(half_twist_word(n) ** 2, n, l, r) == eval_word(full_twist_word(n), n, l, r)


def test_full_twist_is_central():
    n, l, r = 3, 2, 4
    theta = eval_word(full_twist_word(n), n, l, r)
    for i in range(1, n):
        assert theta @ sigma_matrix(n, l, r, i) == sigma_matrix(n, l, r, i) @ theta


def test_word_on_wrong_group():
    with pytest.raises(ParameterError):
        eval_word(BraidWord(4, (1,)), 3, 1, 3)
    with pytest.raises(ParameterError):
        sigma_matrix(3, 1, 3, 3)
