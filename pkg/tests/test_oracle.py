import pytest

from rhorep.reps.braid import rhat_pair, sigma_matrix
from rhorep.reps.oracle import max_deviation, rhat_float, sigma_float


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_rhat_shape(r):
    assert rhat_float(r).shape == (r * r, r * r)


@pytest.mark.parametrize(
    "n,l,r",
    [(2, 0, 3), (2, 1, 3), (2, 2, 3), (3, 2, 3), (3, 1, 4), (3, 3, 4), (2, 3, 5), (4, 2, 3)],
)
def test_exact_matches_float(n, l, r):
    for i in range(1, n):
        assert max_deviation(sigma_matrix(n, l, r, i), sigma_float(n, l, r, i)) < 1e-9


@pytest.mark.parametrize("r", [2, 3, 4])
def test_pair_braiding_matches_float(r):
    assert max_deviation(rhat_pair(r), rhat_float(r)) < 1e-9
