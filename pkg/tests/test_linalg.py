import pytest

from rhorep.algebra import LAURENT_FRACTIONS, LRat, RepMatrix, complete_basis, coordinates, make_field, span_contains
from rhorep.algebra.laurent import T
from rhorep.errors import InconsistentSystemError, NotInvertibleError


@pytest.fixture
def f():
    return make_field(3)


def test_inverse(f):
    M = RepMatrix(f, [[f.q, 1], [0, f.q**2]], 2)
    assert (M @ M.inverse()).is_identity()
    assert M.power(-2) == M.inverse() @ M.inverse()


def test_singular_matrix(f):
    M = RepMatrix(f, [[1, f.q], [f.q**-1, 1]], 2)
    assert M.rank() == 1
    with pytest.raises(NotInvertibleError):
        M.inverse()
    (v,) = M.nullspace()
    assert all(not x for x in M.apply(v))


def test_inconsistent_system(f):
    A = RepMatrix(f, [[1, 1], [1, 1]], 2)
    b = RepMatrix(f, [[1], [2]], 1)
    with pytest.raises(InconsistentSystemError) as info:
        A.solve(b)
    assert info.value.rank == 1
    assert info.value.augmented_rank == 2


def test_from_columns_and_apply(f):
    M = RepMatrix.from_columns(f, [[1, 2], [3, 4]])
    assert M.to_lists() == [[1, 3], [2, 4]]
    assert M.apply([1, 0]) == [1, 2]
    assert M.transpose().column(0) == [1, 3]


def test_coordinates(f):
    basis = [[1, 0, 1], [0, 1, f.q]]
    target = [2, 3, 2 + 3 * f.q]
    coords = coordinates(f, basis, [target])
    assert coords.column(0) == [2, 3]
    assert span_contains(f, basis, target)
    assert not span_contains(f, basis, [0, 0, 1])


def test_complete_basis(f):
    assert complete_basis(f, [[0, 1, 0]], 3) == [0, 2]
    assert complete_basis(f, [], 2) == [0, 1]


def test_fraction_matrix_inverse():
    M = RepMatrix(LAURENT_FRACTIONS, [[1, LRat(T)], [0, 1]], 2)
    assert M.inverse() == RepMatrix(LAURENT_FRACTIONS, [[1, LRat(-T)], [0, 1]], 2)


def test_scalar_checks(f):
    assert RepMatrix.identity(f, 3).scale(f.q).is_scalar(f.q)
    assert RepMatrix.zeros(f, 2, 3).is_zero()
