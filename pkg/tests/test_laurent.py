import pytest

from rhorep.algebra import LAURENT, LPoly3, LRat, make_field
from rhorep.algebra.laurent import Q, S, T
from rhorep.errors import NotInvertibleError, SpecializationError


def test_unit_arithmetic():
    assert Q * Q**-1 == 1
    assert (S**3) ** -1 == S**-3
    assert (-(Q**2) * S).unit_inverse() == -(Q**-2) * S**-1


def test_non_units_have_no_inverse():
    with pytest.raises(NotInvertibleError):
        T**-1
    with pytest.raises(NotInvertibleError):
        (Q + 1).unit_inverse()


def test_negative_t_exponent_rejected():
    with pytest.raises(ValueError):
        LPoly3({(0, 0, -1): 1})


def test_polynomial_identities():
    assert (Q + S) * (Q - S) == Q**2 - S**2
    assert (Q + T).complexity == 2
    assert (T * (Q + 1)).t_degree() == 1
    assert LAURENT(0).is_zero()


def test_at_unity_keeps_t():
    assert (Q**2 * S**-1 * T + Q).at_unity() == T + 1


def test_specialize():
    f = make_field(5)
    p = Q**2 + S * T - 3
    assert p.specialize(f.q, f.s, f(2)) == f.q**2 + 2 * f.s - 3


def test_fraction_normalization():
    assert LRat(Q**2 - 1, Q - 1) == LRat(Q + 1)
    assert LRat(2 * Q, 4 * Q**3) == LRat(1, 2 * Q**2)
    assert LRat(T, S) * LRat(S) == LRat(T)
    assert LRat(Q) / LRat(Q + 1) + LRat(1, Q + 1) == 1


def test_fraction_unhashable():
    with pytest.raises(TypeError):
        hash(LRat(1))


def test_fraction_specialization_failure():
    # at r = 2, s = q, so s^2 - q^2 vanishes
    f = make_field(2)
    with pytest.raises(SpecializationError) as info:
        LRat(T, S**2 - Q**2).specialize(f.q, f.s, f.one)
    assert info.value.denominator in (S**2 - Q**2, Q**2 - S**2)


def test_fraction_specialization():
    f = make_field(4)
    value = LRat(T, 1 - Q**2).specialize(f.q, f.s, f(3))
    assert value == 3 / (1 - f.q**2)
