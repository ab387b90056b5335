import cmath
import math
from fractions import Fraction

import pytest

from rhorep.algebra import cyclotomic, make_field
from rhorep.errors import FieldMismatchError, NotInvertibleError, ParameterError


def test_cyclotomic_polynomials():
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)
    assert cyclotomic(16) == (1, 0, 0, 0, 0, 0, 0, 0, 1)


def test_field_degree():
    assert make_field(3).degree == 4
    assert make_field(4).degree == 8
    assert make_field(5).degree == 8


def test_make_field_rejects_small_r():
    with pytest.raises(ParameterError):
        make_field(1)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_roots_of_unity(r):
    f = make_field(r)
    assert f.q ** (2 * r) == f.one
    assert f.q**r == -1
    assert f.zeta ** (4 * r) == 1
    assert f.qhalf**2 == f.q


@pytest.mark.parametrize("r", [3, 4, 5])
def test_s_is_minus_q_inverse(r):
    f = make_field(r)
    assert f.s == -(f.q**-1)
    assert f.s_pow(2) == f.q_pow(-2)


def test_quantum_numbers():
    f = make_field(5)
    assert f.qnum(5) == 0
    assert f.qint(1) == 1
    assert f.qint(2) == f.q + f.q**-1
    assert f.qbinom(3, 1) == f.qint(3)
    assert f.qbinom(4, 2) == f.qint(4) * f.qint(3) / f.qint(2)


def test_qint_r_minus_one_is_one():
    for r in (3, 4, 7):
        f = make_field(r)
        assert f.qint(r - 1) == 1


def test_qbinom_out_of_range():
    with pytest.raises(ParameterError):
        make_field(4).qbinom(4, 1)


def test_division_and_inverse():
    f = make_field(4)
    x = f.q + 1
    assert x / x == 1
    assert x * x.inverse() == f.one
    assert 1 / f.q == f.q_pow(-1)
    with pytest.raises(NotInvertibleError):
        f.zero.inverse()


def test_rational_coercion():
    f = make_field(3)
    half = f(Fraction(1, 2))
    assert half + half == 1
    assert half.is_rational()
    assert not f.q.is_rational()
    assert Fraction(1, 4) * f.q * 4 == f.q


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        make_field(3).q + make_field(4).q


def test_to_complex():
    f = make_field(6)
    assert abs(f.q.to_complex() - cmath.exp(1j * math.pi / 6)) < 1e-12
    assert abs(f.s.to_complex() - cmath.exp(1j * math.pi * 5 / 6)) < 1e-12


def test_hash_and_equality():
    f = make_field(4)
    assert {f.q_pow(8), f.one} == {f.one}
    assert f.q_pow(3) != f.q_pow(5)
