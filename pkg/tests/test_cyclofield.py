import cmath
import json
from fractions import Fraction

import pytest

from rrgroups.catalog.coxeter import coxeter_group
from rrgroups.cyclofield import (
    ONE,
    ZERO,
    CycloError,
    CycloMatrix,
    CyclotomicNumber,
    SingularMatrixError,
    as_cyclo,
    cos_sin,
    galois,
    sqrt_int,
    zeta,
)


def test_zeta4_squared_is_minus_one():
    i = zeta(4, 1)
    assert i * i == -ONE


def test_zeta5_plus_inverse_is_golden_conjugate():
    x = zeta(5, 1) + zeta(5, 4)
    assert x * x + x - ONE == ZERO
    assert abs(x.to_complex() - 0.6180339887) < 1e-10


def test_additive_identity():
    a = zeta(7, 3) * Fraction(2, 3) + zeta(7, 1)
    assert a + ZERO == a


def test_division_by_zero_is_a_distinct_error():
    with pytest.raises(ZeroDivisionError):
        zeta(5, 1) / ZERO


def test_zeta_values():
    assert zeta(4, 1) ** 2 == -ONE
    s = zeta(8, 1) + zeta(8, 7)
    assert s * s == as_cyclo(2)
    assert zeta(6, 3) == -ONE
    assert zeta(9, 0) == ONE


def test_zeta_numeric_embedding():
    for n, k in [(5, 2), (12, 7), (9, 4)]:
        assert abs(zeta(n, k).to_complex() - cmath.exp(2j * cmath.pi * k / n)) < 1e-12


def test_cos_sin_examples():
    assert cos_sin(1, 4) == (ZERO, ONE)
    assert cos_sin(0, 7) == (ONE, ZERO)
    c, s = cos_sin(1, 5)
    assert (c * 4 + ONE) ** 2 == as_cyclo(5)
    assert c * c + s * s == ONE


def test_galois_examples():
    assert galois(zeta(5, 1), 2) == zeta(5, 2)
    r5 = sqrt_int(5)
    assert r5 * r5 == as_cyclo(5)
    t = galois(r5, 2)
    assert t * t == as_cyclo(5)
    assert t + r5 == ZERO
    q = as_cyclo(Fraction(-7, 3))
    assert galois(q, 4) == q


def test_galois_needs_a_unit():
    with pytest.raises(CycloError):
        galois(zeta(6, 1), 3)


def test_rational_conductors_collapse():
    assert (zeta(4, 1) * zeta(4, 3)).conductor == 1
    assert zeta(2, 1).is_rational()


def test_rank_and_kernel_of_identity():
    I3 = CycloMatrix.identity(3)
    assert I3.rank() == 3
    assert I3.kernel() == []


def test_kernel_of_diagonal_minus_identity():
    g = CycloMatrix.diagonal([-1, -1, 1, 1])
    D = g - CycloMatrix.identity(4)
    assert D.rank() == 2
    ker = D.kernel()
    assert len(ker) == 2
    for v in ker:
        assert all(x.is_zero() for x in D.apply(v))
        assert v[0].is_zero() and v[1].is_zero()


def test_det_of_rotation_by_fifth_turn():
    c, s = cos_sin(1, 5)
    R = CycloMatrix([[c, -s], [s, c]])
    assert R.det() == ONE
    assert R.is_orthogonal()


def test_inverse_of_singular_matrix_raises():
    with pytest.raises(SingularMatrixError):
        CycloMatrix([[1, 2], [2, 4]]).inverse()


def test_orthogonality_examples():
    assert CycloMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]]).is_orthogonal()
    assert not CycloMatrix.diagonal([2, 1]).is_orthogonal()
    for g in coxeter_group("H3").generators:
        for k in (2, 3):
            assert g.galois(k).is_orthogonal()


def test_number_json_round_trip():
    a = zeta(15, 4) * Fraction(3, 7) - zeta(15, 1)
    blob = json.dumps(a.to_json())
    b = CyclotomicNumber.from_json(json.loads(blob))
    assert b == a
    assert len(a.to_json()["coeffs"]) == a.phi


def test_matrix_json_round_trip():
    c, s = cos_sin(1, 12)
    M = CycloMatrix([[c, -s], [s, c]])
    assert CycloMatrix.from_json(json.loads(json.dumps(M.to_json()))) == M
