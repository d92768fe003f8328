import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from ncalg import (
    associator,
    builtin_complex,
    builtin_quaternion,
    commutator,
    linear_combine,
    load_algebra,
    mul,
)
from ncalg.algebra import exact_sqrt, parse_scalar
from ncalg.errors import AlgebraMismatchError, AssociativityError, ParseError, ShapeError, UnitAxiomError

from conftest import quaternions, small_fractions


def hamilton(p, q):
    """Independent quaternion product from the textbook formula."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def test_quaternion_table(H, q):
    one, i, j, k = q
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k and k * j == -i and i * k == -j
    for e in (i, j, k):
        assert e * e == -one
    for e in q:
        assert one * e == e == e * one


def test_quaternion_spec_shape(H):
    assert H.dim == 4 and H.basis == ("1", "i", "j", "k") and H.unit == 0
    assert H.constant(3, 1, 2) == 1  # e1 e2 = e3


def test_quaternion_associative_on_all_basis_triples(H):
    assert list(H.associativity_violations()) == []
    basis = [H.basis_element(t) for t in range(4)]
    count = 0
    for a, b, c in product(basis, repeat=3):
        assert (a * b) * c == a * (b * c)
        count += 1
    assert count == 64


@given(quaternions(builtin_quaternion()), quaternions(builtin_quaternion()))
@settings(max_examples=200, deadline=None)
def test_mul_matches_hamilton_formula(x, y):
    assert mul(x, y).coords == hamilton(x.coords, y.coords)


def test_complex_constants(C):
    one, i = C.basis_element(0), C.basis_element(1)
    assert i * i == -one
    assert one * i == i
    assert list(C.associativity_violations()) == []


@given(small_fractions, small_fractions, small_fractions, small_fractions)
def test_complex_matches_python_complex_and_commutes(a, b, c, d):
    C = builtin_complex()
    x, y = C.element([a, b]), C.element([c, d])
    z = complex(float(a), float(b)) * complex(float(c), float(d))
    xy = mul(x, y)
    assert abs(float(xy[0]) - z.real) < 1e-9 and abs(float(xy[1]) - z.imag) < 1e-9
    assert not commutator(x, y)


def test_worked_products(H, q):
    one, i, j, k = q
    assert mul(i, j) == k
    assert mul(one + i, one - i) == 2 * one
    x = H.element([3, -1, "1/2", 2])
    assert mul(one, x) == x


def test_linear_combine(H, q):
    one, i, j, k = q
    x = H.element([1, 2, 3, 4])
    assert not linear_combine([(1, x), (-1, x)])
    assert linear_combine([(2, i), (3, j)]).coords == (0, 2, 3, 0)
    y = H.element([0, 1, 0, 0])
    half = Fraction(1, 2)
    assert linear_combine([(half, one), (half, y)]).coords == (half, half, 0, 0)


def test_commutator_and_associator(H, q):
    one, i, j, k = q
    assert commutator(i, j) == 2 * k
    x = H.element([1, 2, -3, 4])
    assert not commutator(x, x)
    assert not associator(i + j, k - one, x)


@given(quaternions(builtin_quaternion()), quaternions(builtin_quaternion()),
       quaternions(builtin_quaternion()), small_fractions, small_fractions)
@settings(max_examples=100, deadline=None)
def test_bilinearity_and_antisymmetry(x, x2, y, alpha, beta):
    assert mul(x * alpha + x2 * beta, y) == mul(x, y) * alpha + mul(x2, y) * beta
    assert mul(y, x * alpha + x2 * beta) == mul(y, x) * alpha + mul(y, x2) * beta
    assert commutator(x, y) == -commutator(y, x)
    one = x.algebra.one()
    assert mul(one, x) == x == mul(x, one)
    assert not associator(x, x2, y)


def test_algebra_mismatch(H, C):
    with pytest.raises(AlgebraMismatchError):
        mul(H.one(), C.one())
    with pytest.raises(AlgebraMismatchError):
        H.one() + C.one()


def test_element_length_checked(H):
    with pytest.raises(ShapeError):
        H.element([1, 2, 3])


def test_float_backend(H):
    x = H.element([1, 2, 3, 4], backend="float")
    assert all(isinstance(c, float) for c in mul(x, x).coords)
    assert mul(x, x).isclose(H.element(hamilton((1, 2, 3, 4), (1, 2, 3, 4))), 1e-12)


def test_parse_scalar():
    assert parse_scalar("3/6") == Fraction(1, 2)
    assert parse_scalar(0.1) == Fraction(1, 10)
    assert parse_scalar("1/4", "float") == 0.25
    with pytest.raises(TypeError):
        parse_scalar(True)


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert isinstance(exact_sqrt(Fraction(1, 2)), float)
    assert exact_sqrt(2.25) == 1.5


def test_load_round_trip(H):
    doc = json.dumps(H.to_document())
    assert load_algebra(doc) == builtin_quaternion()
    assert load_algebra(H.to_document()) == H


def test_load_rational_strings():
    doc = {"name": "scaled", "dim": 1, "basis": ["1"], "unit": None, "associative": True,
           "constants": [[["3/2"]]]}
    spec = load_algebra(doc)
    assert spec.constant(0, 0, 0) == Fraction(3, 2)


def test_load_wrong_arity(H):
    doc = H.to_document()
    doc["constants"][2][1] = [0, 0, 1]
    with pytest.raises(ShapeError, match=r"constants\[2\]\[1\]"):
        load_algebra(doc)
    doc = H.to_document()
    doc["constants"] = doc["constants"][:3]
    with pytest.raises(ShapeError):
        load_algebra(doc)


def test_load_unit_violation(H):
    doc = H.to_document()
    doc["constants"][0][1][1] = 0  # C^1_{01} = 0
    with pytest.raises(UnitAxiomError, match=r"C\^1_\{01\}"):
        load_algebra(doc)


def test_load_associativity_violation(H):
    doc = H.to_document()
    doc["constants"][2][3][1] = 1
    doc["constants"][3][2][1] = 1
    with pytest.raises(AssociativityError):
        load_algebra(doc)
    doc["associative"] = False
    load_algebra(doc)  # not flagged, not checked


def test_load_bad_json():
    with pytest.raises(ParseError) as info:
        load_algebra('{"dim": 2,\n "constants": [}')
    assert info.value.line == 2
