from fractions import Fraction

import pytest
from hypothesis import given, settings

from ncalg import builtin_quaternion, load_algebra
from ncalg.conjugation import analyze, conj, im, norm_sq, re, times_conj
from ncalg.errors import MissingUnitError, NotConjugationAlgebraError, UnsupportedAlgebraError

from conftest import quaternions


def split_complex():
    # basis 1, j with j^2 = +1
    return load_algebra({"name": "split", "dim": 2, "basis": ["1", "j"], "unit": 0,
                         "constants": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]})


def test_builtins_are_conjugation_algebras(H, C):
    for alg in (H, C):
        prof = analyze(alg)
        assert prof.is_unital and prof.is_conjugation_algebra and prof.violation is None


def test_split_complex_passes_criterion():
    # the vector part is one-dimensional, so antisymmetry holds trivially
    assert analyze(split_complex()).is_conjugation_algebra


def test_mutated_quaternion_reports_indices(H):
    bad = H.with_constant(1, 2, 3, 1).with_constant(1, 3, 2, 1)
    prof = analyze(bad)
    assert prof.is_unital and not prof.is_conjugation_algebra
    assert prof.violation_indices == (1, 2, 3)
    assert "C^1_{23}" in prof.violation


def test_non_unital_profile(H):
    bad = H.with_constant(1, 0, 1, 0)
    prof = analyze(bad)
    assert not prof.is_unital and not prof.is_conjugation_algebra


def test_missing_unit():
    alg = load_algebra({"dim": 1, "basis": ["e"], "unit": None, "constants": [[[0]]]})
    with pytest.raises(MissingUnitError):
        analyze(alg)


def test_unit_not_first():
    alg = load_algebra({"dim": 2, "basis": ["j", "1"], "unit": 1,
                        "constants": [[[0, -1], [1, 0]], [[1, 0], [0, 1]]]})
    with pytest.raises(MissingUnitError):
        analyze(alg)


def test_parts_and_conjugate(H):
    x = H.element([1, 2, -3, "1/2"])
    assert re(x).coords == (1, 0, 0, 0)
    assert im(x).coords == (0, 2, -3, Fraction(1, 2))
    assert conj(x).coords == (1, -2, 3, Fraction(-1, 2))
    assert re(x) + im(x) == x


@given(quaternions(builtin_quaternion()))
@settings(max_examples=100, deadline=None)
def test_times_conj_is_real_norm(x):
    n = norm_sq(x)
    assert times_conj(x) == x.algebra.one() * n
    assert conj(conj(x)) == x


def test_norm_sq_restricted(H):
    assert norm_sq(H.element([1, 2, 2, 4])) == 25
    with pytest.raises(UnsupportedAlgebraError):
        norm_sq(split_complex().one())


def test_conj_needs_conjugation_algebra(H):
    bad = H.with_constant(1, 2, 3, 1).with_constant(1, 3, 2, 1)
    with pytest.raises(NotConjugationAlgebraError):
        conj(bad.one())
