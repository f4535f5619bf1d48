"""Polynomial algebra in the nine coordinate functions and the
symmetric-power inner product."""

import random
from fractions import Fraction

import pytest

from gray_stability.obstruction import matrix_from_coordinates
from gray_stability import linalg
from gray_stability.scalars import I, ONE, ZERO, Scalar, rational
from gray_stability.sympoly import (
    SymPoly,
    V1,
    V2,
    V3,
    X,
    det_cubic,
    eliminate_v3,
    equal_mod_trace,
    generators,
    gram_su3,
    reduce_v_cubic,
    sym_inner,
)


def test_ring_basics():
    p = V1 * V2 + X[0].scale(3)
    assert p + SymPoly.zero() == p
    assert (V1 + V2 + V3) * (V1 * V2) == V1 * V1 * V2 + V1 * V2 * V2 + V1 * V2 * V3
    assert (V1 * V2 * V3).scale(6).coefficient((1, 1, 1, 0, 0, 0, 0, 0, 0)) == rational(6)
    assert str(X[0] * X[0] - V3) == "-v3 + x1^2"


def test_gram_matrix_values():
    g = gram_su3()
    for i in range(3):
        for j in range(3):
            assert g[i][j] == (Fraction(1, 3) if i == j else Fraction(-1, 6))
    for i in range(3, 9):
        assert g[i][i] == 1
        assert all(g[i][j] == 0 for j in range(9) if j != i)


def test_sym_inner_reference_values():
    v123 = V1 * V2 * V3
    assert sym_inner(v123, v123) == rational(1, 18)
    x1sq_v3 = X[0] * X[0] * V3
    assert sym_inner(x1sq_v3, x1sq_v3) == rational(2, 3)
    assert sym_inner(X[0], X[1]) == ZERO
    assert sym_inner(X[0], X[0]) == ONE
    assert sym_inner(V1, V1) == rational(1, 3)
    assert sym_inner(V1, V2) == rational(-1, 6)


def test_sym_inner_degree_one_reduces_to_gram():
    gens = generators()
    g = gram_su3()
    for i in range(9):
        for j in range(9):
            assert sym_inner(gens[i], gens[j]) == Scalar.from_fraction(g[i][j])


def test_sym_inner_degree_mismatch_raises():
    with pytest.raises(ValueError):
        sym_inner(V1, V1 * V2)
    with pytest.raises(ValueError):
        sym_inner(V1 + V1 * V2, V1 * V2)


def test_sym_inner_symmetric_bilinear():
    rng = random.Random(5)
    gens = generators()

    def rand_poly(deg, terms=3):
        p = SymPoly.zero()
        for _ in range(terms):
            mono = SymPoly.constant(rng.randint(-3, 3))
            for _ in range(deg):
                mono = mono * gens[rng.randrange(9)]
            p = p + mono
        return p

    for _ in range(10):
        p, q, r = rand_poly(3), rand_poly(3), rand_poly(3)
        assert sym_inner(p, q) == sym_inner(q, p)
        assert sym_inner(p + q, r) == sym_inner(p, r) + sym_inner(q, r)


def test_det_cubic_coefficients():
    d = det_cubic()
    assert d.coefficient((1, 1, 1, 0, 0, 0, 0, 0, 0)) == rational(8)
    # triple-x block, coefficients forced by the determinant identity:
    assert d.coefficient((0, 0, 0, 0, 1, 1, 0, 1, 0)) == rational(2)   # x2 x3 x5
    assert d.coefficient((0, 0, 0, 1, 0, 1, 0, 0, 1)) == rational(2)   # x1 x3 x6
    assert d.coefficient((0, 0, 0, 0, 1, 0, 1, 0, 1)) == rational(2)   # x2 x4 x6
    assert d.coefficient((0, 0, 0, 1, 0, 0, 1, 1, 0)) == rational(-2)  # x1 x4 x5
    assert d.coefficient((0, 0, 1, 2, 0, 0, 0, 0, 0)) == rational(-2)  # x1^2 v3
    assert len(d.terms) == 11


def test_det_cubic_diagonal_example():
    # xi = diag(i, i, -2i) has coordinates v = (1/2, 1/2, -1), x = 0 and
    # i * det(xi) = -2.
    vals = [rational(1, 2), rational(1, 2), rational(-1)] + [ZERO] * 6
    assert det_cubic().substitute(vals) == rational(-2)


def test_det_cubic_against_matrix_determinant():
    rng = random.Random(17)
    d = det_cubic()
    for _ in range(50):
        v1 = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        v2 = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        v = [v1, v2, -v1 - v2]
        x = [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(6)]
        xi = matrix_from_coordinates(v, x)
        direct = I * linalg.det3(xi)
        values = [Scalar.from_fraction(q) for q in v + x]
        assert d.substitute(values) == direct


def test_det_cubic_torus_invariance():
    # the invariant cubic is annihilated by every torus direction
    from gray_stability.obstruction import torus_derivative

    d = det_cubic()
    for j in range(3):
        assert torus_derivative(j, d) == SymPoly.zero()


def test_reduce_v_cubic():
    p = (V1 * V1 * V1 + V2 * V2 * V2 + V3 * V3 * V3).scale(2)
    assert reduce_v_cubic(p) == (V1 * V2 * V3).scale(6)
    mixed = p + (X[0] * X[0] * V3).scale(4)
    assert reduce_v_cubic(mixed) == (V1 * V2 * V3).scale(6) + (X[0] * X[0] * V3).scale(4)
    # the reduction only changes the polynomial by a trace-relation multiple
    assert equal_mod_trace(reduce_v_cubic(p), p)


def test_reduce_v_cubic_rejects_asymmetric():
    with pytest.raises(ValueError):
        reduce_v_cubic(V1 * V1 * V2)


def test_eliminate_v3_normal_form():
    assert eliminate_v3(V1 + V2 + V3) == SymPoly.zero()
    assert equal_mod_trace((V1 + V2 + V3) * X[0], SymPoly.zero())
    assert not equal_mod_trace(V1, V2)
