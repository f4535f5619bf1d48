"""Highest-weight data: weight systems, dimensions, Casimir constants,
explicit representations."""

from fractions import Fraction

import pytest

from gray_stability import linalg
from gray_stability.lie import build_space
from gray_stability.reps import (
    casimir_bruteforce,
    casimir_constant,
    dim,
    enumerate_labels,
    explicit_rep,
    validate_rep,
    weight_system,
    weyl_generators,
)
from gray_stability.scalars import I, J, ONE, SQRT2, ZERO


SUPPORTED = [
    ("s3xs3", (0, 0, 0)),
    ("s3xs3", (1, 0, 0)),
    ("s3xs3", (1, 1, 0)),
    ("s3xs3", (1, 0, 1)),
    ("s3xs3", (0, 1, 1)),
    ("s3xs3", (2, 0, 0)),
    ("s3xs3", (0, 2, 0)),
    ("s3xs3", (0, 0, 2)),
    ("cp3", (0, 0)),
    ("cp3", (1, 0)),
    ("cp3", (1, 1)),
    ("flag", (0, 0)),
    ("flag", (1, 0)),
    ("flag", (0, 1)),
    ("flag", (1, 1)),
]


def test_casimir_k3_closed_form():
    for lab in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 0, 0), (2, 1, 2)]:
        a, b, c = lab
        expected = Fraction(3, 2) * (a * (a + 2) + b * (b + 2) + c * (c + 2))
        assert casimir_constant("k3", lab) == expected


def test_casimir_so5_closed_form():
    for lab in [(0, 0), (1, 0), (1, 1), (2, 0), (2, 2), (3, 1)]:
        a, b = lab
        assert casimir_constant("so5", lab) == 2 * (a * (a + 3) + b * (b + 1))


def test_casimir_su3_values():
    # The adjoint normalization pins Cas(1,1) = 12; the standard module
    # comes out at 16/3 (confirmed by brute force below).
    assert casimir_constant("su3", (0, 0)) == 0
    assert casimir_constant("su3", (1, 1)) == 12
    assert casimir_constant("su3", (1, 0)) == Fraction(16, 3)
    assert casimir_constant("su3", (0, 1)) == Fraction(16, 3)
    assert casimir_constant("su3", (2, 0)) == Fraction(40, 3)


def test_casimir_additive_over_k3_factors():
    for a, b, c in [(1, 2, 0), (2, 2, 2), (0, 1, 2)]:
        parts = (
            casimir_constant("k3", (a, 0, 0))
            + casimir_constant("k3", (0, b, 0))
            + casimir_constant("k3", (0, 0, c))
        )
        assert casimir_constant("k3", (a, b, c)) == parts


def test_dimensions():
    assert dim("k3", (1, 1, 0)) == 4
    assert dim("k3", (2, 1, 1)) == 12
    assert dim("so5", (1, 0)) == 5
    assert dim("so5", (1, 1)) == 10
    assert dim("so5", (2, 0)) == 14
    assert dim("su3", (1, 0)) == 3
    assert dim("su3", (1, 1)) == 8
    assert dim("su3", (0, 0)) == 1


def test_weight_system_totals_match_dimension():
    cases = [
        ("k3", (1, 1, 0)),
        ("k3", (2, 1, 1)),
        ("so5", (1, 0)),
        ("so5", (1, 1)),
        ("so5", (2, 0)),
        ("su3", (1, 1)),
        ("su3", (2, 1)),
    ]
    for group, lab in cases:
        ws = weight_system(group, lab)
        assert sum(ws.values()) == dim(group, lab)


def test_weight_system_weyl_invariance():
    for group, lab in [("k3", (1, 1, 0)), ("so5", (1, 1)), ("su3", (2, 1))]:
        ws = weight_system(group, lab)
        for gen in weyl_generators(group):
            assert {gen(w): m for w, m in ws.items()} == ws


def test_su3_adjoint_weights_against_tensor_oracle():
    # Brute force: weights of (std) x (conj std) minus one zero weight.
    std = [(1, 0), (-1, 1), (0, -1)]
    products = {}
    for a in std:
        for b in std:
            w = (a[0] - b[0], a[1] - b[1])
            products[w] = products.get(w, 0) + 1
    products[(0, 0)] -= 1
    assert weight_system("su3", (1, 1)) == {w: m for w, m in products.items() if m}


def test_so5_standard_weights():
    assert weight_system("so5", (1, 0)) == {
        (1, 0): 1,
        (-1, 0): 1,
        (0, 1): 1,
        (0, -1): 1,
        (0, 0): 1,
    }


def test_trivial_weight_system():
    for group, lab in [("k3", (0, 0, 0)), ("so5", (0, 0)), ("su3", (0, 0))]:
        assert weight_system(group, lab) == {tuple([0] * len(lab)): 1}


def test_label_validation():
    with pytest.raises(ValueError):
        casimir_constant("so5", (1, 2))
    with pytest.raises(ValueError):
        casimir_constant("k3", (1, -1, 0))
    with pytest.raises(ValueError):
        casimir_constant("e8", (1,))


def test_enumerate_labels_below_threshold():
    assert enumerate_labels("so5", Fraction(12)) == [(0, 0), (1, 0), (1, 1)]
    assert enumerate_labels("su3", Fraction(12)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    k3 = enumerate_labels("k3", Fraction(12))
    assert (1, 1, 0) in k3 and (2, 0, 0) in k3 and (1, 1, 1) not in k3
    assert all(casimir_constant("k3", lab) <= 12 for lab in k3)


def test_explicit_rep_matches_reference_matrices():
    space = build_space("s3xs3")
    rep = explicit_rep(space, (1, 1, 0))
    inv_s2 = SQRT2.inverse()
    c = I * inv_s2

    def rho_plus(a):
        g = [ZERO] * 9
        g[3 + 2 * a] = inv_s2
        g[3 + 2 * a + 1] = I * inv_s2
        return rep.matrix_of(g)

    def rho_minus(a):
        g = [ZERO] * 9
        g[3 + 2 * a] = inv_s2
        g[3 + 2 * a + 1] = -(I * inv_s2)
        return rep.matrix_of(g)

    x1 = [
        [ZERO, c * J, c, ZERO],
        [c * J, ZERO, ZERO, c],
        [c, ZERO, ZERO, c * J],
        [ZERO, c, c * J, ZERO],
    ]
    r = inv_s2
    x2 = [
        [ZERO, -(r * J), -r, ZERO],
        [r * J, ZERO, ZERO, -r],
        [r, ZERO, ZERO, -(r * J)],
        [ZERO, r, r * J, ZERO],
    ]
    x3 = [
        [c * (ONE + J), ZERO, ZERO, ZERO],
        [ZERO, c * (ONE - J), ZERO, ZERO],
        [ZERO, ZERO, c * (J - ONE), ZERO],
        [ZERO, ZERO, ZERO, -(c * (ONE + J))],
    ]
    assert linalg.mat_eq(rho_plus(0), x1)
    assert linalg.mat_eq(rho_plus(1), x2)
    assert linalg.mat_eq(rho_plus(2), x3)

    # The conjugate basis vectors act by replacing j with j^2 throughout.
    jj = J * J

    def swap_j(m):
        return [[_rewrite_j(x, jj) for x in row] for row in m]

    for a, plus in enumerate((x1, x2, x3)):
        assert linalg.mat_eq(rho_minus(a), swap_j(plus))


def _rewrite_j(x, jj):
    # Decompose x = p + q*j with p, q in Q(i, sqrt2); since
    # j = (-1 + i sqrt3)/2, the sqrt3-part of x determines q exactly.
    from gray_stability.scalars import SQRT3

    q = (x - x.galois(flip_sqrt3=True)) * (I * SQRT3).inverse()
    p = x - q * J
    assert p.galois(flip_sqrt3=True) == p and q.galois(flip_sqrt3=True) == q
    return p + q * jj


def test_all_supported_reps_are_homomorphisms():
    for name, lab in SUPPORTED:
        space = build_space(name)
        rep = explicit_rep(space, lab)
        assert validate_rep(space, rep), (name, lab)


def test_bruteforce_casimir_matches_freudenthal():
    for name, lab in SUPPORTED:
        space = build_space(name)
        rep = explicit_rep(space, lab)
        assert casimir_bruteforce(space, rep) == casimir_constant(space.group, lab), (
            name,
            lab,
        )


def test_unsupported_labels_rejected():
    with pytest.raises(ValueError):
        explicit_rep(build_space("s3xs3"), (3, 0, 0))
    with pytest.raises(ValueError):
        explicit_rep(build_space("cp3"), (2, 0))
    with pytest.raises(ValueError):
        explicit_rep(build_space("flag"), (2, 1))
