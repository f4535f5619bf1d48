"""Highest-weight representation theory for the catalog symmetry groups.

Weights live in integer evaluation coordinates against a fixed torus
basis per group; the inner product on the weight space is the one induced
by the catalog inner product Q, so Casimir constants come out in the
normalization used throughout (Freudenthal's formula, cross-checked by
brute force on the explicit representations).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .lie import ReductiveSpace
from .scalars import ONE, ZERO, Scalar, rational

GROUP_NAMES = ("k3", "so5", "su3")


@dataclass(frozen=True)
class GroupData:
    name: str
    rank: int
    gram_t: tuple            # Gram of Q on the torus basis (Fractions)
    simple_roots: tuple
    positive_roots: tuple
    delta: tuple             # half sum of positive roots (Fractions)
    lowest_coeffs: tuple     # hw -> expansion of hw - w0(hw) in simple roots

    def dual_ip(self, u, v) -> Fraction:
        gi = _GRAM_INV[self.name]
        total = Fraction(0)
        for a in range(self.rank):
            if not u[a]:
                continue
            for b in range(self.rank):
                if v[b]:
                    total += Fraction(u[a]) * gi[a][b] * Fraction(v[b])
        return total


def _inv_fraction_matrix(g):
    mat = [[Scalar.from_fraction(x) for x in row] for row in g]
    inv = linalg.inverse(mat)
    return tuple(tuple(x.rational() for x in row) for row in inv)


GROUPS: dict[str, GroupData] = {}
_GRAM_INV: dict[str, tuple] = {}


def _register(g: GroupData):
    GROUPS[g.name] = g
    _GRAM_INV[g.name] = _inv_fraction_matrix(g.gram_t)


_register(
    GroupData(
        name="k3",
        rank=3,
        gram_t=(
            (Fraction(2, 3), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(2, 3), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(2, 3)),
        ),
        simple_roots=((2, 0, 0), (0, 2, 0), (0, 0, 2)),
        positive_roots=((2, 0, 0), (0, 2, 0), (0, 0, 2)),
        delta=(Fraction(1), Fraction(1), Fraction(1)),
        lowest_coeffs=None,
    )
)

_register(
    GroupData(
        name="so5",
        rank=2,
        gram_t=((Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1, 2))),
        simple_roots=((1, -1), (0, 1)),
        positive_roots=((1, -1), (0, 1), (1, 0), (1, 1)),
        delta=(Fraction(3, 2), Fraction(1, 2)),
        lowest_coeffs=None,
    )
)

_register(
    GroupData(
        name="su3",
        rank=2,
        gram_t=((Fraction(1), Fraction(-1, 2)), (Fraction(-1, 2), Fraction(1))),
        simple_roots=((2, -1), (-1, 2)),
        positive_roots=((2, -1), (-1, 2), (1, 1)),
        delta=(Fraction(1), Fraction(1)),
        lowest_coeffs=None,
    )
)


def check_label(group: str, label: tuple) -> tuple:
    label = tuple(int(x) for x in label)
    if group == "k3":
        if len(label) != 3 or any(x < 0 for x in label):
            raise ValueError(f"k3 labels are triples of non-negative integers: {label}")
    elif group == "so5":
        if len(label) != 2 or not (label[0] >= label[1] >= 0):
            raise ValueError(f"so5 labels need a >= b >= 0: {label}")
    elif group == "su3":
        if len(label) != 2 or any(x < 0 for x in label):
            raise ValueError(f"su3 labels are pairs of non-negative integers: {label}")
    else:
        raise ValueError(f"unknown group {group!r}")
    return label


def _simple_root_box(group: str, hw: tuple) -> tuple:
    """Expansion of hw - (lowest weight) in simple roots; box bounds for
    the weight enumeration."""
    if group == "k3":
        return hw
    if group == "so5":
        a, b = hw
        return (2 * a, 2 * a + 2 * b)
    if group == "su3":
        k, l = hw
        return (k + l, k + l)
    raise ValueError(group)


def weight_system(group: str, label: tuple) -> dict:
    """Full weight multiset of the irreducible module, by Freudenthal's
    multiplicity recursion."""
    label = check_label(group, label)
    g = GROUPS[group]
    hw = label
    hw_shift = tuple(Fraction(x) + d for x, d in zip(hw, g.delta))
    c = g.dual_ip(hw_shift, hw_shift)

    bounds = _simple_root_box(group, hw)
    candidates = []
    for ns in itertools.product(*(range(b + 1) for b in bounds)):
        lam = tuple(
            hw[i] - sum(n * g.simple_roots[k][i] for k, n in enumerate(ns))
            for i in range(g.rank)
        )
        candidates.append((sum(ns), lam))
    candidates.sort()

    mult: dict[tuple, int] = {}
    for level, lam in candidates:
        if level == 0:
            mult[lam] = 1
            continue
        lam_shift = tuple(Fraction(x) + d for x, d in zip(lam, g.delta))
        denom = c - g.dual_ip(lam_shift, lam_shift)
        if denom == 0:
            continue
        num = Fraction(0)
        for alpha in g.positive_roots:
            k = 1
            while True:
                mu = tuple(lam[i] + k * alpha[i] for i in range(g.rank))
                m = mult.get(mu, 0)
                if m == 0 and not _within(hw, mu, g):
                    break
                if m:
                    num += m * g.dual_ip(mu, alpha)
                k += 1
        val = 2 * num / denom
        if val:
            if val.denominator != 1 or val < 0:
                raise ArithmeticError(f"non-integral multiplicity for {lam}: {val}")
            mult[lam] = int(val)
    return mult


def _within(hw, mu, g: GroupData) -> bool:
    """Whether hw - mu is a non-negative combination of simple roots."""
    diff = tuple(h - m for h, m in zip(hw, mu))
    coeffs = _solve_simple(diff, g)
    return coeffs is not None and all(x >= 0 for x in coeffs)


def _solve_simple(diff, g: GroupData):
    mat = [[Scalar.from_fraction(g.simple_roots[k][i]) for k in range(g.rank)] for i in range(g.rank)]
    rhs = [Scalar.from_fraction(x) for x in diff]
    sol = linalg.solve(mat, rhs)
    if sol is None:
        return None
    out = []
    for x in sol:
        if not x.is_rational():
            return None
        q = x.rational()
        if q.denominator != 1:
            return None
        out.append(q)
    return out


def dim(group: str, label: tuple) -> int:
    """Weyl dimension formula."""
    label = check_label(group, label)
    g = GROUPS[group]
    hw_shift = tuple(Fraction(x) + d for x, d in zip(label, g.delta))
    num = Fraction(1)
    den = Fraction(1)
    for alpha in g.positive_roots:
        num *= g.dual_ip(hw_shift, alpha)
        den *= g.dual_ip(g.delta, alpha)
    d = num / den
    if d.denominator != 1 or d <= 0:
        raise ArithmeticError(f"bad dimension {d} for {group} {label}")
    return int(d)


def casimir_constant(group: str, label: tuple) -> Fraction:
    """Casimir eigenvalue <hw, hw + 2 delta> in the Q-dual inner product."""
    label = check_label(group, label)
    g = GROUPS[group]
    two_delta = tuple(2 * d for d in g.delta)
    return g.dual_ip(label, label) + g.dual_ip(label, two_delta)


def weyl_generators(group: str):
    if group == "k3":
        return [
            lambda w, i=i: tuple(-x if k == i else x for k, x in enumerate(w))
            for i in range(3)
        ]
    if group == "so5":
        return [lambda w: (w[1], w[0]), lambda w: (w[0], -w[1])]
    if group == "su3":
        return [lambda w: (-w[0], w[0] + w[1]), lambda w: (w[0] + w[1], -w[1])]
    raise ValueError(group)


def enumerate_labels(group: str, max_cas: Fraction) -> list:
    """All dominant labels with Casimir constant <= max_cas.  The Casimir
    polynomial is strictly increasing in each label coordinate, so a
    per-coordinate sweep bounds the search box."""
    out = []
    if group == "k3":
        a = 0
        while casimir_constant(group, (a, 0, 0)) <= max_cas:
            a += 1
        for lab in itertools.product(range(a), repeat=3):
            if casimir_constant(group, lab) <= max_cas:
                out.append(lab)
    elif group == "so5":
        a = 0
        while casimir_constant(group, (a, 0)) <= max_cas:
            a += 1
        for la in range(a):
            for lb in range(la + 1):
                if casimir_constant(group, (la, lb)) <= max_cas:
                    out.append((la, lb))
    elif group == "su3":
        k = 0
        while casimir_constant(group, (k, 0)) <= max_cas:
            k += 1
        for lab in itertools.product(range(k), repeat=2):
            if casimir_constant(group, lab) <= max_cas:
                out.append(lab)
    else:
        raise ValueError(group)
    return sorted(out, key=lambda lab: (casimir_constant(group, lab), lab))


# ---------------------------------------------------------------------------
# Explicit representations on the catalog spaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExplicitRep:
    space: str
    label: tuple
    basis_labels: tuple
    matrices: tuple  # one matrix per symmetry-algebra basis vector

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def matrix_of(self, g_coords: list) -> list:
        out = linalg.zeros(self.dim, self.dim)
        for a, c in enumerate(g_coords):
            if not c:
                continue
            m = self.matrices[a]
            for i in range(self.dim):
                row = m[i]
                acc = out[i]
                for j in range(self.dim):
                    if row[j]:
                        acc[j] = acc[j] + c * row[j]
        return out


def _su2_factor_rep(block: list, k: int) -> list:
    """Action of a 2x2 matrix on Sym^k C^2 in the monomial basis."""
    if k == 0:
        return [[ZERO]]
    if k == 1:
        return [list(row) for row in block]
    if k == 2:
        (a, b), (c, d) = block
        two = rational(2)
        return [
            [two * a, b, ZERO],
            [two * c, a + d, two * b],
            [ZERO, c, two * d],
        ]
    raise ValueError(f"unsupported SU(2) factor label {k}")


def _kron(mats: list) -> list:
    out = [[ONE]]
    for m in mats:
        n1, n2 = len(out), len(m)
        new = [[ZERO] * (n1 * n2 * 0 + len(out[0]) * len(m[0])) for _ in range(n1 * n2)]
        for i in range(n1):
            for j in range(len(out[0])):
                c = out[i][j]
                if not c:
                    continue
                for p in range(n2):
                    for q in range(len(m[0])):
                        if m[p][q]:
                            new[i * n2 + p][j * len(m[0]) + q] = c * m[p][q]
        out = new
    return out


def _k3_rep(space: ReductiveSpace, label: tuple) -> ExplicitRep:
    if any(x > 2 for x in label):
        raise ValueError(f"unsupported k3 label {label}")
    dims = [x + 1 for x in label]
    factor_names = [
        ["1"] if x == 0 else (["z1", "z2"] if x == 1 else ["z1^2", "z1*z2", "z2^2"])
        for x in label
    ]
    basis = tuple("(" + ")*(".join(t) + ")" for t in itertools.product(*factor_names))
    mats = []
    for g_mat in space.algebra.basis_matrices:
        blocks = [
            [[g_mat[2 * f + i][2 * f + j] for j in range(2)] for i in range(2)]
            for f in range(3)
        ]
        total = linalg.zeros(len(basis), len(basis))
        for f in range(3):
            if label[f] == 0:
                continue
            factors = [
                _su2_factor_rep(blocks[f], label[f])
                if g == f
                else linalg.identity(dims[g])
                for g in range(3)
            ]
            total = linalg.mat_add(total, _kron(factors))
        mats.append(tuple(tuple(row) for row in total))
    return ExplicitRep(space.name, label, basis, tuple(mats))


def _adjoint_rep(space: ReductiveSpace, label: tuple) -> ExplicitRep:
    alg = space.algebra
    mats = []
    for a in range(alg.dim):
        m = [
            [alg.structure[a][b][k] for b in range(alg.dim)]
            for k in range(alg.dim)
        ]
        mats.append(tuple(tuple(row) for row in m))
    return ExplicitRep(space.name, label, alg.basis_labels, tuple(mats))


def _matrix_rep(space: ReductiveSpace, label: tuple, dual: bool) -> ExplicitRep:
    n = len(space.algebra.basis_matrices[0])
    basis = tuple(f"v{i+1}" for i in range(n))
    mats = []
    for m in space.algebra.basis_matrices:
        if dual:
            mats.append(tuple(tuple(-m[j][i] for j in range(n)) for i in range(n)))
        else:
            mats.append(tuple(tuple(row) for row in m))
    return ExplicitRep(space.name, label, basis, tuple(mats))


def _trivial_rep(space: ReductiveSpace, label: tuple) -> ExplicitRep:
    zero = ((ZERO,),)
    return ExplicitRep(space.name, label, ("1",), tuple(zero for _ in range(space.algebra.dim)))


def explicit_rep(space: ReductiveSpace, label: tuple) -> ExplicitRep:
    label = check_label(space.group, label)
    if all(x == 0 for x in label):
        return _trivial_rep(space, label)
    if space.group == "k3":
        return _k3_rep(space, label)
    if space.group == "so5":
        if label == (1, 0):
            return _matrix_rep(space, label, dual=False)
        if label == (1, 1):
            return _adjoint_rep(space, label)
        raise ValueError(f"unsupported so5 label {label}")
    if space.group == "su3":
        if label == (1, 0):
            return _matrix_rep(space, label, dual=False)
        if label == (0, 1):
            return _matrix_rep(space, label, dual=True)
        if label == (1, 1):
            return _adjoint_rep(space, label)
        raise ValueError(f"unsupported su3 label {label}")
    raise ValueError(space.group)


def validate_rep(space: ReductiveSpace, rep: ExplicitRep) -> bool:
    """Homomorphism property on all pairs of symmetry-algebra basis vectors."""
    alg = space.algebra
    for a in range(alg.dim):
        for b in range(alg.dim):
            lhs = rep.matrix_of(list(alg.structure[a][b]))
            rhs = linalg.commutator([list(r) for r in rep.matrices[a]], [list(r) for r in rep.matrices[b]])
            if not linalg.mat_eq(lhs, rhs):
                return False
    return True


def casimir_bruteforce(space: ReductiveSpace, rep: ExplicitRep) -> Fraction:
    """Casimir constant as minus the sum of squares over a Q-orthonormal
    basis of the symmetry algebra; raises if the operator is not scalar."""
    n = rep.dim
    acc = linalg.zeros(n, n)
    for v in space.g_orthonormal:
        m = rep.matrix_of(list(v))
        acc = linalg.mat_sub(acc, linalg.mat_mul(m, m))
    c = linalg.scalar_multiple_of_identity(acc)
    if c is None:
        raise ArithmeticError(f"Casimir of {rep.label} on {space.name} is not scalar")
    return c.rational()
