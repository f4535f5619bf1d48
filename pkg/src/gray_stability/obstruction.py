"""Second-order integrability obstruction for the Einstein deformations
of the flag manifold.

Works in the unitary 3x3 frame (h1, h2, h3, e1, ..., e6) with the inner
product making (e_i, sqrt2 h_j) orthonormal.  The infinitesimal Einstein
deformations are parametrized by traceless skew-hermitian matrices xi via
nine coordinate functions v1..v3, x1..x6; the deformation tensor is

    h = v3 (e1 (x) e1 + e2 (x) e2) + v2 (e3 (x) e3 + e4 (x) e4)
      + v1 (e5 (x) e5 + e6 (x) e6).

Derivatives reduce to finite bracket computations: the left-invariant
derivative of the coordinate function of Z along e is the coordinate
function of [e, Z] (this global sign choice is fixed once; flipping it
negates every degree-1 function and leaves the pairing unchanged), and
the torsion correction acts through the 3-form Psi^- as a derivation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .lie import build_space
from .scalars import I, ZERO, Scalar, rational
from .sympoly import (
    SymPoly,
    det_cubic,
    generators,
    reduce_v_cubic,
    sym_inner,
)

M_DIM = 6
_GENS = generators()


@lru_cache(maxsize=1)
def _frame():
    """The unitary frame: 3x3 matrices of h1..h3 and e1..e6."""
    space = build_space("flag")
    su3 = space.algebra.basis_matrices  # (t1, t2, e1..e6)
    e_mats = [[list(row) for row in su3[2 + k]] for k in range(6)]

    def diag_i(k):
        m = [[ZERO] * 3 for _ in range(3)]
        m[k][k] = I
        return m

    h_mats = [diag_i(k) for k in range(3)]
    return h_mats, e_mats


def _ip_u3(x, y) -> Scalar:
    # -(1/2) tr extends -(1/12)B of su(3) and makes (e_i, sqrt2 h_j) orthonormal.
    return rational(-1, 2) * linalg.trace(linalg.mat_mul(x, y))


def _coords_u3(m) -> tuple:
    """Coordinates of a u(3) matrix in the (h, e) basis."""
    h_mats, e_mats = _frame()
    h_coeffs = [(_ip_u3(m, h) * rational(2)) for h in h_mats]
    e_coeffs = [_ip_u3(m, e) for e in e_mats]
    recon = [[ZERO] * 3 for _ in range(3)]
    for c, b in zip(h_coeffs + e_coeffs, h_mats + e_mats):
        recon = linalg.mat_add(recon, linalg.mat_scale(c, b))
    if not linalg.mat_eq(recon, m):
        raise ValueError("matrix is not in the unitary frame span")
    return tuple(h_coeffs), tuple(e_coeffs)


def coordinate_poly(m) -> SymPoly:
    """The coordinate function <xi*, m> as a linear polynomial."""
    h_coeffs, e_coeffs = _coords_u3(m)
    out = SymPoly()
    for k, c in enumerate(h_coeffs):
        if c:
            out = out + _GENS[k].scale(c)
    for k, c in enumerate(e_coeffs):
        if c:
            out = out + _GENS[3 + k].scale(c)
    return out


def directional_derivative(e_index: int, gen_index: int, sign: int = 1) -> SymPoly:
    """Derivative of the coordinate function of the target basis vector
    along the frame direction e_{e_index+1}: the coordinate function of
    sign * [e, target]."""
    h_mats, e_mats = _frame()
    target = h_mats[gen_index] if gen_index < 3 else e_mats[gen_index - 3]
    br = linalg.commutator(e_mats[e_index], target)
    p = coordinate_poly(br)
    return p if sign == 1 else -p


def torus_derivative(h_index: int, p: SymPoly) -> SymPoly:
    """Leibniz derivative of a polynomial along the isotropy direction
    h_{h_index+1}; vanishes exactly on torus-invariant functions."""
    h_mats, e_mats = _frame()
    derivs = [
        coordinate_poly(linalg.commutator(h_mats[h_index], t))
        for t in h_mats + e_mats
    ]
    out = SymPoly.zero()
    for mono, c in p.terms.items():
        for k, e in enumerate(mono):
            if not e:
                continue
            lowered = tuple(x - 1 if j == k else x for j, x in enumerate(mono))
            out = out + (SymPoly({lowered: c * rational(e)}) * derivs[k])
    return out


@lru_cache(maxsize=2)
def _gen_derivatives(sign: int = 1) -> tuple:
    return tuple(
        tuple(directional_derivative(e, g, sign) for g in range(9)) for e in range(M_DIM)
    )


def poly_derivative(e_index: int, p: SymPoly, sign: int = 1) -> SymPoly:
    """Leibniz extension of the coordinate-function derivatives."""
    derivs = _gen_derivatives(sign)[e_index]
    out = SymPoly()
    for mono, c in p.terms.items():
        for k, e in enumerate(mono):
            if not e:
                continue
            lowered = tuple(x - 1 if j == k else x for j, x in enumerate(mono))
            out = out + (SymPoly({lowered: c * rational(e)}) * derivs[k])
    return out


Tensor = dict  # dict[index tuple, SymPoly]


def h_hat(sign: int = 1) -> Tensor:
    """The deformation 2-tensor in the orthonormal frame."""
    v1, v2, v3 = (_GENS[k] if sign == 1 else -_GENS[k] for k in range(3))
    return {
        (0, 0): v3,
        (1, 1): v3,
        (2, 2): v2,
        (3, 3): v2,
        (4, 4): v1,
        (5, 5): v1,
    }


def _psi_lookup():
    space = build_space("flag")
    psi = {}
    for key, c in space.psi_minus:
        for perm in itertools.permutations(range(3)):
            signed = c if _perm_sign(perm) == 1 else -c
            psi[tuple(key[p] for p in perm)] = signed
    return psi


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=1)
def a_endomorphisms() -> tuple:
    """A_X = X -| Psi^- as a skew endomorphism of m, for X = e_1..e_6;
    entries A[X][w][b] = Psi^-(e_X, e_b, e_w)."""
    psi = _psi_lookup()
    mats = []
    for x in range(M_DIM):
        m = [[ZERO] * M_DIM for _ in range(M_DIM)]
        for b in range(M_DIM):
            for w in range(M_DIM):
                c = psi.get((x, b, w))
                if c:
                    m[w][b] = c
        mats.append(tuple(tuple(row) for row in m))
    return tuple(mats)


def a_action(x_index: int, tensor: Tensor) -> Tensor:
    """Derivation action of A_{e_{x_index+1}} on a tensor with polynomial
    coefficients."""
    a = a_endomorphisms()[x_index]
    out: Tensor = {}
    for key, coeff in tensor.items():
        for slot, idx in enumerate(key):
            for w in range(M_DIM):
                c = a[w][idx]
                if not c:
                    continue
                new = key[:slot] + (w,) + key[slot + 1 :]
                term = coeff.scale(c)
                prev = out.get(new)
                out[new] = term if prev is None else prev + term
    return {k: v for k, v in out.items() if v}


def tensor_derivative(e_index: int, tensor: Tensor, sign: int = 1) -> Tensor:
    out: Tensor = {}
    for key, coeff in tensor.items():
        d = poly_derivative(e_index, coeff, sign)
        if d:
            out[key] = d
    return out


@lru_cache(maxsize=2)
def nabla_h(sign: int = 1) -> dict:
    """Full covariant derivative: entries (i, k, l) with
    nabla_h[(i, k, l)] = (e_i-component of the derivative) at slot (k, l),
    computed as the invariant derivative plus half the torsion correction.
    Symmetric in (k, l)."""
    hh = h_hat(sign)
    half = rational(1, 2)
    out: dict = {}
    for i in range(M_DIM):
        t = tensor_derivative(i, hh, sign)
        corr = a_action(i, hh)
        for key, coeff in corr.items():
            scaled = coeff.scale(half)
            prev = t.get(key)
            t[key] = scaled if prev is None else prev + scaled
        for (k, l), coeff in t.items():
            if coeff:
                out[(i, k, l)] = coeff
    return out


def nabla_h_entry(i: int, k: int) -> list:
    """Vector-valued entry: list over l of the coefficient polynomial."""
    table = nabla_h()
    return [table.get((i, k, l), SymPoly.zero()) for l in range(M_DIM)]


def obstruction_terms(sign: int = 1) -> tuple:
    """The three scalar invariants of the obstruction integrand, reduced to
    the canonical representatives modulo the trace relation."""
    hh = h_hat(sign)
    table = nabla_h(sign)

    i0 = SymPoly.zero()
    for a in range(M_DIM):
        c = hh.get((a, a))
        if c:
            i0 = i0 + c * c * c

    def entry(i, k, l):
        return table.get((i, k, l))

    i1 = SymPoly.zero()
    i2 = SymPoly.zero()
    for (i, j), hij in hh.items():
        acc1 = SymPoly.zero()
        acc2 = SymPoly.zero()
        for k in range(M_DIM):
            for l in range(M_DIM):
                a = entry(i, k, l)
                b = entry(j, k, l)
                if a and b:
                    acc1 = acc1 + a * b
                c = entry(k, i, l)
                if c and b:
                    acc2 = acc2 + c * b
        i1 = i1 + hij * acc1
        i2 = i2 + hij * acc2
    return reduce_v_cubic(i0), reduce_v_cubic(i1), reduce_v_cubic(i2)


def integrand(sign: int = 1) -> SymPoly:
    """(1/2)(2E I0 - 3 I1 + 6 I2) with the Einstein constant E = 5 from
    the catalog."""
    e_const = build_space("flag").einstein_constant
    i0, i1, i2 = obstruction_terms(sign)
    half = rational(1, 2)
    return (
        i0.scale(2 * e_const) - i1.scale(3) + i2.scale(6)
    ).scale(half)


def obstruction_pairing() -> Scalar:
    """Symmetric-cube pairing of the integrand against the invariant cubic."""
    return sym_inner(integrand(), det_cubic())


def pairing_breakdown() -> dict:
    """Audit subtotals: the pure v-cubic block and the x^2 v block pair
    separately (the Gram matrix is block diagonal)."""
    full = integrand()
    det = det_cubic()
    vvv = SymPoly({m: c for m, c in full.terms.items() if not any(m[3:])})
    xxv = full - vvv
    parts = {
        "vvv": sym_inner(vvv, det),
        "xxv": sym_inner(xxv, det),
    }
    parts["total"] = parts["vvv"] + parts["xxv"]
    return parts


# ---------------------------------------------------------------------------
# Killing property of the canonical-variation tensors
# ---------------------------------------------------------------------------

def killing_check(t1, t2, t3) -> bool:
    """Whether the constant-coefficient tensor
    t1 g|_(e1,e2) + t2 g|_(e3,e4) + t3 g|_(e5,e6) satisfies the Killing
    equation (vanishing cyclic symmetrization of its covariant
    derivative).  Requires a trace-free triple."""
    t1, t2, t3 = Fraction(t1), Fraction(t2), Fraction(t3)
    if t1 + t2 + t3 != 0:
        raise ValueError("canonical-variation coefficients must sum to zero")
    coeffs = {
        (0, 0): t1, (1, 1): t1,
        (2, 2): t2, (3, 3): t2,
        (4, 4): t3, (5, 5): t3,
    }
    tensor = {k: SymPoly.constant(v) for k, v in coeffs.items() if v}
    half = rational(1, 2)
    nabla: dict = {}
    for i in range(M_DIM):
        for key, coeff in a_action(i, tensor).items():
            c = coeff.scale(half)
            prev = nabla.get((i,) + key)
            nabla[(i,) + key] = c if prev is None else prev + c
    for a in range(M_DIM):
        for b in range(M_DIM):
            for c in range(M_DIM):
                s = SymPoly.zero()
                for key in ((a, b, c), (b, c, a), (c, a, b)):
                    term = nabla.get(key)
                    if term:
                        s = s + term
                if s:
                    return False
    return True


# ---------------------------------------------------------------------------
# Rigidity verdict
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RigidityReport:
    pairing: Scalar
    pairing_nonzero: bool
    critical_points_exist: bool
    rigid: bool
    status: str
    samples: int


def matrix_from_coordinates(v: list, x: list) -> list:
    """Reconstruct the traceless skew-hermitian matrix with coordinates
    (v1, v2, v3, x1..x6); scalars may be rationals or tower elements."""

    def s(q):
        return q if isinstance(q, Scalar) else Scalar.from_fraction(q)

    v = [s(q) for q in v]
    x = [s(q) for q in x]
    two_i = I * rational(2)
    return [
        [two_i * v[0], x[0] + I * x[1], x[2] + I * x[3]],
        [-x[0] + I * x[1], two_i * v[1], x[4] + I * x[5]],
        [-x[2] + I * x[3], -x[4] + I * x[5], two_i * v[2]],
    ]


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_traceless_skew(rng: random.Random) -> list:
    while True:
        v1, v2 = _random_fraction(rng), _random_fraction(rng)
        v = [v1, v2, -v1 - v2]
        x = [_random_fraction(rng) for _ in range(6)]
        if any(v[:2]) or any(x):
            return matrix_from_coordinates(v, x)


def _det_linear_coefficient(xi, eta) -> Scalar:
    """Coefficient of t in det(xi + t eta), by exact interpolation of the
    cubic polynomial at t = -2, -1, 1, 2."""
    def det_at(t):
        m = linalg.mat_add(xi, linalg.mat_scale(rational(t), eta))
        return linalg.det3(m)

    d1, dm1, d2, dm2 = det_at(1), det_at(-1), det_at(2), det_at(-2)
    return (rational(8) * (d1 - dm1) - (d2 - dm2)) * rational(1, 12)


def gradient_is_adjugate_sample(rng: random.Random) -> bool:
    """d/dt det(xi + t eta)|_0 equals tr(adj(xi) eta) on a random sample."""
    xi = random_traceless_skew(rng)
    eta = random_traceless_skew(rng)
    lhs = _det_linear_coefficient(xi, eta)
    rhs = linalg.trace(linalg.mat_mul(linalg.adjugate3(xi), eta))
    return lhs == rhs


def rank_one_trace_certificate(rng: random.Random) -> bool:
    """A rank-one skew-hermitian matrix i*lam*u*u^dagger has trace
    i*lam*|u|^2 != 0, so it can never be traceless; verified exactly on a
    random sample (and its adjugate vanishes, confirming rank <= 1)."""
    while True:
        u = [
            Scalar.from_fraction(_random_fraction(rng))
            + I * Scalar.from_fraction(_random_fraction(rng))
            for _ in range(3)
        ]
        if any(u):
            break
    lam = Fraction(0)
    while lam == 0:
        lam = _random_fraction(rng)
    c = I * rational(lam)
    xi = [[c * u[i] * u[j].conjugate() for j in range(3)] for i in range(3)]
    if not linalg.is_zero_matrix(linalg.adjugate3(xi)):
        return False
    tr = linalg.trace(xi)
    norm_sq = sum((u[i] * u[i].conjugate() for i in range(3)), ZERO)
    return tr == I * rational(lam) * norm_sq and bool(tr)


def adjugate_nonzero_sample(rng: random.Random) -> bool:
    """Nonzero traceless skew-hermitian matrices have rank >= 2, hence a
    nonzero adjugate; verified exactly on a random sample."""
    xi = random_traceless_skew(rng)
    return not linalg.is_zero_matrix(linalg.adjugate3(xi))


def rigidity_verdict(pairing: Scalar | None = None, samples: int = 200, seed: int = 20240) -> RigidityReport:
    """Second-order rigidity decision.

    The deformations are unobstructed only at critical points of the
    invariant cubic; its gradient is the adjugate, so criticality means
    rank <= 1, which the trace certificate rules out for nonzero
    traceless skew-hermitian matrices.  A nonzero pairing therefore
    obstructs every nonzero deformation.
    """
    if pairing is None:
        pairing = obstruction_pairing()
    rng = random.Random(seed)
    checks_ok = all(
        gradient_is_adjugate_sample(rng)
        and rank_one_trace_certificate(rng)
        and adjugate_nonzero_sample(rng)
        for _ in range(samples)
    )
    if not checks_ok:
        raise ArithmeticError("criticality certificate failed; internal inconsistency")
    nonzero = bool(pairing)
    rigid = nonzero
    status = "rigid" if rigid else "undetermined-by-second-order"
    return RigidityReport(
        pairing=pairing,
        pairing_nonzero=nonzero,
        critical_points_exist=False,
        rigid=rigid,
        status=status,
        samples=samples,
    )
