"""Catalog of the three unstable homogeneous Gray manifolds.

Each space is hard-coded from an explicit matrix realization: basis of the
symmetry algebra (isotropy subalgebra first, then an orthonormal basis of
the reductive complement m), exact structure constants, the invariant
inner product, the splitting of the complexified complement into the
almost-complex eigenspaces, the Kaehler 2-vector and (for the flag
manifold) the imaginary part of the complex volume form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .exterior import Form, derivation_action
from .scalars import I, ONE, SQRT2, SQRT3, SQRT6, ZERO, Scalar, rational

SPACE_NAMES = ("s3xs3", "cp3", "flag")

_HALF = rational(1, 2)


def _mat(n: int, entries: dict) -> list:
    m = [[ZERO] * n for _ in range(n)]
    for (i, j), v in entries.items():
        m[i][j] = m[i][j] + v
    return m


def _scaled(c: Scalar, m: list) -> list:
    return [[c * x for x in row] for row in m]


def _block_diag(blocks: list[list]) -> list:
    n = sum(len(b) for b in blocks)
    out = [[ZERO] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[offset + i][offset + j] = b[i][j]
        offset += k
    return out


@dataclass(frozen=True)
class LieAlgebraData:
    """Basis, structure constants and invariant inner product of g."""

    name: str
    dim: int
    basis_labels: tuple
    basis_matrices: tuple
    structure: tuple  # structure[a][b] = coordinates of [basis_a, basis_b]
    gram: tuple       # gram[a][b] = Q(basis_a, basis_b)

    def bracket_coords(self, x: list, y: list) -> list:
        out = [ZERO] * self.dim
        for a in range(self.dim):
            xa = x[a]
            if not xa:
                continue
            for b in range(self.dim):
                yb = y[b]
                if not yb:
                    continue
                c = xa * yb
                for k, s in enumerate(self.structure[a][b]):
                    if s:
                        out[k] = out[k] + c * s
        return out

    def inner_coords(self, x: list, y: list) -> Scalar:
        total = ZERO
        for a in range(self.dim):
            xa = x[a]
            if not xa:
                continue
            for b in range(self.dim):
                if y[b] and self.gram[a][b]:
                    total = total + xa * y[b] * self.gram[a][b]
        return total


@dataclass(frozen=True)
class ReductiveSpace:
    """A catalog homogeneous space G/H with all exact geometric data."""

    name: str
    group: str                  # rep-theory group key: k3 | so5 | su3
    h_type: str                 # delta_su2 | u2 | t2
    algebra: LieAlgebraData
    h_dim: int
    m_dim: int
    # complex structure eigenbasis of m^C, in m-coordinates
    m_plus: tuple
    m_minus: tuple
    # weight-adapted eigenbasis used to build H-representations
    m_plus_weights: tuple       # tuple of (coords, weight tuple)
    m_minus_weights: tuple
    h_weight_torus: tuple       # h-coordinate vectors with integer ad-eigenvalues
    weight_embedding: tuple     # integer matrix: G-weight coords -> H-weight coords
    kahler: tuple               # sorted ((a, b), Scalar) pairs, m-coordinates
    psi_minus: tuple | None     # sorted ((a, b, c), Scalar) or None
    g_orthonormal: tuple        # Q-orthonormal basis of g, in g-coordinates
    einstein_constant: Fraction
    scalar_curvature: Fraction
    betti: tuple                # (b2, b3)

    # -- coordinate helpers -------------------------------------------

    def g_coords_of_m_index(self, a: int) -> list:
        v = [ZERO] * self.algebra.dim
        v[self.h_dim + a] = ONE
        return v

    def g_coords_of_h_coords(self, h: list) -> list:
        return list(h) + [ZERO] * self.m_dim

    def g_coords_of_m_coords(self, m: list) -> list:
        return [ZERO] * self.h_dim + list(m)

    def kahler_form(self) -> Form:
        return dict(self.kahler)

    def psi_minus_form(self) -> Form:
        return dict(self.psi_minus) if self.psi_minus is not None else {}

    def ad_m_of_h(self, h_coords: list) -> list:
        """Matrix of ad(X) on m, in the orthonormal m-basis, for X in h."""
        x = self.g_coords_of_h_coords(h_coords)
        cols = []
        for a in range(self.m_dim):
            br = self.algebra.bracket_coords(x, self.g_coords_of_m_index(a))
            if any(br[: self.h_dim]):
                raise ValueError(f"{self.name}: [h, m] leaves m")
            cols.append(br[self.h_dim :])
        return [[cols[a][w] for a in range(self.m_dim)] for w in range(self.m_dim)]

    def conj_vector(self, v: list) -> list:
        return [x.conjugate() for x in v]


def _structure_and_gram(mats: list, ip) -> tuple:
    dim = len(mats)
    gram = [[ip(mats[a], mats[b]) for b in range(dim)] for a in range(dim)]
    gram_inv = linalg.inverse([row[:] for row in gram])
    structure = []
    for a in range(dim):
        row = []
        for b in range(dim):
            c = linalg.commutator(mats[a], mats[b])
            rhs = [ip(c, mats[k]) for k in range(dim)]
            row.append(tuple(linalg.mat_vec(gram_inv, rhs)))
        structure.append(tuple(row))
    return tuple(structure), tuple(tuple(r) for r in gram)


def _trace_form(scale: Fraction):
    c = Scalar.from_fraction(scale)

    def ip(x: list, y: list) -> Scalar:
        return c * linalg.trace(linalg.mat_mul(x, y))

    return ip


# ---------------------------------------------------------------------------
# S^3 x S^3 = (SU(2) x SU(2) x SU(2)) / diagonal SU(2)
# ---------------------------------------------------------------------------

def _su2_seed():
    # Orthonormal basis of su(2) for minus one twelfth of the triple Killing
    # form; Y3 is diagonal so the torus weights below come out integral.
    q = SQRT2 * rational(1, 4)   # 1/(2*sqrt2)
    y1 = _mat(2, {(0, 1): I * q, (1, 0): I * q})
    y2 = _mat(2, {(0, 1): -q, (1, 0): q})
    y3 = _mat(2, {(0, 0): I * q, (1, 1): -(I * q)})
    return y1, y2, y3


def _build_s3xs3() -> ReductiveSpace:
    y = _su2_seed()
    two_s2 = SQRT2 * 2
    h_mats = [_block_diag([ya, ya, ya]) for ya in y]
    m_mats = []
    for ya in y:
        u = _block_diag([_scaled(two_s2, ya), _scaled(-SQRT2, ya), _scaled(-SQRT2, ya)])
        w = _block_diag([_scaled(ZERO, ya), _scaled(SQRT6, ya), _scaled(-SQRT6, ya)])
        m_mats.extend([u, w])
    labels = ("d1", "d2", "d3", "u1", "w1", "u2", "w2", "u3", "w3")
    mats = h_mats + m_mats
    structure, gram = _structure_and_gram(mats, _trace_form(Fraction(-1, 3)))
    algebra = LieAlgebraData("su2_cubed", 9, labels, tuple(tuple(map(tuple, m)) for m in mats), structure, gram)

    inv_s2 = SQRT2.inverse()
    i_inv_s2 = I * inv_s2
    # X_a = (u_a + i w_a)/sqrt2 spans the +i eigenspace of J.
    x1 = [inv_s2, i_inv_s2, ZERO, ZERO, ZERO, ZERO]
    x2 = [ZERO, ZERO, inv_s2, i_inv_s2, ZERO, ZERO]
    x3 = [ZERO, ZERO, ZERO, ZERO, inv_s2, i_inv_s2]
    m_plus = (tuple(x1), tuple(x2), tuple(x3))
    m_minus = tuple(tuple(c.conjugate() for c in v) for v in m_plus)

    def _comb(u, v, coeff):
        return tuple(a + coeff * b for a, b in zip(u, v))

    # Diagonal-torus weight vectors inside m^+: X1 -/+ i X2 and X3.
    plus_w = (
        (_comb(x1, x2, -I), (2,)),
        (tuple(x3), (0,)),
        (_comb(x1, x2, I), (-2,)),
    )
    minus_w = tuple((tuple(c.conjugate() for c in v), (-wt[0],)) for v, wt in plus_w)

    minus_one = -ONE
    return ReductiveSpace(
        name="s3xs3",
        group="k3",
        h_type="delta_su2",
        algebra=algebra,
        h_dim=3,
        m_dim=6,
        m_plus=m_plus,
        m_minus=m_minus,
        m_plus_weights=plus_w,
        m_minus_weights=minus_w,
        h_weight_torus=((ZERO, ZERO, two_s2),),
        weight_embedding=((1, 1, 1),),
        kahler=(((0, 1), minus_one), ((2, 3), minus_one), ((4, 5), minus_one)),
        psi_minus=None,
        g_orthonormal=tuple(
            tuple((rational(2) if k == a else ZERO) for k in range(9)) for a in range(3)
        )
        + tuple(
            tuple((ONE if k == 3 + a else ZERO) for k in range(9)) for a in range(6)
        ),
        einstein_constant=Fraction(5),
        scalar_curvature=Fraction(30),
        betti=(0, 2),
    )


# ---------------------------------------------------------------------------
# CP^3 = SO(5) / U(2)
# ---------------------------------------------------------------------------

def _build_cp3() -> ReductiveSpace:
    def skew(i, j):  # 1-indexed E_ij - E_ji inside so(5)
        return _mat(5, {(i - 1, j - 1): ONE, (j - 1, i - 1): -ONE})

    t1 = skew(2, 1)
    t2 = skew(4, 3)
    a = _mat(5, {(0, 2): ONE, (1, 3): ONE, (2, 0): -ONE, (3, 1): -ONE})
    b = _mat(5, {(0, 3): -ONE, (1, 2): ONE, (2, 1): -ONE, (3, 0): ONE})
    e = [skew(i, 5) for i in (1, 2, 3, 4)]
    f1 = _mat(5, {(0, 2): ONE, (1, 3): -ONE, (2, 0): -ONE, (3, 1): ONE})
    f2 = _mat(5, {(0, 3): ONE, (1, 2): ONE, (2, 1): -ONE, (3, 0): -ONE})

    h_mats = [t1, t2, a, b]
    m_mats = [_scaled(SQRT2, ei) for ei in e] + [f1, f2]
    labels = ("t1", "t2", "a", "b", "e1", "e2", "e3", "e4", "f1", "f2")
    mats = h_mats + m_mats
    structure, gram = _structure_and_gram(mats, _trace_form(Fraction(-1, 4)))
    algebra = LieAlgebraData("so5", 10, labels, tuple(tuple(map(tuple, m)) for m in mats), structure, gram)

    inv_s2 = SQRT2.inverse()
    i_inv_s2 = I * inv_s2
    # m-basis is (sqrt2 e_1..sqrt2 e_4, f_1, f_2); p_i are root vectors.
    p1 = (inv_s2, -i_inv_s2, ZERO, ZERO, ZERO, ZERO)
    p2 = (ZERO, ZERO, inv_s2, -i_inv_s2, ZERO, ZERO)
    p3 = (ZERO, ZERO, ZERO, ZERO, ONE, I)
    m_plus = (p1, p2, p3)
    m_minus = tuple(tuple(c.conjugate() for c in v) for v in m_plus)
    plus_w = ((p1, (1, 0)), (p2, (0, 1)), (p3, (-1, -1)))
    minus_w = tuple(
        (tuple(c.conjugate() for c in v), tuple(-x for x in wt)) for v, wt in plus_w
    )

    h1 = (ONE, ZERO, ZERO, ZERO)
    h2 = (ZERO, ONE, ZERO, ZERO)
    g_on = [tuple([SQRT2 if k == 0 else ZERO for k in range(10)])]
    g_on.append(tuple([SQRT2 if k == 1 else ZERO for k in range(10)]))
    g_on.append(tuple([ONE if k == 2 else ZERO for k in range(10)]))
    g_on.append(tuple([ONE if k == 3 else ZERO for k in range(10)]))
    g_on += [tuple([ONE if k == 4 + j else ZERO for k in range(10)]) for j in range(6)]

    return ReductiveSpace(
        name="cp3",
        group="so5",
        h_type="u2",
        algebra=algebra,
        h_dim=4,
        m_dim=6,
        m_plus=m_plus,
        m_minus=m_minus,
        m_plus_weights=plus_w,
        m_minus_weights=minus_w,
        h_weight_torus=(h1, h2),
        weight_embedding=((1, 0), (0, 1)),
        kahler=(((0, 1), ONE), ((2, 3), ONE), ((4, 5), -ONE)),
        psi_minus=None,
        g_orthonormal=tuple(g_on),
        einstein_constant=Fraction(5),
        scalar_curvature=Fraction(30),
        betti=(1, 0),
    )


# ---------------------------------------------------------------------------
# F_{1,2} = SU(3) / T^2
# ---------------------------------------------------------------------------

def _su3_frame_mats() -> list:
    t1 = _mat(3, {(0, 0): I, (1, 1): -I})
    t2 = _mat(3, {(1, 1): I, (2, 2): -I})
    e1 = _mat(3, {(0, 1): ONE, (1, 0): -ONE})
    e2 = _mat(3, {(0, 1): I, (1, 0): I})
    e3 = _mat(3, {(0, 2): ONE, (2, 0): -ONE})
    e4 = _mat(3, {(0, 2): I, (2, 0): I})
    e5 = _mat(3, {(1, 2): ONE, (2, 1): -ONE})
    e6 = _mat(3, {(1, 2): I, (2, 1): I})
    return [t1, t2, e1, e2, e3, e4, e5, e6]


def _build_flag() -> ReductiveSpace:
    mats = _su3_frame_mats()
    labels = ("t1", "t2", "e1", "e2", "e3", "e4", "e5", "e6")
    structure, gram = _structure_and_gram(mats, _trace_form(Fraction(-1, 2)))
    algebra = LieAlgebraData("su3", 8, labels, tuple(tuple(map(tuple, m)) for m in mats), structure, gram)

    p1 = (ONE, -I, ZERO, ZERO, ZERO, ZERO)   # e1 - i e2
    p2 = (ZERO, ZERO, ONE, I, ZERO, ZERO)    # e3 + i e4
    p3 = (ZERO, ZERO, ZERO, ZERO, ONE, -I)   # e5 - i e6
    m_plus = (p1, p2, p3)
    m_minus = tuple(tuple(c.conjugate() for c in v) for v in m_plus)
    plus_w = ((p1, (1, -1)), (p2, (-2, -1)), (p3, (1, 2)))
    minus_w = tuple(
        (tuple(c.conjugate() for c in v), tuple(-x for x in wt)) for v, wt in plus_w
    )

    inv_s3 = SQRT3.inverse()
    g_on = [tuple([ONE, ZERO] + [ZERO] * 6)]
    g_on.append(tuple([inv_s3, inv_s3 * 2] + [ZERO] * 6))
    g_on += [tuple([ONE if k == 2 + j else ZERO for k in range(8)]) for j in range(6)]

    minus_one = -ONE
    return ReductiveSpace(
        name="flag",
        group="su3",
        h_type="t2",
        algebra=algebra,
        h_dim=2,
        m_dim=6,
        m_plus=m_plus,
        m_minus=m_minus,
        m_plus_weights=plus_w,
        m_minus_weights=minus_w,
        # torus of the (z1, z2) parametrization: diag(i,0,-i) = t1 + t2, diag(0,i,-i) = t2
        h_weight_torus=((ONE, ONE), (ZERO, ONE)),
        weight_embedding=((1, 1), (0, 1)),
        kahler=(((0, 1), ONE), ((2, 3), minus_one), ((4, 5), ONE)),
        psi_minus=(((1, 2, 5), ONE), ((0, 3, 5), minus_one), ((0, 2, 4), minus_one), ((1, 3, 4), minus_one)),
        g_orthonormal=tuple(g_on),
        einstein_constant=Fraction(5),
        scalar_curvature=Fraction(30),
        betti=(2, 0),
    )


_BUILDERS = {"s3xs3": _build_s3xs3, "cp3": _build_cp3, "flag": _build_flag}


@lru_cache(maxsize=None)
def build_space(name: str) -> ReductiveSpace:
    if name not in _BUILDERS:
        raise ValueError(f"unknown space {name!r}; expected one of {SPACE_NAMES}")
    return _BUILDERS[name]()


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate_algebra(alg: LieAlgebraData) -> dict:
    """Run the structural checks; failures are reported, not raised."""
    dim = alg.dim
    checks = {}

    ok = True
    for a in range(dim):
        for b in range(dim):
            for k in range(dim):
                if alg.structure[a][b][k] != -alg.structure[b][a][k]:
                    ok = False
    checks["antisymmetry"] = ok

    def coords(a):
        return [ONE if k == a else ZERO for k in range(dim)]

    ok = True
    for a in range(dim):
        for b in range(a + 1, dim):
            for c in range(b + 1, dim):
                s = [ZERO] * dim
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    term = alg.bracket_coords(
                        coords(x), alg.bracket_coords(coords(y), coords(z))
                    )
                    s = [p + q for p, q in zip(s, term)]
                if any(s):
                    ok = False
    checks["jacobi"] = ok

    ok = True
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                lhs = alg.inner_coords(alg.bracket_coords(coords(a), coords(b)), coords(c))
                rhs = alg.inner_coords(coords(b), alg.bracket_coords(coords(a), coords(c)))
                if lhs + rhs != ZERO:
                    ok = False
    checks["ad_invariance"] = ok
    return checks


def validate_space(space: ReductiveSpace) -> dict:
    checks = dict(validate_algebra(space.algebra))
    alg = space.algebra
    hd, md = space.h_dim, space.m_dim

    checks["m_orthonormal"] = all(
        alg.gram[hd + a][hd + b] == (ONE if a == b else ZERO)
        for a in range(md)
        for b in range(md)
    )
    checks["h_m_orthogonal"] = all(
        alg.gram[i][hd + a] == ZERO for i in range(hd) for a in range(md)
    )

    def basis_coords(k):
        return [ONE if j == k else ZERO for j in range(alg.dim)]

    ok = True
    for i in range(hd):
        for a in range(md):
            br = alg.bracket_coords(basis_coords(i), basis_coords(hd + a))
            if any(br[:hd]):
                ok = False
    checks["reductivity"] = ok

    ok = True
    for i in range(hd):
        for j in range(hd):
            br = alg.bracket_coords(basis_coords(i), basis_coords(j))
            if any(br[hd:]):
                ok = False
    checks["h_subalgebra"] = ok

    plus = [list(v) for v in space.m_plus]
    minus = [list(v) for v in space.m_minus]
    checks["m_pm_conjugate_swap"] = all(
        space.conj_vector(p) in [list(q) for q in space.m_minus] for p in plus
    ) and all(space.conj_vector(q) in [list(p) for p in space.m_plus] for q in minus)
    checks["m_pm_spans"] = linalg.rank([list(v) for v in plus + minus]) == md

    ok = True
    for torus_idx, t in enumerate(space.h_weight_torus):
        ad = space.ad_m_of_h(list(t))
        for vecs in (space.m_plus_weights, space.m_minus_weights):
            for v, wt in vecs:
                got = linalg.mat_vec(ad, list(v))
                want = [I * rational(wt[torus_idx]) * c for c in v]
                if got != want:
                    ok = False
    checks["m_pm_weight_vectors"] = ok

    kahler = space.kahler_form()
    ok = True
    for i in range(hd):
        ad = space.ad_m_of_h([ONE if j == i else ZERO for j in range(hd)])
        if derivation_action(ad, kahler):
            ok = False
    checks["kahler_h_invariant"] = ok

    if space.psi_minus is not None:
        psi = space.psi_minus_form()
        ok = True
        for i in range(hd):
            ad = space.ad_m_of_h([ONE if j == i else ZERO for j in range(hd)])
            if derivation_action(ad, psi):
                ok = False
        checks["psi_minus_h_invariant"] = ok

    return checks


def space_to_jsonable(space: ReductiveSpace) -> dict:
    """Dump of the catalog data for external verification."""
    alg = space.algebra
    return {
        "name": space.name,
        "group": space.group,
        "h_type": space.h_type,
        "basis_labels": list(alg.basis_labels),
        "h_dim": space.h_dim,
        "m_dim": space.m_dim,
        "gram": [[x.to_json() for x in row] for row in alg.gram],
        "structure_constants": [
            [[x.to_json() for x in alg.structure[a][b]] for b in range(alg.dim)]
            for a in range(alg.dim)
        ],
        "m_plus": [[c.to_json() for c in v] for v in space.m_plus],
        "m_minus": [[c.to_json() for c in v] for v in space.m_minus],
        "kahler": [{"indices": list(k), "coeff": v.to_json()} for k, v in space.kahler],
        "psi_minus": None
        if space.psi_minus is None
        else [{"indices": list(k), "coeff": v.to_json()} for k, v in space.psi_minus],
        "betti": list(space.betti),
        "einstein_constant": str(space.einstein_constant),
        "scalar_curvature": str(space.scalar_curvature),
    }
