"""The isotropy representations Lambda^{1,1} m and its primitive part.

Basis vectors are (1,1)-wedges of the weight-adapted eigenbasis of the
complexified reductive complement, expanded in real wedge coordinates.
The primitive part is the orthogonal complement of the Kaehler 2-vector;
the complement is taken inside the zero-weight block so every returned
basis vector stays an exact torus weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .branching import decompose_weights
from .exterior import Form, derivation_action, form_add, form_inner, form_scale, wedge2
from .lie import ReductiveSpace, build_space
from .scalars import ONE, ZERO


@dataclass(frozen=True)
class HRep:
    """A finite isotropy module with explicit 2-vector realization."""

    space: str
    name: str
    vectors: tuple          # tuple of Form (real wedge coordinates)
    weights: tuple          # tuple of integer weight tuples
    h_matrices: tuple       # action of each isotropy basis element
    decomposition: dict     # isotropy irrep label -> multiplicity

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coords_of(self, form: Form) -> list:
        """Coordinates of a 2-vector lying in the span of this module."""
        keys = sorted({k for v in self.vectors for k in v} | set(form))
        mat = [[v.get(k, ZERO) for v in self.vectors] for k in keys]
        rhs = [form.get(k, ZERO) for k in keys]
        sol = linalg.solve(mat, rhs)
        if sol is None:
            raise ValueError("2-vector outside the module span")
        return sol

    def realize(self, coords: list) -> Form:
        out: Form = {}
        for c, v in zip(coords, self.vectors):
            if c:
                out = form_add(out, form_scale(c, v))
        return out


def _h_action_matrices(space: ReductiveSpace, vectors: list) -> list:
    mats = []
    coords_cache = _SpanSolver(vectors)
    for i in range(space.h_dim):
        ad = space.ad_m_of_h([ONE if j == i else ZERO for j in range(space.h_dim)])
        cols = [coords_cache.coords_of(derivation_action(ad, v)) for v in vectors]
        mats.append(tuple(tuple(cols[b][w] for b in range(len(vectors))) for w in range(len(vectors))))
    return mats


class _SpanSolver:
    """Repeated exact coordinate extraction against a fixed spanning set."""

    def __init__(self, vectors: list):
        self.vectors = vectors
        self.keys = sorted({k for v in vectors for k in v})
        self.key_index = {k: i for i, k in enumerate(self.keys)}
        self.mat = [[v.get(k, ZERO) for v in vectors] for k in self.keys]

    def coords_of(self, form: Form) -> list:
        if any(k not in self.key_index for k in form):
            raise ValueError("2-vector outside the module span")
        rhs = [form.get(k, ZERO) for k in self.keys]
        sol = linalg.solve(self.mat, rhs)
        if sol is None:
            raise ValueError("2-vector outside the module span")
        return sol


@lru_cache(maxsize=None)
def lambda11(space_name: str) -> HRep:
    """m^+ wedge m^-, the full (1,1) module (dimension 9)."""
    space = build_space(space_name)
    vectors = []
    weights = []
    for p, wp in space.m_plus_weights:
        for q, wq in space.m_minus_weights:
            vectors.append(wedge2(list(p), list(q)))
            weights.append(tuple(a + b for a, b in zip(wp, wq)))
    mats = _h_action_matrices(space, vectors)
    decomposition = decompose_weights(
        space.h_type, _weight_multiset(weights)
    )
    return HRep(
        space=space_name,
        name="lambda11",
        vectors=tuple(vectors),
        weights=tuple(weights),
        h_matrices=tuple(mats),
        decomposition=decomposition,
    )


def _weight_multiset(weights) -> dict:
    out: dict[tuple, int] = {}
    for w in weights:
        out[w] = out.get(w, 0) + 1
    return out


@lru_cache(maxsize=None)
def lambda11_0(space_name: str) -> HRep:
    """Orthogonal complement of the Kaehler 2-vector inside lambda11."""
    space = build_space(space_name)
    full = lambda11(space_name)
    kahler = space.kahler_form()
    kahler_coords = full.coords_of(kahler)

    zero_wt = tuple(0 for _ in space.h_weight_torus)
    zero_idx = [i for i, w in enumerate(full.weights) if w == zero_wt]
    if not any(kahler_coords[i] for i in zero_idx) or any(
        kahler_coords[i] for i in range(full.dim) if i not in zero_idx
    ):
        raise AssertionError("Kaehler 2-vector must span a zero-weight line")

    # Pairing of the zero-weight block against the Kaehler vector.
    row = []
    for i in zero_idx:
        row.append(form_inner(full.vectors[i], kahler))
    combos = linalg.nullspace([row])

    vectors: list[Form] = []
    weights: list[tuple] = []
    for i, (v, w) in enumerate(zip(full.vectors, full.weights)):
        if i not in zero_idx:
            vectors.append(v)
            weights.append(w)
    for combo in combos:
        form: Form = {}
        for c, i in zip(combo, zero_idx):
            if c:
                form = form_add(form, form_scale(c, full.vectors[i]))
        vectors.append(form)
        weights.append(zero_wt)

    mats = _h_action_matrices(space, vectors)
    decomposition = decompose_weights(space.h_type, _weight_multiset(weights))
    return HRep(
        space=space_name,
        name="lambda11_0",
        vectors=tuple(vectors),
        weights=tuple(weights),
        h_matrices=tuple(mats),
        decomposition=decomposition,
    )


def trivial_summand_basis(space_name: str) -> list:
    """Basis of the isotropy-fixed subspace of lambda11_0, as 2-vectors."""
    rep = lambda11_0(space_name)
    space = build_space(space_name)
    rows = []
    for m in rep.h_matrices:
        rows.extend([list(r) for r in m])
    kernel = linalg.nullspace(rows) if rows else []
    out = []
    for combo in kernel:
        form: Form = {}
        for c, v in zip(combo, rep.vectors):
            if c:
                form = form_add(form, form_scale(c, v))
        out.append(_normalize_leading(form))
    return out


def _normalize_leading(form: Form) -> Form:
    if not form:
        return form
    lead = min(form)
    return form_scale(form[lead].inverse(), form)


def hrep_to_jsonable(rep: HRep) -> dict:
    from .branching import format_h_label
    from .render import scalar_jsonable

    return {
        "space": rep.space,
        "name": rep.name,
        "dim": rep.dim,
        "weights": [list(w) for w in rep.weights],
        "vectors": [
            [{"indices": list(k), "coeff": scalar_jsonable(v)} for k, v in sorted(f.items())]
            for f in rep.vectors
        ],
        "decomposition": [
            {"h_label": format_h_label(lab), "mult": m}
            for lab, m in sorted(rep.decomposition.items())
        ],
    }
