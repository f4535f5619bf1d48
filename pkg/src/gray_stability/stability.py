"""Spectral bookkeeping for the second variation of the Einstein-Hilbert
action on the catalog spaces.

The tt-eigenspace of the Lichnerowicz Laplacian at lambda = 10 - eps is
assembled from eigenspaces E(mu) of the Hodge Laplacian on coclosed
primitive (1,1)-forms, by the case dispatch below (thresholds at eps = 6
and eps = 25/4, both handled by exact rational comparison).  E(mu) itself
is computed from the Casimir spectrum and coclosed multiplicities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .branching import hom_dim
from .forms import lambda11_0
from .fourier import coclosed_dim
from .lie import ReductiveSpace, build_space
from .reps import casimir_constant, dim, enumerate_labels

CRITICAL_EPS = Fraction(25, 4)
CASIMIR_THRESHOLD = Fraction(12)


def matrix_a(eps) -> list:
    """Coupling matrix of the (phi, delta sigma) system at lambda = 10 - eps."""
    eps = Fraction(eps)
    return [
        [Fraction(4) - eps, Fraction(-1)],
        [Fraction(-4) * (Fraction(4) - eps), Fraction(10) - eps],
    ]


def _sqrt_fraction(q: Fraction):
    """Exact square root of a non-negative rational, or None."""
    if q < 0:
        return None
    num = _isqrt_exact(q.numerator)
    den = _isqrt_exact(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _isqrt_exact(n: int):
    r = math.isqrt(n)
    return r if r * r == n else None


def matrix_a_eigenvalues(eps):
    """(eigenvalues sorted descending, diagonalizable) for rational spectra,
    or (None, None) when the eigenvalues are irrational."""
    a = matrix_a(eps)
    tr = a[0][0] + a[1][1]
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    disc = tr * tr - 4 * det
    s = _sqrt_fraction(disc)
    if s is None:
        return None, None
    vals = ((tr + s) / 2, (tr - s) / 2)
    if vals[0] != vals[1]:
        return vals, True
    lam = vals[0]
    diagonalizable = all(
        a[i][j] == (lam if i == j else 0) for i in range(2) for j in range(2)
    )
    return vals, diagonalizable


@dataclass(frozen=True)
class MuValues:
    eps: Fraction
    case: str              # generic | eps6 | eps25over4 | empty
    mu1: Fraction | None
    mu2: Fraction | None
    mu3: Fraction | None
    exact: bool            # mu1, mu2 rational?

    def required_eigenspaces(self) -> tuple:
        if self.case == "empty":
            return ()
        if self.case == "eps6":
            return (Fraction(2),)
        if self.case == "eps25over4":
            return (Fraction(3, 4),)
        out = [m for m in (self.mu1, self.mu2, self.mu3) if m is not None and m >= 0]
        return tuple(out)


def mu_values(eps) -> MuValues:
    """The three coupled Hodge eigenvalues at lambda = 10 - eps:
    mu_{1,2} = 7 - eps +/- sqrt(25 - 4 eps) and mu_3 = 6 - eps."""
    eps = Fraction(eps)
    if eps > CRITICAL_EPS:
        return MuValues(eps, "empty", None, None, None, True)
    mu3 = Fraction(6) - eps
    if eps == CRITICAL_EPS:
        return MuValues(eps, "eps25over4", Fraction(3, 4), Fraction(3, 4), mu3, True)
    if eps == 6:
        return MuValues(eps, "eps6", None, None, Fraction(0), True)
    s = _sqrt_fraction(Fraction(25) - 4 * eps)
    if s is None:
        return MuValues(eps, "generic", None, None, mu3, False)
    return MuValues(eps, "generic", Fraction(7) - eps + s, Fraction(7) - eps - s, mu3, True)


def solution_dim(eps, e_dims: dict, b3: int) -> int:
    """Dimension of the tt-eigenspace at lambda = 10 - eps, given the
    dimensions of E(mu) (absent keys count as zero) and the third Betti
    number.  eps must be positive."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("the case analysis requires eps > 0")
    mv = mu_values(eps)
    if mv.case == "empty":
        return 0
    if mv.case == "eps25over4":
        return e_dims.get(Fraction(3, 4), 0)
    if mv.case == "eps6":
        return e_dims.get(Fraction(2), 0) + b3
    total = 0
    for mu in (mv.mu1, mv.mu2):
        if mu is not None:
            total += e_dims.get(mu, 0)
    if mv.mu3 >= 0:
        total += e_dims.get(mv.mu3, 0)
    return total


@dataclass(frozen=True)
class DestabilizingSpace:
    lam: Fraction          # Lichnerowicz eigenvalue < 10
    mult: int
    source: str            # harmonic-2-forms | harmonic-3-forms | E(mu) eigenforms


@dataclass(frozen=True)
class StabilityReport:
    space: str
    destabilizing: tuple   # tuple of DestabilizingSpace
    coindex: int
    ied_dim: int
    coclosed_spectrum: tuple  # ((mu, dim E(mu)) ...) below the threshold
    casimir_rows: tuple    # ((label, dim, casimir, hom_dim, coclosed_dim) ...)

    def to_jsonable(self) -> dict:
        from .render import fraction_jsonable

        return {
            "space": self.space,
            "destabilizing": [
                {
                    "lambda": fraction_jsonable(d.lam),
                    "mult": d.mult,
                    "source": d.source,
                }
                for d in self.destabilizing
            ],
            "coindex": self.coindex,
            "ied_dim": self.ied_dim,
        }


def _coclosed_table(space: ReductiveSpace, labels: list | None = None) -> list:
    """(label, dim, casimir, hom multiplicity, coclosed multiplicity) for
    every label with Casimir constant up to the enumeration threshold."""
    target = lambda11_0(space.name)
    if labels is None:
        labels = enumerate_labels(space.group, CASIMIR_THRESHOLD)
    rows = []
    for label in labels:
        cas = casimir_constant(space.group, label)
        hd = hom_dim(space, label, target.decomposition)
        cd = coclosed_dim(space, label, target) if hd else 0
        rows.append((label, dim(space.group, label), cas, hd, cd))
    return rows


@lru_cache(maxsize=None)
def coindex_report(space_name: str) -> StabilityReport:
    """Assemble the coindex and IED dimension of a catalog space from the
    Casimir spectrum, coclosed multiplicities and Betti numbers."""
    space = build_space(space_name)
    return assemble_report(space_name, _coclosed_table(space))


def assemble_report(space_name: str, rows: list) -> StabilityReport:
    space = build_space(space_name)
    b2, b3 = space.betti

    e_dims: dict[Fraction, int] = {}
    ied_boundary = 0
    for label, d, cas, hd, cd in rows:
        if cd == 0:
            continue
        contrib = d * cd
        if cas == CASIMIR_THRESHOLD:
            ied_boundary += contrib
        else:
            e_dims[cas] = e_dims.get(cas, 0) + contrib

    if e_dims.get(Fraction(0), 0) != b2:
        raise ArithmeticError(
            f"{space_name}: harmonic 2-form count {e_dims.get(Fraction(0), 0)} "
            f"does not match b2 = {b2}"
        )

    ied_dim = e_dims.get(Fraction(2), 0) + e_dims.get(Fraction(6), 0) + ied_boundary

    candidates = set()
    for mu in e_dims:
        s = _sqrt_fraction(1 + 4 * mu)
        if s is not None:
            for eps in (Fraction(5) - mu + s, Fraction(5) - mu - s):
                if 0 < eps <= CRITICAL_EPS:
                    candidates.add(eps)
        eps3 = Fraction(6) - mu
        if 0 < eps3:
            candidates.add(eps3)
    if b3 > 0 or e_dims.get(Fraction(2), 0) > 0:
        candidates.add(Fraction(6))
    if e_dims.get(Fraction(3, 4), 0) > 0:
        candidates.add(CRITICAL_EPS)

    destabilizing = []
    for eps in sorted(candidates):
        if solution_dim(eps, e_dims, b3) == 0:
            continue
        lam = Fraction(10) - eps
        mv = mu_values(eps)
        if mv.case == "eps6":
            if e_dims.get(Fraction(2), 0):
                destabilizing.append(
                    DestabilizingSpace(lam, e_dims[Fraction(2)], "E(2) eigenforms")
                )
            if b3:
                destabilizing.append(DestabilizingSpace(lam, b3, "harmonic-3-forms"))
        elif mv.case == "eps25over4":
            destabilizing.append(
                DestabilizingSpace(lam, e_dims[Fraction(3, 4)], "E(3/4) eigenforms")
            )
        else:
            for mu in mv.required_eigenspaces():
                mult = e_dims.get(mu, 0)
                if not mult:
                    continue
                source = "harmonic-2-forms" if mu == 0 else f"E({mu}) eigenforms"
                destabilizing.append(DestabilizingSpace(lam, mult, source))

    destabilizing.sort(key=lambda d: (d.lam, d.source))
    return StabilityReport(
        space=space_name,
        destabilizing=tuple(destabilizing),
        coindex=sum(d.mult for d in destabilizing),
        ied_dim=ied_dim,
        coclosed_spectrum=tuple(sorted(e_dims.items())),
        casimir_rows=tuple(rows),
    )
