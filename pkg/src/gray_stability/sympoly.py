"""Polynomials in the nine coordinate functions v1, v2, v3, x1, ..., x6.

The free commutative algebra is used; the trace relation v1 + v2 + v3 = 0
is NOT quotiented out.  Well-definedness of the symmetric-power inner
product under that relation comes from the degenerate Gram matrix, whose
kernel is spanned by v1 + v2 + v3.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .scalars import ONE, ZERO, Scalar

NGENS = 9
GEN_NAMES = ("v1", "v2", "v3", "x1", "x2", "x3", "x4", "x5", "x6")

Monomial = tuple  # length-9 tuple of non-negative ints


class SymPoly:
    """Sparse polynomial over the scalar tower; zero coefficients are
    never stored, so equality testing is exact."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[tuple(mono)] = c

    @staticmethod
    def zero() -> "SymPoly":
        return SymPoly()

    @staticmethod
    def generator(index: int) -> "SymPoly":
        mono = tuple(1 if k == index else 0 for k in range(NGENS))
        return SymPoly({mono: ONE})

    @staticmethod
    def constant(c) -> "SymPoly":
        c = c if isinstance(c, Scalar) else Scalar.from_fraction(c)
        return SymPoly({(0,) * NGENS: c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SymPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SymPoly") -> "SymPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = SymPoly()
        p.terms = out
        return p

    def __neg__(self) -> "SymPoly":
        p = SymPoly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    c = c1 * c2
                    s = out.get(m)
                    s = c if s is None else s + c
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            p = SymPoly()
            p.terms = out
            return p
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "SymPoly":
        c = c if isinstance(c, Scalar) else Scalar.from_fraction(c)
        if not c:
            return SymPoly()
        p = SymPoly()
        p.terms = {m: c * v for m, v in self.terms.items()}
        return p

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return k is None or degs == {k}

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(tuple(mono), ZERO)

    def substitute(self, values: list) -> Scalar:
        """Evaluate at scalar values for the nine generators."""
        total = ZERO
        for m, c in self.terms.items():
            term = c
            for k, e in enumerate(m):
                for _ in range(e):
                    term = term * values[k]
            total = total + term
        return total

    def substitute_polys(self, values: list) -> "SymPoly":
        """Substitute polynomials for the generators."""
        total = SymPoly()
        for m, c in self.terms.items():
            term = SymPoly.constant(c)
            for k, e in enumerate(m):
                for _ in range(e):
                    term = term * values[k]
            total = total + term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_grlex_key):
            c = self.terms[m]
            names = [
                GEN_NAMES[k] if e == 1 else f"{GEN_NAMES[k]}^{e}"
                for k, e in enumerate(m)
                if e
            ]
            body = "*".join(names)
            cs = str(c)
            if not names:
                parts.append(f"({cs})" if ("+" in cs or " - " in cs) else cs)
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append(f"-{body}")
            elif "+" in cs or " - " in cs:
                parts.append(f"({cs})*{body}")
            else:
                parts.append(f"{cs}*{body}")
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"SymPoly({self})"

    def to_jsonable(self) -> list:
        from .render import scalar_jsonable

        return [
            {"exponents": list(m), "coeff": scalar_jsonable(self.terms[m])}
            for m in sorted(self.terms, key=_grlex_key)
        ]


def _grlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


V1, V2, V3 = (SymPoly.generator(k) for k in range(3))
X = tuple(SymPoly.generator(3 + k) for k in range(6))


def generators() -> tuple:
    return (V1, V2, V3) + X


# Gram matrix of the coordinate functions on the traceless subalgebra:
# <x_i, x_j> = delta, <x_i, v_j> = 0, <v_i, v_i> = 1/3, <v_i, v_j> = -1/6.
def gram_su3() -> list:
    g = [[Fraction(0)] * NGENS for _ in range(NGENS)]
    for i in range(3):
        for j in range(3):
            g[i][j] = Fraction(1, 3) if i == j else Fraction(-1, 6)
    for i in range(3, NGENS):
        g[i][i] = Fraction(1)
    return g


_GRAM = gram_su3()


def _factors(mono: Monomial) -> list:
    out = []
    for k, e in enumerate(mono):
        out.extend([k] * e)
    return out


def sym_inner(p: SymPoly, q: SymPoly, gram: list | None = None) -> Scalar:
    """Inner product on the k-th symmetric power:
    <a_1...a_k, b_1...b_k> = sum over permutations of prod <a_i, b_sigma(i)>,
    extended bilinearly.  Both arguments must be homogeneous of equal degree.
    """
    if gram is None:
        gram = _GRAM
    if not p.terms or not q.terms:
        if p.is_homogeneous() and q.is_homogeneous():
            return ZERO
    dp = {sum(m) for m in p.terms}
    dq = {sum(m) for m in q.terms}
    if len(dp) > 1 or len(dq) > 1:
        raise ValueError("sym_inner needs homogeneous arguments")
    if dp and dq and dp != dq:
        raise ValueError(f"degree mismatch: {dp} vs {dq}")
    total = ZERO
    for m1, c1 in p.terms.items():
        f1 = _factors(m1)
        for m2, c2 in q.terms.items():
            f2 = _factors(m2)
            acc = Fraction(0)
            for perm in itertools.permutations(range(len(f2))):
                prod = Fraction(1)
                for i, s in enumerate(perm):
                    prod *= gram[f1[i]][f2[s]]
                    if not prod:
                        break
                acc += prod
            if acc:
                total = total + (c1 * c2) * Scalar.from_fraction(acc)
    return total


def det_cubic() -> SymPoly:
    """The invariant cubic (i times the determinant) on the traceless
    skew-hermitian 3x3 matrices, in the nine coordinate functions:

        8 v1 v2 v3 + 2 (x2 x3 x5 + x1 x3 x6 + x2 x4 x6 - x1 x4 x5)
        - 2 (x1^2 + x2^2) v3 - 2 (x3^2 + x4^2) v2 - 2 (x5^2 + x6^2) v1

    The triple-x coefficients are pinned by exact 3x3 determinants of the
    reconstructed matrix (see the tests); they make the cubic exactly
    torus invariant, which any conjugation-invariant function must be.
    """
    p = (V1 * V2 * V3).scale(8)
    p = p + (X[1] * X[2] * X[4]).scale(2) + (X[0] * X[2] * X[5]).scale(2)
    p = p + (X[1] * X[3] * X[5]).scale(2) - (X[0] * X[3] * X[4]).scale(2)
    p = p - ((X[0] * X[0] + X[1] * X[1]) * V3).scale(2)
    p = p - ((X[2] * X[2] + X[3] * X[3]) * V2).scale(2)
    p = p - ((X[4] * X[4] + X[5] * X[5]) * V1).scale(2)
    return p


def reduce_v_cubic(p: SymPoly) -> SymPoly:
    """Canonical representative modulo the trace relation: the pure-v part
    (which must be a symmetric cubic) is rewritten as a multiple of
    v1 v2 v3 using e1 = v1 + v2 + v3 = 0; mixed monomials are untouched."""
    pure: dict = {}
    rest: dict = {}
    for m, c in p.terms.items():
        if any(m[3:]):
            rest[m] = c
        else:
            pure[m] = c
    if not pure:
        return p
    pv = SymPoly(pure)
    if not pv.is_homogeneous(3):
        raise ValueError("pure-v part is not a homogeneous cubic")
    for perm in itertools.permutations(range(3)):
        permuted = SymPoly(
            {
                tuple(m[perm.index(k)] if k < 3 else m[k] for k in range(NGENS)): c
                for m, c in pv.terms.items()
            }
        )
        if permuted != pv:
            raise ValueError("pure-v part is not symmetric; no canonical form")
    # On e1 = 0 a symmetric cubic is c * e3; sample at (1, 1, -2) where
    # e3 = -2, and cross-check at (1, -1, 0) where e3 = 0.
    one = ONE
    probe0 = pv.substitute([one, -one, ZERO] + [ZERO] * 6)
    if probe0:
        raise ArithmeticError("symmetric cubic reduction failed consistency probe")
    val = pv.substitute([one, one, Scalar.from_fraction(-2)] + [ZERO] * 6)
    coeff = val * Scalar.from_fraction(Fraction(-1, 2))
    mono = (1, 1, 1, 0, 0, 0, 0, 0, 0)
    out = SymPoly(rest)
    if coeff:
        out = out + SymPoly({mono: coeff})
    return out


def eliminate_v3(p: SymPoly) -> SymPoly:
    """Substitute v3 = -v1 - v2: normal form for equality modulo the
    trace relation."""
    subs = [V1, V2, -(V1 + V2)] + list(X)
    return p.substitute_polys(subs)


def equal_mod_trace(p: SymPoly, q: SymPoly) -> bool:
    return eliminate_v3(p - q) == SymPoly.zero()
