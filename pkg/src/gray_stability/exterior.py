"""Exterior algebra helpers on the reductive complement.

Multivectors are sparse dicts keyed by strictly increasing index tuples.
All formulas below assume the ambient basis is orthonormal for the
invariant metric, which holds for every catalog space.
"""

from __future__ import annotations

from .scalars import Scalar

Form = dict  # dict[tuple[int, ...], Scalar]


def form_add(a: Form, b: Form) -> Form:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def form_scale(c: Scalar, a: Form) -> Form:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def wedge2(u: list, v: list) -> Form:
    """u wedge v for coordinate vectors in the orthonormal basis."""
    out: Form = {}
    n = len(u)
    for a in range(n):
        ua = u[a]
        if not ua:
            continue
        for b in range(n):
            if a == b:
                continue
            vb = v[b]
            if not vb:
                continue
            c = ua * vb
            if a < b:
                key = (a, b)
            else:
                key, c = (b, a), -c
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def derivation_action(m: list, form: Form) -> Form:
    """Extend the endomorphism m of the base space to k-vectors as a derivation."""
    out: Form = {}
    for key, coeff in form.items():
        for slot, idx in enumerate(key):
            col = idx
            for w in range(len(m)):
                c = m[w][col]
                if not c:
                    continue
                new = key[:slot] + (w,) + key[slot + 1 :]
                if len(set(new)) != len(new):
                    continue
                order = sorted(range(len(new)), key=lambda s: new[s])
                sign = _permutation_sign(order)
                skey = tuple(sorted(new))
                val = coeff * c if sign == 1 else -(coeff * c)
                s = out.get(skey)
                s = val if s is None else s + val
                if s:
                    out[skey] = s
                else:
                    out.pop(skey, None)
    return out


def _permutation_sign(perm: list[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def contract(x: list, form: Form) -> Form:
    """Interior product x -| form, contraction convention
    x -| (v1 ^ ... ^ vk) = sum_s (-1)^(s-1) <x, v_s> v1 ^ ... (omit s) ... ^ vk
    with the bilinear pairing of the orthonormal base frame.
    """
    out: Form = {}
    for key, coeff in form.items():
        for slot, idx in enumerate(key):
            xc = x[idx]
            if not xc:
                continue
            val = xc * coeff
            if slot % 2 == 1:
                val = -val
            skey = key[:slot] + key[slot + 1 :]
            s = out.get(skey)
            s = val if s is None else s + val
            if s:
                out[skey] = s
            else:
                out.pop(skey, None)
    return out


def form_inner(a: Form, b: Form) -> Scalar:
    """Bilinear inner product induced by the orthonormal base frame:
    <u1 ^ u2, w1 ^ w2> = <u1,w1><u2,w2> - <u1,w2><u2,w1>, etc."""
    from .scalars import ZERO

    total = ZERO
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    for key, va in small.items():
        vb = large.get(key)
        if vb:
            total = total + va * vb
    return total
