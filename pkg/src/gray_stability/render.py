"""Shared JSON / text rendering conventions.

Exact values only: integers render as JSON numbers, non-integral
rationals as "p/q" strings, tower scalars as 8-tuples of rational
strings.  Floats never appear.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .scalars import Scalar


def fraction_jsonable(q) -> object:
    q = Fraction(q)
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def scalar_jsonable(s: Scalar) -> object:
    if s.is_rational():
        return fraction_jsonable(s.rational())
    return s.to_json()


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
