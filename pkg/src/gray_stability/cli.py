"""Command-line front end: every computation as a reproducible command.

All exact values render as integers or "p/q" strings; identical
invocations produce byte-identical output.  Exit codes: 0 success,
1 failed internal checks, 2 usage errors (argparse default).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .branching import format_h_label, restrict
from .forms import lambda11_0
from .fourier import coclosed_dim, hom_basis, m_complex_coords, proto_delta
from .lie import SPACE_NAMES, build_space, validate_space
from .obstruction import (
    integrand,
    killing_check,
    nabla_h_entry,
    obstruction_pairing,
    obstruction_terms,
    pairing_breakdown,
    rigidity_verdict,
)
from .render import dumps, fraction_jsonable, scalar_jsonable
from .reps import casimir_constant, dim, enumerate_labels
from .stability import coindex_report


def _table(rows: list, headers: list) -> str:
    cells = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for k, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _label_str(label) -> str:
    return "(" + ",".join(str(x) for x in label) + ")"


class UsageError(ValueError):
    """Bad space/label input; mapped to exit status 2."""


def _parse_label(space, text: str) -> tuple:
    from .reps import check_label

    try:
        parts = tuple(int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse label {text!r}") from exc
    expected = 3 if space.group == "k3" else 2
    if len(parts) != expected:
        raise UsageError(f"{space.group} labels need {expected} components")
    try:
        return check_label(space.group, parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _max_threads() -> int:
    value = os.environ.get("GRAY_STABILITY_THREADS", "")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# subcommand payloads
# ---------------------------------------------------------------------------

def casimir_doc(space_name: str, max_cas: Fraction) -> dict:
    space = build_space(space_name)
    rows = []
    for label in enumerate_labels(space.group, max_cas):
        rows.append(
            {
                "label": list(label),
                "dim": dim(space.group, label),
                "casimir": fraction_jsonable(casimir_constant(space.group, label)),
            }
        )
    return {"space": space_name, "group": space.group, "rows": rows}


def branch_doc(space_name: str, gamma: tuple | None, max_cas: Fraction) -> dict:
    space = build_space(space_name)
    labels = [gamma] if gamma else enumerate_labels(space.group, max_cas)
    rows = []
    for label in labels:
        dec = restrict(space, label)
        rows.append(
            {
                "gamma": list(label),
                "casimir": fraction_jsonable(casimir_constant(space.group, label)),
                "branching": [
                    {"h_label": format_h_label(lab), "mult": m}
                    for lab, m in sorted(dec.items())
                ],
            }
        )
    return {"space": space_name, "rows": rows}


def homdim_doc(space_name: str, gamma: tuple) -> dict:
    from .branching import hom_dim

    space = build_space(space_name)
    target = lambda11_0(space_name)
    return {
        "space": space_name,
        "gamma": list(gamma),
        "casimir": fraction_jsonable(casimir_constant(space.group, gamma)),
        "hom_dim": hom_dim(space, gamma, target.decomposition),
    }


def delta_doc(space_name: str, gamma: tuple) -> dict:
    from .branching import hom_dim

    space = build_space(space_name)
    target = lambda11_0(space_name)
    hd = hom_dim(space, gamma, target.decomposition)
    generators = []
    if hd:
        for f in hom_basis(space, gamma, target):
            d = proto_delta(space, gamma, f, target)
            mats = m_complex_coords(space, d)
            generators.append(
                {
                    "delta_matrix": [[scalar_jsonable(x) for x in row] for row in mats],
                    "delta_is_zero": not any(any(row) for row in mats),
                }
            )
    return {
        "space": space_name,
        "gamma": list(gamma),
        "hom_dim": hd,
        "coclosed_dim": coclosed_dim(space, gamma, target) if hd else 0,
        "generators": generators,
    }


def coindex_doc(space_name: str) -> dict:
    return coindex_report(space_name).to_jsonable()


def obstruction_doc() -> dict:
    i0, i1, i2 = obstruction_terms()
    table = {}
    for i in range(6):
        for k in range(6):
            entry = nabla_h_entry(i, k)
            table[f"({i+1},{k+1})"] = [str(p) for p in entry]
    verdict = rigidity_verdict()
    breakdown = pairing_breakdown()
    return {
        "nabla_h": table,
        "I0": str(i0),
        "I1": str(i1),
        "I2": str(i2),
        "integrand": str(integrand()),
        "pairing": scalar_jsonable(obstruction_pairing()),
        "pairing_breakdown": {k: scalar_jsonable(v) for k, v in breakdown.items()},
        "verdict": {
            "pairing_nonzero": verdict.pairing_nonzero,
            "critical_points_exist": verdict.critical_points_exist,
            "rigid": verdict.rigid,
            "status": verdict.status,
        },
    }


def validate_doc(space_names: list) -> dict:
    out = {}
    for name in space_names:
        checks = validate_space(build_space(name))
        target = lambda11_0(name)
        checks["lambda11_0_dim_8"] = target.dim == 8
        checks["lambda11_0_weight_vectors"] = all(
            w is not None for w in target.weights
        )
        out[name] = {k: bool(v) for k, v in sorted(checks.items())}
    return out


def reproduce_all_doc() -> dict:
    threads = _max_threads()
    names = list(SPACE_NAMES)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(coindex_doc, names))
    else:
        reports = [coindex_doc(n) for n in names]

    doc = {
        "version": __version__,
        "casimir_branching_tables": {
            n: branch_doc(n, None, Fraction(12))["rows"] for n in names
        },
        "lambda11_0": {
            n: {
                "dim": lambda11_0(n).dim,
                "decomposition": [
                    {"h_label": format_h_label(lab), "mult": m}
                    for lab, m in sorted(lambda11_0(n).decomposition.items())
                ],
            }
            for n in names
        },
        "hom_coclosed": {
            n: [
                {
                    "gamma": list(label),
                    "dim": d,
                    "casimir": fraction_jsonable(cas),
                    "hom_dim": hd,
                    "coclosed_dim": cd,
                }
                for (label, d, cas, hd, cd) in coindex_report(n).casimir_rows
            ]
            for n in names
        },
        "coindex": {n: r for n, r in zip(names, reports)},
        "obstruction": obstruction_doc(),
        "validate": validate_doc(names),
    }
    ok = all(all(checks.values()) for checks in doc["validate"].values())
    expected_coindex = {"s3xs3": 2, "cp3": 1, "flag": 2}
    expected_ied = {"s3xs3": 0, "cp3": 0, "flag": 8}
    ok = ok and all(
        doc["coindex"][n]["coindex"] == expected_coindex[n]
        and doc["coindex"][n]["ied_dim"] == expected_ied[n]
        for n in names
    )
    ok = ok and doc["obstruction"]["pairing"] == "256/3"
    ok = ok and doc["obstruction"]["verdict"]["rigid"] is True
    doc["all_checks_pass"] = bool(ok)
    return doc


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _render_casimir(doc: dict) -> str:
    rows = [
        (_label_str(r["label"]), r["dim"], r["casimir"]) for r in doc["rows"]
    ]
    return _table(rows, ["label", "dim", "casimir"])


def _render_branch(doc: dict) -> str:
    rows = []
    for r in doc["rows"]:
        dec = " + ".join(
            (f'{b["mult"]}*{b["h_label"]}' if b["mult"] > 1 else b["h_label"])
            for b in r["branching"]
        )
        rows.append((_label_str(r["gamma"]), dec, r["casimir"]))
    return _table(rows, ["gamma", "branching", "casimir"])


def _render_coindex(doc: dict) -> str:
    rows = [
        (d["lambda"], d["mult"], d["source"]) for d in doc["destabilizing"]
    ]
    out = f'space: {doc["space"]}\n'
    out += _table(rows, ["lambda", "mult", "source"])
    out += f'coindex = {doc["coindex"]}\n'
    out += f'infinitesimal Einstein deformations: dim = {doc["ied_dim"]}\n'
    return out


def _render_obstruction(doc: dict) -> str:
    out = "covariant derivative coefficients (rows i, slots k):\n"
    rows = []
    for i in range(6):
        for k in range(6):
            entries = doc["nabla_h"][f"({i+1},{k+1})"]
            terms = [
                f"({p})*e{l+1}" for l, p in enumerate(entries) if p != "0"
            ]
            rows.append((f"({i+1},{k+1})", " + ".join(terms) if terms else "0"))
    out += _table(rows, ["(i,k)", "entry"])
    out += f'I0 = {doc["I0"]}\n'
    out += f'I1 = {doc["I1"]}\n'
    out += f'I2 = {doc["I2"]}\n'
    out += f'I  = {doc["integrand"]}\n'
    v = doc["verdict"]
    out += f'pairing = {doc["pairing"]}, rigid = {str(v["rigid"]).lower()}\n'
    return out


def _render_validate(doc: dict) -> str:
    rows = []
    for name, checks in doc.items():
        for check, ok in checks.items():
            rows.append((name, check, "pass" if ok else "FAIL"))
    return _table(rows, ["space", "check", "result"])


def _render_delta(doc: dict) -> str:
    out = (
        f'space: {doc["space"]}  gamma: {_label_str(doc["gamma"])}\n'
        f'hom_dim = {doc["hom_dim"]}  coclosed_dim = {doc["coclosed_dim"]}\n'
    )
    for k, g in enumerate(doc["generators"]):
        out += f'generator {k}: delta {"= 0" if g["delta_is_zero"] else "!= 0"}\n'
    return out


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _add_space_arg(p, required=True):
    p.add_argument("--space", choices=SPACE_NAMES, required=required)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gray-stability",
        description="Exact stability and rigidity computations for the "
        "homogeneous nearly Kaehler 6-manifolds.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("casimir", help="Casimir table of a space's symmetry group")
    _add_space_arg(p)
    p.add_argument("--max", default="12", help="Casimir cutoff (rational)")
    _fmt(p)

    p = sub.add_parser("branch", help="branching table to the isotropy subgroup")
    _add_space_arg(p)
    p.add_argument("--gamma", default=None, help="single label, e.g. 1,1,0")
    p.add_argument("--max", default="12")
    _fmt(p)

    p = sub.add_parser("homdim", help="multiplicity in the primitive (1,1) module")
    _add_space_arg(p)
    p.add_argument("--gamma", required=True)
    _fmt(p)

    p = sub.add_parser("delta", help="prototypical codifferential on a Fourier space")
    _add_space_arg(p)
    p.add_argument("--gamma", required=True)
    _fmt(p)

    p = sub.add_parser("coindex", help="coindex report of a catalog space")
    _add_space_arg(p)
    _fmt(p)

    p = sub.add_parser("obstruction", help="second-order rigidity obstruction")
    _fmt(p)

    p = sub.add_parser("killing", help="Killing property of canonical variations")
    p.add_argument("--t", required=True, help="trace-free triple, e.g. 1,-1,0")
    _fmt(p)

    p = sub.add_parser("validate", help="run catalog invariant checks")
    _add_space_arg(p, required=False)
    _fmt(p)

    p = sub.add_parser("reproduce-all", help="regenerate every checked number")
    _fmt(p)
    return ap


def _fmt(p):
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--output", default=None, help="write output to a file")


def _emit(doc: dict, text: str, args) -> None:
    payload = dumps(doc) if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def main(argv: list | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "casimir":
        doc = casimir_doc(args.space, Fraction(args.max))
        _emit(doc, _render_casimir(doc), args)
        return 0
    if cmd == "branch":
        space = build_space(args.space)
        gamma = _parse_label(space, args.gamma) if args.gamma else None
        doc = branch_doc(args.space, gamma, Fraction(args.max))
        _emit(doc, _render_branch(doc), args)
        return 0
    if cmd == "homdim":
        space = build_space(args.space)
        doc = homdim_doc(args.space, _parse_label(space, args.gamma))
        _emit(doc, dumps(doc), args)
        return 0
    if cmd == "delta":
        space = build_space(args.space)
        doc = delta_doc(args.space, _parse_label(space, args.gamma))
        _emit(doc, _render_delta(doc), args)
        return 0
    if cmd == "coindex":
        doc = coindex_doc(args.space)
        _emit(doc, _render_coindex(doc), args)
        return 0
    if cmd == "obstruction":
        doc = obstruction_doc()
        _emit(doc, _render_obstruction(doc), args)
        return 0
    if cmd == "killing":
        try:
            triple = [Fraction(x) for x in args.t.split(",")]
        except ValueError as exc:
            raise UsageError(f"cannot parse --t {args.t!r}") from exc
        if len(triple) != 3:
            raise UsageError("--t needs three rationals")
        ok = killing_check(*triple)
        doc = {"t": [fraction_jsonable(x) for x in triple], "killing": ok}
        _emit(doc, f"killing({args.t}) = {str(ok).lower()}\n", args)
        return 0
    if cmd == "validate":
        names = [args.space] if args.space else list(SPACE_NAMES)
        doc = validate_doc(names)
        _emit(doc, _render_validate(doc), args)
        return 0 if all(all(c.values()) for c in doc.values()) else 1
    if cmd == "reproduce-all":
        doc = reproduce_all_doc()
        text = "all checks pass\n" if doc["all_checks_pass"] else "CHECKS FAILED\n"
        _emit(doc, text, args)
        return 0 if doc["all_checks_pass"] else 1
    raise SystemExit(2)


if __name__ == "__main__":
    raise SystemExit(main())
