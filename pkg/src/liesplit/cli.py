"""Command-line frontend.

Every subcommand prints one report to stdout, as canonical JSON (sorted
keys, two-space indent, UTF-8, trailing newline) or as a flat key/value
table.  A report carries the payload, the list of internal rule ids it
relied on (the rule catalog is documented in the README), and a
provenance tag per top-level claim: certified, claimed or derived.

Exit codes: 0 success, 2 usage or validation error, 3 when --strict is
given and the report contains a failed hypothesis check or a claimed
(not machine-certified) value.

All state comes from argv; there are no configuration files or
environment variables.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import bbfix, grassmod, parabolic, poscalc
from .rootsys import (
    Weight,
    build_root_system,
    bwb_cohomology,
    bwb_json,
    weight_json,
    weyl_dimension,
    weyl_order,
)

_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")
_CSV_FLAGS = ("--lambda", "--weight", "--levi")
_CSV_VALUE_RE = re.compile(r"^-?\d+(,-?\d+)*$")


def _parse_type(text: str) -> Tuple[str, int]:
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise ValueError(f"--type expects letter+rank like A3 or C2, got {text!r}")
    return m.group(1), int(m.group(2))


def _parse_csv(flag: str, text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"{flag} expects comma-separated integers, got {text!r}") from None


def emit_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _scalar(value) -> str:
    if value is None:
        return "-"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _flatten(obj, prefix: str, rows: List[Tuple[str, str]]) -> None:
    if isinstance(obj, dict):
        for key, val in obj.items():
            _flatten(val, f"{prefix}.{key}" if prefix else key, rows)
    elif isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            rows.append((prefix, ",".join(_scalar(x) for x in obj) if obj else "-"))
        else:
            for i, val in enumerate(obj):
                _flatten(val, f"{prefix}[{i}]", rows)
    else:
        rows.append((prefix, _scalar(obj)))


def emit_table(report: dict) -> str:
    rows: List[Tuple[str, str]] = []
    rows.append(("subcommand", report["subcommand"]))
    _flatten(report["payload"], "", rows)
    rows.append(("citations", ",".join(report["citations"]) if report["citations"] else "-"))
    for key in sorted(report["provenance"]):
        rows.append((f"provenance.{key}", report["provenance"][key]))
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _contains_strict_failure(obj) -> bool:
    if isinstance(obj, dict):
        if obj.get("status") in ("fail", "claimed") or obj.get("kind") == "claimed":
            return True
        return any(_contains_strict_failure(v) for v in obj.values())
    if isinstance(obj, (list, tuple)):
        return any(_contains_strict_failure(v) for v in obj)
    return False


def _require(args, names: Sequence[str], rule: str) -> None:
    for name in names:
        attr = name.lstrip("-").replace("-", "_")
        if getattr(args, attr, None) is None:
            raise ValueError(f"ppos --rule {rule} requires {name}")


# -- subcommand handlers -------------------------------------------------


def _cmd_dynkin(args) -> dict:
    letter, rank = _parse_type(args.type)
    rs = build_root_system(letter, rank)
    payload = {
        "type": f"{letter}{rank}",
        "rank": rank,
        "root_count": len(rs.roots),
        "positive_count": len(rs.positive_roots),
        "weyl_order": weyl_order(rs),
        "cartan_matrix": [list(row) for row in rs.cartan_matrix],
        "simple_root_square_lengths": [str(n) for n in rs.simple_root_norms()],
    }
    citations: List[str] = []
    provenance: Dict[str, str] = {}
    if args.levi is not None:
        levi = _parse_csv("--levi", args.levi)
        p = parabolic.parabolic(rs, levi)
        payload["levi"] = sorted(levi)
        payload["quotient_dim"] = parabolic.quotient_dimension(p)
        payload["picard_basis"] = [weight_json(w) for w in parabolic.picard_lattice_basis(p)]
        citations.append("dynkin:radical-roots")
        provenance["quotient_dim"] = "derived"
        provenance["picard_basis"] = "derived"
    return {"subcommand": "dynkin", "payload": payload,
            "citations": citations, "provenance": provenance}


def _cmd_onesplit(args) -> dict:
    letter, rank = _parse_type(args.type)
    rs = build_root_system(letter, rank)
    levi = _parse_csv("--levi", args.levi) if args.levi else ()
    bound = args.bound if args.bound is not None else parabolic.DEFAULT_WITNESS_BOUND
    report = parabolic.is_one_splitting(parabolic.parabolic(rs, levi), bound=bound)
    payload = {"type": f"{letter}{rank}"}
    payload.update(parabolic.one_splitting_json(report))
    citations = ["dynkin:one-splitting-test"]
    provenance = {"is_one_splitting": "derived"}
    if report.witness is not None:
        citations.append("bwb:witness-construction")
        provenance["witness_degree"] = "certified"
    return {"subcommand": "onesplit", "payload": payload,
            "citations": citations, "provenance": provenance}


def _cmd_bwb(args) -> dict:
    letter, rank = _parse_type(args.type)
    rs = build_root_system(letter, rank)
    coords = _parse_csv("--weight", args.weight)
    if len(coords) != rank:
        raise ValueError(f"--weight needs {rank} coordinates for {letter}{rank}, got {len(coords)}")
    chi = Weight(coords)
    res = bwb_cohomology(rs, chi)
    cohomology = bwb_json(res)
    citations = ["bwb:dominance-resolution"]
    if not res.zero:
        cohomology["dimension"] = weyl_dimension(rs, res.highest_weight)
        citations.append("bwb:dimension-formula")
    payload = {"type": f"{letter}{rank}", "weight": list(coords), "cohomology": cohomology}
    return {"subcommand": "bwb", "payload": payload,
            "citations": citations, "provenance": {"cohomology": "derived"}}


def _cmd_bb(args) -> dict:
    letter, rank = _parse_type(args.type)
    rs = build_root_system(letter, rank)
    levi = _parse_csv("--levi", args.levi) if args.levi else ()
    pairings = _parse_csv("--lambda", args.lam)
    if len(pairings) != rank:
        raise ValueError(f"--lambda needs {rank} pairings for {letter}{rank}, got {len(pairings)}")
    lam = bbfix.OneParamSubgroup(pairings)
    cap = args.bound if args.bound is not None else bbfix.DEFAULT_ENUMERATION_CAP
    components = bbfix.fixed_components(rs, levi, lam, cap)
    cert = bbfix.ppos_certificate(rs, levi, lam, cap)
    split = bbfix.check_split_homog(rs, levi, lam, cap)
    payload = {
        "type": f"{letter}{rank}",
        "levi": sorted(levi),
        "lambda": list(pairings),
        "dim": bbfix.total_dimension(components),
        "components": [bbfix.component_json(c) for c in components],
        "certificate": bbfix.certificate_json(cert),
        "split_hypotheses": {
            "one_splitting": split.one_splitting,
            "gap": split.gap,
            "codim": split.codim,
            "inequality_holds": split.inequality_holds,
            "transversality": split.transversality,
        },
        "pic_restriction_iso": bbfix.pic_source_iso(rs, levi, lam, cap),
    }
    provenance = {
        "components": "certified",
        "certificate": cert.status,
        "split_hypotheses": "derived",
        "pic_restriction_iso": "derived",
    }
    citations = ["bb:bruhat-fixed-components", "bb:cohomological-dimension",
                 "bb:source-certificate", "bb:split-hypothesis-check", "bb:picard-source"]
    return {"subcommand": "bb", "payload": payload,
            "citations": citations, "provenance": provenance}


def _cmd_ppos(args) -> dict:
    rule = args.rule
    inputs: Dict[str, int] = {}
    if rule == "qample-to-ppos":
        _require(args, ["--dim-sub", "--q"], rule)
        result = poscalc.qample_to_ppos(args.dim_sub, args.q)
        inputs = {"dim_sub": args.dim_sub, "q": args.q}
    elif rule == "ppos-to-qample":
        _require(args, ["--dim-sub", "--p"], rule)
        result = poscalc.ppos_to_qample(args.dim_sub, args.p)
        inputs = {"dim_sub": args.dim_sub, "p": args.p}
    elif rule == "blowup-index":
        _require(args, ["--dim-sub", "--delta", "--q"], rule)
        result = poscalc.blowup_index(args.dim_sub, args.delta, args.q)
        inputs = {"dim_sub": args.dim_sub, "delta": args.delta, "q": args.q}
    elif rule == "transitivity":
        _require(args, ["--dim-x", "--dim-y", "--dim-z", "--r", "--p"], rule)
        t = poscalc.transitivity(args.dim_x, args.dim_y, args.dim_z, args.r, args.p)
        result = {"normal_ample_bound": t.normal_ample_bound, "cd_bound": t.cd_bound,
                  "p_composed": t.p_composed, "approx_p": t.approx_p, "note": t.note}
        inputs = {"dim_x": args.dim_x, "dim_y": args.dim_y, "dim_z": args.dim_z,
                  "r": args.r, "p": args.p}
    elif rule == "fiber-criterion":
        _require(args, ["--dim-x", "--dim-image"], rule)
        result = poscalc.fiber_criterion(args.dim_x, args.dim_image)
        inputs = {"dim_x": args.dim_x, "dim_image": args.dim_image}
    elif rule == "sommese-zero-locus":
        _require(args, ["--dim-x", "--nu", "--q"], rule)
        result = poscalc.sommese_zero_locus_ppos(args.dim_x, args.nu, args.q)
        inputs = {"dim_x": args.dim_x, "nu": args.nu, "q": args.q}
    elif rule == "pullback-ppos":
        _require(args, ["--p"], rule)
        result = poscalc.pullback_ppos(args.p)
        inputs = {"p": args.p}
    elif rule == "pullback-line-amplitude":
        _require(args, ["--q", "--d"], rule)
        result = poscalc.pullback_line_amplitude(args.q, args.d)
        inputs = {"q": args.q, "d": args.d}
    elif rule == "intersections":
        _require(args, ["--delta", "--p"], rule)
        result = poscalc.intersections_ok(args.delta, args.p)
        inputs = {"delta": args.delta, "p": args.p}
    elif rule == "intersections-cd":
        _require(args, ["--dim-x", "--delta", "--cd"], rule)
        result = poscalc.intersections_ok_cd(args.dim_x, args.delta, args.cd)
        inputs = {"dim_x": args.dim_x, "delta": args.delta, "cd": args.cd}
    elif rule == "pic-zero-loci":
        _require(args, ["--variant", "--dim-x", "--nu"], rule)
        if args.variant == "sommese":
            _require(args, ["--q"], rule)
            value = args.q
        else:
            _require(args, ["--fiber-dim"], rule)
            value = args.fiber_dim
        result = poscalc.pic_0loci_check(args.variant, args.dim_x, args.nu, value)
        inputs = {"variant": args.variant, "dim_x": args.dim_x, "nu": args.nu,
                  "q_or_fiberdim": value}
    elif rule == "pic-restriction":
        _require(args, ["--p"], rule)
        result = poscalc.pic_restriction_iso(args.p)
        inputs = {"p": args.p}
    else:
        raise ValueError(f"unknown rule {rule!r}")
    payload = {"rule": rule, "inputs": inputs, "result": result}
    return {"subcommand": "ppos", "payload": payload,
            "citations": [f"calc:{rule}"], "provenance": {"result": "derived"}}


def _cmd_reduce(args) -> dict:
    model = grassmod.parse_model(args.model)
    plan = grassmod.reduction_plan(model)
    payload = grassmod.plan_json(plan)
    citations = sorted({s.justification for s in plan.steps})
    citations.append(f"red:{model.kind}-terminal")
    provenance = {"theorem_terminal": "claimed", "terminal": "derived",
                  "agrees": "derived", "steps": "derived"}
    return {"subcommand": "reduce", "payload": payload,
            "citations": citations, "provenance": provenance}


def _cmd_catalog(args) -> dict:
    model = grassmod.parse_model(args.model)
    if not args.family:
        raise ValueError("catalog requires --family")
    fact = grassmod.catalog_ppos(model, args.family)
    payload = {"model": grassmod.model_json(model), "family": args.family,
               "fact": poscalc.fact_json(fact)}
    return {"subcommand": "catalog", "payload": payload,
            "citations": [f"cat:{model.kind}-{args.family}"],
            "provenance": {"fact": fact.kind}}


def _cmd_crosscheck(args) -> dict:
    model = grassmod.parse_model(args.model)
    if not args.family:
        raise ValueError("crosscheck requires --family")
    rep = grassmod.cross_validate_bb(model, args.family)
    payload = {
        "model": grassmod.model_json(model),
        "family": args.family,
        "realization": {
            "type": f"{rep.realization.type_letter}{rep.realization.rank}",
            "levi": list(rep.realization.levi),
            "lambda": list(rep.realization.pairings),
        },
        "catalog": poscalc.fact_json(rep.catalog),
        "certificate": bbfix.certificate_json(rep.certificate),
        "comparisons": dict(sorted(rep.comparisons.items())),
        "ok": rep.ok,
        "note": rep.note,
    }
    return {"subcommand": "crosscheck", "payload": payload,
            "citations": [f"cat:{model.kind}-{args.family}", "bb:source-certificate"],
            "provenance": {"catalog": rep.catalog.kind,
                           "certificate": rep.certificate.status,
                           "ok": "derived"}}


_HANDLERS = {
    "dynkin": _cmd_dynkin,
    "onesplit": _cmd_onesplit,
    "bwb": _cmd_bwb,
    "bb": _cmd_bb,
    "ppos": _cmd_ppos,
    "reduce": _cmd_reduce,
    "catalog": _cmd_catalog,
    "crosscheck": _cmd_crosscheck,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liesplit",
        description="Exact positivity and splitting-reduction toolkit for homogeneous varieties")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["json", "table"], default="table")

    p = sub.add_parser("dynkin", help="root-system classification data")
    p.add_argument("--type", required=True)
    p.add_argument("--levi", default=None)
    add_common(p)

    p = sub.add_parser("onesplit", help="first-cohomology vanishing test for a quotient")
    p.add_argument("--type", required=True)
    p.add_argument("--levi", default=None)
    p.add_argument("--bound", type=int, default=None)
    add_common(p)

    p = sub.add_parser("bwb", help="line-bundle cohomology from a lattice weight")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    add_common(p)

    p = sub.add_parser("bb", help="fixed components and positivity certificate of a 1-PS action")
    p.add_argument("--type", required=True)
    p.add_argument("--levi", default=None)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--strict", action="store_true")
    add_common(p)

    p = sub.add_parser("ppos", help="positivity-calculus rules")
    p.add_argument("--rule", required=True)
    for flag in ("--dim-sub", "--dim-x", "--dim-y", "--dim-z", "--dim-image",
                 "--q", "--p", "--r", "--delta", "--nu", "--d", "--cd", "--fiber-dim"):
        p.add_argument(flag, type=int, default=None)
    p.add_argument("--variant", choices=["sommese", "fiber"], default=None)
    add_common(p)

    p = sub.add_parser("reduce", help="reduction plan to the terminal model")
    p.add_argument("--model", required=True)
    p.add_argument("--strict", action="store_true")
    add_common(p)

    p = sub.add_parser("catalog", help="catalog positivity of a standard subvariety")
    p.add_argument("--model", required=True)
    p.add_argument("--family", choices=["hyperplane", "point", "lagrangian"], default=None)
    p.add_argument("--strict", action="store_true")
    add_common(p)

    p = sub.add_parser("crosscheck", help="catalog value versus the fixed-point engine")
    p.add_argument("--model", required=True)
    p.add_argument("--family", choices=["hyperplane", "point", "lagrangian"], default=None)
    p.add_argument("--strict", action="store_true")
    add_common(p)

    return parser


def _preprocess(argv: List[str]) -> List[str]:
    # argparse refuses option values that start with '-'; join the csv
    # flags that legitimately take negative integer tuples.
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _CSV_FLAGS and i + 1 < len(argv) and _CSV_VALUE_RE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def parse_and_dispatch(argv: Sequence[str]) -> Tuple[int, str]:
    """Run one invocation; returns (exit_code, stdout_text).  Usage errors
    raise SystemExit(2) out of argparse; validation errors return code 2."""
    parser = _build_parser()
    args = parser.parse_args(_preprocess(list(argv)))
    try:
        report = _HANDLERS[args.subcommand](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, ""
    text = emit_json(report) if args.format == "json" else emit_table(report)
    if getattr(args, "strict", False) and _contains_strict_failure(report["payload"]):
        return 3, text
    return 0, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = parse_and_dispatch(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code
