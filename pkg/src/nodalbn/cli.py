"""Command-line front end.

Exit status is 0 on success, 1 on invalid input and 2 when an internal
invariant check fails (including a nonzero mismatch count in a sweep).
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import sys
from typing import Sequence

from .brill_noether import (
    ComponentLabel,
    InvariantViolation,
    classify,
    component_dimension,
    correspondence,
    enumerate_components,
)
from .curve import NodalCurve, connected_subcurves, total_genus
from .errors import InvalidInputError
from .families import (
    circular_component_count,
    circular_curve,
    circular_pattern,
    circular_semistable_multidegrees,
    two_component_classification,
    two_component_curve,
)
from .multidegree import (
    check_length,
    format_multidegree,
    g1_witness,
    is_semistable,
    is_stable,
    parse_multidegree,
    semistability_witness,
)
from .twister import normalize, solve_twister, twister_multidegree

DEFAULT_GAMMA_CAP = 10


def label_report(curve: NodalCurve, label: ComponentLabel) -> dict:
    return {
        "Z": curve.subcurve_labels(label.z),
        "e_Z": list(label.e_z),
        "global_e": list(label.global_e) if label.global_e is not None else None,
        "twisted_abel": label.twisted_abel,
        "dimension": component_dimension(curve, label),
    }


def decomposition_report(curve: NodalCurve, d: Sequence[int]) -> dict:
    dec = classify(curve, d)
    return {
        "curve": curve.to_dict(),
        "multidegree": list(d),
        "semistable": not dec.full_jacobian,
        "stable": is_stable(curve, d),
        "full_jacobian": dec.full_jacobian,
        "components": [label_report(curve, lab) for lab in dec.components],
    }


def _emit(args, report: dict, lines: list[str]) -> None:
    if args.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))


def _check_cap(curve: NodalCurve, cap: int) -> None:
    if curve.gamma > cap:
        raise InvalidInputError(
            f"curve has {curve.gamma} components, above the cap of {cap} (raise with --max-gamma)"
        )


def cmd_info(args) -> int:
    curve = NodalCurve.load(args.curve)
    _check_cap(curve, args.max_gamma)
    report = {
        "curve": curve.to_dict(),
        "components": curve.gamma,
        "nodes": len(curve.edges),
        "genus": total_genus(curve),
        "connected_subcurves": len(connected_subcurves(curve)),
    }
    _emit(args, report, [f"{k}: {v}" for k, v in report.items() if k != "curve"])
    return 0


def cmd_semistable(args) -> int:
    curve = NodalCurve.load(args.curve)
    _check_cap(curve, args.max_gamma)
    d = parse_multidegree(args.d)
    check_length(curve, d)
    g = total_genus(curve)
    if sum(d) == g - 1:
        witness = g1_witness(curve, d)
    else:
        witness = semistability_witness(curve, d)
    report = {
        "multidegree": list(d),
        "semistable": witness is None,
        "stable": is_stable(curve, d),
        "witness": None,
    }
    lines = [f"semistable: {str(witness is None).lower()}", f"stable: {str(report['stable']).lower()}"]
    if witness is not None:
        d_z = sum(d[i] for i in witness.members)
        g_z = curve.genus_mask(witness.mask)
        report["witness"] = {
            "Z": curve.subcurve_labels(witness),
            "d_Z": d_z,
            "g_Z": g_z,
            "k_Z": curve.cut_edges(witness.mask),
        }
        lines.append(f"witness: {','.join(curve.subcurve_labels(witness))} (d_Z={d_z}, g_Z={g_z})")
    _emit(args, report, lines)
    return 0


def cmd_components(args) -> int:
    curve = NodalCurve.load(args.curve)
    _check_cap(curve, args.max_gamma)
    d = parse_multidegree(args.d)
    report = decomposition_report(curve, d)
    if report["full_jacobian"]:
        lines = ["not semistable: W_d is the whole Jacobian"]
    else:
        lines = [f"{len(report['components'])} component(s)"]
        for comp in report["components"]:
            form = ""
            if comp["twisted_abel"]:
                rest = [l for l in curve.labels if l not in comp["Z"]]
                form = f" = A_({format_multidegree(comp['global_e'])})"
                if rest:
                    form += f" twisted by {','.join(rest)}"
            lines.append(f"  Z={','.join(comp['Z'])} e_Z={format_multidegree(comp['e_Z'])}{form}")
    _emit(args, report, lines)
    return 0


def cmd_twister_solve(args) -> int:
    curve = NodalCurve.load(args.curve)
    if (args.delta is None) == (args.coeffs is None):
        raise InvalidInputError("give exactly one of --delta or --coeffs")
    if args.coeffs is not None:
        c = parse_multidegree(args.coeffs)
        check_length(curve, c)
        c = normalize(c)
        delta = twister_multidegree(curve, c)
    else:
        delta = parse_multidegree(args.delta)
        check_length(curve, delta)
        c = solve_twister(curve, delta)
    report = {"delta": list(delta), "c": list(c) if c is not None else None}
    if c is None:
        lines = ["no twister has this multidegree"]
    else:
        lines = [f"c = {format_multidegree(c)}", f"multidegree = {format_multidegree(delta)}"]
    _emit(args, report, lines)
    return 0


def cmd_correspond(args) -> int:
    curve = NodalCurve.load(args.curve)
    _check_cap(curve, args.max_gamma)
    d, e = parse_multidegree(args.d), parse_multidegree(args.e)
    check_length(curve, d)
    check_length(curve, e)
    pairs = correspondence(curve, d, e)
    if pairs is None:
        report = {"twister": None, "pairs": None}
        lines = ["e - d is not a twister multidegree"]
    else:
        report = {
            "twister": list(solve_twister(curve, [b - a for a, b in zip(d, e)])),
            "pairs": [
                {
                    "d_component": curve.subcurve_labels(p.source.z),
                    "e_component": curve.subcurve_labels(p.target.z),
                    "basis": p.basis,
                }
                for p in pairs
            ],
        }
        lines = [f"{len(pairs)} paired component(s)"] + [
            f"  {','.join(x['d_component'])} <-> {','.join(x['e_component'])} ({x['basis']})"
            for x in report["pairs"]
        ]
    _emit(args, report, lines)
    return 0


def circular_rows(genera_list, cap: int = DEFAULT_GAMMA_CAP):
    for genera in genera_list:
        if len(genera) > cap:
            raise InvalidInputError(f"gamma={len(genera)} exceeds the cap of {cap}")
        if any(g < 1 for g in genera):
            raise InvalidInputError("circular sweeps need every genus >= 1")
        curve = circular_curve(genera)
        for d in circular_semistable_multidegrees(genera):
            _, pattern = circular_pattern(genera, d)
            formula = 1 if pattern.ell == 0 else circular_component_count(genera, d)
            enumerated = len(enumerate_components(curve, d))
            yield {
                "gamma": len(genera),
                "genera": format_multidegree(genera),
                "multidegree": format_multidegree(d),
                "ell": pattern.ell,
                "formula_count": formula,
                "enumerated_count": enumerated,
                "match": formula == enumerated,
            }


def two_component_rows(max_genus: int, max_k: int):
    for g1, g2, k in itertools.product(range(max_genus + 1), range(max_genus + 1), range(1, max_k + 1)):
        if g1 + g2 + k - 1 < 2:
            continue
        curve = two_component_curve(g1, g2, k)
        rep = two_component_classification(g1, g2, k)
        for d, expected in ((rep.d, rep.count_d), (rep.e, rep.count_e)):
            enumerated = len(enumerate_components(curve, d))
            yield {
                "g1": g1,
                "g2": g2,
                "k": k,
                "multidegree": format_multidegree(d),
                "case": rep.case,
                "formula_count": expected,
                "enumerated_count": enumerated,
                "match": expected == enumerated,
            }


def _write_sweep(rows, fields) -> int:
    writer = csv.DictWriter(sys.stdout, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    total = mismatches = 0
    for row in rows:
        writer.writerow(row)
        total += 1
        mismatches += not row["match"]
    summary = {f: "" for f in fields}
    summary[fields[0]] = "summary"
    summary["formula_count"] = f"rows={total}"
    summary["enumerated_count"] = f"mismatches={mismatches}"
    summary["match"] = mismatches == 0
    writer.writerow(summary)
    return 0 if mismatches == 0 else 2


def cmd_sweep_circular(args) -> int:
    if args.gamma > args.max_gamma:
        raise InvalidInputError(f"gamma={args.gamma} exceeds the cap of {args.max_gamma}")
    if args.genera is not None:
        genera = parse_multidegree(args.genera)
        if len(genera) != args.gamma:
            raise InvalidInputError("--genera length differs from --gamma")
        genera_list = [genera]
    else:
        grid = list(itertools.product(range(1, args.max_genus + 1), repeat=args.gamma))
        if args.samples is not None:
            rng = random.Random(args.seed)
            grid = sorted(rng.sample(grid, min(args.samples, len(grid))))
        genera_list = grid
    fields = ["gamma", "genera", "multidegree", "ell", "formula_count", "enumerated_count", "match"]
    return _write_sweep(circular_rows(genera_list, args.max_gamma), fields)


def cmd_sweep_two_component(args) -> int:
    fields = ["g1", "g2", "k", "multidegree", "case", "formula_count", "enumerated_count", "match"]
    return _write_sweep(two_component_rows(args.max_genus, args.max_k), fields)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nodalbn",
        description="Brill-Noether loci of degree g-1 on nodal curves, via dual graphs.",
    )
    ap.add_argument("--output", choices=["text", "json"], default="text")
    ap.add_argument("--max-gamma", type=int, default=DEFAULT_GAMMA_CAP,
                    help="refuse curves with more components than this (default 10)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="genus and subcurve statistics of a curve")
    p.add_argument("curve")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("semistable", help="semistability test with a failing subcurve")
    p.add_argument("curve")
    p.add_argument("--d", required=True, help="multidegree, e.g. 0,2,0,2")
    p.set_defaults(func=cmd_semistable)

    p = sub.add_parser("components", help="irreducible components of W_d")
    p.add_argument("curve")
    p.add_argument("--d", required=True, help="multidegree of total degree g-1")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("twister-solve", help="solve for twister coefficients, or evaluate them")
    p.add_argument("curve")
    p.add_argument("--delta", help="target multidegree of total degree 0")
    p.add_argument("--coeffs", help="twister coefficients to evaluate")
    p.set_defaults(func=cmd_twister_solve)

    p = sub.add_parser("correspond", help="pair the components of W_d and W_e")
    p.add_argument("curve")
    p.add_argument("--d", required=True)
    p.add_argument("--e", required=True)
    p.set_defaults(func=cmd_correspond)

    p = sub.add_parser("sweep-circular", help="closed-form vs enumerated counts (CSV)")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--genera", help="one genera vector; default sweeps 1..max-genus")
    p.add_argument("--max-genus", type=int, default=2)
    p.add_argument("--samples", type=int, help="sample this many genera vectors at random")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sweep_circular)

    p = sub.add_parser("sweep-two-component", help="case table vs enumerated counts (CSV)")
    p.add_argument("--max-genus", type=int, default=2)
    p.add_argument("--max-k", type=int, default=2)
    p.set_defaults(func=cmd_sweep_two_component)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
