"""Command-line front end.

Exit codes: 0 success or golden match, 1 semantic mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import re
import sys

from .crystal_core import HalfInt, half
from .genetic_code import (
    FREQUENCIES,
    GeneticCode,
    build_table,
    display_copy_numbers,
    golden_table,
    parse_codon,
    synonymous_classes,
)
from .misread import MisreadSpec, allowed, allowed_double, op_text
from .multiplets import (
    EXPECTED_CENSUS,
    ConfigError,
    PipelineConfig,
    census,
    census_line,
    compare_to_code,
    run_pipeline,
    ser_partner,
)
from .qlimit import QValue, limit_checks
from .tensor_crystal import Order, couple, format_path

CSV_COLUMNS = ["codon", "aa_vmc", "aa_suc", "JH", "JV", "mH", "mV", "copyH", "copyV"]

# lets argparse take "-1/2" as a positional value
_NEGATIVE = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+/\d+$")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _labels_dict(labels) -> dict | None:
    if labels is None:
        return None
    return {"JH": str(labels.J_H), "JV": str(labels.J_V), "mH": str(labels.m_H), "mV": str(labels.m_V)}


def _load_config(path: str | None) -> PipelineConfig:
    path = path or os.environ.get("GCWE_CONFIG")
    if not path:
        return PipelineConfig()
    try:
        with open(path, encoding="utf-8") as fh:
            return PipelineConfig.from_text(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    except ConfigError as exc:
        raise UsageError(f"malformed config {path}: {exc}") from None


# --- table -------------------------------------------------------------------

def cmd_table(args, out) -> int:
    report = build_table()
    golden = {r.codon: r for r in golden_table()}
    numbers = display_copy_numbers()
    rows = []
    for lab in report.rows:
        g = golden[lab.codon]
        rows.append({
            "codon": lab.codon,
            "aa_vmc": g.aa_vmc,
            "aa_suc": g.aa_suc,
            **_labels_dict(lab.labels),
            "copyH": format_path(lab.copy_H.highest_weight),
            "copyV": format_path(lab.copy_V.highest_weight),
            "copy": numbers[lab.copy],
        })
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    elif args.format == "json":
        out.write(_dump({
            "rows": rows,
            "mismatches": [{"codon": c, "computed": str(a), "golden": str(b)} for c, a, b in report.mismatches],
            "partition_match": report.partition_match,
        }) + "\n")
    else:
        out.write(f"{'codon':<6}{'VMC':<5}{'SUC':<5}{'JH':>5}{'JV':>5}{'mH':>6}{'mV':>6}  irrep       copyH copyV\n")
        for r in rows:
            irrep = f"({r['JH']},{r['JV']})^{r['copy']}"
            out.write(f"{r['codon']:<6}{r['aa_vmc']:<5}{r['aa_suc']:<5}{r['JH']:>5}{r['JV']:>5}"
                      f"{r['mH']:>6}{r['mV']:>6}  {irrep:<11} {r['copyH']:<5} {r['copyV']}\n")
    if not args.check:
        return 0
    msg = sys.stderr if args.format != "text" else out
    for codon, got, want in report.mismatches:
        msg.write(f"MISMATCH {codon}: computed {got} golden {want}\n")
    if not report.partition_match:
        msg.write("MISMATCH irrep-copy partition differs from the golden superscripts\n")
    msg.write(f"golden check: {len(report.mismatches)} label mismatches, "
              f"copy partition {'matches' if report.partition_match else 'DIFFERS'}\n")
    return 0 if report.ok else 1


# --- pipeline ----------------------------------------------------------------

def cmd_pipeline(args, out) -> int:
    config = _load_config(args.config)
    partition = run_pipeline(config)
    counts = census(partition)
    matches = counts == EXPECTED_CENSUS
    comparisons = {code: compare_to_code(partition, code) for code in ("VMC", "SUC")}
    ser = ser_partner(partition, config)
    shown = [e for e in partition.log if args.trace or e.allowed]
    if args.format == "json":
        out.write(_dump({
            "config": config.to_dict(),
            "events": [e.to_dict() for e in shown],
            "multiplets": [{"codons": m.sorted(), "formed_at_level": m.formed_at_level}
                           for m in partition.multiplets],
            "census": {str(k): v for k, v in counts.items()},
            "census_matches": matches,
            "comparisons": {k: v.to_dict() for k, v in comparisons.items()},
            "ser_partner": ser,
        }) + "\n")
    else:
        for level in range(1, 6):
            evs = [e for e in shown if e.level == level]
            acc = sum(e.accepted for e in partition.log if e.level == level)
            out.write(f"== level {level}: {acc} accepted events ==\n")
            for e in evs:
                out.write(f"  {e}\n")
        out.write("== final multiplets ==\n")
        for m in sorted(partition.multiplets, key=lambda m: (-len(m), m.sorted())):
            if len(m) > 1:
                out.write(f"  {len(m)} {m} (level {m.formed_at_level})\n")
        for code, comp in comparisons.items():
            out.write(comp.to_text() + "\n")
        out.write(f"Ser sextet partner: {'/'.join(ser['partner'])}\n")
        if "warning" in ser:
            out.write(f"!! {ser['warning']}\n")
        out.write(f"census: {census_line(counts)}\n")
    if not matches:
        sys.stderr.write(f"census mismatch: got {census_line(counts)}, "
                         f"expected {census_line(EXPECTED_CENSUS)}\n")
        return 1
    return 0


# --- check / couple / qcheck / freq --------------------------------------------

def _spec(codon: str, pos: int, to: str) -> MisreadSpec:
    try:
        return MisreadSpec(pos, codon[pos - 1], to)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args, out) -> int:
    try:
        codon = parse_codon(args.codon)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    config = _load_config(args.config)
    order = Order.parse(args.order) if args.order else config.order
    first = _spec(codon, args.pos, args.to)
    if args.second_pos is None:
        res = allowed(codon, first, config.rules, order)
        payload = {
            "codon": codon, "target": res.target, "spec": str(first),
            "operator": op_text(res.operator), "predicted": _labels_dict(res.predicted),
            "expected": _labels_dict(res.expected), "allowed": res.allowed,
            "same_copy": res.same_copy, "order": order.value,
        }
        lines = [
            f"{codon} -> {res.target} [{first}] order={order.value}",
            f"operator:  {op_text(res.operator)}",
            f"predicted: {res.predicted or '-'}",
            f"target:    {res.expected}",
            f"same irrep copy: {'yes' if res.same_copy else 'no'}",
            "allowed" if res.allowed else "not allowed",
        ]
    else:
        if args.second_to is None:
            raise UsageError("--second-pos needs --second-to")
        from .misread import substitute
        if args.second_pos == args.pos:
            raise UsageError("the two positions must differ")
        virtual = substitute(codon, first)
        second = _spec(virtual, args.second_pos, args.second_to)
        res = allowed_double(codon, first, second, config.rules, order)
        payload = {
            "codon": codon, "virtual_codon": res.virtual_codon, "target": res.target,
            "specs": [str(first), str(second)], "operators": [op_text(o) for o in res.operators],
            "virtual": _labels_dict(res.virtual), "predicted": _labels_dict(res.predicted),
            "expected": _labels_dict(res.expected), "allowed": res.allowed, "order": order.value,
        }
        lines = [
            f"{codon} -> ({res.virtual_codon}) -> {res.target} [{first} then {second}] order={order.value}",
            f"operator I:  {op_text(res.operators[0])}",
            f"operator II: {op_text(res.operators[1])}",
            f"virtual:   {res.virtual or '-'}",
            f"predicted: {res.predicted or '-'}",
            f"target:    {res.expected}",
            "allowed" if res.allowed else "not allowed",
        ]
    if args.format == "json":
        out.write(_dump(payload) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return 0


def cmd_couple(args, out) -> int:
    try:
        J, m = couple(args.j1, args.m1, args.j2, args.m2, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(_dump({"J": str(J), "m": str(m)}) + "\n")
    else:
        out.write(f"J={J} m={m}\n")
    return 0


def cmd_qcheck(args, out) -> int:
    try:
        q = QValue(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = limit_checks(q, args.max_x, args.max_j)
    if args.format == "json":
        payload = report.to_dict()
        payload["max_deviation"] = report.max_deviation()
        if args.tol is not None:
            payload["tolerance"] = args.tol
            payload["exceeding"] = report.failures(args.tol)
        out.write(_dump(payload) + "\n")
    else:
        out.write(report.to_text(args.tol) + "\n")
        out.write(f"max |ratio-1| = {report.max_deviation():.3e}\n")
    if args.tol is not None and report.failures(args.tol):
        return 1
    return 0


def cmd_freq(args, out) -> int:
    partition = run_pipeline(_load_config(args.config))
    suc = synonymous_classes(GeneticCode.SUC)
    vmc = synonymous_classes(GeneticCode.VMC)
    rows = []
    for aa, rf, n in FREQUENCIES:
        model = sorted({partition.multiplet_of(c) for c in suc[aa]}, key=lambda m: m.sorted())
        rows.append({
            "aa": aa, "rf": rf, "n_table": n,
            "model": "+".join(str(len(m)) for m in model),
            "vmc": len(vmc.get(aa, ())), "suc": len(suc[aa]),
        })
    if args.format == "json":
        out.write(_dump(rows) + "\n")
    else:
        out.write("aa  R.f. N  model VMC SUC\n")
        for r in rows:
            out.write(f"{r['aa']} {r['rf']} {r['n_table']}  {r['model']:<5} {r['vmc']:<3} {r['suc']}\n")
    return 0


# --- sensitivity -------------------------------------------------------------

def _values(spec: str) -> list[str]:
    if "|" in spec:
        return [s.strip() for s in spec.split("|") if s.strip()]
    if ".." in spec:
        lo, hi = (half(s) for s in spec.split("..", 1))
        if hi < lo:
            raise ValueError(f"empty range {spec!r}")
        return [str(HalfInt(t)) for t in range(lo.twice, hi.twice + 1, 2)]
    return [s.strip() for s in spec.split(",") if s.strip()]


def _parse_vary(items: list[str]) -> list[tuple[str, list[str]]]:
    out = []
    for item in items:
        if "=" not in item:
            raise UsageError(f"--vary expects name=range, got {item!r}")
        name, spec = (s.strip() for s in item.split("=", 1))
        if name not in PipelineConfig.KEYS:
            raise UsageError(f"unknown parameter {name!r}")
        try:
            values = _values(spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not values:
            raise UsageError(f"no values for {name}")
        out.append((name, values))
    return out


def sensitivity(base: PipelineConfig, axes: list[tuple[str, list[str]]]) -> list[dict]:
    """Rerun the pipeline over the Cartesian product of parameter values."""
    reference = run_pipeline(base).as_sets()
    rows = []
    names = [n for n, _ in axes]
    for combo in itertools.product(*(vals for _, vals in axes)):
        assignment = dict(zip(names, combo))
        config = base.with_values(assignment)
        partition = run_pipeline(config)
        counts = census(partition)
        kept = len(reference & partition.as_sets())
        rows.append({
            "assignment": assignment,
            "census": {str(k): v for k, v in counts.items()},
            "census_line": census_line(counts),
            "matches_expected": counts == EXPECTED_CENSUS,
            "multiplets_kept": kept,
            "multiplets_reference": len(reference),
        })
    return rows


def cmd_sensitivity(args, out) -> int:
    base = _load_config(args.config)
    axes = _parse_vary(args.vary)
    try:
        rows = sensitivity(base, axes)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(_dump(rows) + "\n")
        return 0
    for r in rows:
        assign = " ".join(f"{k}={v}" for k, v in r["assignment"].items())
        mark = "*" if r["matches_expected"] else " "
        out.write(f"{mark} {assign:<30} {r['census_line']:<50} "
                  f"kept {r['multiplets_kept']}/{r['multiplets_reference']}\n")
    return 0


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcwe", description=__doc__)
    parser.add_argument("--no-color", action="store_true", help="accepted for compatibility; output is plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the 64-codon label table")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--check", action="store_true", help="exit 1 on any mismatch with the reference table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("pipeline", help="run the five-level merging pipeline")
    p.add_argument("--config", help="key = value config file (default: $GCWE_CONFIG)")
    p.add_argument("--trace", action="store_true", help="also list blocked misreadings")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("check", help="test one (or a two-step) misreading of a codon")
    p.add_argument("codon")
    p.add_argument("--pos", type=int, required=True, choices=[1, 2, 3])
    p.add_argument("--to", required=True)
    p.add_argument("--second-pos", type=int, choices=[1, 2, 3])
    p.add_argument("--second-to")
    p.add_argument("--order", choices=["state-first", "operator-first", "state_first", "operator_first"])
    p.add_argument("--config")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("couple", help="crystal coupling of two spin labels")
    p._negative_number_matcher = _NEGATIVE
    for name in ("j1", "m1", "j2", "m2"):
        p.add_argument(name)
    p.add_argument("--order", default="state_first",
                   choices=["state-first", "operator-first", "state_first", "operator_first"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_couple)

    p = sub.add_parser("qcheck", help="numeric q -> 0 asymptotics")
    p.add_argument("--q", type=float, default=1e-4)
    p.add_argument("--max-x", type=int, default=4)
    p.add_argument("--max-j", default="2")
    p.add_argument("--tol", type=float, help="exit 1 if any deviation exceeds this")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_qcheck)

    p = sub.add_parser("freq", help="amino-acid frequencies next to multiplet sizes")
    p.add_argument("--config")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("sensitivity", help="census over a grid of rank assignments")
    p.add_argument("--vary", action="append", required=True, metavar="NAME=RANGE",
                   help="e.g. a1=0..2, c_same=1,2 or b_list='CA,GA|CA'")
    p.add_argument("--config")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_sensitivity)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"gcwe {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
