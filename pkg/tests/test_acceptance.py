"""Acceptance checks, one per criterion, each printing a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for the summary alone, or
through pytest, where the lines appear in the terminal summary.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gcwe.crystal_core import crystal_casimir, half, irrep_states, lower, raise_  # noqa: E402
from gcwe.genetic_code import CODONS, build_table, codon_labels  # noqa: E402
from gcwe.misread import CrystalTensorOp, Kind, MisreadSpec, allowed, allowed_double, specs_at  # noqa: E402
from gcwe.multiplets import EXPECTED_CENSUS, MultipletPartition, census, run_level  # noqa: E402
from gcwe.qlimit import limit_checks  # noqa: E402
from gcwe.tensor_crystal import all_paths, components, couple, path_weight, tensor_lower, tensor_raise  # noqa: E402
from oracles import graph_components, sig_lower, sig_raise, spins_up_to  # noqa: E402

RESULTS: dict[str, tuple[bool, str]] = {}
Q = 1e-4
Q_TOL = 1e-6
TABLE_SECONDS = 1.0


def _expand(pattern):
    fill = {"N": "CUGA", "Y": "CU", "R": "GA"}
    out = [""]
    for ch in pattern:
        out = [o + c for o in out for c in fill.get(ch, ch)]
    return frozenset(out)


_LEVELS: list = []


def _levels():
    """Partitions after each level of the default pipeline (computed once)."""
    if not _LEVELS:
        part = MultipletPartition.singlets()
        for level in range(1, 6):
            part, events = run_level(part, level)
            _LEVELS.append((part, events))
    return _LEVELS


def _new_multiplets(level):
    before = _levels()[level - 2][0].as_sets() if level > 1 else MultipletPartition.singlets().as_sets()
    return _levels()[level - 1][0].as_sets() - before


def c01_table():
    codon_labels.cache_clear()
    tensor_raise.cache_clear()
    tensor_lower.cache_clear()
    t0 = time.perf_counter()
    report = build_table()
    dt = time.perf_counter() - t0
    ok = not report.mismatches and dt < TABLE_SECONDS
    return ok, f"{len(report.mismatches)} mismatches of 64, {dt * 1e3:.1f} ms (< {TABLE_SECONDS:g} s)"


def c02_partition():
    report = build_table()
    sizes = sorted((len(b) for b in report.computed_partition), reverse=True)
    ok = report.partition_match and sizes == [16, 8, 8, 8, 8, 4, 4, 4, 4]
    return ok, f"partition equal to printed superscripts: {report.partition_match}, sizes {sizes}"


def c03_level1():
    part = _levels()[0][0]
    want = {_expand(x + z + "Y") for x in "CUGA" for z in "CUGA"} | {_expand(x + z + "R") for x in "CUGA" for z in "CUGA"}
    ok = part.as_sets() == want
    return ok, f"census {census(part)}, all XZY/XZR doublets: {ok}"


def c04_level2():
    part = _levels()[1][0]
    quartets = {m.codons for m in part.multiplets if len(m) == 4}
    want = {_expand(d + "N") for d in ("CC", "CU", "CG", "UC", "GG", "GC", "GU", "AC")}
    doublets = sum(len(m) == 2 for m in part.multiplets)
    ok = quartets == want and doublets == 16 and len(part.multiplets) == 24
    return ok, f"{len(quartets)} quartets (expected set: {quartets == want}), {doublets} doublets"


def c05_level3():
    new = _new_multiplets(3)
    want = {_expand("CUN") | _expand("UUR"), _expand("CGN") | _expand("AGR")}
    ok = new == want
    return ok, f"new multiplets at level 3: {sorted(len(m) for m in new)}, Leu+Arg sextets exact: {ok}"


def c06_level4():
    accepted = [e for e in _levels()[3][1] if e.accepted]
    ok = not accepted and not _new_multiplets(4)
    return ok, f"{len(accepted)} accepted level-4 events"


def c07_level5():
    new = _new_multiplets(5)
    final = _levels()[4][0]
    ser = _expand("UCN") | _expand("AGY")
    counts = census(final)
    ok = new == {ser} and counts == EXPECTED_CENSUS
    agr = final.multiplet_of("AGG").codons
    return ok, (f"Ser sextet UCN+AGY: {new == {ser}}; census {counts}; "
                f"AGR sits in the Arg sextet: {_expand('AGR') <= agr}")


def c08_crystal_algebra():
    bad = 0
    for j in spins_up_to(4):
        states = irrep_states(j)
        bad += len(states) != j.twice + 1
        bad += len({crystal_casimir(s) for s in states}) != 1
        for s in states:
            up, down = raise_(s), lower(s)
            bad += up is not None and lower(up) != s
            bad += down is not None and raise_(down) != s
    return bad == 0, f"{bad} violations over j = 0..4"


def c09_tensor_products():
    bad = 0
    pairs = [(a, b) for a in spins_up_to(3) for b in spins_up_to(3)]
    for j1, j2 in pairs:
        groups = components([j1, j2])
        Js = sorted(c.J for c in groups)
        bad += Js != [half(abs(j1 - j2)) + k for k in range(min(j1, j2).twice + 1)]
        for comp, members in groups.items():
            bad += [path_weight(p) for p in members] != [-comp.J + k for k in range(comp.J.twice + 1)]
            bad += [p for p in members if tensor_raise(p) is None] != [comp.highest_weight]
        for (a, b), jm in graph_components([j1, j2]).items():
            bad += couple(a.j, a.m, b.j, b.m) != jm
    for n in range(1, 5):
        for p in all_paths([half("1/2")] * n):
            bad += tensor_raise(p) != sig_raise(p) or tensor_lower(p) != sig_lower(p)
    return bad == 0, f"{bad} disagreements ({len(pairs)} spin pairs, (1/2)^n for n <= 4)"


def c10_qlimit():
    report = limit_checks(Q, max_x=4, max_j=2)
    failures = report.failures(Q_TOL)
    detail = f"max |ratio-1| = {report.max_deviation():.2e} at q={Q:g} (tol {Q_TOL:g})"
    if failures:
        detail += "; exceeding: " + ", ".join(failures)
    return not failures, detail


_CCN_OPS = (CrystalTensorOp.of(1, -1, 1, 0), CrystalTensorOp.of(1, -1, 2, 0))


def c11_misreading():
    third = [allowed(c, s) for c in CODONS for s in specs_at(3)
             if s.kind is Kind.TRANSITION and c[2] == s.source]
    part_a = len(third) == 32 and all(third)
    additive = checked = 0
    for codon in CODONS:
        src = codon_labels(codon)
        for pos in (1, 2, 3):
            for spec in specs_at(pos):
                if codon[pos - 1] != spec.source:
                    continue
                res = allowed(codon, spec)
                checked += 1
                additive += (res.predicted.m_H == src.m_H + res.operator.m_H
                             and res.predicted.m_V == src.m_V + res.operator.m_V)
    part_b = additive == checked
    reached = []
    for n in "CUGA":
        res = allowed_double("CC" + n, MisreadSpec(1, "C", "U"), MisreadSpec(2, "C", "U"))
        shape = res.operators == _CCN_OPS and res.virtual_codon == "UC" + n and res.target == "UU" + n
        if shape and res.allowed:
            reached.append(n)
    part_c = len(reached) == 4
    ok = part_a and part_b and part_c
    return ok, (f"third-position transitions allowed {sum(map(bool, third))}/32; "
                f"m-additivity {additive}/{checked}; CCN=>UUN lands on UUN labels for N in "
                f"{{{','.join(reached)}}} of {{C,U,G,A}}")


CRITERIA = [
    ("01 table labels", c01_table),
    ("02 irrep-copy partition", c02_partition),
    ("03 level 1 doublets", c03_level1),
    ("04 level 2 quartets", c04_level2),
    ("05 level 3 sextets", c05_level3),
    ("06 level 4 no merges", c06_level4),
    ("07 level 5 and census", c07_level5),
    ("08 crystal algebra", c08_crystal_algebra),
    ("09 tensor products", c09_tensor_products),
    ("10 q -> 0 limits", c10_qlimit),
    ("11 misreading predicate", c11_misreading),
]


def summary_lines() -> list[str]:
    return [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, (ok, detail) in RESULTS.items()]


@pytest.mark.parametrize("name,check", CRITERIA, ids=[n.replace(" ", "_") for n, _ in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    RESULTS[name] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    for name, check in CRITERIA:
        RESULTS[name] = check()
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
