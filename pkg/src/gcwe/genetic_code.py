"""Codons as states of the three-fold product of the (1/2, 1/2) crystal.

Each nucleotide carries a weight for sl_H(2) and one for sl_V(2); a codon is
therefore a pair of length-3 spin-1/2 paths, one per factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from . import _data
from .crystal_core import HalfInt, half
from .tensor_crystal import ComponentId, Path, component_of, format_path, sign_path

__all__ = [
    "NUCLEOTIDES",
    "NUCLEOTIDE_WEIGHTS",
    "CODONS",
    "TABLE_ORDER",
    "Labels",
    "CodonLabel",
    "GoldenRow",
    "GeneticCode",
    "parse_codon",
    "codon_paths",
    "codon_labels",
    "copy_of",
    "golden_table",
    "amino_acid_map",
    "synonymous_classes",
    "build_table",
    "TableReport",
    "display_copy_numbers",
    "FREQUENCIES",
]

NUCLEOTIDES = "CUGA"

_H = half("1/2")
NUCLEOTIDE_WEIGHTS: dict[str, tuple[HalfInt, HalfInt]] = {
    "C": (_H, _H),
    "U": (-_H, _H),
    "G": (_H, -_H),
    "A": (-_H, -_H),
}

# canonical order: first letter slowest, C < U < G < A
CODONS: tuple[str, ...] = tuple(a + b + c for a in NUCLEOTIDES for b in NUCLEOTIDES for c in NUCLEOTIDES)


class Labels(NamedTuple):
    J_H: HalfInt
    J_V: HalfInt
    m_H: HalfInt
    m_V: HalfInt

    def __str__(self):
        return f"({self.J_H},{self.J_V},{self.m_H},{self.m_V})"


@dataclass(frozen=True)
class CodonLabel:
    codon: str
    J_H: HalfInt
    J_V: HalfInt
    m_H: HalfInt
    m_V: HalfInt
    copy_H: ComponentId
    copy_V: ComponentId

    @property
    def labels(self) -> Labels:
        return Labels(self.J_H, self.J_V, self.m_H, self.m_V)

    @property
    def copy(self) -> tuple[Path, Path]:
        """The H (x) V irrep copy, as a pair of highest-weight paths."""
        return (self.copy_H.highest_weight, self.copy_V.highest_weight)


def parse_codon(text: str) -> str:
    """Normalise a codon string; DNA's T is read as U."""
    codon = text.strip().upper().replace("T", "U")
    if len(codon) != 3 or any(c not in NUCLEOTIDES for c in codon):
        raise ValueError(f"not a codon: {text!r}")
    return codon


def codon_paths(codon: str) -> tuple[Path, Path]:
    """The (H, V) spin-1/2 paths of a codon in reading order."""
    codon = parse_codon(codon)
    return (
        sign_path([NUCLEOTIDE_WEIGHTS[n][0] for n in codon]),
        sign_path([NUCLEOTIDE_WEIGHTS[n][1] for n in codon]),
    )


@lru_cache(maxsize=None)
def codon_labels(codon: str) -> CodonLabel:
    codon = parse_codon(codon)
    h_path, v_path = codon_paths(codon)
    copy_h, m_h = component_of(h_path)
    copy_v, m_v = component_of(v_path)
    return CodonLabel(codon, copy_h.J, copy_v.J, m_h, m_v, copy_h, copy_v)


def copy_of(codon: str) -> tuple[Path, Path]:
    return codon_labels(codon).copy


class GeneticCode(str, Enum):
    VMC = "VMC"
    SUC = "SUC"


@dataclass(frozen=True)
class GoldenRow:
    codon: str
    aa_vmc: str
    labels: Labels
    superscript: int | None

    @property
    def aa_suc(self) -> str:
        return _data.STANDARD_OVERRIDES.get(self.codon, self.aa_vmc)

    @property
    def irrep_key(self) -> tuple:
        """(J_H, J_V, superscript): the printed irrep identity."""
        return (self.labels.J_H, self.labels.J_V, self.superscript)


@lru_cache(maxsize=None)
def golden_table() -> tuple[GoldenRow, ...]:
    """The embedded reference table, in printed row order."""
    rows = []
    for line in _data.TABLE2.strip().splitlines():
        fields = line.split()
        for k in (0, 7):
            codon, aa, jh, jv, mh, mv, sup = fields[k : k + 7]
            labels = Labels(half(jh), half(jv), half(mh), half(mv))
            rows.append(GoldenRow(codon, aa, labels, None if sup == "-" else int(sup)))
    return tuple(rows)


TABLE_ORDER: tuple[str, ...] = tuple(r.codon for r in golden_table())


@lru_cache(maxsize=None)
def _amino_acid_map(code: GeneticCode) -> dict[str, str]:
    if code is GeneticCode.VMC:
        return {r.codon: r.aa_vmc for r in golden_table()}
    return {r.codon: r.aa_suc for r in golden_table()}


def amino_acid_map(code: GeneticCode | str) -> dict[str, str]:
    """Codon -> amino acid (three-letter) or ``"Ter"`` for the given code."""
    return dict(_amino_acid_map(GeneticCode(code)))


def synonymous_classes(code: GeneticCode | str, include_stop: bool = True) -> dict[str, frozenset[str]]:
    classes: dict[str, set[str]] = {}
    for codon, aa in amino_acid_map(code).items():
        if aa == "Ter" and not include_stop:
            continue
        classes.setdefault(aa, set()).add(codon)
    return {aa: frozenset(c) for aa, c in classes.items()}


def display_copy_numbers() -> dict[tuple[Path, Path], int]:
    """Number the H (x) V irrep copies of each (J_H, J_V) from 1.

    Copies are ordered by H copy, then V copy; within one factor the copy
    whose highest-weight path reads ``++-`` precedes ``+-+``.
    """
    by_pair: dict[tuple, set] = {}
    for codon in CODONS:
        lab = codon_labels(codon)
        by_pair.setdefault((lab.J_H, lab.J_V), set()).add(lab.copy)
    numbers: dict[tuple[Path, Path], int] = {}
    for copies in by_pair.values():
        ordered = sorted(copies, key=lambda c: (format_path(c[0]), format_path(c[1])))
        numbers.update({c: k for k, c in enumerate(ordered, 1)})
    return numbers


def _partition(keys: dict[str, object]) -> set[frozenset[str]]:
    blocks: dict[object, set[str]] = {}
    for codon, key in keys.items():
        blocks.setdefault(key, set()).add(codon)
    return {frozenset(b) for b in blocks.values()}


@dataclass
class TableReport:
    rows: list[CodonLabel]
    mismatches: list[tuple[str, Labels, Labels]] = field(default_factory=list)
    computed_partition: set[frozenset[str]] = field(default_factory=set)
    golden_partition: set[frozenset[str]] = field(default_factory=set)

    @property
    def partition_match(self) -> bool:
        return self.computed_partition == self.golden_partition

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.partition_match


def build_table() -> TableReport:
    """Compute all 64 codon labels and diff them against the embedded table.

    Labels are compared row by row; irrep copies are compared as set
    partitions of the 64 codons (the printed superscripts are not compared
    numerically).
    """
    golden = {r.codon: r for r in golden_table()}
    rows = [codon_labels(c) for c in TABLE_ORDER]
    report = TableReport(rows)
    for lab in rows:
        expected = golden[lab.codon].labels
        if lab.labels != expected:
            report.mismatches.append((lab.codon, lab.labels, expected))
    report.computed_partition = _partition({lab.codon: lab.copy for lab in rows})
    report.golden_partition = _partition({c: r.irrep_key for c, r in golden.items()})
    return report


def format_copy(copy: ComponentId) -> str:
    return format_path(copy.highest_weight)


FREQUENCIES: tuple[tuple[str, int, int], ...] = tuple(_data.TABLE1)
