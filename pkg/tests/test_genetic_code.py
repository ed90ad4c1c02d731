import pytest

from gcwe.crystal_core import half
from gcwe.genetic_code import (
    CODONS,
    NUCLEOTIDE_WEIGHTS,
    TABLE_ORDER,
    GeneticCode,
    build_table,
    codon_labels,
    display_copy_numbers,
    golden_table,
    parse_codon,
    synonymous_classes,
)

H, T = half("1/2"), half("3/2")


def test_codon_orderings():
    assert len(CODONS) == len(set(CODONS)) == 64
    assert sorted(TABLE_ORDER) == sorted(CODONS)
    assert TABLE_ORDER[:4] == ("CCC", "UCC", "CCU", "UCU")


def test_parse_codon_normalises():
    assert parse_codon(" tcg ") == "UCG"
    for bad in ("CC", "CCCC", "CXG"):
        with pytest.raises(ValueError):
            parse_codon(bad)


def test_weights_sum_to_m():
    for codon in CODONS:
        lab = codon_labels(codon)
        assert lab.m_H == sum((NUCLEOTIDE_WEIGHTS[n][0] for n in codon), half(0))
        assert lab.m_V == sum((NUCLEOTIDE_WEIGHTS[n][1] for n in codon), half(0))


def test_spot_labels():
    assert tuple(codon_labels("CCC").labels) == (T, T, T, T)
    assert tuple(codon_labels("CUG").labels) == (H, H, H, H)
    assert tuple(codon_labels("AAA").labels) == (T, T, -T, -T)


def test_table_has_no_mismatches():
    report = build_table()
    assert report.mismatches == []
    assert report.partition_match and report.ok


def test_copy_partition_sizes():
    sizes = sorted(len(b) for b in build_table().computed_partition)
    assert sizes == [4, 4, 4, 4, 8, 8, 8, 8, 16]


def test_display_numbers_match_superscripts():
    numbers = display_copy_numbers()
    for row in golden_table():
        if row.superscript is not None:
            assert numbers[codon_labels(row.codon).copy] == row.superscript, row.codon


@pytest.mark.parametrize("code,sizes", [
    ("VMC", {"Leu": 6, "Ser": 6, "Arg": 4, "Ter": 4, "Met": 2, "Trp": 2, "Ile": 2}),
    ("SUC", {"Leu": 6, "Ser": 6, "Arg": 6, "Ter": 3, "Met": 1, "Trp": 1, "Ile": 3}),
])
def test_synonymous_class_sizes(code, sizes):
    classes = synonymous_classes(code)
    assert sum(len(c) for c in classes.values()) == 64
    for aa, n in sizes.items():
        assert len(classes[aa]) == n, aa


def test_sense_only_drops_stop():
    assert "Ter" not in synonymous_classes(GeneticCode.SUC, include_stop=False)
