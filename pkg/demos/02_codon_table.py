"""
Codon labels
============

Each nucleotide is a weight of sl(2)_H + sl(2)_V; a codon is a state of the
cube of the (1/2, 1/2) crystal and carries labels (J_H, J_V, m_H, m_V).
"""

from collections import Counter

from gcwe.genetic_code import build_table, codon_labels, display_copy_numbers, golden_table

report = build_table()
print("mismatches against the reference table:", len(report.mismatches))
print("irrep-copy partition agrees:", report.partition_match)

numbers = display_copy_numbers()
aa = {r.codon: r.aa_vmc for r in golden_table()}
for codon in ("CCC", "CUG", "CGU", "AGA", "UGA"):
    lab = codon_labels(codon)
    print(codon, aa[codon], lab.labels, f"copy ({lab.J_H},{lab.J_V})^{numbers[lab.copy]}")

# how the 64 codons spread over irreps
sizes = Counter((str(r.J_H), str(r.J_V)) for r in report.rows)
print(dict(sizes))
