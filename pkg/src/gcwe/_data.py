# Reference tables transcribed by hand; never regenerate these from code.

# Vertebrate mitochondrial code, in printed row order (left entry, then right
# entry of each row).  Columns: codon, amino acid, J_H, J_V, m_H, m_V, irrep
# superscript ("-" where the printed label carries none).
TABLE2 = """
CCC Pro 3/2 3/2 3/2 3/2 -       UCC Ser 3/2 3/2 1/2 3/2 -
CCU Pro 1/2 3/2 1/2 3/2 1       UCU Ser 1/2 3/2 -1/2 3/2 1
CCG Pro 3/2 1/2 3/2 1/2 1       UCG Ser 3/2 1/2 1/2 1/2 1
CCA Pro 1/2 1/2 1/2 1/2 1       UCA Ser 1/2 1/2 -1/2 1/2 1
CUC Leu 1/2 3/2 1/2 3/2 2       UUC Phe 3/2 3/2 -1/2 3/2 -
CUU Leu 1/2 3/2 -1/2 3/2 2      UUU Phe 3/2 3/2 -3/2 3/2 -
CUG Leu 1/2 1/2 1/2 1/2 3       UUG Leu 3/2 1/2 -1/2 1/2 1
CUA Leu 1/2 1/2 -1/2 1/2 3      UUA Leu 3/2 1/2 -3/2 1/2 1
CGC Arg 3/2 1/2 3/2 1/2 2       UGC Cys 3/2 1/2 1/2 1/2 2
CGU Arg 1/2 1/2 1/2 1/2 2       UGU Cys 1/2 1/2 -1/2 1/2 2
CGG Arg 3/2 1/2 3/2 -1/2 2      UGG Trp 3/2 1/2 1/2 -1/2 2
CGA Arg 1/2 1/2 1/2 -1/2 2      UGA Trp 1/2 1/2 -1/2 -1/2 2
CAC His 1/2 1/2 1/2 1/2 4       UAC Tyr 3/2 1/2 -1/2 1/2 2
CAU His 1/2 1/2 -1/2 1/2 4      UAU Tyr 3/2 1/2 -3/2 1/2 2
CAG Gln 1/2 1/2 1/2 -1/2 4      UAG Ter 3/2 1/2 -1/2 -1/2 2
CAA Gln 1/2 1/2 -1/2 -1/2 4     UAA Ter 3/2 1/2 -3/2 -1/2 2
GCC Ala 3/2 3/2 3/2 1/2 -       ACC Thr 3/2 3/2 1/2 1/2 -
GCU Ala 1/2 3/2 1/2 1/2 1       ACU Thr 1/2 3/2 -1/2 1/2 1
GCG Ala 3/2 1/2 3/2 -1/2 1      ACG Thr 3/2 1/2 1/2 -1/2 1
GCA Ala 1/2 1/2 1/2 -1/2 1      ACA Thr 1/2 1/2 -1/2 -1/2 1
GUC Val 1/2 3/2 1/2 1/2 2       AUC Ile 3/2 3/2 -1/2 1/2 -
GUU Val 1/2 3/2 -1/2 1/2 2      AUU Ile 3/2 3/2 -3/2 1/2 -
GUG Val 1/2 1/2 1/2 -1/2 3      AUG Met 3/2 1/2 -1/2 -1/2 1
GUA Val 1/2 1/2 -1/2 -1/2 3     AUA Met 3/2 1/2 -3/2 -1/2 1
GGC Gly 3/2 3/2 3/2 -1/2 -      AGC Ser 3/2 3/2 1/2 -1/2 -
GGU Gly 1/2 3/2 1/2 -1/2 1      AGU Ser 1/2 3/2 -1/2 -1/2 1
GGG Gly 3/2 3/2 3/2 -3/2 -      AGG Ter 3/2 3/2 1/2 -3/2 -
GGA Gly 1/2 3/2 1/2 -3/2 1      AGA Ter 1/2 3/2 -1/2 -3/2 1
GAC Asp 1/2 3/2 1/2 -1/2 2      AAC Asn 3/2 3/2 -1/2 -1/2 -
GAU Asp 1/2 3/2 -1/2 -1/2 2     AAU Asn 3/2 3/2 -3/2 -1/2 -
GAG Glu 1/2 3/2 1/2 -3/2 2      AAG Lys 3/2 3/2 -1/2 -3/2 -
GAA Glu 1/2 3/2 -1/2 -3/2 2     AAA Lys 3/2 3/2 -3/2 -3/2 -
"""

# Codons whose standard-code meaning differs from the mitochondrial column.
STANDARD_OVERRIDES = {"UGA": "Ter", "AUA": "Ile", "AGG": "Arg", "AGA": "Arg"}

# Relative frequency (units of 1e-3) and printed number of codons per amino
# acid.  Values as printed, including Tyr = 4.
TABLE1 = [
    ("Leu", 91, 6), ("Ala", 77, 4), ("Gly", 74, 4), ("Ser", 69, 6),
    ("Val", 66, 4), ("Glu", 62, 2), ("Thr", 59, 4), ("Lys", 59, 2),
    ("Ile", 53, 3), ("Asp", 52, 2), ("Arg", 51, 6), ("Pro", 51, 4),
    ("Asn", 43, 2), ("Gln", 41, 2), ("Phe", 40, 2), ("Tyr", 32, 4),
    ("Met", 24, 1), ("His", 23, 2), ("Cys", 20, 2), ("Trp", 14, 1),
]
