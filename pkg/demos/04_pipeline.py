"""
From 64 codons to 21 multiplets
===============================

Five levels of misreading, strongest first.  Multiplets formed earlier are
frozen and can only merge whole.
"""

from gcwe.multiplets import MultipletPartition, census, census_line, compare_to_code, run_level

part = MultipletPartition.singlets()
for level in range(1, 6):
    part, events = run_level(part, level)
    merged = [e for e in events if e.accepted]
    print(f"level {level}: {len(merged)} accepted events -> {census_line(census(part))}")
    if level >= 3:
        for e in merged:
            print("   ", e)

for m in sorted(part.multiplets, key=len, reverse=True)[:8]:
    print(len(m), m)

print(compare_to_code(part, "SUC").to_text())
