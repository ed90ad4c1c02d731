"""
How fragile is the census?
==========================

Rerun the pipeline while varying one operator rank at a time.
"""

from gcwe.cli import sensitivity
from gcwe.multiplets import PipelineConfig

base = PipelineConfig()
for name, values in [("a1", ["0", "1", "2"]), ("a2", ["1", "2", "3"]), ("d2", ["1", "2"]),
                     ("b_low", ["0", "1", "2"]), ("c_same", ["1", "2"])]:
    for row in sensitivity(base, [(name, values)]):
        mark = "*" if row["matches_expected"] else " "
        print(mark, name, row["assignment"][name], row["census_line"],
              f"kept {row['multiplets_kept']}/{row['multiplets_reference']}")
