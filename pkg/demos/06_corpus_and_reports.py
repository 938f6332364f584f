"""The verification corpus and its reports.

The default corpus holds the full family grids and twenty direct products
(at least 120 groups, orders <= 20000).  Here we run a small slice through
the same machinery and show the JSON records the command-line `corpus`
writes; byte-identical reports for a fixed seed are part of the contract.
"""

import collections
import json

from centerbound import (Config, build_group, default_corpus, evaluate_all,
                         parse_group_spec)

corpus = default_corpus()
print("default corpus:", len(corpus.specs), "groups; first five:",
      [s.label for s in corpus.specs[:5]])

kinds = collections.Counter(s.family.name for s in corpus.specs)
print("family mix:", dict(sorted(kinds.items())))
print()

SLICE = ["symmetric(4)", "dicyclic(4)", "heisenberg(3)",
         "direct_product(symmetric(3),dihedral(4))"]
cfg = Config()
tallies = collections.Counter()
records = []
for label in SLICE:
    G = build_group(parse_group_spec("family:" + label))
    for v in evaluate_all(G, cfg):
        record = {"label": label}
        record.update(v.to_json())
        records.append(record)
        if not v.applicable:
            tallies["vacuous"] += 1
        elif not v.computable:
            tallies["uncomputable"] += 1
        elif v.holds:
            tallies["hold"] += 1
        else:
            tallies["violations"] += 1

records.sort(key=lambda r: (r["label"], r["statement"]))
print(f"slice of {len(SLICE)} groups:", dict(tallies))
print()
print("sample records as written to the JSONL report:")
for record in records[:3]:
    print(" ", json.dumps(record, sort_keys=True, separators=(",", ":")))
print()
print("full run: `centerbound corpus --out report.jsonl`")
print("   exit 0: all applicable verdicts computed and hold")
print("   exit 2: a violation (a bug: the statements are proved theorems)")
print("   exit 3: something was not computable under the caps")
