"""
Running the claim suite
=======================

Each claim has a hypothesis and an assertion.  Instances failing the
hypothesis are skipped; a claim with nothing checked counts as a failure.
"""

from strongdim.families import path, star, complete
from strongdim.verify import CorpusConfig, Instance, Named, run_on, run_suite

# a quick run on a reduced corpus
config = CorpusConfig(max_order=3, family_orders=(3, 5), random_pairs=10)
report = run_suite(config, claims=["gallai", "thD2", "complement-law", "cor-star"])
print("\n".join(report.summary_lines()))

# one claim on hand-picked instances
res = run_on("remark-examples", [Instance(Named("P_4", path(4)), Named("P_4", path(4)), part="i")])
print(res.records)

res = run_on("cor-star", [Instance(Named("K_1,2", star(2)), Named("K_2", complete(2)))])
print(res.records)
