"""Seeded randomized audits of every closed form against brute force.

The same reports are available from the command line, e.g.
    kunzcone verify --suite ega --seed 7
which exits nonzero if any check fails.

Run:  python3 demos/04_verification_sweep.py
"""

import json

from kunzcone import SUITES, run_suite

for name in SUITES:
    report = run_suite(name, seed=7, max_m=10, max_beta=4)
    print(json.dumps(report, indent=2, sort_keys=True))

# same seed, same numbers: reports are reproducible
again = run_suite("ega", seed=7, max_m=10, max_beta=4)
assert again == run_suite("ega", seed=7, max_m=10, max_beta=4)
print("\nega suite is deterministic for a fixed seed")
