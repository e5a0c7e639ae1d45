import random
import sys
from functools import reduce
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kunzcone import (
    GluingSpec,
    NumericalSemigroup,
    AlphaIsGenerator,
    AlphaNotInS,
    NotCoprime,
)


@pytest.fixture(scope="session")
def gluing_sweep():
    """Deterministic sweep of valid gluing specs over random bases.

    Shared between the gluing-correctness and round-trip acceptance tests
    so the (fairly large) enumeration runs once.
    """
    rng = random.Random(20240817)
    specs = []
    bases = 0
    while bases < 200:
        m = rng.randint(2, 12)
        gens = [m] + [rng.randint(m + 1, 3 * m) for _ in range(rng.randint(1, 4))]
        if reduce(gcd, gens) != 1:
            continue
        S = NumericalSemigroup(gens)
        bases += 1
        bound = S.frobenius() + 3 * S.multiplicity
        for beta in range(2, 6):
            for alpha in range(1, bound + 1):
                try:
                    specs.append(GluingSpec(S, alpha, beta))
                except (AlphaIsGenerator, AlphaNotInS, NotCoprime):
                    continue
    return specs
