"""Sampling the nilpotent commutant and reading off Jordan types.

Run:  python demos/04_commutant_sampling.py
"""

import numpy as np

from nilcommute import (
    CommutatorElement,
    Partition,
    dmap,
    dmap_oracle,
    matmul,
    sample_commutator,
)

rng = np.random.default_rng(2024)

# The element whose assembled matrix is the Jordan matrix itself.
j = CommutatorElement.jordan((5, 2))
print("J_(5,2):")
print(j.assemble())
print("type:", tuple(j.jordan_type()))

# For a stable shape the nilpotent commutant is a linear space; a random
# element almost surely realizes the shape itself as its Jordan type.
q = Partition([8, 5, 2])
e = sample_commutator(q, rng)
print("random commutant element of", tuple(q), "has type", tuple(e.jordan_type()))

# Block composition assembles to the honest matrix product.
e2 = sample_commutator(q, rng)
assert np.array_equal((e @ e2).assemble(), matmul(e.assemble(), e2.assemble()))
print("block multiplication matches assembled matrix multiplication")

# For an arbitrary shape, a Monte-Carlo sweep over nilpotent commutant
# elements recovers the stable image: the dominance-largest observed type.
for p in [(2, 1, 1), (3, 3), (4, 2, 2, 1)]:
    est = dmap_oracle(p, 200, rng)
    print(f"oracle image of {p}: {tuple(est)}   word-based image: {tuple(dmap(p))}")
