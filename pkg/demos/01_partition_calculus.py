"""Partition calculus walkthrough: blocks, the removal step, stable shapes.

Run:  python demos/01_partition_calculus.py
"""

from nilcommute import (
    Partition,
    ar_blocks,
    ar_notation,
    classify,
    delta,
    frequency,
    is_stable,
    key,
    min_ar_cover,
    r_set,
)

p = Partition([7, 6, 5, 5, 5, 2, 2, 1])
print("partition:", tuple(p), "size", p.size)
print("frequency vector:", frequency(p))

# Maximal almost-rectangular blocks, read from the largest part down.
# Each block holds parts of at most two adjacent sizes.
print("blocks:", ar_blocks(p))
print("block tops:", sorted(r_set(p), reverse=True))
print("class:", classify(p), "(B means the lowest block bottoms out at part size 1)")

# The removal step deletes one box from the lowest row of the largest
# part of every block.  Iterating it drives any partition to zero.
cur = p
for step in range(4):
    print(f"step {step}: {ar_notation(cur)} = {tuple(cur)}  class {classify(cur)}")
    cur = delta(cur)

# Stable partitions (consecutive parts differing by at least two) are the
# shapes whose nilpotent commutant is a linear space; their key lists the
# side lengths of the box of partitions attached to them (see demo 03).
for q in [(5, 2), (8, 5, 2), (5, 4)]:
    q = Partition(q)
    if is_stable(q):
        print(tuple(q), "is stable with key", key(q))
    else:
        print(tuple(q), "is not stable")

# The minimum number of almost-rectangular groups covering the parts,
# found by exhaustive search over groupings.
print("minimal cover of (5,4,3,3,3,2,2,1):", min_ar_cover((5, 4, 3, 3, 3, 2, 2, 1), size_limit=23))
