"""The box of a stable partition and its two-part table form.

Every stable shape q with key (s_1, ..., s_l) owns an s_1 x ... x s_l box
of partitions: exactly the shapes whose stable image is q.  The cell
indexed I has sum(I) parts, and the corner (1, ..., 1) is q itself.

Run:  python demos/03_boxes_and_tables.py
"""

from nilcommute import Partition, ar_notation, box_codes, box_partitions, dmap, key, table

q = Partition([8, 5, 2])
print("shape", tuple(q), "key", key(q))
codes = box_codes(q)
for idx, part in sorted(box_partitions(q).items()):
    print(f"  I={idx}  {codes[idx].tokens():<22} {ar_notation(part):<16} parts={len(part)}"
          f"  image={tuple(dmap(part))}")

# For a two-part shape (u, u-r) the box is a (r-1) x (u-r) grid.
print()
q = Partition([5, 2])
grid = table(q)
print("table of", tuple(q))
for k, row in enumerate(grid, start=1):
    print(f"  k={k}:  " + "   ".join(f"{ar_notation(p)}={tuple(p)}" for p in row))

# Every partition in the grid has the same stable image.
assert all(dmap(p) == q for row in grid for p in row)
print("all cells map back to", tuple(q))
