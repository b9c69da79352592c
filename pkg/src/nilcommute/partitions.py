"""Integer partition arithmetic.

Partitions are weakly decreasing tuples of positive integers; the empty
tuple is the zero partition.  The workhorse operations (block parsing and
the box-removal step) act on frequency sequences, i.e. multiplicity
vectors indexed by part size, which keeps them cheap enough to iterate
tens of thousands of times.
"""

from __future__ import annotations

import math
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        prev = None
        for x in parts:
            if x < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if prev is not None and x > prev:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
            prev = x
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


def frequency(p: Sequence[int]) -> tuple[int, ...]:
    """Multiplicity vector of p: entry i-1 counts the parts equal to i."""
    if not p:
        return ()
    f = [0] * max(p)
    for x in p:
        f[x - 1] += 1
    return tuple(f)


def _freq1(p: Sequence[int]) -> list[int]:
    # 1-indexed scratch copy of the frequency vector (index 0 unused)
    f = [0] * ((max(p) + 1) if p else 1)
    for x in p:
        f[x] += 1
    return f


def _parts_from_freq1(f: Sequence[int]) -> Partition:
    out = []
    for j in range(len(f) - 1, 0, -1):
        out.extend([j] * f[j])
    return Partition(out)


def _tops_from_freq1(f: Sequence[int]) -> list[int]:
    # Right-to-left backward-pair parse: take the largest occupied index,
    # consume that index and the one below it as a block, repeat.
    tops = []
    j = len(f) - 1
    while j >= 1:
        if f[j] > 0:
            tops.append(j)
            j -= 2
        else:
            j -= 1
    return tops


def r_set(p: Sequence[int]) -> frozenset[int]:
    """Tops of the maximal almost-rectangular subpartitions, read from the top."""
    return frozenset(_tops_from_freq1(_freq1(p)))


def ar_blocks(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Maximal almost-rectangular blocks of p, largest parts first."""
    blocks = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] >= p[i] - 1:
            j += 1
        blocks.append(tuple(p[i:j]))
        i = j
    return blocks


def classify(p: Sequence[int]) -> str:
    """'B' if the lowest almost-rectangular block has top 1, else 'A'."""
    tops = _tops_from_freq1(_freq1(p))
    return "B" if tops and tops[-1] == 1 else "A"


def delta(p: Sequence[int]) -> Partition:
    """Remove one box from the lowest row of the largest part of each block."""
    f = _freq1(p)
    for j in _tops_from_freq1(f):
        f[j] -= 1
        if j >= 2:
            f[j - 1] += 1
    return _parts_from_freq1(f)


def almost_rectangular(m: int, k: int) -> Partition:
    """The partition of m into k parts differing pairwise by at most one."""
    if not 1 <= k <= m:
        raise ValueError(f"need m >= k >= 1, got m={m}, k={k}")
    q, rem = divmod(m, k)
    return Partition([q + 1] * rem + [q] * (k - rem))


def is_almost_rectangular(p: Sequence[int]) -> bool:
    return len(p) == 0 or p[0] - p[-1] <= 1


def is_stable(p: Sequence[int]) -> bool:
    """True iff consecutive parts differ by at least two."""
    return all(p[i] - p[i + 1] >= 2 for i in range(len(p) - 1))


def key(q: Sequence[int]) -> tuple[int, ...]:
    """Box side lengths (q_i - q_{i+1} - 1, ..., last part) of a stable partition."""
    if not q:
        raise ValueError("the zero partition has no key")
    if not is_stable(q):
        raise ValueError(f"not a stable partition: {tuple(q)}")
    return tuple(q[i] - q[i + 1] - 1 for i in range(len(q) - 1)) + (q[-1],)


class Dominance(Enum):
    GE = "greater-or-equal"
    LE = "less-or-equal"
    EQ = "equal"
    INCOMPARABLE = "incomparable"


def dominance_compare(p: Sequence[int], p2: Sequence[int]) -> Dominance:
    """Compare prefix sums of two partitions of equal size."""
    if sum(p) != sum(p2):
        raise ValueError(f"dominance compares equal sizes, got {sum(p)} and {sum(p2)}")
    ge = le = True
    s = s2 = 0
    for i in range(max(len(p), len(p2))):
        s += p[i] if i < len(p) else 0
        s2 += p2[i] if i < len(p2) else 0
        if s < s2:
            ge = False
        elif s > s2:
            le = False
    if ge and le:
        return Dominance.EQ
    if ge:
        return Dominance.GE
    if le:
        return Dominance.LE
    return Dominance.INCOMPARABLE


def dominates(p: Sequence[int], p2: Sequence[int]) -> bool:
    """True iff p >= p2 in dominance order (equality allowed)."""
    return dominance_compare(p, p2) in (Dominance.GE, Dominance.EQ)


def dominance_max(types: Iterable[Sequence[int]]) -> Partition:
    """The unique dominance maximum of a nonempty collection.

    Raises ValueError when the collection has no element dominating all
    others; callers treat that as a sampler bug, since generic draws always
    produce a comparable top type.
    """
    distinct = {Partition(t) for t in types}
    if not distinct:
        raise ValueError("empty collection has no dominance maximum")
    for cand in distinct:
        if all(dominates(cand, other) for other in distinct):
            return cand
    raise ValueError(f"no dominance maximum among {sorted(distinct, reverse=True)}")


def min_ar_cover(p: Sequence[int], *, size_limit: int = 20) -> int:
    """Minimum number of almost-rectangular groups covering the parts of p.

    Exhaustive search over set partitions of the multiset of parts,
    memoized on the frequency vector.  Deliberately independent of the
    greedy block decomposition so it can serve as an oracle for it.
    """
    if sum(p) > size_limit:
        raise ValueError(f"|p|={sum(p)} exceeds the brute-force limit {size_limit}")
    return _min_cover(frequency(p))


@lru_cache(maxsize=None)
def _min_cover(freq: tuple[int, ...]) -> int:
    while freq and freq[-1] == 0:
        freq = freq[:-1]
    if not freq:
        return 0
    v = len(freq)  # largest remaining part
    below = freq[v - 2] if v >= 2 else 0
    best = math.inf
    # the group holding a largest part uses x parts of size v and y of size v-1
    for x in range(1, freq[v - 1] + 1):
        for y in range(below + 1):
            nxt = list(freq)
            nxt[v - 1] -= x
            if v >= 2:
                nxt[v - 2] -= y
            best = min(best, 1 + _min_cover(tuple(nxt)))
    return int(best)


def jordan_from_coranks(coranks: Sequence[int]) -> Partition:
    """Partition whose kernel-dimension profile matches the given coranks.

    coranks[s] is the corank of the s-th power.  The profile must start at
    0, increase weakly with weakly decreasing increments, and end on a
    repeated (stationary) value; anything else signals a rank bug upstream.
    """
    c = list(coranks)
    if not c or c[0] != 0:
        raise ValueError(f"corank profile must start at 0: {c}")
    incs = [c[i] - c[i - 1] for i in range(1, len(c))]
    if any(d < 0 for d in incs):
        raise ValueError(f"corank profile must be weakly increasing: {c}")
    if any(incs[i] < incs[i + 1] for i in range(len(incs) - 1)):
        raise ValueError(f"corank increments must be weakly decreasing: {c}")
    if incs and incs[-1] != 0:
        raise ValueError(f"corank profile did not reach a stationary value: {c}")
    deltas = [d for d in incs if d > 0]
    parts = [sum(1 for d in deltas if d >= j) for j in range(1, (deltas[0] + 1) if deltas else 1)]
    return Partition(parts)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    def gen(m: int, cap: int):
        if m == 0:
            yield ()
            return
        for head in range(min(m, cap), 0, -1):
            for tail in gen(m - head, head):
                yield (head,) + tail

    if n < 0:
        return
    for t in gen(n, n if max_part is None else min(max_part, n)):
        yield Partition(t)


def ar_notation(p: Sequence[int]) -> str:
    """Display grouping parts into almost-rectangular blocks, e.g. (4,[3]^2)."""
    if not p:
        return "()"
    bits = []
    for blk in ar_blocks(p):
        bits.append(str(blk[0]) if len(blk) == 1 else f"[{sum(blk)}]^{len(blk)}")
    return "(" + ",".join(bits) + ")"
