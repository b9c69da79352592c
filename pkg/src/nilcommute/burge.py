"""Binary-word coding of partitions and the box construction.

A partition is encoded by iterating the block-removal step and recording,
for each iterate, whether its lowest almost-rectangular block reaches part
size 1 ('b') or not ('a'); the terminal zero partition contributes the
final 'a'.  Decoding runs the word right to left, inverting one removal
step per letter.  Reading the word left to right, the ends of the 'b'
runs are exactly the parts of the stable partition attached to the input,
and for a stable shape the full preimage of that map is a box of
partitions indexed by its key.
"""

from __future__ import annotations

import itertools
import math

from .partitions import (
    Partition,
    _freq1,
    _parts_from_freq1,
    _tops_from_freq1,
    key,
)


class BurgeDecodeError(ValueError):
    """The word is not the code of any partition."""


class BurgeWord(str):
    """Word over {a, b}; 'a' marks class-A iterates and 'b' class-B ones."""

    __slots__ = ()

    def __new__(cls, letters: str):
        if not letters or set(letters) - {"a", "b"}:
            raise ValueError(f"a code is a nonempty word over 'a'/'b': {letters!r}")
        if not letters.endswith("a"):
            raise ValueError(f"a code always ends with 'a': {letters!r}")
        return super().__new__(cls, letters)

    @classmethod
    def from_tokens(cls, text: str) -> "BurgeWord":
        """Parse run-length tokens like 'b a2 b2 a7 b5 a' (plain runs allowed)."""
        letters = []
        for tok in text.split():
            if len(tok) >= 2 and tok[0] in "ab" and tok[1:].isdigit():
                letters.append(tok[0] * int(tok[1:]))
            elif tok and not set(tok) - {"a", "b"}:
                letters.append(tok)
            else:
                raise ValueError(f"bad code token {tok!r}")
        return cls("".join(letters))

    def tokens(self) -> str:
        """Run-length display form, e.g. 'b a2 b2 a7 b5 a'."""
        out = []
        for letter, grp in itertools.groupby(self):
            n = len(list(grp))
            out.append(letter if n == 1 else f"{letter}{n}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"BurgeWord({str(self)!r})"


def encode(p) -> BurgeWord:
    """Code of p: one letter per block-removal iterate, ending at zero."""
    f = _freq1(p)
    remaining = sum(p)
    letters = []
    while remaining > 0:
        tops = _tops_from_freq1(f)
        letters.append("b" if tops[-1] == 1 else "a")
        for j in tops:
            f[j] -= 1
            if j >= 2:
                f[j - 1] += 1
        remaining -= len(tops)
    letters.append("a")
    return BurgeWord("".join(letters))


def _delta_preimage(f: list[int], want_b: bool) -> list[int] | None:
    """The frequency vector with one removal step to f and given bottom class.

    The block tops J of a preimage must tile the support of f: a top j
    covers the indices {j-1, j}, consecutive tops sit at least two apart
    with no support strictly between the blocks, and a top j >= 2 must find
    f[j-1] >= 1 to take back the box it pushed down.  Scanning the support
    downward, the only freedom is whether the current support maximum m is
    covered by a top at m or at m+1; a bottom top at 1 (and nothing else)
    may sit below the support.  Injectivity of the code means at most one
    choice sequence survives the bottom-class requirement.
    """
    support = [j for j in range(len(f) - 1, 0, -1) if f[j] > 0]
    results: list[list[int]] = []

    def extend(tops: list[int], ptr: int) -> None:
        if len(results) > 1:
            return
        bound = (tops[-1] - 2) if tops else math.inf
        if ptr >= len(support):
            if tops and tops[-1] == 1:
                if want_b:
                    results.append(tops)
                return
            if not want_b:
                results.append(tops)
            elif bound >= 1:
                results.append(tops + [1])
            return
        m = support[ptr]
        if m > bound:
            return
        for j in (m + 1, m):
            if j > bound or (j >= 2 and f[j - 1] == 0):
                continue
            q = ptr
            while q < len(support) and support[q] >= j - 1:
                q += 1
            extend(tops + [j], q)

    extend([], 0)
    if not results:
        return None
    if len(results) > 1:
        raise RuntimeError(f"ambiguous removal-step preimage, this is a bug: {results}")
    tops = results[0]
    out = list(f) + [0] * (max(tops, default=0) + 1 - len(f))
    for j in tops:
        out[j] += 1
        if j >= 2:
            out[j - 1] -= 1
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def decode(word) -> Partition:
    """The unique partition whose code is the given word."""
    w = word if isinstance(word, BurgeWord) else BurgeWord(str(word))
    f: list[int] = [0]
    for i in range(len(w) - 2, -1, -1):
        g = _delta_preimage(f, w[i] == "b")
        if g is None:
            raise BurgeDecodeError(f"{str(w)!r} is not a code (no preimage at letter {i + 1})")
        if len(g) == 1:
            raise BurgeDecodeError(f"{str(w)!r} is not a code (hits zero before its last letter)")
        f = g
    return _parts_from_freq1(f)


def dmap(p) -> Partition:
    """Largest Jordan type commuting generically with p, read off the code.

    The parts are the positions ending each run of 'b' letters.
    """
    w = encode(p)
    ends = [
        i + 1
        for i in range(len(w))
        if w[i] == "b" and (i + 1 == len(w) or w[i + 1] == "a")
    ]
    return Partition(sorted(ends, reverse=True))


def check_cell(u: int, r: int, k: int, l: int) -> None:
    """Validate a table cell (k, l) for the two-part shape (u, u-r)."""
    if not u > r >= 2:
        raise ValueError(f"need u > r >= 2, got u={u}, r={r}")
    if not (1 <= k <= r - 1 and 1 <= l <= u - r):
        raise ValueError(f"cell ({k},{l}) outside the {r - 1}x{u - r} table of ({u},{u - r})")


def two_part_code(u: int, r: int, k: int, l: int) -> BurgeWord:
    """Code of the (k, l) entry of the table attached to (u, u-r)."""
    check_cell(u, r, k, l)
    return BurgeWord("a" * (u - r - l) + "b" * l + "a" * (r - k) + "b" * k + "a")


def box_codes(q) -> dict[tuple[int, ...], BurgeWord]:
    """Codes of the box of a stable shape, indexed by 1-based box positions.

    Position I = (i_1, ..., i_l) against the key (s_1, ..., s_l) yields the
    word  a^(s_l - i_l) b^(i_l) a^(s_{l-1} - i_{l-1} + 1) b^(i_{l-1}) ... b^(i_1) a.
    """
    s = key(q)
    out: dict[tuple[int, ...], BurgeWord] = {}
    for idx in itertools.product(*(range(1, si + 1) for si in s)):
        chunks = []
        last = len(s) - 1
        for pos in range(last, -1, -1):
            alphas = s[pos] - idx[pos] + (0 if pos == last else 1)
            chunks.append("a" * alphas + "b" * idx[pos])
        out[idx] = BurgeWord("".join(chunks) + "a")
    return out


def box_partitions(q) -> dict[tuple[int, ...], Partition]:
    """Decoded box of a stable shape; cell I has sum(I) parts."""
    out: dict[tuple[int, ...], Partition] = {}
    for idx, code in box_codes(q).items():
        p = decode(code)
        if len(p) != sum(idx):
            raise RuntimeError(f"box cell {idx} decoded to {p} with {len(p)} parts")
        out[idx] = p
    return out


def table(q) -> list[list[Partition]]:
    """The (r-1) x (u-r) grid of the box of a two-part stable shape.

    Row k, column l (1-based) is the box cell (i_1, i_2) = (k, l).
    """
    q = Partition(q)
    if len(q) != 2:
        raise ValueError(f"table needs a two-part stable partition, got {tuple(q)}")
    cells = box_partitions(q)
    s1, s2 = key(q)
    return [[cells[k, l] for l in range(1, s2 + 1)] for k in range(1, s1 + 1)]
