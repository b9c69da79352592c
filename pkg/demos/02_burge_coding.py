"""The binary-word coding of partitions and the stable-image map.

Run:  python demos/02_burge_coding.py
"""

from nilcommute import BurgeWord, Partition, classify, decode, delta, dmap, encode

p = Partition([5, 4, 3, 3, 3, 2, 2, 1])

# One letter per removal-step iterate: 'a' while the lowest block stays
# above part size 1, 'b' when it reaches it, closing with 'a' at zero.
cur = p
letters = []
while cur:
    letters.append("b" if classify(cur) == "B" else "a")
    cur = delta(cur)
letters.append("a")
print("letters:", "".join(letters))

w = encode(p)
print("encode: ", w, " displayed as", repr(w.tokens()))
assert "".join(letters) == w

# Decoding inverts the iteration one letter at a time, right to left.
print("decode round-trip:", tuple(decode(w)))

# Codes parse from run-length tokens too.
print("decode 'a2 b2 a':", tuple(decode(BurgeWord.from_tokens("a2 b2 a"))))

# The ends of the 'b' runs are the parts of the stable partition attached
# to p: the Jordan type of a generic nilpotent matrix commuting with one
# of type p.  Here the runs end at letters 1, 5 and 17.
print("stable image:", tuple(dmap(p)))

# Almost-rectangular partitions (m into k parts) have the simplest codes.
for m, k in [(4, 2), (7, 5)]:
    from nilcommute import almost_rectangular

    q = almost_rectangular(m, k)
    print(f"code of {tuple(q)}:", encode(q).tokens(), f"(a^{m - k} b^{k} a)")
