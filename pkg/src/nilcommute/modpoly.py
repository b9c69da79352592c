"""Exact arithmetic over a large prime field.

Scalars live in GF(p); truncated polynomials represent elements of
k[t]/(t^N) as dense coefficient tuples; matrices are numpy int64 arrays
reduced mod p, with Gaussian elimination for exact ranks.  The default
prime is large enough that random cancellations never disturb desk-scale
Monte-Carlo runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_PRIME = 1_000_000_007

# int64 row operations need factor * entry < 2^63, and the split matmul
# below needs p * 2^15 * n < 2^63; both hold comfortably for p < 2^31
_INT64_SAFE = 2**31


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for moduli up to ~10^12."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class TruncPoly:
    """Element of k[t]/(t^N): coeffs[j] is the coefficient of t^j for j < N."""

    coeffs: tuple[int, ...]
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("the modulus exponent must be at least 1")
        object.__setattr__(self, "coeffs", tuple(int(c) % self.p for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs, n: int, p: int = DEFAULT_PRIME) -> "TruncPoly":
        """Build from an arbitrary coefficient sequence, padded or cut to length n."""
        c = [int(x) % p for x in list(coeffs)[:n]]
        return cls(tuple(c) + (0,) * (n - len(c)), p)

    @classmethod
    def zero(cls, n: int, p: int = DEFAULT_PRIME) -> "TruncPoly":
        return cls((0,) * n, p)

    @classmethod
    def one(cls, n: int, p: int = DEFAULT_PRIME) -> "TruncPoly":
        return cls((1,) + (0,) * (n - 1), p)

    @classmethod
    def t_power(cls, j: int, n: int, p: int = DEFAULT_PRIME) -> "TruncPoly":
        if j >= n:
            return cls.zero(n, p)
        return cls((0,) * j + (1,) + (0,) * (n - 1 - j), p)

    @property
    def n(self) -> int:
        """Modulus exponent N."""
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def order(self) -> int | float:
        """t-adic order; math.inf for the zero element."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return math.inf

    def _check(self, other: "TruncPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed primes {self.p} and {other.p}")
        if self.n != other.n:
            raise ValueError(
                f"mixed moduli t^{self.n} and t^{other.n}; retarget with mul_trunc or lift"
            )

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        self._check(other)
        return TruncPoly(tuple((a + b) % self.p for a, b in zip(self.coeffs, other.coeffs)), self.p)

    def __sub__(self, other: "TruncPoly") -> "TruncPoly":
        self._check(other)
        return TruncPoly(tuple((a - b) % self.p for a, b in zip(self.coeffs, other.coeffs)), self.p)

    def __neg__(self) -> "TruncPoly":
        return TruncPoly(tuple(-c % self.p for c in self.coeffs), self.p)

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        self._check(other)
        return self.mul_trunc(other, self.n)

    def mul_trunc(self, other: "TruncPoly", n: int) -> "TruncPoly":
        """Product truncated at t^n; the one place mixed moduli are allowed."""
        if self.p != other.p:
            raise ValueError(f"mixed primes {self.p} and {other.p}")
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                if b:
                    out[i + j] = (out[i + j] + a * b) % self.p
        return TruncPoly(tuple(out), self.p)

    def scale(self, c: int) -> "TruncPoly":
        c %= self.p
        return TruncPoly(tuple(a * c % self.p for a in self.coeffs), self.p)

    def lift(self, n: int) -> "TruncPoly":
        """Canonical representative in k[t]/(t^n), zero-padded or truncated."""
        return TruncPoly.from_coeffs(self.coeffs, n, self.p)

    def shift(self, r: int, n: int) -> "TruncPoly":
        """t^r * self, landing in k[t]/(t^n)."""
        return TruncPoly.from_coeffs((0,) * r + self.coeffs, n, self.p)


def det2(a: TruncPoly, b: TruncPoly, g: TruncPoly, h: TruncPoly, r: int) -> TruncPoly:
    """ab - g h t^r in k[t]/(t^n) with n = a.n, lifting the short entries.

    The canonical lift of b is ambiguous above t^(b.n); the ambiguity only
    reaches the result at order >= ord(a) + b.n, which is exactly where the
    corank formula caps it, so every coefficient that is ever used is
    intrinsic.
    """
    n = a.n
    ab = a.mul_trunc(b.lift(n), n)
    gh = g.lift(n).mul_trunc(h.lift(n), n)
    return ab - gh.shift(r, n)


def _as_field_matrix(mat, p: int) -> np.ndarray:
    dtype = np.int64 if p < _INT64_SAFE else object
    a = np.array(mat, dtype=dtype)
    return a % p


def rank(mat, p: int = DEFAULT_PRIME) -> int:
    """Exact rank over GF(p) by Gaussian elimination.

    Args:
        mat: rectangular array-like of integers (copied, not mutated).
        p: prime modulus.
    """
    a = _as_field_matrix(mat, p)
    if a.ndim != 2:
        raise ValueError("rank expects a 2-d matrix")
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivots = np.nonzero(a[r:, c])[0]
        if pivots.size == 0:
            continue
        pr = int(pivots[0]) + r
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        below = np.nonzero(a[r + 1 :, c])[0] + r + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def matmul(a, b, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Exact (a @ b) mod p.

    For p below 2^31 the factors are split into high and low 15-bit halves
    so the accumulation stays inside int64; larger primes fall back to
    Python integers.
    """
    if p < _INT64_SAFE:
        aa = np.asarray(a, dtype=np.int64) % p
        bb = np.asarray(b, dtype=np.int64) % p
        hi, lo = aa >> 15, aa & 0x7FFF
        return ((hi @ bb % p) * (1 << 15) + lo @ bb) % p
    aa = np.asarray(a, dtype=object) % p
    bb = np.asarray(b, dtype=object) % p
    return (aa @ bb) % p
