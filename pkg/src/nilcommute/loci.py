"""Equation sets cutting out the Jordan-type strata of two-block commutants,
generic on-locus samplers, and the verification, containment, intersection
and survey harnesses.

A table cell (k, l) of the shape (u, u-r) is cut out by k + l - 2
equations: the vanishing coordinates a_1..a_{k-1} and b_1..b_{l-1} when
k + l <= r, otherwise a_1..a_{k-1}, b_1..b_{r-k-1} and the staircase of
bilinear forms sum_j a_{k+j} b_{r-k+d-j} - sum_j g_j h_{d-j} for
d = 0..k+l-r-1, which are the coefficients of t^{r+d} in ab - g h t^r.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .burge import check_cell, table
from .commutator import TwoPartElement, sample_commutator, sample_two_part
from .modpoly import DEFAULT_PRIME, TruncPoly, rank
from .partitions import Partition, dominance_max
from .tropical import predicted_jordan_type


@dataclass(frozen=True)
class Quadric:
    """Bilinear form  sum a_i b_j - sum g_i h_j  with fixed index pairs."""

    ab_terms: tuple[tuple[int, int], ...]
    gh_terms: tuple[tuple[int, int], ...]

    def evaluate(self, e: TwoPartElement) -> int:
        acc = 0
        for ai, bi in self.ab_terms:
            acc += e.a.coeffs[ai] * e.b.coeffs[bi]
        for gi, hi in self.gh_terms:
            acc -= e.g.coeffs[gi] * e.h.coeffs[hi]
        return acc % e.p

    def label(self) -> str:
        bits = [f"a{i}b{j}" for i, j in self.ab_terms]
        out = "+".join(bits) if bits else "0"
        for i, j in self.gh_terms:
            out += f"-g{i}h{j}"
        return out


@dataclass(frozen=True)
class EquationSet:
    """Defining equations of one table locus."""

    u: int
    r: int
    k: int
    l: int
    linear_a: tuple[int, ...]
    linear_b: tuple[int, ...]
    quadrics: tuple[Quadric, ...]

    @property
    def codim(self) -> int:
        return len(self.linear_a) + len(self.linear_b) + len(self.quadrics)

    @property
    def ambient_dim(self) -> int:
        # coordinates a_1..a_{u-1}, b_1..b_{u-r-1}, g_0.., h_0..
        return 4 * self.u - 3 * self.r - 2

    @property
    def linear_vars(self) -> tuple[str, ...]:
        return tuple(f"a{i}" for i in self.linear_a) + tuple(f"b{i}" for i in self.linear_b)

    def labels(self) -> tuple[str, ...]:
        return self.linear_vars + tuple(qd.label() for qd in self.quadrics)

    def _check_shape(self, e: TwoPartElement) -> None:
        if (e.u, e.r) != (self.u, self.r):
            raise ValueError(f"element of shape ({e.u},{e.r}) against equations ({self.u},{self.r})")

    def evaluate(self, e: TwoPartElement) -> tuple[int, ...]:
        """Values of all equations at e; all zero iff e lies on the locus."""
        self._check_shape(e)
        vals = [e.a.coeffs[i] for i in self.linear_a]
        vals += [e.b.coeffs[i] for i in self.linear_b]
        vals += [qd.evaluate(e) for qd in self.quadrics]
        return tuple(vals)

    def satisfied_by(self, e: TwoPartElement) -> bool:
        return not any(self.evaluate(e))

    def order_form_holds(self, e: TwoPartElement) -> bool:
        """The valuation reading: ord(a) >= k and ord(ab - g h t^r) >= k + l.

        Equivalent to vanishing of the equations away from the thin stratum
        ord(a) > k.
        """
        self._check_shape(e)
        return e.a.order() >= self.k and e.det2().order() >= self.k + self.l

    def _columns(self) -> dict[str, int]:
        u, r = self.u, self.r
        cols = {}
        for i in range(1, u):
            cols[f"a{i}"] = i - 1
        off = u - 1
        for i in range(1, u - r):
            cols[f"b{i}"] = off + i - 1
        off += u - r - 1
        for j in range(u - r):
            cols[f"g{j}"] = off + j
        off += u - r
        for j in range(u - r):
            cols[f"h{j}"] = off + j
        return cols

    def jacobian_at(self, e: TwoPartElement) -> np.ndarray:
        """Matrix of partial derivatives, rows = equations, columns = coordinates."""
        self._check_shape(e)
        cols = self._columns()
        jac = np.zeros((self.codim, self.ambient_dim), dtype=np.int64)
        row = 0
        for i in self.linear_a:
            jac[row, cols[f"a{i}"]] = 1
            row += 1
        for i in self.linear_b:
            jac[row, cols[f"b{i}"]] = 1
            row += 1
        p = e.p
        for qd in self.quadrics:
            for ai, bi in qd.ab_terms:
                jac[row, cols[f"a{ai}"]] = (jac[row, cols[f"a{ai}"]] + e.b.coeffs[bi]) % p
                jac[row, cols[f"b{bi}"]] = (jac[row, cols[f"b{bi}"]] + e.a.coeffs[ai]) % p
            for gi, hi in qd.gh_terms:
                jac[row, cols[f"g{gi}"]] = (jac[row, cols[f"g{gi}"]] - e.h.coeffs[hi]) % p
                jac[row, cols[f"h{hi}"]] = (jac[row, cols[f"h{hi}"]] - e.g.coeffs[gi]) % p
            row += 1
        return jac

    def jacobian_rank_at(self, e: TwoPartElement) -> int:
        return rank(self.jacobian_at(e), e.p)


def equations(u: int, r: int, k: int, l: int) -> EquationSet:
    """The k + l - 2 defining equations of the (k, l) table locus."""
    check_cell(u, r, k, l)
    if k + l <= r:
        lin_b = tuple(range(1, l))
        quads: tuple[Quadric, ...] = ()
    else:
        lin_b = tuple(range(1, r - k))
        quads = tuple(
            Quadric(
                ab_terms=tuple((k + j, r - k + d - j) for j in range(d + 1)),
                gh_terms=tuple((j, d - j) for j in range(d + 1)),
            )
            for d in range(k + l - r)
        )
    return EquationSet(u, r, k, l, tuple(range(1, k)), lin_b, quads)


def sample_on_locus(u: int, r: int, k: int, l: int, rng, *, prime: int = DEFAULT_PRIME) -> TwoPartElement:
    """Generic point of the (k, l) locus.

    Zeroes the linear coordinates, draws a_k nonzero and everything else
    uniformly, then solves each bilinear equation for the next b
    coordinate (each is linear in it with coefficient a_k).
    """
    eqs = equations(u, r, k, l)
    m = u - r
    a = [0] * u
    a[k] = 1 + int(rng.integers(prime - 1))
    for i in range(k + 1, u):
        a[i] = int(rng.integers(prime))
    g = [int(x) for x in rng.integers(prime, size=m)]
    h = [int(x) for x in rng.integers(prime, size=m)]
    b = [0] * m
    if eqs.quadrics:
        inv_ak = pow(a[k], -1, prime)
        for d, qd in enumerate(eqs.quadrics):
            rhs = 0
            for gi, hi in qd.gh_terms:
                rhs += g[gi] * h[hi]
            for ai, bi in qd.ab_terms[1:]:
                rhs -= a[ai] * b[bi]
            b[r - k + d] = rhs % prime * inv_ak % prime
    for i in range(l, m):
        b[i] = int(rng.integers(prime))
    return TwoPartElement(
        u, r,
        TruncPoly(tuple(a), prime),
        TruncPoly(tuple(b), prime),
        TruncPoly(tuple(g), prime),
        TruncPoly(tuple(h), prime),
    )


def _type_counts(counter: Counter) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple(
        (tuple(t), c) for t, c in sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    )


@dataclass(frozen=True)
class CellReport:
    """Verification record for one table cell."""

    q: Partition
    cell: tuple[int, int]
    prime: int
    seed: int
    samples: int
    max_type: Partition
    expected: Partition
    match_rate: float
    jacobian_rate: float
    converse_hits: int
    converse_ok: bool
    tropical_agree: bool

    @property
    def jacobian_rank_ok(self) -> bool:
        return self.jacobian_rate >= 0.99

    @property
    def passed(self) -> bool:
        return (
            self.max_type == self.expected
            and self.match_rate >= 0.95
            and self.jacobian_rank_ok
            and self.tropical_agree
            and self.converse_ok
        )

    def to_dict(self) -> dict:
        return {
            "q": list(self.q),
            "cell": list(self.cell),
            "prime": self.prime,
            "seed": self.seed,
            "samples": self.samples,
            "max_type": list(self.max_type),
            "expected": list(self.expected),
            "jacobian_rank_ok": self.jacobian_rank_ok,
            "tropical_agree": self.tropical_agree,
            "pass": self.passed,
            "match_rate": self.match_rate,
            "converse_hits": self.converse_hits,
            "converse_ok": self.converse_ok,
        }


def verify_cell(
    u: int,
    r: int,
    k: int,
    l: int,
    samples: int,
    *,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
) -> CellReport:
    """Check one cell: generic sampled types against the table entry, the
    converse inclusion on independent commutant samples, jacobian ranks,
    and the tropical prediction.

    Cells whose type is never hit by the independent samples count as a
    vacuous pass for the converse direction.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    eqs = equations(u, r, k, l)
    expected = table((u, u - r))[k - 1][l - 1]
    rng = np.random.default_rng([abs(seed), u, r, k, l])
    types = []
    jac_hits = 0
    for _ in range(samples):
        e = sample_on_locus(u, r, k, l, rng, prime=prime)
        types.append(e.jordan_type())
        jac_hits += eqs.jacobian_rank_at(e) == eqs.codim
    max_type = dominance_max(types)
    match_rate = sum(t == expected for t in types) / samples
    converse_hits = 0
    converse_ok = True
    for _ in range(samples):
        amb = sample_two_part(u, r, rng, p=prime)
        if amb.jordan_type() == expected:
            converse_hits += 1
            converse_ok = converse_ok and eqs.satisfied_by(amb)
    return CellReport(
        q=Partition((u, u - r)),
        cell=(k, l),
        prime=prime,
        seed=seed,
        samples=samples,
        max_type=max_type,
        expected=expected,
        match_rate=match_rate,
        jacobian_rate=jac_hits / samples,
        converse_hits=converse_hits,
        converse_ok=converse_ok,
        tropical_agree=predicted_jordan_type(u, r, k, l) == expected,
    )


@dataclass(frozen=True)
class ContainmentReport:
    """Closure containment of the inner cell's locus in the outer one."""

    q: Partition
    outer: tuple[int, int]
    inner: tuple[int, int]
    prime: int
    seed: int
    samples: int
    predicate: bool
    montecarlo: bool

    @property
    def agree(self) -> bool:
        return self.predicate == self.montecarlo

    def to_dict(self) -> dict:
        return {
            "q": list(self.q),
            "outer": list(self.outer),
            "inner": list(self.inner),
            "prime": self.prime,
            "seed": self.seed,
            "samples": self.samples,
            "predicate": self.predicate,
            "montecarlo": self.montecarlo,
            "agree": self.agree,
        }


def closure_contains(
    u: int,
    r: int,
    outer: tuple[int, int],
    inner: tuple[int, int],
    samples: int,
    *,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
) -> ContainmentReport:
    """Does the closure of the outer cell's stratum contain the inner one?

    The closed form is (k = k' and l <= l') or (k <= k', l <= l' and
    k' + l <= r); the Monte-Carlo side checks the outer equations on
    generic inner samples.
    """
    k, l = outer
    k2, l2 = inner
    check_cell(u, r, k, l)
    check_cell(u, r, k2, l2)
    predicate = (k == k2 and l <= l2) or (k <= k2 and l <= l2 and k2 + l <= r)
    eqs = equations(u, r, k, l)
    rng = np.random.default_rng([abs(seed), u, r, k, l, k2, l2])
    montecarlo = all(
        eqs.satisfied_by(sample_on_locus(u, r, k2, l2, rng, prime=prime))
        for _ in range(samples)
    )
    return ContainmentReport(
        q=Partition((u, u - r)),
        outer=(k, l),
        inner=(k2, l2),
        prime=prime,
        seed=seed,
        samples=samples,
        predicate=predicate,
        montecarlo=montecarlo,
    )


@dataclass(frozen=True)
class BranchReport:
    label: str
    max_type: Partition
    type_counts: tuple[tuple[tuple[int, ...], int], ...]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "max_type": list(self.max_type),
            "type_counts": [[list(t), c] for t, c in self.type_counts],
        }


@dataclass(frozen=True)
class IntersectReport:
    q: Partition
    cells: tuple[tuple[int, int], ...]
    prime: int
    seed: int
    samples: int
    sampled: bool
    reason: str
    branches: tuple[BranchReport, ...]

    def to_dict(self) -> dict:
        return {
            "q": list(self.q),
            "cells": [list(c) for c in self.cells],
            "prime": self.prime,
            "seed": self.seed,
            "samples": self.samples,
            "sampled": self.sampled,
            "reason": self.reason,
            "branches": [b.to_dict() for b in self.branches],
        }


def intersect_experiment(
    u: int,
    r: int,
    cells,
    samples: int,
    *,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
) -> IntersectReport:
    """Sample the common zero locus of several cells' equation sets.

    Under the union of the linear equations, every remaining bilinear
    constraint collapses to one det coefficient per degree D: the terms
    a_i b_j with i >= max k, j >= the union b bound and i + j = D minus
    the g h convolution of degree D - r.  Those are solved for successive
    b coordinates as usual; a degree whose a,b part dies entirely leaves
    g_0 h_0 = 0, which splits the sample into two monomial branches.
    Richer systems (a second split, or no pivot term) are reported
    unsampled rather than guessed.
    """
    cells = sorted({(int(k), int(l)) for k, l in cells})
    if not cells:
        raise ValueError("need at least one cell")
    for k, l in cells:
        check_cell(u, r, k, l)
    m = u - r
    big_k = max(k for k, _ in cells)
    big_m = max((l if k + l <= r else r - k) for k, l in cells)
    degrees = sorted({dd for k, l in cells if k + l > r for dd in range(r, k + l)})

    base = dict(
        q=Partition((u, u - r)),
        cells=tuple(cells),
        prime=prime,
        seed=seed,
        samples=samples,
    )

    plan = []  # (solved b index, ab terms, gh terms) per degree
    split = False
    for deg in degrees:
        d = deg - r
        ab = tuple(
            (ai, deg - ai)
            for ai in range(big_k, min(deg - big_m, u - 1) + 1)
            if 1 <= deg - ai <= m - 1
        )
        gh = tuple((j, d - j) for j in range(d + 1))
        if ab and ab[0][0] == big_k:
            plan.append((deg - big_k, ab, gh))
        elif not ab and d == 0 and not split:
            split = True
        else:
            reason = f"constraint at degree {deg} has no pivot term"
            return IntersectReport(**base, sampled=False, reason=reason, branches=())

    solved = {idx for idx, _, _ in plan}
    branch_defs = [("g0=0", 0), ("h0=0", 1)] if split else [("", None)]
    branches = []
    for bidx, (label, zero_gh) in enumerate(branch_defs):
        rng = np.random.default_rng([abs(seed), u, r, bidx] + [x for c in cells for x in c])
        counts: Counter = Counter()
        for _ in range(samples):
            a = [0] * u
            a[big_k] = 1 + int(rng.integers(prime - 1))
            for i in range(big_k + 1, u):
                a[i] = int(rng.integers(prime))
            g = [int(x) for x in rng.integers(prime, size=m)]
            h = [int(x) for x in rng.integers(prime, size=m)]
            if zero_gh == 0:
                g[0] = 0
            elif zero_gh == 1:
                h[0] = 0
            b = [0] * m
            for i in range(big_m, m):
                if i not in solved:
                    b[i] = int(rng.integers(prime))
            inv = pow(a[big_k], -1, prime)
            for bi_solved, ab, gh in plan:
                rhs = 0
                for gi, hi in gh:
                    rhs += g[gi] * h[hi]
                for ai, bi in ab[1:]:
                    rhs -= a[ai] * b[bi]
                b[bi_solved] = rhs % prime * inv % prime
            e = TwoPartElement(
                u, r,
                TruncPoly(tuple(a), prime),
                TruncPoly(tuple(b), prime),
                TruncPoly(tuple(g), prime),
                TruncPoly(tuple(h), prime),
            )
            counts[e.jordan_type()] += 1
        branches.append(
            BranchReport(label=label, max_type=dominance_max(counts), type_counts=_type_counts(counts))
        )
    return IntersectReport(**base, sampled=True, reason="", branches=tuple(branches))


@dataclass(frozen=True)
class SurveyReport:
    """Observed Jordan types of commutant samples against the box inventory."""

    q: Partition
    prime: int
    seed: int
    samples: int
    box_size: int
    type_counts: tuple[tuple[tuple[int, ...], int], ...]
    outside: tuple[tuple[int, ...], ...]

    @property
    def all_in_box(self) -> bool:
        return not self.outside

    def to_dict(self) -> dict:
        return {
            "q": list(self.q),
            "prime": self.prime,
            "seed": self.seed,
            "samples": self.samples,
            "box_size": self.box_size,
            "type_counts": [[list(t), c] for t, c in self.type_counts],
            "outside": [list(t) for t in self.outside],
            "all_in_box": self.all_in_box,
        }


def survey(q, samples: int, *, seed: int = 0, prime: int = DEFAULT_PRIME) -> SurveyReport:
    """Sample the nilpotent commutant of a stable shape and bucket the types."""
    from .burge import box_partitions

    q = Partition(q)
    box_vals = set(box_partitions(q).values())
    rng = np.random.default_rng([abs(seed)] + list(q))
    counts: Counter = Counter()
    for _ in range(samples):
        counts[sample_commutator(q, rng, p=prime).jordan_type()] += 1
    outside = tuple(tuple(t) for t in sorted(set(counts) - box_vals, reverse=True))
    return SurveyReport(
        q=q,
        prime=prime,
        seed=seed,
        samples=samples,
        box_size=len(box_vals),
        type_counts=_type_counts(counts),
        outside=outside,
    )
