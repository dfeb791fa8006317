"""Counting and ordered enumeration of lattice points under anisotropic weights.

Every integer point k in Z^d carries the weight

    w(k) = sum_j a_j * |k_j|**(2*b_j)

and this module answers three questions about the multiset {w(k)}: how many
points fall below a threshold, what the weights look like in increasing
order, and what the n-th smallest weight is.

Float-mode determinism contract
-------------------------------
In float mode a point is classified by the double produced by accumulating
its terms left to right in coordinate order (see :func:`weight`), compared
against the threshold with no tolerance.  All routines here, whatever their
search strategy, classify by exactly that value, so a plain box scan that
evaluates the same expression reproduces the counts bit for bit and results
do not depend on the internal work order or the worker count.  An optional
``tol`` widens (non-strict) or shrinks (strict) the acceptance region by a
caller-chosen margin for sensitivity checks.

Exact mode is available when every 2*b_j is a positive integer: scalings
are binary floats, hence exact rationals, so weights become exact
``Fraction`` values and ties resolve exactly.

Counting recurses coordinate by coordinate, narrowest estimated range
first, pruning on partial sums; the widest coordinate is resolved in one
step by locating the boundary index in its precomputed term table.  Interior
pruning uses a hair of slack so that reassociating the partial sums can
never drop a boundary point; final classification is always canonical.
"""

from __future__ import annotations

import heapq
import math
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

from .sequences import SequencePair

DEFAULT_COORD_CAP = 2 ** 31
DEFAULT_HEAP_CAP = 10 ** 8
HEAP_AUTO_LIMIT = 200_000

# relative pruning slack: covers reordering error of <= ~1000 term additions
_PRUNE_SLACK = 4e-12
# per-coordinate term tables beyond this length are not materialized
_TABLE_CAP = 1 << 22


class CapacityError(RuntimeError):
    """A configured range or memory cap would be exceeded; fail loudly."""


def weight(seq: SequencePair, point: Sequence[int], mode: str = "float"):
    """Weight of a lattice point: sum_j a_j * |k_j|**(2*b_j).

    Float mode accumulates the terms left to right in coordinate order and
    is the canonical value every counting routine classifies by.  Exact mode
    returns a Fraction (requires integer weight exponents).
    """
    if len(point) != seq.d:
        raise ValueError(f"point must have length d = {seq.d}")
    if mode == "exact":
        _require_exact(seq)
        total = Fraction(0)
        for aj, ej, kj in zip(seq.a_values, seq.weight_exponents(), point):
            total += Fraction(aj) * abs(int(kj)) ** int(ej)
        return total
    if mode != "float":
        raise ValueError(f"unknown mode {mode!r}")
    w = 0.0
    for aj, ej, kj in zip(seq.a_values, seq.weight_exponents(), point):
        w += aj * abs(kj) ** ej
    return w


def _require_exact(seq: SequencePair) -> None:
    if not seq.exact_eligible():
        raise ValueError(
            "exact mode needs every 2*b_j to be a positive integer; "
            f"got exponents {list(seq.weight_exponents())}"
        )


class _Counter:
    """One threshold-counting problem, prepared for recursion."""

    def __init__(self, seq, threshold, strict, mode, tol, max_coord_range):
        self.d = seq.d
        self.strict = strict
        self.exact = mode == "exact"
        if mode not in ("float", "exact"):
            raise ValueError(f"unknown mode {mode!r}")

        if self.exact:
            _require_exact(seq)
            shift = Fraction(tol)
            t_eff = Fraction(threshold) + (-shift if strict else shift)
            self.threshold = t_eff
            self.bound = t_eff
            self.zero = Fraction(0)
            self.scales = tuple(Fraction(a) for a in seq.a_values)
            self.exponents = tuple(int(e) for e in seq.weight_exponents())
        else:
            t_eff = float(threshold) + (-float(tol) if strict else float(tol))
            self.threshold = t_eff
            # slack only loosens pruning; acceptance is decided canonically
            self.bound = t_eff * (1.0 + _PRUNE_SLACK) + 1e-300
            self.zero = 0.0
            self.scales = seq.a_values
            self.exponents = seq.weight_exponents()

        self.kmax = [self._coord_kmax(j, max_coord_range) for j in range(self.d)]
        # narrowest range first maximizes pruning; the widest coordinate is
        # left for the table-lookup leaf step
        self.order = sorted(
            range(self.d), key=lambda j: (self.kmax[j], -float(self.scales[j]), j)
        )
        self.tables = [self._build_table(j) for j in range(self.d)]

    def _term(self, j: int, k: int):
        if self.exact:
            return self.scales[j] * k ** self.exponents[j]
        return self.scales[j] * float(k) ** self.exponents[j]

    def term(self, j: int, k: int):
        tbl = self.tables[j]
        if tbl is not None and k < len(tbl):
            return tbl[k]
        return self._term(j, k)

    def _coord_kmax(self, j: int, cap: int) -> int:
        """Largest k with a_j * k**e_j <= bound (within capacity)."""
        bound = self.bound
        if bound < self.zero:
            return -1
        try:
            est = (float(bound) / float(self.scales[j])) ** (1.0 / float(self.exponents[j]))
        except OverflowError:
            raise CapacityError(f"coordinate {j + 1} range overflows") from None
        if not math.isfinite(est) or est > cap:
            raise CapacityError(
                f"coordinate {j + 1} range {est:.3g} exceeds cap {cap}"
            )
        k = max(int(est), 0)
        while k > 0 and self._term(j, k) > bound:
            k -= 1
        while k < cap and self._term(j, k + 1) <= bound:
            k += 1
        return k

    def _build_table(self, j: int) -> Optional[list]:
        n = self.kmax[j] + 3
        if n > _TABLE_CAP:
            return None
        return [self._term(j, k) for k in range(n)]

    def _accepts(self, assigned: list) -> bool:
        """Canonical classification of a fully assigned point."""
        w = self.zero
        for j in range(self.d):
            w += self.term(j, assigned[j])
        return w < self.threshold if self.strict else w <= self.threshold

    def _leaf(self, acc, assigned: list, j: int) -> int:
        budget = self.bound - acc
        if budget < self.zero:
            return 0
        km = self.kmax[j]
        tbl = self.tables[j]
        if tbl is not None:
            k = bisect_right(tbl, budget, 0, km + 1) - 1
        else:
            try:
                est = (float(budget) / float(self.scales[j])) ** (
                    1.0 / float(self.exponents[j])
                )
            except OverflowError:
                est = float(km)
            k = min(int(est), km) if math.isfinite(est) else km
            k = max(k, 0)
        while k + 1 <= km:
            assigned[j] = k + 1
            if self._accepts(assigned):
                k += 1
            else:
                break
        while k >= 0:
            assigned[j] = k
            if self._accepts(assigned):
                break
            k -= 1
        assigned[j] = 0
        return 2 * k + 1 if k >= 0 else 0

    def _rec(self, level: int, acc, assigned: list) -> int:
        j = self.order[level]
        if level == self.d - 1:
            return self._leaf(acc, assigned, j)
        total = 0
        km = self.kmax[j]
        for k in range(km + 1):
            part = acc + self.term(j, k)
            if part > self.bound:
                break
            assigned[j] = k
            sub = self._rec(level + 1, part, assigned)
            if sub == 0:
                # larger k only shrinks the feasible completions
                break
            total += sub if k == 0 else 2 * sub
        assigned[j] = 0
        return total

    def _root_chunk(self, lo: int, hi: int) -> int:
        j = self.order[0]
        total = 0
        assigned = [0] * self.d
        for k in range(lo, hi):
            part = self.zero + self.term(j, k)
            if part > self.bound:
                break
            assigned[j] = k
            sub = self._rec(1, part, assigned)
            if sub == 0:
                break
            total += sub if k == 0 else 2 * sub
        return total

    def run(self, workers: int = 1) -> int:
        if self.bound < self.zero:
            return 0
        if self.d == 1:
            return self._leaf(self.zero, [0], self.order[0])
        roots = self.kmax[self.order[0]] + 1
        if workers <= 1 or roots < 2 * workers:
            return self._rec(0, self.zero, [0] * self.d)
        step = -(-roots // workers)
        spans = [(i, min(i + step, roots)) for i in range(0, roots, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: self._root_chunk(*s), spans))
        return sum(parts)


def count(
    seq: SequencePair,
    threshold,
    *,
    strict: bool = False,
    mode: str = "float",
    tol=0.0,
    workers: int = 1,
    max_coord_range: int = DEFAULT_COORD_CAP,
) -> int:
    """Number of k in Z^d with w(k) <= threshold (or < with ``strict``).

    ``tol`` moves the comparison boundary outward for non-strict counts and
    inward for strict counts, so the pair brackets the tolerance-free count.
    Raises :class:`CapacityError` when a per-coordinate range would exceed
    ``max_coord_range``.
    """
    if float(threshold) < 0.0:
        raise ValueError(f"threshold must be non-negative, got {threshold!r}")
    counter = _Counter(seq, threshold, strict, mode, tol, max_coord_range)
    return counter.run(workers)


def count_level(seq: SequencePair, m: int, **kwargs) -> int:
    """Count at threshold m**quasi_norm_power, non-strict.

    This is the count the cube-covering volume bounds sandwich.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"level must be a positive integer, got {m!r}")
    return count(seq, float(m) ** seq.quasi_norm_power(), **kwargs)


def _last_nonzero(point: Tuple[int, ...]) -> int:
    for i in range(len(point) - 1, -1, -1):
        if point[i]:
            return i
    return 0


def enumerate_weights(
    seq: SequencePair,
    limit_n: int,
    *,
    mode: str = "float",
    heap_cap: int = DEFAULT_HEAP_CAP,
) -> Iterator[tuple]:
    """Yield (weight, multiplicity) for distinct weights in increasing order.

    Multiplicity is the number of lattice points in Z^d attaining the weight.
    The stream stops once the cumulative multiplicity reaches ``limit_n``.

    Only the non-negative orthant is explored; a point contributes
    2**(number of nonzero coordinates) lattice points.  Each orthant point is
    generated exactly once, as the child of the point obtained by decrementing
    its last nonzero coordinate, so no visited set is needed and memory stays
    proportional to the frontier.
    """
    if not isinstance(limit_n, int) or limit_n < 1:
        raise ValueError(f"limit_n must be a positive integer, got {limit_n!r}")
    if mode == "exact":
        _require_exact(seq)
    elif mode != "float":
        raise ValueError(f"unknown mode {mode!r}")

    d = seq.d
    origin = (0,) * d
    heap = [(weight(seq, origin, mode), origin)]
    emitted = 0
    while heap and emitted < limit_n:
        current = heap[0][0]
        mult = 0
        while heap and heap[0][0] == current:
            _, pt = heapq.heappop(heap)
            mult += 1 << sum(1 for v in pt if v)
            start = _last_nonzero(pt)
            for i in range(start, d):
                child = pt[:i] + (pt[i] + 1,) + pt[i + 1 :]
                heapq.heappush(heap, (weight(seq, child, mode), child))
            if len(heap) > heap_cap:
                raise CapacityError(f"weight frontier exceeds heap cap {heap_cap}")
        yield current, mult
        emitted += mult


def nth_smallest_weight(
    seq: SequencePair,
    n: int,
    *,
    mode: str = "float",
    method: str = "auto",
    heap_cap: int = DEFAULT_HEAP_CAP,
    workers: int = 1,
    max_coord_range: int = DEFAULT_COORD_CAP,
):
    """The n-th smallest lattice weight (1-based, counted with multiplicity).

    ``method="heap"`` walks the ordered stream; ``method="bisect"`` (float
    mode only) binary-searches the threshold over the monotone counting
    function until the two adjacent doubles bracket the jump that crosses n,
    returning the achieved weight.  Both paths return bit-identical floats;
    ``"auto"`` picks the heap for small n and bisection beyond.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if method == "auto":
        method = "heap" if (n <= HEAP_AUTO_LIMIT or mode == "exact") else "bisect"
    if method == "heap":
        cumulative = 0
        for w, mult in enumerate_weights(seq, n, mode=mode, heap_cap=heap_cap):
            cumulative += mult
            if cumulative >= n:
                return w
        raise RuntimeError("weight stream ended early")  # pragma: no cover
    if method != "bisect":
        raise ValueError(f"unknown method {method!r}")
    if mode != "float":
        raise ValueError("bisect method works in float mode only")

    kwargs = dict(workers=workers, max_coord_range=max_coord_range)
    if count(seq, 0.0, **kwargs) >= n:
        return 0.0
    hi = 1.0
    while count(seq, hi, **kwargs) < n:
        hi *= 2.0
        if math.isinf(hi):
            raise CapacityError("threshold search overflowed")
    lo = 0.0
    for _ in range(2000):
        mid = lo + (hi - lo) / 2.0
        if not (lo < mid < hi):
            break
        if count(seq, mid, **kwargs) >= n:
            hi = mid
        else:
            lo = mid
    return hi
