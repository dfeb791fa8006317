"""Approximation numbers, Korobov eigenvalues and asymptotic diagnostics.

The n-th approximation number of the weighted anisotropic embedding into
L_2 is (1 + w_n)**(-1/2), where w_n is the n-th smallest lattice weight.
The analytic Korobov compact operator shares the same weight multiset: its
n-th largest eigenvalue is omega**w_n for a base omega in (0, 1).  Both are
therefore thin wrappers over the lattice order statistics.

Two diagnostics accompany them: the decay-rate ratio table, which tracks
n**g * a_n against its limiting constant (the generalized ellipsoid volume
raised to g, computed in log space), and the cube-covering sandwich, which
brackets threshold counts between two explicit volume bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence

from . import lattice
from .ellipsoid import ellipsoid_log_volume
from .sequences import SequencePair


def approximation_number(seq: SequencePair, n: int, **kwargs) -> float:
    """a_n = (1 + w_n)**(-1/2); equals 1 at n = 1 and decreases to zero."""
    w = lattice.nth_smallest_weight(seq, n, **kwargs)
    return 1.0 / math.sqrt(1.0 + float(w))


def korobov_eigenvalue(seq: SequencePair, omega: float, n: int, **kwargs) -> float:
    """n-th largest eigenvalue omega**w_n; underflows to 0.0 for huge weights."""
    if not 0.0 < omega < 1.0:
        raise ValueError(f"omega must lie in (0, 1), got {omega!r}")
    w = lattice.nth_smallest_weight(seq, n, **kwargs)
    return omega ** float(w)


def geometric_grid(n_max: int) -> List[int]:
    """Powers of two up to n_max; enough points to see a convergence trend."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    grid = []
    n = 1
    while n <= n_max:
        grid.append(n)
        n *= 2
    return grid


@dataclass(frozen=True)
class EquivalenceRow:
    n: int
    a_n: float
    ratio: float
    log_constant: float


def equivalence_ratios(seq: SequencePair, n_values: Iterable[int], **kwargs) -> List[EquivalenceRow]:
    """Ratios n**g * a_n / C for the limiting constant C = vol**g.

    g is the decay exponent of the smoothness sequence and vol the volume of
    the generalized ellipsoid with doubled exponents.  The ratio tends to 1;
    it is not monotone.  Everything is combined in log space because C
    underflows quickly as the dimension grows.
    """
    g = seq.decay_exponent()
    log_constant = g * ellipsoid_log_volume(seq.a_values, seq.weight_exponents())
    rows = []
    previous = None
    for n in n_values:
        if previous is not None and n <= previous:
            raise ValueError("n grid must be strictly increasing")
        previous = n
        w = lattice.nth_smallest_weight(seq, n, **kwargs)
        log_a = -0.5 * math.log1p(float(w))
        ratio = math.exp(g * math.log(n) + log_a - log_constant)
        rows.append(EquivalenceRow(n, math.exp(log_a), ratio, log_constant))
    return rows


@dataclass(frozen=True)
class SandwichRow:
    m: int
    lower: float
    count: int
    upper: float
    ok: bool


def sandwich_report(seq: SequencePair, m_values: Iterable[int], **kwargs) -> List[SandwichRow]:
    """Volume bounds around the count at threshold m**quasi_norm_power.

    With p the quasi-norm power, g the decay exponent, C the shift constant
    and V the volume of the doubled-exponent ellipsoid:

        max(m - C, 0)**(p/(2g)) * V  <=  count  <=  (m + C)**(p/(2g)) * V

    The unit cubes centered on counted points cover at least the inner
    ellipsoid and fit inside the outer one; the same volume factor V belongs
    on both sides (an upper bound without it would be dimensionally off).
    Violations are reported as data, not raised.  The bounds can be exactly
    tight (integer cases), so the ok flag forgives 1e-12 relative rounding
    in their log-space evaluation; a genuine violation is never that small.
    """
    p = seq.quasi_norm_power()
    g = seq.decay_exponent()
    shift = seq.shift_constant()
    exponent = p / (2.0 * g)
    log_vol = ellipsoid_log_volume(seq.a_values, seq.weight_exponents())
    rtol = 1e-12
    rows = []
    for m in m_values:
        c = lattice.count_level(seq, m, **kwargs)
        inner = m - shift
        lower = 0.0 if inner <= 0.0 else math.exp(exponent * math.log(inner) + log_vol)
        upper = math.exp(exponent * math.log(m + shift) + log_vol)
        ok = lower <= c * (1.0 + rtol) and c <= upper * (1.0 + rtol)
        rows.append(SandwichRow(m, lower, c, upper, ok))
    return rows
