"""Volumes and geometry of generalized ellipsoids.

The bodies handled here are product-form sets

    { x in R^d : sum_j a_j * |x_j|**p_j <= t }

with positive scalings ``a_j``, positive exponents ``p_j`` and radius
parameter ``t``.  Their volume has a closed Gamma-function form; it is
evaluated in log space so large exponent sums neither overflow nor
underflow, and both linear and log accessors are exposed because the
derived constants used elsewhere (volume raised to the decay exponent)
can leave the double range long before the geometry gets exotic.
"""

from __future__ import annotations

import math
from typing import Sequence

from .sequences import SequencePair

_LOG2 = math.log(2.0)


def _validate_exponents(exponents: Sequence[float]) -> None:
    if len(exponents) == 0:
        raise ValueError("need at least one exponent")
    if any(not (p > 0.0 and math.isfinite(p)) for p in exponents):
        raise ValueError(f"exponents must be positive finite reals: {list(exponents)}")


def unit_ball_log_volume(exponents: Sequence[float]) -> float:
    """log of vol{ x : sum_j |x_j|**p_j <= 1 }.

    Gamma form: 2**d * prod_j Gamma(1 + 1/p_j) / Gamma(1 + sum_j 1/p_j).
    """
    _validate_exponents(exponents)
    inv = [1.0 / p for p in exponents]
    return (
        len(exponents) * _LOG2
        + sum(math.lgamma(1.0 + s) for s in inv)
        - math.lgamma(1.0 + sum(inv))
    )


def unit_ball_volume(exponents: Sequence[float]) -> float:
    """vol{ x : sum_j |x_j|**p_j <= 1 }; raises OverflowError out of range."""
    return math.exp(unit_ball_log_volume(exponents))


def ellipsoid_log_volume(
    scales: Sequence[float], exponents: Sequence[float], t: float = 1.0
) -> float:
    """log of vol{ x : sum_j a_j * |x_j|**p_j <= t }.

    Rescaling coordinate j by a_j**(-1/p_j) reduces to the unit ball, and
    the radius enters through t**(sum_j 1/p_j).
    """
    _validate_exponents(exponents)
    if len(scales) != len(exponents):
        raise ValueError("scales and exponents must have equal length")
    if any(not (a > 0.0 and math.isfinite(a)) for a in scales):
        raise ValueError("scales must be positive finite reals")
    if not t > 0.0:
        raise ValueError(f"radius parameter must be positive, got {t!r}")
    inv_sum = sum(1.0 / p for p in exponents)
    log_jacobian = -sum(math.log(a) / p for a, p in zip(scales, exponents))
    return inv_sum * math.log(t) + log_jacobian + unit_ball_log_volume(exponents)


def ellipsoid_volume(
    scales: Sequence[float], exponents: Sequence[float], t: float = 1.0
) -> float:
    return math.exp(ellipsoid_log_volume(scales, exponents, t))


def membership(
    scales: Sequence[float],
    exponents: Sequence[float],
    t: float,
    x: Sequence[float],
    rel_tol: float = 0.0,
) -> bool:
    """Whether sum_j a_j * |x_j|**p_j <= t * (1 + rel_tol).

    The default compares the raw computed double sum against t, so callers
    that count boundary points get reproducible tie behavior; a positive
    rel_tol loosens the boundary for sensitivity checks.
    """
    if len(x) != len(scales) or len(scales) != len(exponents):
        raise ValueError("dimension mismatch")
    s = 0.0
    for a, p, xi in zip(scales, exponents, x):
        s += a * abs(xi) ** p
    return s <= t * (1.0 + rel_tol)


def quasi_triangle_sides(seq: SequencePair, x: Sequence[float], y: Sequence[float]):
    """Both sides of the quasi-triangle inequality for the weight quasi-norm.

    With p = max(1, 2*b_1, ..., 2*b_d) and N(v) = (sum_j a_j |v_j|**(2*b_j))**(1/p),
    returns (N(x + y), N(x) + N(y)).  The first never exceeds the second.
    """
    if len(x) != seq.d or len(y) != seq.d:
        raise ValueError(f"vectors must have length d = {seq.d}")
    p = seq.quasi_norm_power()
    exps = seq.weight_exponents()

    def norm(v):
        s = 0.0
        for aj, ej, vj in zip(seq.a_values, exps, v):
            s += aj * abs(vj) ** ej
        return s ** (1.0 / p)

    lhs = norm([xi + yi for xi, yi in zip(x, y)])
    return lhs, norm(x) + norm(y)
