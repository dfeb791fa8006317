"""Information complexities, their exact bridge, and tractability verdicts.

The minimal number of linear functionals needed to push the worst-case
error below eps is a strict lattice count for both problems handled here:

    Sobolev embedding:   #{ k : w(k) < eps**-2 - 1 }
    Korobov operator:    #{ k : w(k) < log(eps**-2) / log(1/omega) }

Because both thresholds are monotone reparametrizations of each other, the
two complexity functions coincide after an explicit substitution of eps;
:func:`bridge_korobov_to_sobolev` and :func:`bridge_sobolev_to_korobov`
evaluate both sides and report whether the integers agree exactly.

Tractability notions (SPT, PT, QPT, UWT, WT and the (s, t)-weak family) are
growth regimes of the complexity in eps**-1 and d.  For the sequence
catalog they are decided purely analytically from closed-form limits; the
exponential-convergence (EC) notions of the Korobov problem follow from the
bridge, with EC-(s, t) weak tractability equal to (2s, t) weak tractability
of the embedding.  A numeric probe of the defining ratios is provided as
clearly labeled heuristic evidence, never as a decision procedure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from . import lattice
from .sequences import Family, FamilyError, INF, SequencePair

_NOTIONS = ("SPT", "PT", "QPT", "UWT", "WT")


def complexity_sobolev(seq: SequencePair, eps: float, **kwargs) -> int:
    """min{ n : a_{n+1} <= eps }, computed as a strict count at eps**-2 - 1."""
    _check_eps(eps)
    return lattice.count(seq, eps ** -2 - 1.0, strict=True, **kwargs)


def complexity_korobov(
    seq: SequencePair,
    omega: float,
    eps: Optional[float] = None,
    *,
    log_eps: Optional[float] = None,
    **kwargs,
) -> int:
    """min{ n : (n+1)-th largest eigenvalue <= eps**2 }.

    Strict count at log(eps**-2) / log(1/omega).  The tolerance may be given
    as ``log_eps`` = log(eps) instead, which keeps the threshold well defined
    when eps itself underflows the double range.
    """
    _check_omega(omega)
    if (eps is None) == (log_eps is None):
        raise ValueError("give exactly one of eps or log_eps")
    if eps is not None:
        _check_eps(eps)
        log_eps = math.log(eps)
    elif not log_eps < 0.0:
        raise ValueError(f"log_eps must be negative, got {log_eps!r}")
    threshold = 2.0 * log_eps / math.log(omega)
    return lattice.count(seq, threshold, strict=True, **kwargs)


@dataclass(frozen=True)
class BridgeResult:
    direction: str
    eps: float
    eps_mapped: float
    log_eps_mapped: float
    n_source: int
    n_mapped: int

    @property
    def equal(self) -> bool:
        return self.n_source == self.n_mapped


def bridge_korobov_to_sobolev(seq: SequencePair, omega: float, eps: float, **kwargs) -> BridgeResult:
    """Korobov complexity at eps equals Sobolev complexity at the mapped tolerance.

    The mapped tolerance is (log(eps**-2)/log(1/omega) + 1)**(-1/2); the two
    strict counts must agree exactly.
    """
    _check_omega(omega)
    _check_eps(eps)
    t = 2.0 * math.log(eps) / math.log(omega)
    eps_mapped = 1.0 / math.sqrt(t + 1.0)
    n_source = complexity_korobov(seq, omega, eps, **kwargs)
    n_mapped = complexity_sobolev(seq, eps_mapped, **kwargs)
    return BridgeResult(
        "korobov->sobolev", eps, eps_mapped, math.log(eps_mapped), n_source, n_mapped
    )


def bridge_sobolev_to_korobov(seq: SequencePair, omega: float, eps: float, **kwargs) -> BridgeResult:
    """Sobolev complexity at eps equals Korobov complexity at omega**((eps**-2 - 1)/2).

    The mapped tolerance underflows to 0.0 for small eps, so it is carried in
    log form; the Korobov count is evaluated from that log, which the count
    threshold depends on linearly.
    """
    _check_omega(omega)
    _check_eps(eps)
    log_eps_mapped = 0.5 * (eps ** -2 - 1.0) * math.log(omega)
    eps_mapped = math.exp(log_eps_mapped) if log_eps_mapped > -745.0 else 0.0
    n_source = complexity_sobolev(seq, eps, **kwargs)
    n_mapped = complexity_korobov(seq, omega, log_eps=log_eps_mapped, **kwargs)
    return BridgeResult(
        "sobolev->korobov", eps, eps_mapped, log_eps_mapped, n_source, n_mapped
    )


def _check_eps(eps: float) -> None:
    if not 0.0 < eps < 1.0:
        raise ValueError(f"eps must lie in (0, 1), got {eps!r}")


def _check_omega(omega: float) -> None:
    if not 0.0 < omega < 1.0:
        raise ValueError(f"omega must lie in (0, 1), got {omega!r}")


# ---------------------------------------------------------------------------
# analytic classifier
# ---------------------------------------------------------------------------


def _verdict(notion, holds, condition, evidence, s=None, t=None):
    out = {"notion": notion, "holds": holds, "condition": condition, "evidence": evidence}
    if s is not None:
        out["s"] = s
        out["t"] = t
    return out


def _gt_zero(value: Optional[float]) -> Optional[bool]:
    return None if value is None else value > 0.0


def _is_inf(value: Optional[float]) -> Optional[bool]:
    return None if value is None else value == INF


def _and(x: Optional[bool], y: Optional[bool]) -> Optional[bool]:
    if x is False or y is False:
        return False
    if x is None or y is None:
        return None
    return True


def _st_weak_verdict(a: Family, s: float, t: float) -> Tuple[Optional[bool], str, dict]:
    """(s, t)-weak tractability of the embedding problem."""
    if not (s > 0.0 and t > 0.0):
        raise ValueError("s and t must be positive")
    if max(s / 2.0, t) > 1.0:
        return True, "max(s/2, t) > 1: always holds", {"s_half": s / 2.0, "t": t}
    if s == 2.0 and t == 1.0:
        v = a.growth_limit(0.0, 0.0)
        return _is_inf(v), "lim a_j = inf", {"lim_a": v}
    if s == 2.0:
        v = a.growth_limit(0.0, 1.0)
        return _is_inf(v), "lim a_j / log(j) = inf", {"lim_a_over_log_j": v}
    gamma = (2.0 - s) / s
    v = a.growth_limit(gamma, 0.0)
    return (
        _is_inf(v),
        f"lim a_j / j**{gamma:g} = inf",
        {"lim_a_over_j_pow": v, "exponent": gamma},
    )


def classify(
    a: Family,
    b: Family,
    st_list: Sequence[Tuple[float, float]] = (),
    *,
    prefix: int = 50,
) -> dict:
    """Tractability verdicts for the embedding and EC verdicts for Korobov.

    Verdicts are True/False/None (unknown); explicit lists carry no
    asymptotic information and yield None throughout.  The scaling sequence
    must be non-decreasing and the smoothness sequence bounded away from
    zero; that shape is checked analytically on the families and numerically
    on a prefix.  Each verdict records the limit values that decided it.

    EC verdicts map through the complexity bridge: EC-(s, t) weak
    tractability of the Korobov problem is (2s, t)-weak tractability of the
    embedding, the polynomial-type notions carry over unchanged, and EC-WT
    is exposed as the (s, t) = (1, 1) case of that correspondence.
    """
    _check_regulated(a, b, prefix)

    sum_finite = b.reciprocal_sum_finite()
    sum_log_bounded = b.reciprocal_sum_log_bounded()
    liminf_log = a.liminf_log_over_j()
    liminf_log_weighted = a.liminf_logweighted_log_over_j()
    lim_log_over_log = a.limit_log_over_log()
    lim_over_j = a.growth_limit(1.0, 0.0)

    spt = _and(sum_finite, _gt_zero(liminf_log))
    notions = [
        _verdict(
            "SPT",
            spt,
            "sum 1/b_j < inf and liminf log(a_j)/j > 0",
            {"sum_recip_b_finite": sum_finite, "liminf_log_a_over_j": liminf_log},
        ),
        _verdict(
            "PT",
            spt,
            "same as SPT",
            {"sum_recip_b_finite": sum_finite, "liminf_log_a_over_j": liminf_log},
        ),
        _verdict(
            "QPT",
            _and(sum_log_bounded, _gt_zero(liminf_log_weighted)),
            "sup_d (sum_{j<=d} 1/b_j)/(1+log d) < inf and "
            "liminf (1+log j) log(a_j)/j > 0",
            {
                "partial_recip_b_log_bounded": sum_log_bounded,
                "liminf_logweighted_log_a_over_j": liminf_log_weighted,
            },
        ),
        _verdict(
            "UWT",
            _is_inf(lim_log_over_log),
            "lim log(a_j)/log(j) = inf",
            {"lim_log_a_over_log_j": lim_log_over_log},
        ),
        _verdict(
            "WT",
            _is_inf(lim_over_j),
            "lim a_j / j = inf",
            {"lim_a_over_j": lim_over_j},
        ),
    ]
    for s, t in st_list:
        holds, condition, evidence = _st_weak_verdict(a, float(s), float(t))
        notions.append(_verdict("(s,t)-WT", holds, condition, evidence, s=float(s), t=float(t)))

    by_name = {v["notion"]: v for v in notions if "s" not in v}
    ec_wt_holds, ec_wt_cond, ec_wt_ev = _st_weak_verdict(a, 2.0, 1.0)
    ec_notions = [
        _verdict("EC-SPT", by_name["SPT"]["holds"], by_name["SPT"]["condition"], by_name["SPT"]["evidence"]),
        _verdict("EC-PT", by_name["PT"]["holds"], by_name["PT"]["condition"], by_name["PT"]["evidence"]),
        _verdict("EC-QPT", by_name["QPT"]["holds"], by_name["QPT"]["condition"], by_name["QPT"]["evidence"]),
        _verdict("EC-UWT", by_name["UWT"]["holds"], by_name["UWT"]["condition"], by_name["UWT"]["evidence"]),
        _verdict("EC-WT", ec_wt_holds, "via (2,1)-WT of the embedding: " + ec_wt_cond, ec_wt_ev),
    ]
    for s, t in st_list:
        holds, condition, evidence = _st_weak_verdict(a, 2.0 * float(s), float(t))
        ec_notions.append(
            _verdict(
                "EC-(s,t)-WT",
                holds,
                "via (2s,t)-WT of the embedding: " + condition,
                evidence,
                s=float(s),
                t=float(t),
            )
        )

    result = {"notions": notions, "ec_notions": ec_notions}
    _check_hierarchy(result)
    return result


def classify_standard(
    b: Family, st_list: Sequence[Tuple[float, float]] = (), *, prefix: int = 50
) -> dict:
    """Verdicts for the plain anisotropic Sobolev norm (no free scaling).

    Equivalent to classifying with the induced scaling a_j = (2*pi)**(2*b_j);
    the smoothness sequence must be non-decreasing.
    """
    from .sequences import DoubleScaleFamily

    mono = b.is_nondecreasing()
    values = _prefix_values(b, prefix)
    if mono is False or any(x > y for x, y in zip(values, values[1:])):
        raise FamilyError("smoothness sequence must be non-decreasing")
    return classify(DoubleScaleFamily(1.0, b), b, st_list, prefix=prefix)


def _prefix_values(fam: Family, prefix: int) -> list:
    values = []
    for j in range(1, prefix + 1):
        try:
            values.append(fam.value(j))
        except FamilyError:
            break  # explicit list shorter than the prefix
        except OverflowError:
            break  # values left the double range; the analytic flag covers the tail
    return values


def _check_regulated(a: Family, b: Family, prefix: int) -> None:
    if a.is_nondecreasing() is False:
        raise FamilyError("scaling family is decreasing; classifier needs a_1 <= a_2 <= ...")
    if b.has_positive_infimum() is False:
        raise FamilyError("smoothness family drains to zero; classifier needs inf b_j > 0")
    a_vals = _prefix_values(a, prefix)
    if any(x > y for x, y in zip(a_vals, a_vals[1:])):
        raise FamilyError("scaling values decrease on the checked prefix")
    b_vals = _prefix_values(b, prefix)
    if any(not v > 0.0 for v in b_vals):
        raise FamilyError("smoothness values must be positive")


def _check_hierarchy(result: dict) -> None:
    chain = []
    for name in _NOTIONS:
        for v in result["notions"]:
            if v["notion"] == name:
                chain.append(v["holds"])
    for stronger, weaker in zip(chain, chain[1:]):
        if stronger is True and weaker is False:
            raise AssertionError(f"verdict hierarchy violated: {chain}")


# ---------------------------------------------------------------------------
# numeric probe (heuristic evidence only)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProbeCell:
    d: int
    eps: float
    n: Optional[int]
    ratio: Optional[float]
    status: str


def tractability_probe(
    a: Family,
    b: Family,
    s: float,
    t: float,
    eps_values: Sequence[float],
    d_values: Sequence[int],
    **kwargs,
) -> List[ProbeCell]:
    """Table of log n(eps, d) / (eps**-s + d**t) over a small grid.

    Heuristic illustration of the (s, t)-weak tractability ratio; limits are
    not computable from samples, so this never decides a verdict.  Cells
    whose count exceeds the capacity caps are reported as unavailable.
    """
    if not (s > 0.0 and t > 0.0):
        raise ValueError("s and t must be positive")
    cells = []
    for d in d_values:
        seq = SequencePair(a, b, int(d))
        for eps in eps_values:
            _check_eps(eps)
            try:
                n = complexity_sobolev(seq, eps, **kwargs)
            except lattice.CapacityError:
                cells.append(ProbeCell(int(d), eps, None, None, "capacity"))
                continue
            denom = eps ** -s + float(d) ** t
            ratio = math.log(n) / denom if n >= 1 else 0.0
            cells.append(ProbeCell(int(d), eps, n, ratio, "ok"))
    return cells
