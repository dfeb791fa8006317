"""Parameter sequences for anisotropic weights.

A weighted anisotropic problem is described by two positive sequences,
scaling factors ``a = (a_1, a_2, ...)`` and smoothness exponents
``b = (b_1, b_2, ...)``, restricted to an active dimension ``d``.  Each
sequence is either an explicit finite list or a member of a small closed
catalog of parametric families:

    constant        x_j = c
    power           x_j = c * j**alpha
    logarithmic     x_j = c * log(j + 1)**alpha
    exponential     x_j = c * rho**j
    double-scale    x_j = c * (2*pi)**(2*b_j)   (scaling tied to b, a-side only)
    explicit        x_j read from a finite list

The catalog is deliberately closed.  The tractability classifier decides
notions from asymptotic limits of the sequences, and those limits are read
off the family parameters in closed form; they are not computable from any
finite sample, so arbitrary callables are not accepted.  Explicit lists
evaluate fine but carry no asymptotic information (the classifier reports
"unknown" for them).

All values here are positive reals indexed from j = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

INF = math.inf

# growth rate of log((2*pi)**(2*b_j)) per unit of b_j
_DOUBLE_SCALE_RATE = 2.0 * math.log(2.0 * math.pi)


class FamilyError(ValueError):
    """Invalid family specification, or evaluation outside its domain."""


def _power_growth(c: float, alpha: float, gamma: float, delta: float) -> float:
    """Limit of c*j**alpha / (j**gamma * log(j)**delta) as j grows."""
    if alpha > gamma:
        return INF
    if alpha < gamma:
        return 0.0
    if delta > 0.0:
        return 0.0
    if delta < 0.0:
        return INF
    return c


def _log_growth(c: float, alpha: float, gamma: float, delta: float) -> float:
    """Limit of c*log(j+1)**alpha / (j**gamma * log(j)**delta)."""
    if gamma > 0.0:
        return 0.0
    if gamma < 0.0:
        return INF
    if alpha > delta:
        return INF
    if alpha < delta:
        return 0.0
    return c


class Family:
    """A positive sequence x_1, x_2, ... (1-based indexing).

    Subclasses provide pointwise evaluation plus the closed-form asymptotic
    functionals consumed by the tractability classifier.  Functionals return
    ``math.inf`` for divergence to infinity and ``None`` when the family
    carries no asymptotic information (explicit lists).
    """

    kind = "abstract"

    def value(self, j: int) -> float:
        raise NotImplementedError

    def values(self, d: int) -> tuple:
        """Evaluate j = 1..d."""
        return tuple(self.value(j) for j in range(1, d + 1))

    # -- shape flags ------------------------------------------------------

    def is_nondecreasing(self) -> Optional[bool]:
        raise NotImplementedError

    def has_positive_infimum(self) -> Optional[bool]:
        raise NotImplementedError

    # -- asymptotic functionals -------------------------------------------

    def growth_limit(self, gamma: float, delta: float = 0.0) -> Optional[float]:
        """lim_j x_j / (j**gamma * log(j)**delta), in [0, inf]."""
        raise NotImplementedError

    def limit_value(self) -> Optional[float]:
        """lim_j x_j, in [0, inf]."""
        return self.growth_limit(0.0, 0.0)

    def liminf_log_over_j(self) -> Optional[float]:
        """liminf_j log(x_j) / j, in [-inf, inf]."""
        raise NotImplementedError

    def liminf_logweighted_log_over_j(self) -> Optional[float]:
        """liminf_j (1 + log j) * log(x_j) / j."""
        raise NotImplementedError

    def limit_log_over_log(self) -> Optional[float]:
        """lim_j log(x_j) / log(j)."""
        raise NotImplementedError

    def reciprocal_sum_finite(self) -> Optional[bool]:
        """Whether sum_j 1/x_j converges."""
        raise NotImplementedError

    def reciprocal_sum_log_bounded(self) -> Optional[bool]:
        """Whether sup_d (sum_{j<=d} 1/x_j) / (1 + log d) is finite."""
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantFamily(Family):
    c: float
    kind = "constant"

    def __post_init__(self):
        if not self.c > 0.0:
            raise FamilyError("constant family needs c > 0")

    def value(self, j: int) -> float:
        _check_index(j)
        return self.c

    def is_nondecreasing(self):
        return True

    def has_positive_infimum(self):
        return True

    def growth_limit(self, gamma, delta=0.0):
        return _power_growth(self.c, 0.0, gamma, delta)

    def liminf_log_over_j(self):
        return 0.0

    def liminf_logweighted_log_over_j(self):
        return 0.0

    def limit_log_over_log(self):
        return 0.0

    def reciprocal_sum_finite(self):
        return False

    def reciprocal_sum_log_bounded(self):
        return False

    def to_json(self):
        return {"kind": "constant", "c": self.c}


@dataclass(frozen=True)
class PowerFamily(Family):
    c: float
    alpha: float
    kind = "power"

    def __post_init__(self):
        if not self.c > 0.0:
            raise FamilyError("power family needs c > 0")

    def value(self, j: int) -> float:
        _check_index(j)
        return self.c * float(j) ** self.alpha

    def is_nondecreasing(self):
        return self.alpha >= 0.0

    def has_positive_infimum(self):
        # decreasing powers drain to zero
        return self.alpha >= 0.0

    def growth_limit(self, gamma, delta=0.0):
        return _power_growth(self.c, self.alpha, gamma, delta)

    def liminf_log_over_j(self):
        return 0.0

    def liminf_logweighted_log_over_j(self):
        return 0.0

    def limit_log_over_log(self):
        return self.alpha

    def reciprocal_sum_finite(self):
        return self.alpha > 1.0

    def reciprocal_sum_log_bounded(self):
        # partial sums of j**-alpha grow like log d exactly when alpha = 1
        return self.alpha >= 1.0

    def to_json(self):
        return {"kind": "power", "c": self.c, "alpha": self.alpha}


@dataclass(frozen=True)
class LogFamily(Family):
    c: float
    alpha: float
    kind = "logarithmic"

    def __post_init__(self):
        if not self.c > 0.0:
            raise FamilyError("logarithmic family needs c > 0")

    def value(self, j: int) -> float:
        _check_index(j)
        return self.c * math.log(j + 1.0) ** self.alpha

    def is_nondecreasing(self):
        return self.alpha >= 0.0

    def has_positive_infimum(self):
        return self.alpha >= 0.0

    def growth_limit(self, gamma, delta=0.0):
        return _log_growth(self.c, self.alpha, gamma, delta)

    def liminf_log_over_j(self):
        return 0.0

    def liminf_logweighted_log_over_j(self):
        return 0.0

    def limit_log_over_log(self):
        return 0.0

    def reciprocal_sum_finite(self):
        return False

    def reciprocal_sum_log_bounded(self):
        # sum_{j<=d} log(j+1)**-alpha grows like d / log(d)**alpha
        return False

    def to_json(self):
        return {"kind": "logarithmic", "c": self.c, "alpha": self.alpha}


@dataclass(frozen=True)
class ExpFamily(Family):
    c: float
    rho: float
    kind = "exponential"

    def __post_init__(self):
        if not (self.c > 0.0 and self.rho > 0.0):
            raise FamilyError("exponential family needs c > 0 and rho > 0")

    def value(self, j: int) -> float:
        _check_index(j)
        return self.c * self.rho ** j

    def is_nondecreasing(self):
        return self.rho >= 1.0

    def has_positive_infimum(self):
        return self.rho >= 1.0

    def growth_limit(self, gamma, delta=0.0):
        if self.rho > 1.0:
            return INF
        if self.rho < 1.0:
            return 0.0
        return _power_growth(self.c, 0.0, gamma, delta)

    def liminf_log_over_j(self):
        return math.log(self.rho)

    def liminf_logweighted_log_over_j(self):
        if self.rho > 1.0:
            return INF
        if self.rho < 1.0:
            return -INF
        return 0.0

    def limit_log_over_log(self):
        if self.rho > 1.0:
            return INF
        if self.rho < 1.0:
            return -INF
        return 0.0

    def reciprocal_sum_finite(self):
        return self.rho > 1.0

    def reciprocal_sum_log_bounded(self):
        return self.rho > 1.0

    def to_json(self):
        return {"kind": "exponential", "c": self.c, "rho": self.rho}


@dataclass(frozen=True)
class ExplicitFamily(Family):
    entries: tuple
    kind = "explicit"

    def __post_init__(self):
        entries = tuple(float(v) for v in self.entries)
        if not entries:
            raise FamilyError("explicit family needs at least one entry")
        if any(not v > 0.0 for v in entries):
            raise FamilyError("explicit family entries must be positive")
        object.__setattr__(self, "entries", entries)

    def value(self, j: int) -> float:
        _check_index(j)
        if j > len(self.entries):
            # extrapolating silently would corrupt anything built on top
            raise FamilyError(
                f"explicit family has {len(self.entries)} entries, index {j} requested"
            )
        return self.entries[j - 1]

    def is_nondecreasing(self):
        return None

    def has_positive_infimum(self):
        return None

    def growth_limit(self, gamma, delta=0.0):
        return None

    def liminf_log_over_j(self):
        return None

    def liminf_logweighted_log_over_j(self):
        return None

    def limit_log_over_log(self):
        return None

    def reciprocal_sum_finite(self):
        return None

    def reciprocal_sum_log_bounded(self):
        return None

    def to_json(self):
        return list(self.entries)


@dataclass(frozen=True)
class DoubleScaleFamily(Family):
    """Scaling sequence x_j = c * (2*pi)**(2*b_j) induced by a smoothness family.

    This is the scaling under which the weighted norm coincides with the
    plain anisotropic Sobolev norm; its asymptotics are composed from the
    asymptotics of the underlying smoothness family.
    """

    c: float
    base: Family
    kind = "double-scale"

    def __post_init__(self):
        if not self.c > 0.0:
            raise FamilyError("double-scale family needs c > 0")
        if isinstance(self.base, DoubleScaleFamily):
            raise FamilyError("double-scale family cannot be nested")

    def value(self, j: int) -> float:
        return self.c * (2.0 * math.pi) ** (2.0 * self.base.value(j))

    def is_nondecreasing(self):
        return self.base.is_nondecreasing()

    def has_positive_infimum(self):
        # (2*pi)**(2*b_j) >= 1 for any positive b_j
        return True

    def growth_limit(self, gamma, delta=0.0):
        b = self.base
        if isinstance(b, ExplicitFamily):
            return None
        if isinstance(b, ConstantFamily):
            return _power_growth(self.value_at_limit(b.c), 0.0, gamma, delta)
        if isinstance(b, PowerFamily):
            if b.alpha > 0.0:
                return INF
            if b.alpha < 0.0:
                return _power_growth(self.c, 0.0, gamma, delta)
            return _power_growth(self.value_at_limit(b.c), 0.0, gamma, delta)
        if isinstance(b, LogFamily):
            if b.alpha > 1.0:
                return INF
            if b.alpha == 1.0:
                # c * (j+1)**q with q = 2*log(2*pi)*c_b
                return _power_growth(self.c, _DOUBLE_SCALE_RATE * b.c, gamma, delta)
            if b.alpha > 0.0:
                # sub-polynomial but beats every power of log(j)
                return INF if gamma == 0.0 else 0.0
            if b.alpha < 0.0:
                return _power_growth(self.c, 0.0, gamma, delta)
            return _power_growth(self.value_at_limit(b.c), 0.0, gamma, delta)
        if isinstance(b, ExpFamily):
            if b.rho > 1.0:
                return INF
            if b.rho < 1.0:
                return _power_growth(self.c, 0.0, gamma, delta)
            return _power_growth(self.value_at_limit(b.c), 0.0, gamma, delta)
        return None

    def value_at_limit(self, blim: float) -> float:
        return self.c * (2.0 * math.pi) ** (2.0 * blim)

    def liminf_log_over_j(self):
        r = self.base.growth_limit(1.0, 0.0)
        return None if r is None else _DOUBLE_SCALE_RATE * r

    def liminf_logweighted_log_over_j(self):
        r = self.base.growth_limit(1.0, -1.0)
        return None if r is None else _DOUBLE_SCALE_RATE * r

    def limit_log_over_log(self):
        r = self.base.growth_limit(0.0, 1.0)
        return None if r is None else _DOUBLE_SCALE_RATE * r

    def reciprocal_sum_finite(self):
        return None

    def reciprocal_sum_log_bounded(self):
        return None

    def to_json(self):
        return {"kind": "double-scale", "c": self.c}


def _check_index(j: int) -> None:
    if not isinstance(j, int) or j < 1:
        raise FamilyError(f"sequence index must be a positive integer, got {j!r}")


_FAMILY_KINDS = {
    "constant": ConstantFamily,
    "power": PowerFamily,
    "logarithmic": LogFamily,
    "exponential": ExpFamily,
}


def family_from_json(obj, base: Optional[Family] = None) -> Family:
    """Build a family from its JSON form.

    Accepts a bare array (explicit list), or an object with a ``kind`` key:
    ``{"kind": "power", "c": 1.0, "alpha": 2.0}`` and so on.  ``base`` is the
    smoothness family a ``double-scale`` spec binds to.
    """
    if isinstance(obj, (list, tuple)):
        return ExplicitFamily(tuple(obj))
    if not isinstance(obj, dict):
        raise FamilyError(f"family spec must be a list or object, got {type(obj).__name__}")
    kind = obj.get("kind")
    if kind == "explicit":
        return ExplicitFamily(tuple(obj.get("values", ())))
    if kind == "double-scale":
        if base is None:
            raise FamilyError("double-scale family is only valid for the scaling side")
        return DoubleScaleFamily(float(obj.get("c", 1.0)), base)
    if kind in _FAMILY_KINDS:
        cls = _FAMILY_KINDS[kind]
        try:
            if kind == "constant":
                return cls(float(obj["c"]))
            if kind == "exponential":
                return cls(float(obj.get("c", 1.0)), float(obj["rho"]))
            return cls(float(obj.get("c", 1.0)), float(obj["alpha"]))
        except KeyError as exc:
            raise FamilyError(f"family kind {kind!r} is missing parameter {exc}") from None
    raise FamilyError(f"unknown family kind {kind!r}")


@dataclass(frozen=True)
class SequencePair:
    """Scaling and smoothness sequences truncated to dimension ``d``.

    The first ``d`` values of each sequence are evaluated eagerly at
    construction; everything downstream (counting, spectra, volumes) works
    off those tuples.  Instances are immutable and safe to share.
    """

    a: Family
    b: Family
    d: int
    a_values: tuple = field(init=False, repr=False, compare=False)
    b_values: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise FamilyError(f"dimension must be a positive integer, got {self.d!r}")
        if isinstance(self.b, DoubleScaleFamily):
            raise FamilyError("the smoothness sequence cannot be double-scale")
        a_vals = self.a.values(self.d)
        b_vals = self.b.values(self.d)
        for name, vals in (("a", a_vals), ("b", b_vals)):
            bad = [v for v in vals if not (v > 0.0 and math.isfinite(v))]
            if bad:
                raise FamilyError(f"sequence {name} has non-positive or non-finite values: {bad}")
        object.__setattr__(self, "a_values", a_vals)
        object.__setattr__(self, "b_values", b_vals)

    def a_at(self, j: int) -> float:
        """a_j for 1 <= j <= d (precomputed) or beyond (family evaluation)."""
        _check_index(j)
        if j <= self.d:
            return self.a_values[j - 1]
        return self.a.value(j)

    def b_at(self, j: int) -> float:
        _check_index(j)
        if j <= self.d:
            return self.b_values[j - 1]
        return self.b.value(j)

    def decay_exponent(self) -> float:
        """Harmonic aggregate 1 / sum_j 1/b_j, the sharp decay rate exponent."""
        return 1.0 / sum(1.0 / v for v in self.b_values)

    def quasi_norm_power(self) -> float:
        """max(1, 2*b_1, ..., 2*b_d), the power in the quasi-triangle inequality."""
        return max(1.0, 2.0 * max(self.b_values))

    def shift_constant(self) -> float:
        """(sum_j a_j * 2**(-2*b_j)) ** (1/quasi_norm_power).

        Worst-case weight of a half-unit cube corner, which is how far a cube
        centered at a lattice point can poke out of the enclosing ellipsoid.
        """
        s = sum(aj * 2.0 ** (-2.0 * bj) for aj, bj in zip(self.a_values, self.b_values))
        return s ** (1.0 / self.quasi_norm_power())

    def is_regulated(self) -> bool:
        """Non-decreasing scaling and smoothness bounded away from zero.

        Checked numerically on the active prefix and, where the family knows
        its own shape, analytically for the whole tail.
        """
        if any(x > y for x, y in zip(self.a_values, self.a_values[1:])):
            return False
        if self.a.is_nondecreasing() is False:
            return False
        if self.b.has_positive_infimum() is False:
            return False
        return min(self.b_values) > 0.0

    def exact_eligible(self) -> bool:
        """True when every 2*b_j is a positive integer.

        Scaling values are binary floats, hence exact rationals, so integer
        weight exponents make every lattice weight an exact rational.
        """
        return all((2.0 * bj).is_integer() and 2.0 * bj >= 1.0 for bj in self.b_values)

    def weight_exponents(self) -> tuple:
        """The exponents 2*b_j used by lattice weights."""
        return tuple(2.0 * bj for bj in self.b_values)

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(), "d": self.d}


def pair_from_json(obj) -> SequencePair:
    """Build a SequencePair from ``{"a": ..., "b": ..., "d": ...}``.

    ``d`` may be omitted when at least one side is an explicit list, in which
    case the shortest list length is used.
    """
    if not isinstance(obj, dict):
        raise FamilyError("sequence spec must be a JSON object")
    if "a" not in obj or "b" not in obj:
        raise FamilyError("sequence spec needs both 'a' and 'b'")
    b = family_from_json(obj["b"])
    a = family_from_json(obj["a"], base=b)
    d = obj.get("d")
    if d is None:
        lengths = [len(f.entries) for f in (a, b) if isinstance(f, ExplicitFamily)]
        if not lengths:
            raise FamilyError("sequence spec needs 'd' unless an explicit list is given")
        d = min(lengths)
    return SequencePair(a, b, int(d))
