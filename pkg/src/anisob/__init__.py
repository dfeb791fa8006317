"""anisob: spectra and tractability of weighted anisotropic embeddings.

Exact lattice-point counting under anisotropic weights, generalized
ellipsoid volumes, approximation numbers of the weighted Sobolev embedding
and eigenvalues of the analytic Korobov operator, the exact bridge between
their information complexities, and an analytic tractability classifier
over a closed catalog of parameter families.
"""

from .ellipsoid import (
    ellipsoid_log_volume,
    ellipsoid_volume,
    membership,
    quasi_triangle_sides,
    unit_ball_log_volume,
    unit_ball_volume,
)
from .lattice import (
    CapacityError,
    count,
    count_level,
    enumerate_weights,
    nth_smallest_weight,
    weight,
)
from .sequences import (
    ConstantFamily,
    DoubleScaleFamily,
    ExplicitFamily,
    ExpFamily,
    Family,
    FamilyError,
    LogFamily,
    PowerFamily,
    SequencePair,
    family_from_json,
    pair_from_json,
)
from .spectra import (
    EquivalenceRow,
    SandwichRow,
    approximation_number,
    equivalence_ratios,
    geometric_grid,
    korobov_eigenvalue,
    sandwich_report,
)
from .tractability import (
    BridgeResult,
    ProbeCell,
    bridge_korobov_to_sobolev,
    bridge_sobolev_to_korobov,
    classify,
    classify_standard,
    complexity_korobov,
    complexity_sobolev,
    tractability_probe,
)

__version__ = "0.1.0"

__all__ = [
    "BridgeResult",
    "CapacityError",
    "ConstantFamily",
    "DoubleScaleFamily",
    "EquivalenceRow",
    "ExpFamily",
    "ExplicitFamily",
    "Family",
    "FamilyError",
    "LogFamily",
    "PowerFamily",
    "ProbeCell",
    "SandwichRow",
    "SequencePair",
    "approximation_number",
    "bridge_korobov_to_sobolev",
    "bridge_sobolev_to_korobov",
    "classify",
    "classify_standard",
    "complexity_korobov",
    "complexity_sobolev",
    "count",
    "count_level",
    "ellipsoid_log_volume",
    "ellipsoid_volume",
    "enumerate_weights",
    "equivalence_ratios",
    "family_from_json",
    "geometric_grid",
    "korobov_eigenvalue",
    "membership",
    "nth_smallest_weight",
    "pair_from_json",
    "quasi_triangle_sides",
    "sandwich_report",
    "tractability_probe",
    "unit_ball_log_volume",
    "unit_ball_volume",
    "weight",
]
