"""Grand Wiener amalgam norms on sampled functions.

Weighted, grand, and generalized grand amalgam norms of cell-centered grid
functions; the centered Hardy-Littlewood maximal operator; and a harness of
executable checks for the embedding, invariance, and (un)boundedness
properties of these norms at desk scale.
"""

from .gridfn import (
    BoxDomain,
    EmptyIndicatorWarning,
    GridFunction,
    Weight,
    WeightDiagnostics,
    build,
    constant,
    indicator,
    integrate,
    modulate,
    pointwise_abs,
    pointwise_product,
    read_grid_csv,
    restrict,
    scale,
    translate,
    unit_weight,
    weight_diagnostics,
    weight_from,
    write_grid_csv,
)
from .norms import (
    EpsGrid,
    GrandParams,
    NormReport,
    Variant,
    compare_variants,
    grand_norm,
    grand_norm_curve,
    holder_grandizer_bound,
    sup_eps_factor,
    weighted_lp_norm,
)
from .amalgam import (
    AmalgamSpec,
    ClassicalSpace,
    ClipMode,
    ControlFunction,
    GrandSpace,
    WindowSpec,
    amalgam_norm,
    control_function,
    lattice_weight,
    mixed_norm_family,
)
from .maximal import (
    MaximalResult,
    RadiusSet,
    maximal_fast,
    maximal_naive,
    maximal_tail_profile,
)
from .reporting import CheckResult, Verdict
from .verify import Corpus, CorpusEntry, build_corpus, run_all_checks

__version__ = "0.1.0"
