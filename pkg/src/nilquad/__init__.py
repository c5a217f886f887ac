"""nilquad: exact tools for quadratic algebras with few relations.

Builds quadratic presentations whose quotient algebra is k-step nilpotent
using the minimal relation count achievable by chain-supported relations,
and verifies nilpotency and the Golod-Shafarevich lower bound by exact
linear algebra on graded components.  All decisions are made in integer,
rational, or modular arithmetic; floating point is display-only.
"""

from nilquad.gsbound import (
    GsParams,
    GsThreshold,
    TruncatedSeries,
    gs_min_relations,
    gs_permits_nilpotency,
    gs_series,
    gs_threshold,
)
from nilquad.minimax import (
    AlphaSequence,
    Composition,
    MinimaxResult,
    alpha_sequence,
    composition_cost,
    minimax_bruteforce,
    minimax_exact,
    witness_composition,
)
from nilquad.closed_forms import (
    QuadIrrationalCeil,
    gs_ceiling_k4,
    is_fibonacci,
    meets_gs_bound_k4,
    meets_gs_bound_k5,
    minimax_k4,
    minimax_k5,
)
from nilquad.chain_poset import (
    BlockPartition,
    BlockPoset,
    ChainCover,
    PairElement,
    build_poset,
    min_chain_cover,
    poset_width,
)
from nilquad.presentation import (
    Presentation,
    PresentationParseError,
    QuadraticRelation,
    construct_presentation,
    fixture_ex8,
    parse,
    serialize,
)
from nilquad.nilcheck import (
    HilbertReport,
    graded_dimension,
    hilbert_report,
    is_k_step_nilpotent,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaSequence",
    "BlockPartition",
    "BlockPoset",
    "ChainCover",
    "Composition",
    "GsParams",
    "GsThreshold",
    "HilbertReport",
    "MinimaxResult",
    "PairElement",
    "Presentation",
    "PresentationParseError",
    "QuadIrrationalCeil",
    "QuadraticRelation",
    "TruncatedSeries",
    "alpha_sequence",
    "build_poset",
    "composition_cost",
    "construct_presentation",
    "fixture_ex8",
    "graded_dimension",
    "gs_ceiling_k4",
    "gs_min_relations",
    "gs_permits_nilpotency",
    "gs_series",
    "gs_threshold",
    "hilbert_report",
    "is_fibonacci",
    "is_k_step_nilpotent",
    "meets_gs_bound_k4",
    "meets_gs_bound_k5",
    "min_chain_cover",
    "minimax_bruteforce",
    "minimax_exact",
    "minimax_k4",
    "minimax_k5",
    "parse",
    "poset_width",
    "serialize",
    "witness_composition",
]
