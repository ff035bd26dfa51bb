"""Bipartite unitaries with prescribed operator Schmidt rank."""
from .core import (
    BipartiteOperator,
    SchmidtDecomposition,
    blocks,
    cyclic_shift,
    hs_inner,
    is_unitary,
    kron,
    numerical_rank,
    realign,
    schmidt_decompose,
    schmidt_rank,
    weyl,
)
from .synth import (
    Certificate,
    Rank3Impossible,
    RankOutOfRange,
    SynthesisRequest,
    achievable_ranks,
    synth,
    synthesize,
)

__version__ = "0.1.0"
