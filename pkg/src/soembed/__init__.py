"""Self-orthogonal embeddings and optimal distances for binary linear codes.

The package decides self-orthogonality from generator-matrix column
statistics, embeds any [n, k] code into a self-orthogonal code (provably
shortest for k <= 4), evaluates closed-form optimal-distance formulas for
k <= 5, and carries brute-force oracles that keep all of it honest.
"""

from .constructions import (
    SeedEntry,
    SeedRegistry,
    build_optimal,
    juxtapose_simplex,
)
from .distances import (
    DistanceValue,
    ResidueSets,
    RESIDUES,
    d_opt,
    dso_opt,
    griesmer_g,
    griesmer_search,
    griesmer_upper,
    make_table,
)
from .embedding import (
    DEFAULT_POLICY,
    EmbedPolicy,
    EmbedReport,
    embed,
    embed_dim2,
    embed_dim3,
    embed_dim4,
    embed_recursive,
)
from .errors import (
    BadCharacterError,
    CapExceededError,
    DomainError,
    EmptyInputError,
    IndexOutOfRangeError,
    InvalidPolicyError,
    LengthMismatchError,
    MatrixParseError,
    MissingSeedError,
    NoSOCodeError,
    RaggedRowsError,
    RankDeficientError,
    SoEmbedError,
    WrongDimensionError,
    ZeroCodeError,
)
from .gf2 import (
    BinaryMatrix,
    LinearCode,
    gram,
    h_column,
    horizontal_join,
    inner_product,
    is_self_orthogonal,
    min_distance,
    parse_matrix,
    rank,
    simplex_matrix,
    weight_distribution,
)
from .oracle import (
    Claims414,
    EnumerationResult,
    enumerate_codes_by_profile,
    matrix_from_profile,
    min_embedding_oracle,
    random_so_search,
    verify_claims_prop414,
)
from .profiles import (
    ColumnProfile,
    DIM4_TABLES,
    Dim4Tables,
    ParitySets,
    column_index,
    column_profile,
    intersection_parity,
    is_so_dim2,
    is_so_dim3,
    is_so_dim4,
    is_so_profile,
    parity_sets,
    verify_sigma_symmetry,
)

__version__ = "0.1.0"
