"""degenlab: exact verification of small-level anticommutative degenerations."""

from .exactnum import (
    DivisionByZero,
    PoleAtZero,
    Polynomial,
    Rational,
    RationalFunction,
    parse_rational_function,
    rf_arith,
    rf_eval_at_zero,
)
from .linalg import (
    AmbientMismatch,
    Matrix,
    NotNilpotent,
    Partition,
    Singular,
    Subspace,
    invert,
    kernel_basis,
    nilpotent_partition,
    rank,
    subspace_ops,
)
from .algebra import (
    DimensionMismatch,
    StructureTensor,
    annihilator,
    change_basis,
    dim_square,
    direct_sum_trivial,
    engel_degree,
    identity_flags,
    is_nilpotent,
    left_mult_matrix,
    power_ideal,
    product,
    subspace_product,
)
from .contraction import (
    IncomparableMaxima,
    NotASubalgebra,
    NotEngelAt,
    RankSequence,
    dominates,
    iw_contract,
    iw_max,
    rank_sequence,
)
from .degeneration import (
    AlgebraRef,
    ClosedSetSpec,
    DegenerationCertificate,
    NonDegenerationWitness,
    ParameterizedBasis,
    SingularFamily,
    UnknownKind,
    Verdict,
    apply_parameterized_basis,
    closed_set_member,
    ex222_membership,
    lower_triangular_invariance_probe,
    randomized_orbit_refute,
    verify_degeneration,
    verify_nondegeneration,
)
from .catalog import (
    CatalogName,
    DimensionOutOfRange,
    LevelAtLeast6,
    LevelValue,
    NeedsExtension,
    NotSkew,
    NotSurjective,
    PreconditionViolated,
    build_skew_pair_algebra,
    classify_T22,
    expected_iw_max,
    instantiate,
    level_lookup,
    parse_name,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
