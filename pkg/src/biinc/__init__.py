"""Combinatorics of bi-increasing (321-avoiding) permutations and the objects
they biject with: step and parallelogram polyominoes, staircase and skew
diagrams, Dyck paths, and 2-Motzkin paths.

The package provides exact statistics, all conversion bijections, exhaustive
distribution tables, closed-form counting, a truncated bivariate series
engine, and a verification harness that re-proves every implemented identity
at small sizes.
"""

from .errors import CapExceededError, DomainError, ParseError
from .permstats import (
    Permutation,
    RestrictionWords,
    StatBundle,
    avoids_barred_3142,
    descent_blocks,
    exc_equals_des,
    fixed_point_criterion,
    inversions,
    is_bi_increasing,
    restriction_words,
    reverse_code,
    stats,
)
from .permbij import (
    GeneratorWord,
    TranspositionSet,
    active_sites,
    class_size,
    deutsch_insert,
    equivalence_class,
    evaluate_word,
    extremal_sequence,
    factorize,
    foata_phi,
    from_excedances,
    hat,
    insert_at_site,
    max_inv_permutation,
    psi,
    transposition_set,
)
from .polyomino import (
    ParallelogramPolyomino,
    PolyominoMetrics,
    SkewDiagram,
    StaircaseDiagram,
    StepPolyomino,
    parallelogram_to_step,
    perm_to_parallelogram,
    perm_to_step,
    polyomino_metrics,
    polyomino_to_skew,
    rank,
    reduced_code,
    rotate180,
    row_overlaps,
    skew_to_polyomino,
    staircase_to_step,
    step_to_parallelogram,
    step_to_perm,
    step_to_staircase,
)
from .paths import (
    DeutschShapiroPaths,
    DyckPath,
    PathStats,
    TwoMotzkinPath,
    bjs,
    bjs_inverse,
    delest_viennot,
    delest_viennot_inverse,
    deutsch_shapiro,
    deutsch_shapiro_inverse,
    foata_zeilberger,
    francon_viennot,
    francon_viennot_inverse,
    fv_extended,
    fv_extended_inverse,
    fz_inverse_bi,
    is_partition_path,
    path_stats,
    polyomino_to_2motzkin,
    two_motzkin_to_dyck,
    two_motzkin_to_parallelogram,
)
from .counting import (
    DistributionTable,
    TruncatedBivariateSeries,
    a_k_sequence,
    all_permutations,
    bi_increasing_permutations,
    catalan,
    chu_vandermonde_check,
    distribution,
    fine,
    fixed_point_set_count,
    greatest_excedance_count,
    j_series,
    m_nk,
    motzkin,
    narayana,
    partitions_by_rank,
    skew_by_rank,
)

__version__ = "0.1.0"
