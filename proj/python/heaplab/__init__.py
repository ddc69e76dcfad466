"""Mergeable-heap laboratory: four balancing strategies under one meld kernel."""

from heaplab._core import (  # noqa: F401
    ALPHA,
    BETA,
    PHI,
    CostMeter,
    EmptyHeapError,
    GoldenTrees,
    InvalidHeapError,
    KeyDist,
    Potential,
    PotentialKind,
    Program,
    ProgramParseError,
    ReplayError,
    ShapeTree,
    SplitMix64,
    Strategy,
    StrategyKind,
    TieBreak,
    Tree,
    TreeParseError,
    WkFamily,
    WorkloadSpec,
    bal,
    bound_for,
    build_wk,
    check_ks_inequality,
    check_lemma2,
    compile_generation,
    del_min,
    empty,
    insert,
    is_empty,
    measure,
    meld,
    min_key,
    node_potential,
    perfect_tree,
    potential,
    prank_of,
    preimage,
    random_heap,
    randomized_sweep,
    rank_of,
    recount_size,
    replay,
    run_suite,
    run_workload,
    shape_to_text,
    single,
    size_of,
    spine_rank,
    sz_of,
    to_text,
    tree_from_text,
    unlabeled_meld,
    validate,
    wk_eq4_closed_form,
    wk_potential_drop,
)
from heaplab._core import union as union  # noqa: F401  (meld alias)
from heaplab._core import __version__  # noqa: F401
