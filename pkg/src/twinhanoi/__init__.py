"""Move calculus, implicit-graph search and certified solvers for the coupled three-peg puzzle."""

from .errors import (
    CacheError,
    CapacityExceeded,
    Incompatible,
    NotAPath,
    NotBasic,
    NotInA,
    NotSquareFree,
    SizeMismatch,
    TwinHanoiError,
    UnclassifiedSyllable,
)
from .words import (
    Config,
    CoupledConfig,
    Move,
    MoveSeq,
    PegPerm,
    apply_move,
    apply_seq,
    apply_seq_coupled,
    classify,
    lcp_len,
    parity,
    relabel,
)
from .wreath import (
    CosetClass,
    Decomposition,
    coset,
    decompose,
    equal_on_level,
    free_reduce,
    inverse,
    lift_through_prefix,
    section_at,
)
from .graphs import (
    ComponentReport,
    DistanceField,
    bfs,
    components,
    diameter,
    distance,
    export_dot,
    geodesic_count,
    neighbors,
    pack_config,
    pack_coupled,
    unpack_config,
    unpack_coupled,
)
from .solvers import (
    ClosedForms,
    SolvePlan,
    Syllable,
    adjust_coset,
    closed_forms,
    corner_seq,
    factor_apollonian,
    lift_syllable,
    sds_seq,
    solve_basic,
    solve_compatible,
    transform_single,
    tts_alt_seq,
    tts_seq,
)

__version__ = "0.1.0"
