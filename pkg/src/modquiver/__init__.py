"""Real modulated quivers, complexified presentations, and the gentle
one-cycle without clock condition classification."""

from .classify import (
    VERDICT_GENTLE_ONE_CYCLE,
    VERDICT_HEREDITARY_DYNKIN,
    VERDICT_INCONCLUSIVE,
    ClassificationReport,
    check_equivalence,
    classify,
    valued_graph,
)
from .complexify import (
    BAR,
    ComplexQuiver,
    build_gamma,
    fibers_of_chain,
    fibers_of_path,
    orbit_quiver,
    transport_ideal,
)
from .errors import (
    EmptyQuiverError,
    InvalidModulationError,
    LoopAtVertexError,
    ModQuiverError,
    MultipleCyclesError,
    NonMonomialRelationsError,
    NotOneCycleError,
    NotVUniformCError,
    NotVUniformError,
    ParseError,
    UnsupportedBinomialError,
)
from .modulation import (
    CATALOG,
    BimoduleKind,
    Modulation,
    Ring,
    flip_at_vertex,
    is_v_uniform,
    normalize_one_cycle,
    normalize_one_cycle_steps,
    path_real_dim,
    validate,
)
from .oracle import (
    SweepConfig,
    enumerate_connected_quivers,
    enumerate_modulations,
    fiber_count_oracle,
    quiver_isomorphic,
    sweep_equivalence,
    sweep_fiber_counts,
    sweep_implications,
    sweep_structure,
)
from .quiver import (
    Arrow,
    Chain,
    CycleStructure,
    Direction,
    Path,
    Quiver,
    chain_of,
    connected_components,
    enumerate_paths,
    find_cycle,
    is_one_cycle,
    length_two_paths,
    path_of,
)
from .relations import (
    Binomial,
    OmegaMatch,
    PredicateResult,
    RelationSet,
    ScalarClass,
    clock_counts,
    detect_omega,
    is_gentle,
    is_gentle_one_cycle_no_clock,
    is_gentle_vertex,
    monomialize,
    real_algebra_predicate,
    real_monomialize,
)
from .textio import Document, build_instance, document_of, parse, serialize

__version__ = "0.1.0"
