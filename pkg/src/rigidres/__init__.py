"""rigidres: lcm-lattices, Betti posets, and minimal free resolutions
of rigid monomial ideals, with exact verification throughout."""

__version__ = "0.1.0"

from .monomials import (  # noqa: F401
    Monomial,
    MonomialIdeal,
    IdealSyntaxError,
    parse_ideal,
    minimalize,
    lcm,
    divides,
    ratio,
    lcm_of,
)
from .homology import (  # noqa: F401
    Chain,
    FieldSpec,
    HomologyBasis,
    SimplicialComplex,
    SpanBasis,
    chain_boundary,
    reduce_cycle,
    reduced_homology,
)
from .posets import (  # noqa: F401
    FiniteAtomicLattice,
    Poset,
    PosetMap,
    coordinatize,
    element_key,
    exists_join_preserving,
    face_lattice,
    is_isomorphic,
    join_preserving_map,
    lcm_lattice,
    meet_closure,
    order_complex,
)
from .betti import (  # noqa: F401
    BettiTable,
    RigidityReport,
    betti_numbers,
    betti_poset,
    contributing_index,
    interval_ranks,
    is_contributor,
    is_rigid,
    rigidity_report,
)
from .frames import (  # noqa: F401
    Frame,
    FrameReport,
    GradedFreeResolution,
    ResolutionReport,
    build_frame,
    connecting_block,
    homogenize,
    interval_pieces,
    relabel,
    scarf_complex,
    support_length,
    taylor_betti,
    verify_frame,
    verify_resolution,
)
from .deform import (  # noqa: F401
    Certificate,
    CertificationReport,
    DeformationResult,
    ScanEntry,
    SearchOutcome,
    certify_rigid_deformation,
    lattice_betti_totals,
    search_rigid_deformation,
    simplicial_rigid_deformation,
)
from .workers import worker_count  # noqa: F401
