"""Square-tiled surfaces in H(2): enumeration, SL(2,Z)-orbits, cusps and invariants."""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    BadN,
    BadPartition,
    BudgetExceeded,
    H2Error,
    InvalidCoords,
    NoInvolution,
    NonIntegralGenus,
    NotConnected,
    NotPrimitive,
    ParseError,
    WrongStratum,
)
from .origami import (  # noqa: F401
    Generator,
    LatticeBasis,
    Origami,
    StratumSignature,
    act_generator,
    canonical_key,
    period_lattice,
    validate_h2,
)
from .cylinders import (  # noqa: F401
    CylinderDecomposition,
    OneCylCoords,
    SeparatrixDiagram,
    TwoCylCoords,
    apply_U_coords,
    canonical_cusp_representative,
    cusp_width,
    decompose,
    l_shaped,
    parse_coords,
    to_origami,
)
from .weierstrass import appendix_b_invariant, invariant_from_coords, involution_oracle  # noqa: F401
from .orbits import (  # noqa: F401
    CensusRecord,
    OrbitRecord,
    brute_force_enumerate,
    classify_census,
    cusp_partition,
    elliptic_counts,
    enumerate_surfaces,
    find_one_cylinder_rep,
    genus_gauss_bonnet,
    orbit_bfs,
)
