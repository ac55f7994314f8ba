"""Local equivalence of graphs labeled over GF(q).

Exhaustive orbit enumeration under the two local operators, isotropic
systems and graphic presentations, Eulerian vectors, the Tutte-Martin
polynomial, and the index λ(G), with checks of the counting identities
that tie them together.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    BudgetExceeded,
    ConfigurationError,
    GraphFormatError,
    IdentityViolation,
    InvalidArgument,
    InvalidOperation,
    InvalidPresentation,
    InvariantViolation,
)
from .gf import field, is_square  # noqa: F401
from .graph import (  # noqa: F401
    LabeledGraph,
    all_graphs,
    canonical_key,
    is_connected,
    parse_graph,
    scale_graph,
    scale_vertex,
    star,
)
from .isotropic import (  # noqa: F401
    BlockDiagMatrix,
    IsotropicSystem,
    KVector,
    extract_presentation,
    from_graph,
    standard_system,
)
from .eulerian import (  # noqa: F401
    TutteMartinPoly,
    count_eulerian,
    tutte_martin_direct,
    tutte_martin_recursive,
)
from .index import lambda_index, nu_perp_dim  # noqa: F401
from .orbits import census, orbit, scalar_orbit, verify_counting  # noqa: F401
