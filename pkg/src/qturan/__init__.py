"""qturan: verification and search toolkit for signless-Laplacian spectral
extremal graph theory at desk scale."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .graphs import (
    DegreeProfile,
    Graph,
    Graph6Error,
    canonical_form,
    canonical_graph,
    degree_profile,
    delete_vertex,
    from_edges,
    is_isomorphic,
    join,
    parse_graph6,
    to_graph6,
)

__version__ = "0.1.0"
