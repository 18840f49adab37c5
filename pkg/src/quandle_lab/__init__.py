"""Quandle invariants of knots and surface-knots.

Finite quandles and colorings, quandle (co)homology, fundamental cycles of
combinatorial surface-knot diagrams, cocycle state sums, and closed-form
invariants of twist-spun torus-knot connected sums.
"""
from .errors import BasisLimitError, ComputationError, DomainError, StructuralError
from .quandle import (
    Coloring,
    FiniteQuandle,
    QuandlePresentation,
    alexander,
    check_axioms,
    connected_sum,
    dihedral,
    enumerate_colorings,
    reverse_mirror_presentation,
    trivial,
)
from .chains import (
    AbelianGroupInvariants,
    Cochain,
    IntChain,
    boundary,
    boundary_matrix,
    coboundary,
    homology,
    kronecker,
    select_distinguished_cocycle,
    solve_cocycles,
)
from .linalg import smith_normal_form
from .diagram import (
    DiagramDatum,
    TriplePoint,
    fundamental_cycle,
    load_fixture,
    negate_cycle,
    presentation_of,
    pushforward,
    verify_cycle,
)
from .group_ring import GroupRingElement
from .state_sum import invariance_probe, phi, phi_mirror
from .closed_forms import (
    CyclicPoly,
    SurfaceKnotLabel,
    constant_term,
    distinguish_pair,
    gauss_sum_poly,
    phi_FI,
    phi_closed_form,
    verify_prop31,
)
from .gauss_sum import SigmaExpression, distinguish_genus_g_pair, sigma_value

__version__ = "0.1.0"
