"""Stationary configurations of the planar point-vortex problem.

Multistart Newton searches for relative equilibria and self-similar collapse
configurations, exact polynomial certification of finiteness for five-vortex
vorticity tuples, and order-exponent diagnostics for degenerating families.
"""

from .quantities import (
    ExactComplex,
    Invariants,
    PlanarConfiguration,
    VorticitySet,
    angular_momentum,
    conjugate_positions,
    invariants_of,
    total_vorticity,
)
from .system import (
    COLLISION_GUARD,
    CollisionError,
    ComplexConfiguration,
    ResidualVector,
    complex_system_residual,
    stationary_residual,
    velocity_field,
)
from .solver import (
    CentralConfigSolution,
    NewtonFailure,
    SolveReport,
    SolverOptions,
    classify,
    newton_refine,
    solve_central_multistart,
    solve_equilibria,
    solve_rigid_translation,
)
from .exceptional import (
    CatalogMatch,
    ConstraintClause,
    DiagramConstraint,
    ExceptionalReport,
    SubsetCheck,
    TotalVorticityZeroError,
    catalog,
    check_subset_conditions,
    evaluate_diagram_constraints,
    verdict,
)
from .asymptotics import (
    ColoredDiagram,
    DiagramExtraction,
    NotSingularError,
    ScaledSequence,
    balance_normalize,
    extract_diagram,
    four_product,
    load_family,
    roberts_family,
    roberts_normalized,
    save_family,
    verify_roberts,
)

__version__ = "0.1.0"
