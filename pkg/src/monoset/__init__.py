"""Monotone set-system toolkit for 0/1 programs.

Explicit systems and their operator algebra live in ``setsys``; monotone,
interval, and bimonotone approximations in ``approx``; inequality objects and
facet certification in ``cuts``; oracle-backed separation in ``separation``;
the exact branch-and-bound plus model builders in ``solver``; graph system
generators in ``graphs``; and the site-selection study in ``casestudy``.
"""

from .approx import (
    Bipartition,
    BimonotoneSystem,
    MonotoneApprox,
    bimonotone_closure,
    embedding_variants,
    interval_closure,
    interval_decompose,
    is_interval,
    lower_approx,
    monotone_approx,
    upper_approx,
)
from .cuts import (
    FacetReport,
    LinearCut,
    bimonotone_cuts,
    covering_cuts,
    elimination_cuts,
    face_rank_oracle,
    facet_check,
    is_quasi_feasible,
    no_good_cut,
)
from .separation import (
    MembershipOracle,
    SeparationResult,
    audit_shape,
    bilinear_constraint_oracle,
    explicit_oracle,
    grow_maximal_infeasible,
    separate,
    shrink_minimal_infeasible,
)
from .setsys import (
    FlipMask,
    GroundSet,
    SetSystem,
    algebra_audit,
    apply_flip,
    cocut,
    complement,
    cut,
    down_closure,
    element_complement,
    is_lower,
    is_upper,
    maximal,
    minimal,
    monotone_shape,
    up_closure,
)
from .solver import (
    BipModel,
    SolveReport,
    build_bimonotone_model,
    build_interval_model,
    build_lower_model,
    build_piecewise_model,
    build_upper_model,
    solve,
    solve_bilinear_constrained,
    solve_bilinear_objective,
)

__version__ = "0.1.0"
