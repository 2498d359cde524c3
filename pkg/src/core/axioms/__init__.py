"""
公理模块：Reidemeister 约束方程组、Ω3a 记账表和整图上的不变性检验
"""

from .equations import (
    R2_PAIRS,
    R3_GROUPS,
    ConstraintEntry,
    ConstraintReport,
    kink_factors,
    verify_r2_equations,
    verify_r3_equations,
)
from .omega3 import (
    REFERENCE_COLORING_TABLE,
    REFERENCE_LOOP_TABLE,
    LoopTableRow,
    Omega3Tangle,
    TangleClosure,
    all_dotted_types,
    build_tangle,
    closure_loops,
    matches_reference_table,
    non_crossing_matchings,
    omega3a_diagram,
    r3_coloring_table,
    r3_loop_table,
    verify_out_equation,
)
from .invariance import (
    MOVE_GROUPS,
    InvariantKind,
    MoveCheck,
    MoveInvarianceReport,
    move_invariance_check,
    parse_move_groups,
    random_move_sequence,
)
