"""
括号模块：通用状态和引擎及其上的各个不变量
"""

from .engine import DisjointSet, LoopExponent, smooth_state, smoothing_plan, state_sum
from .invariants import (
    JONES_HALF_RING,
    JONES_RING,
    KAUFFMAN_RING,
    TRICOLOR_RING,
    InvariantValue,
    enhanced_F,
    enhanced_invariant,
    jones_eval,
    jones_polynomial,
    kauffman_bracket,
    kauffman_loop_value,
    multiset,
    nor_phi,
    normalized_bracket,
    tricolor_V,
    tricolor_invariant,
    writhe_factor,
)
