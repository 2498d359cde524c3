"""
着色模块：双色着色与 Fox 三色着色，以及交叉点类型判定
"""

from .bicolor import (
    BicolorCrossingType,
    Bicoloring,
    Color,
    Direction,
    classify_bicolor,
    classify_slot_colors,
    crossing_types,
    enumerate_bicolorings,
    swap_colors,
)
from .tricolor import (
    TricolorCrossingType,
    TricolorKind,
    Tricoloring,
    TricoloringCensus,
    classify_tricolor,
    enumerate_tricolorings,
    fox_arcs,
    fox_matrix,
    gf3_nullspace,
    tri_count,
)
