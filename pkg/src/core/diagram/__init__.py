"""
图表模块：PD 解析、定向、罗盘标架、面、Conway 构造和 Reidemeister 移动
"""

from .model import Crossing, CrossingKind, Diagram, disjoint_union, mirror, validate
from .pd_code import parse_pd
from .orientation import (
    Component,
    canonical_key,
    components,
    orient,
    renumber,
    strand_cycles,
)
from .frame import Compass, CompassFrame, Smoothing, canonical_frame, smoothing_pairs
from .faces import crossing_graph, faces, is_planar
from .planar import PlanarCrossing, diagram_from_planar
from .tangles import conway_diagram, montesinos, rational_knot, rational_tangle, torus_2
from .moves import MoveKind, MoveSpec, apply_move, enumerate_move_sites, random_move

__all__ = [
    "Crossing", "CrossingKind", "Diagram", "disjoint_union", "mirror", "validate",
    "parse_pd",
    "Component", "canonical_key", "components", "orient", "renumber", "strand_cycles",
    "Compass", "CompassFrame", "Smoothing", "canonical_frame", "smoothing_pairs",
    "crossing_graph", "faces", "is_planar",
    "PlanarCrossing", "diagram_from_planar",
    "conway_diagram", "montesinos", "rational_knot", "rational_tangle", "torus_2",
    "MoveKind", "MoveSpec", "apply_move", "enumerate_move_sites", "random_move",
]
