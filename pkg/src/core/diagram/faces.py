"""
面与平面性：在 PD 的旋转系统上追踪面，并用欧拉示性数判断平面性
"""

from typing import List, Tuple

import networkx as nx

from .model import Diagram, Slot
from .orientation import partner_table

Face = Tuple[Slot, ...]


def crossing_graph(diagram: Diagram) -> nx.MultiGraph:
    """交叉点为顶点、边为边的多重图"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(diagram.crossing_count))
    for edge, places in diagram.occurrences().items():
        (c1, _), (c2, _) = places
        graph.add_edge(c1, c2, key=edge)
    return graph


def faces(diagram: Diagram) -> List[Face]:
    """
    追踪所有的面。每个面是一串出发位置 (交叉点, 槽位)：
    沿槽位 s 离开，到达 (c', s') 后从槽位 (s' - 1) mod 4 继续，面始终在左侧。

    Args:
        diagram: 图表

    Returns:
        List[Face]: 面的列表，顺序确定
    """
    partner = partner_table(diagram)
    seen = set()
    result: List[Face] = []
    for c in range(diagram.crossing_count):
        for s in range(4):
            if (c, s) in seen:
                continue
            face = []
            current = (c, s)
            while current not in seen:
                seen.add(current)
                face.append(current)
                arrival_c, arrival_s = partner[current]
                current = (arrival_c, (arrival_s - 1) % 4)
            result.append(tuple(face))
    return result


def face_edges(diagram: Diagram, face: Face) -> List[int]:
    return [diagram.crossings[c].slots[s] for c, s in face]


def is_planar(diagram: Diagram) -> bool:
    """每个连通分支满足 V - E + F = 2，即 F = n + 2k"""
    n = diagram.crossing_count
    if n == 0:
        return True
    k = nx.number_connected_components(crossing_graph(diagram))
    return len(faces(diagram)) == n + 2 * k
