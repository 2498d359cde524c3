"""
着色测试：双色着色、交叉点类型、Fox 三色着色
"""

import numpy as np
import pytest

from src.core.coloring import (
    BicolorCrossingType,
    Color,
    Direction,
    TricolorKind,
    Tricoloring,
    classify_bicolor,
    classify_slot_colors,
    classify_tricolor,
    crossing_types,
    enumerate_bicolorings,
    enumerate_tricolorings,
    fox_arcs,
    gf3_nullspace,
    swap_colors,
    tri_count,
)
from src.core.diagram import Crossing, CrossingKind, mirror, orient, parse_pd
from src.core.utils.exceptions import ColoringError


@pytest.mark.parametrize("name, expected", [("unknot", 2), ("3_1", 2), ("4_1", 2), ("hopf", 4)])
def test_bicoloring_counts(knots, name, expected):
    """每个分支两种选择"""
    assert len(enumerate_bicolorings(knots[name])) == expected


def test_bicoloring_alternates_along_strands(left_trefoil):
    for coloring in enumerate_bicolorings(left_trefoil):
        for crossing in left_trefoil.crossings:
            colors = [coloring.color(e) for e in crossing.slots]
            assert colors[0] != colors[2]
            assert colors[1] != colors[3]


def test_swap_colors_is_involution(knots):
    for diagram in knots.values():
        colorings = enumerate_bicolorings(diagram)
        for coloring in colorings:
            swapped = swap_colors(coloring)
            assert swapped != coloring
            assert swapped in colorings
            assert swap_colors(swapped) == coloring


def test_odd_virtual_component_has_no_bicoloring():
    """虚交叉点不换色，只经过一个经典交叉点的分支无法着色"""
    diagram = orient(parse_pd("X[1,2,3,4] P[4,3,2,1]"))
    assert enumerate_bicolorings(diagram) == []


def test_classical_knots_have_only_north_and_south_types(table_entries, knots):
    for entry in table_entries:
        if entry.expected.get("components") != 1 or not knots[entry.name].crossings:
            continue
        for coloring in enumerate_bicolorings(knots[entry.name]):
            directions = {t.direction for t in crossing_types(knots[entry.name], coloring)}
            assert directions <= {Direction.N, Direction.S}, entry.name


def test_swapping_colors_exchanges_north_and_south(left_trefoil):
    first, second = enumerate_bicolorings(left_trefoil)
    for a, b in zip(crossing_types(left_trefoil, first), crossing_types(left_trefoil, second)):
        assert a.sign == b.sign
        assert b.direction == a.direction.opposite()


def test_classify_slot_colors():
    """测试罗盘标架下虚线端的方向"""
    positive = Crossing(CrossingKind.CLASSICAL, (1, 2, 3, 4), 1)
    solid, dotted = Color.SOLID, Color.DOTTED
    # 正交叉点的槽位 0,1 是 SW, SE
    assert classify_slot_colors(positive, [dotted, dotted, solid, solid]) == BicolorCrossingType(Direction.S, 1)
    assert classify_slot_colors(positive, [solid, dotted, dotted, solid]).label == "E+"
    negative = positive.mirrored()
    assert classify_slot_colors(negative, [dotted, dotted, solid, solid]).label == "W-"
    with pytest.raises(ColoringError):
        classify_slot_colors(positive, [dotted, solid, dotted, solid])


def test_coloring_of_another_diagram_is_rejected(knots):
    coloring = enumerate_bicolorings(knots["3_1"])[0]
    with pytest.raises(ColoringError):
        classify_bicolor(knots["4_1"], coloring, 0)


def test_fox_arcs_of_trefoil(left_trefoil):
    arcs = fox_arcs(left_trefoil)
    assert len(arcs) == 3
    assert sorted(e for arc in arcs for e in arc) == list(range(1, 7))


def test_gf3_nullspace():
    matrix = np.array([[1, 1, 1], [0, 1, 2]])
    basis = gf3_nullspace(matrix)
    assert len(basis) == 1
    assert not (matrix @ basis[0] % 3).any()


def test_tri_matches_table(table_entries, knots):
    for entry in table_entries:
        assert tri_count(knots[entry.name]) == entry.expected["tri"], entry.name


def test_tri_is_power_of_three_and_mirror_invariant(knots):
    for diagram in knots.values():
        count = tri_count(diagram)
        assert count >= 3
        while count % 3 == 0:
            count //= 3
        assert count == 1
        assert tri_count(mirror(diagram)) == tri_count(diagram)


def test_enumerated_tricolorings_satisfy_fox_condition(left_trefoil):
    census = enumerate_tricolorings(left_trefoil)
    assert census.complete
    assert len(census) == 9
    trivial = [c for c in census if c.is_trivial()]
    assert len(trivial) == 3
    for coloring in census:
        for crossing in left_trefoil.crossings:
            over, a, b = (coloring.color(crossing.slots[s]) for s in (1, 0, 2))
            assert (2 * over - a - b) % 3 == 0


def test_tricoloring_cap_keeps_exact_count(left_trefoil):
    census = enumerate_tricolorings(left_trefoil, cap=3)
    assert census.count == 9
    assert not census.complete
    assert len(census) == 0


def test_seven_four_census(knots):
    """7_4 的每个非平凡三色着色恰有一个 Mono 交叉点"""
    diagram = knots["7_4"]
    census = enumerate_tricolorings(diagram)
    assert census.count == 9
    for coloring in census:
        kinds = [classify_tricolor(diagram, coloring, i).kind for i in diagram.classical_indices()]
        if coloring.is_trivial():
            assert set(kinds) == {TricolorKind.MONO}
        else:
            assert kinds.count(TricolorKind.MONO) == 1
            assert kinds.count(TricolorKind.POLY) == 6


def test_classify_tricolor_rejects_bad_coloring(left_trefoil):
    edges = left_trefoil.edges
    bad = Tricoloring(((1, 0),), tuple((e, 1 if e == edges[0] else 0) for e in edges))
    index = next(i for i, c in enumerate(left_trefoil.crossings) if c.slots[0] == edges[0])
    with pytest.raises(ColoringError, match="Fox"):
        classify_tricolor(left_trefoil, bad, index)
