"""
Reidemeister 移动测试
"""

import random

import pytest

from src.core.bracket import jones_polynomial, normalized_bracket
from src.core.coloring import tri_count
from src.core.diagram import (
    MoveKind,
    MoveSpec,
    apply_move,
    canonical_key,
    components,
    enumerate_move_sites,
    is_planar,
    random_move,
    validate,
)
from src.core.utils.exceptions import InvalidMoveError


def test_r1_sites_on_trefoil(left_trefoil):
    """每条边、两种符号、两种先后顺序"""
    sites = enumerate_move_sites(left_trefoil, MoveKind.R1_ADD)
    assert len(sites) == 6 * 4
    assert enumerate_move_sites(left_trefoil, MoveKind.R1_REMOVE) == []
    assert enumerate_move_sites(left_trefoil, MoveKind.R2_REMOVE) == []


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("over_first", [False, True])
def test_r1_add_changes_writhe_and_keeps_bracket(left_trefoil, sign, over_first):
    kinked = apply_move(left_trefoil, MoveSpec(MoveKind.R1_ADD, 2, sign=sign, over_first=over_first))
    validate(kinked)
    assert kinked.crossing_count == 4
    assert kinked.writhe() == left_trefoil.writhe() + sign
    assert is_planar(kinked)
    assert normalized_bracket(kinked) == normalized_bracket(left_trefoil)


def test_r1_add_then_remove_restores_diagram(left_trefoil):
    kinked = apply_move(left_trefoil, MoveSpec(MoveKind.R1_ADD, 4, sign=-1))
    removals = enumerate_move_sites(kinked, MoveKind.R1_REMOVE)
    assert removals
    restored = apply_move(kinked, removals[0])
    assert canonical_key(restored) == canonical_key(left_trefoil)


def test_r1_on_unknot_circle(unknot):
    kinked = apply_move(unknot, MoveSpec(MoveKind.R1_ADD, None, sign=1))
    assert kinked.crossing_count == 1
    assert kinked.unknot_components == 0
    assert len(components(kinked)) == 1


@pytest.mark.parametrize("over", [True, False])
def test_r2_add_on_unknot(unknot, over):
    doubled = apply_move(unknot, MoveSpec(MoveKind.R2_ADD, over=over))
    validate(doubled)
    assert doubled.crossing_count == 2
    assert doubled.writhe() == 0
    assert is_planar(doubled)
    assert tri_count(doubled) == 3
    assert len(enumerate_move_sites(doubled, MoveKind.R2_REMOVE)) > 0


def test_r2_add_then_remove_on_trefoil(left_trefoil):
    sites = enumerate_move_sites(left_trefoil, MoveKind.R2_ADD)
    assert sites
    for move in sites[:6]:
        bigger = apply_move(left_trefoil, move)
        assert bigger.crossing_count == 5
        assert is_planar(bigger)
        assert jones_polynomial(bigger) == jones_polynomial(left_trefoil)
        removals = enumerate_move_sites(bigger, MoveKind.R2_REMOVE)
        assert removals
        restored = [apply_move(bigger, removal) for removal in removals]
        assert all(smaller.crossing_count == 3 for smaller in restored)
        assert canonical_key(left_trefoil) in {canonical_key(smaller) for smaller in restored}, str(move)


def test_inapplicable_sites_raise(left_trefoil):
    with pytest.raises(InvalidMoveError):
        apply_move(left_trefoil, MoveSpec(MoveKind.R1_REMOVE, 1))
    with pytest.raises(InvalidMoveError):
        apply_move(left_trefoil, MoveSpec(MoveKind.R2_REMOVE, 1))
    with pytest.raises(InvalidMoveError):
        apply_move(left_trefoil, MoveSpec(MoveKind.R1_REMOVE))


def test_random_moves_are_reproducible(knots):
    def walk(seed):
        rng = random.Random(seed)
        diagram, moves = knots["4_1"], []
        for _ in range(6):
            move, diagram = random_move(diagram, rng)
            moves.append(str(move))
        return moves, canonical_key(diagram)

    assert walk(3) == walk(3)


def test_random_moves_preserve_jones(knots):
    rng = random.Random(5)
    diagram = knots["5_2"]
    expected = jones_polynomial(diagram)
    for _ in range(4):
        _, diagram = random_move(diagram, rng)
        validate(diagram)
        assert is_planar(diagram)
        assert jones_polynomial(diagram) == expected
