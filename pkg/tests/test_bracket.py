"""
括号测试：Kauffman 括号、Jones 多项式、增强不变量、NOR 特化与三色不变量
"""

from itertools import product

import networkx as nx
import pytest
import sympy

from src.core.algebra import F8, make_scheme
from src.core.bracket import (
    JONES_RING,
    KAUFFMAN_RING,
    TRICOLOR_RING,
    enhanced_F,
    enhanced_invariant,
    jones_eval,
    jones_polynomial,
    kauffman_bracket,
    kauffman_loop_value,
    multiset,
    normalized_bracket,
    nor_phi,
    state_sum,
    tricolor_V,
    tricolor_invariant,
)
from src.core.coloring import crossing_types, enumerate_bicolorings, enumerate_tricolorings
from src.core.diagram import (
    Diagram,
    MoveKind,
    MoveSpec,
    apply_move,
    components,
    disjoint_union,
    mirror,
    orient,
    parse_pd,
)
from src.core.utils.exceptions import AlgebraError, RingMismatchError

RIGHT_TREFOIL_KAUFFMAN = "-A^5 - A^-3 + A^-7"
SMALL_KNOTS = ["unknot", "3_1", "4_1", "5_1", "5_2", "6_3", "hopf"]


def _naive_bracket(diagram: Diagram):
    """逐个状态追踪圈数：A 光滑化连接槽位 {0,1},{2,3}，B 光滑化连接 {0,3},{1,2}，虚交叉点直通"""
    A = sympy.Symbol("A")
    d = -A ** 2 - A ** -2
    classical = [c for c in diagram.crossings if c.is_classical]
    virtual = [c for c in diagram.crossings if not c.is_classical]
    total = 0
    for state in product((True, False), repeat=len(classical)):
        graph = nx.Graph()
        graph.add_nodes_from(diagram.edges)
        for crossing in virtual:
            graph.add_edge(crossing.slots[0], crossing.slots[2])
            graph.add_edge(crossing.slots[1], crossing.slots[3])
        for crossing, use_a in zip(classical, state):
            s = crossing.slots
            pairs = ((0, 1), (2, 3)) if use_a else ((0, 3), (1, 2))
            for i, j in pairs:
                graph.add_edge(s[i], s[j])
        loops = nx.number_connected_components(graph) + diagram.unknot_components
        a_count = sum(state)
        total += A ** (2 * a_count - len(classical)) * d ** (loops - 1)
    return sympy.expand(total)


def test_right_trefoil_bracket(right_trefoil):
    """测试右手三叶结的 Kauffman 括号"""
    assert kauffman_bracket(right_trefoil) == KAUFFMAN_RING.parse(RIGHT_TREFOIL_KAUFFMAN)


@pytest.mark.parametrize("name", SMALL_KNOTS)
def test_bracket_matches_naive_state_sum(knots, name):
    diagram = knots[name]
    difference = kauffman_bracket(diagram).to_sympy() - _naive_bracket(diagram)
    assert sympy.simplify(difference) == 0


def test_virtual_trefoil_bracket(virtual_trefoil):
    A = KAUFFMAN_RING.gen("A")
    assert kauffman_bracket(virtual_trefoil) == -(A ** 4) + KAUFFMAN_RING.one + A ** -2
    assert normalized_bracket(virtual_trefoil) == -(A ** 10) + A ** 6 + A ** 4
    difference = kauffman_bracket(virtual_trefoil).to_sympy() - _naive_bracket(virtual_trefoil)
    assert sympy.simplify(difference) == 0


def test_only_virtual_crossings_give_free_loops(symbolic):
    """只有虚交叉点时每个分支是一个圈"""
    diagram = orient(parse_pd("P[1,3,2,4] P[2,4,1,3] P[5,5,6,6]"))
    assert len(components(diagram)) == 3
    assert kauffman_bracket(diagram) == kauffman_loop_value() ** 2
    values = enhanced_invariant(diagram, symbolic)
    assert len(values) == 8
    assert all(v.value == symbolic.d ** 3 for v in values)


def test_bracket_of_empty_and_circles():
    assert kauffman_bracket(Diagram()) == KAUFFMAN_RING.one
    two_circles = Diagram((), 2)
    assert kauffman_bracket(two_circles) == kauffman_loop_value()


def test_bracket_is_multiplicative_under_disjoint_union(knots):
    first, second = knots["3_1"], knots["4_1"]
    union = orient(disjoint_union(first, second))
    expected = kauffman_loop_value() * kauffman_bracket(first) * kauffman_bracket(second)
    assert kauffman_bracket(union) == expected


def test_bracket_ignores_crossing_order(knots):
    for name in ("4_1", "5_2"):
        diagram = knots[name]
        shuffled = orient(Diagram(tuple(reversed(diagram.crossings)), diagram.unknot_components))
        assert kauffman_bracket(shuffled) == kauffman_bracket(diagram)


def test_normalized_bracket_ignores_kinks(left_trefoil):
    for sign in (1, -1):
        kinked = apply_move(left_trefoil, MoveSpec(MoveKind.R1_ADD, 1, sign=sign))
        assert kauffman_bracket(kinked) != kauffman_bracket(left_trefoil)
        assert normalized_bracket(kinked) == normalized_bracket(left_trefoil)


def test_jones_matches_table(table_entries, knots):
    for entry in table_entries:
        diagram = knots[entry.name]
        if "jones" in entry.expected:
            assert jones_polynomial(diagram) == JONES_RING.parse(entry.expected["jones"]), entry.name
        if "jones_up_to_mirror" in entry.expected:
            expected = JONES_RING.parse(entry.expected["jones_up_to_mirror"])
            assert expected in (jones_polynomial(diagram), jones_polynomial(mirror(diagram))), entry.name


@pytest.mark.parametrize("t", [2.0, 0.5, 1j, complex(0.3, -1.2)])
def test_jones_eval_on_right_trefoil(right_trefoil, t):
    expected = t + t ** 3 - t ** 4
    assert jones_eval(right_trefoil, t) == pytest.approx(expected, abs=1e-9)


def test_jones_eval_at_zero_raises(left_trefoil):
    with pytest.raises(AlgebraError):
        jones_eval(left_trefoil, 0)


def test_jones_of_hopf_uses_half_powers(knots):
    """偶数个分支时结果在 s = t^(1/2) 中"""
    jones = jones_polynomial(knots["hopf"])
    assert jones.ring.variables == ("s",)
    assert any(exp[0] % 2 for exp, _ in jones.terms())


def test_state_sum_rejects_mixed_rings(left_trefoil):
    A = KAUFFMAN_RING.gen("A")
    x = TRICOLOR_RING.gen("x")
    with pytest.raises(RingMismatchError):
        state_sum(left_trefoil, [(A, A ** -1)] * 3, -(x ** 2) - x ** -2)


def test_enhanced_invariant_of_unknot(unknot, symbolic):
    values = enhanced_invariant(unknot)
    assert [v.value for v in values] == [symbolic.d, symbolic.d]


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("over_first", [False, True])
def test_enhanced_F_of_kinked_unknot(unknot, symbolic, sign, over_first):
    """扭结被拧数因子抵消"""
    kinked = apply_move(unknot, MoveSpec(MoveKind.R1_ADD, sign=sign, over_first=over_first))
    for coloring in enumerate_bicolorings(kinked):
        assert enhanced_F(kinked, coloring, symbolic) == symbolic.d


def test_enhanced_invariant_of_trefoil(left_trefoil):
    values = enhanced_invariant(left_trefoil)
    assert len(values) == 2
    assert values[0].value == values[1].value
    assert values[0].to_json()["coloring"] == 1


def test_virtual_trefoil_reaches_east_and_west_types(virtual_trefoil):
    """虚交叉点不换色，两个经典交叉点分别是 W- 和 E-"""
    colorings = enumerate_bicolorings(virtual_trefoil)
    assert len(colorings) == 2
    labels = {tuple(t.label for t in crossing_types(virtual_trefoil, c)) for c in colorings}
    assert labels == {("W-", "E-"), ("E-", "W-")}


def test_enhanced_invariant_of_virtual_trefoil(virtual_trefoil, symbolic):
    values = enhanced_invariant(virtual_trefoil, symbolic)
    assert len(values) == 2
    for value in values:
        assert value.value.degree_range("w") == (-1, -1)
        assert value.value.degree_range("e") == (-1, -1)
    assert values[0].value == values[1].value


def test_nor_phi_of_unknot(unknot):
    d = F8.one + F8.t + F8.t ** 2
    assert [v.value for v in nor_phi(unknot)] == [d, d]


def test_nor_phi_matches_nor_scheme(knots):
    diagram = knots["4_1"]
    assert multiset(nor_phi(diagram)) == multiset(enhanced_invariant(diagram, make_scheme("nor")))


def test_nor_phi_agrees_on_five_one_and_ten_132(knots):
    """NOR 特化不能区分 5_1 和 10_132，Jones 多项式也不能"""
    five = knots["5_1"]
    ten = knots["10_132"]
    if jones_polynomial(ten) != jones_polynomial(five):
        ten = mirror(ten)
    assert jones_polynomial(ten) == jones_polynomial(five)
    assert multiset(nor_phi(five)) == multiset(nor_phi(ten))
    for t in (2.0, 1j, complex(0.7, 0.4)):
        assert jones_eval(five, t) == pytest.approx(jones_eval(ten, t), abs=1e-9)


def test_tricolor_trivial_coloring_is_normalized_bracket(knots):
    for name in ("3_1", "4_1", "5_2"):
        diagram = knots[name]
        expected = normalized_bracket(diagram).substitute({"A": "x"}, TRICOLOR_RING)
        for coloring in enumerate_tricolorings(diagram):
            if coloring.is_trivial():
                assert tricolor_V(diagram, coloring) == expected, name


@pytest.mark.parametrize("over_first", [False, True])
def test_tricolor_V_of_kinked_unknot(unknot, over_first):
    """正扭结的三段弧同色，任意三色着色下 V = 1"""
    kinked = apply_move(unknot, MoveSpec(MoveKind.R1_ADD, sign=1, over_first=over_first))
    colorings = enumerate_tricolorings(kinked)
    assert len(colorings) == 3
    for coloring in colorings:
        assert tricolor_V(kinked, coloring) == TRICOLOR_RING.one


def test_tricolor_invariant_sizes(knots):
    assert len(tricolor_invariant(knots["3_1"])) == 9
    assert len(tricolor_invariant(knots["4_1"])) == 3


def test_tricolor_invariant_sees_mono_and_poly_crossings(knots):
    """非平凡着色的值含有 y"""
    values = tricolor_invariant(knots["7_4"])
    with_y = [v for v in values if v.value.degree_range("y") != (0, 0)]
    assert len(with_y) == 6
