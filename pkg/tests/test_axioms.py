"""
公理测试：R2/R3 方程组、扭结因子、Ω3a 记账表和整图上的不变性
"""

import pytest

from src.core.algebra import F8, SYMBOLIC_RING
from src.core.axioms import (
    REFERENCE_COLORING_TABLE,
    InvariantKind,
    all_dotted_types,
    build_tangle,
    kink_factors,
    matches_reference_table,
    move_invariance_check,
    non_crossing_matchings,
    omega3a_diagram,
    parse_move_groups,
    r3_coloring_table,
    r3_loop_table,
    random_move_sequence,
    verify_out_equation,
    verify_r2_equations,
    verify_r3_equations,
)
from src.core.bracket import TRICOLOR_RING, tricolor_invariant
from src.core.diagram import (
    MoveKind,
    MoveSpec,
    apply_move,
    canonical_key,
    components,
    enumerate_move_sites,
    orient,
    parse_pd,
)
from src.core.utils.exceptions import InvalidMoveError

TABLE_NAMES = ["unknot", "3_1", "4_1", "5_1", "5_2", "6_3", "7_4", "7_6", "10_132", "hopf"]


@pytest.mark.parametrize("family", ["symbolic", "nor"])
def test_r2_and_r3_equations_hold(family, symbolic, nor):
    """测试两种方案都满足全部 R2 与 R3 方程"""
    scheme = symbolic if family == "symbolic" else nor
    r2 = verify_r2_equations(scheme)
    r3 = verify_r3_equations(scheme)
    assert len(r2) == 16
    assert len(r3) == 20
    assert r2.satisfied, [e.eq_id for e in r2.failures()]
    assert r3.satisfied, [e.eq_id for e in r3.failures()]


def test_doubled_b_breaks_r2(symbolic):
    broken = symbolic.replace(b_n=symbolic.b("n") * 2)
    report = verify_r2_equations(broken)
    assert not report.satisfied
    assert any(e.eq_id.startswith("r2.nn'") for e in report.failures())


def test_swapping_east_and_west_breaks_r3(symbolic):
    swapped = symbolic.replace(
        a_e=symbolic.a("w"), a_w=symbolic.a("e"),
        b_e=symbolic.b("w"), b_w=symbolic.b("e"),
    )
    assert not verify_r3_equations(swapped).satisfied


def test_report_json(symbolic):
    entry = verify_r2_equations(symbolic).to_json()[0]
    assert entry["ok"] is True
    assert entry["residual"] == "0"


def test_kink_factors(symbolic, nor):
    a, b, n, _, _ = SYMBOLIC_RING.gens()
    positive, negative = kink_factors(symbolic)
    assert positive == -(n * a ** 2 * b ** -1)
    assert negative == -(b * n ** -1 * a ** -2)
    assert positive * negative == SYMBOLIC_RING.one

    t = F8.t
    positive, negative = kink_factors(nor)
    assert positive == F8.one + t ** 2
    assert negative == t
    assert positive * negative == F8.one


def test_non_crossing_matchings():
    closures = non_crossing_matchings()
    assert [c.index for c in closures] == [1, 2, 3, 4, 5]
    assert len(non_crossing_matchings(8)) == 14
    for closure in closures:
        assert sorted(p for pair in closure.pairs for p in pair) == list(range(6))


def test_tangle_geometry():
    """三个交叉点，边界段从 ℓ1 的出口开始"""
    for side in ("L", "L'"):
        tangle = build_tangle(side)
        assert len(tangle.crossings) == 3
        assert sorted(tangle.boundary) == [1, 3, 4, 6, 7, 9]
        assert tangle.boundary[0] == 3
    with pytest.raises(ValueError):
        build_tangle("M")


def test_loop_table_matches_reference():
    rows = r3_loop_table()
    assert len(rows) == 5
    for row in rows:
        assert all(1 <= count <= 4 for count in row.counts["L"])
    assert matches_reference_table(rows)


def test_all_dotted_types():
    labels = {tuple(t.label for t in all_dotted_types(side)) for side in ("L", "L'")}
    assert labels == {("S+", "S-", "S+"), ("N+", "N-", "N+")}


def test_coloring_table_matches_reference():
    table = r3_coloring_table()
    reference = {side: list(rows) for side, rows in REFERENCE_COLORING_TABLE.items()}
    swapped = {"L": reference["L'"], "L'": reference["L"]}
    assert table in (reference, swapped)


@pytest.mark.parametrize("index", [1, 2, 3, 4, 5])
def test_out_equations_hold(index, symbolic, nor):
    assert verify_out_equation(index, symbolic).satisfied
    assert verify_out_equation(index, nor).satisfied
    assert verify_out_equation(index, symbolic).eq_id == f"r3-closure-{index}"


def test_perturbed_scheme_breaks_out_equations(symbolic):
    a = SYMBOLIC_RING.gen("a")
    perturbed = symbolic.replace(a_n=symbolic.a("n") * a)
    assert not all(verify_out_equation(i, perturbed).satisfied for i in range(1, 6))


@pytest.mark.parametrize("index", [0, 6])
def test_out_equation_index_out_of_range(index, symbolic):
    with pytest.raises(ValueError):
        verify_out_equation(index, symbolic)


def test_omega3a_diagrams_are_related_by_r3():
    left, right = omega3a_diagram("L"), omega3a_diagram("L'")
    for diagram in (left, right):
        assert diagram.crossing_count == 3
        assert len(components(diagram)) == 1
    sites = enumerate_move_sites(left, MoveKind.R3)
    assert sites
    images = {canonical_key(apply_move(left, move)) for move in sites}
    assert canonical_key(right) in images


def test_move_invariance_on_omega3a():
    left = omega3a_diagram("L")
    moves = enumerate_move_sites(left, MoveKind.R3)[:1]
    for kind in (InvariantKind.ENHANCED, InvariantKind.NOR, InvariantKind.KAUFFMAN):
        report = move_invariance_check(left, moves, kind)
        assert report.satisfied
        assert report.to_json()["moves"][0]["equal"] is True


def test_move_invariance_check_reports_each_step(left_trefoil):
    moves = [
        MoveSpec(MoveKind.R1_ADD, 1, sign=1),
        MoveSpec(MoveKind.R1_ADD, 2, sign=-1, over_first=True),
    ]
    report = move_invariance_check(left_trefoil, moves, "jones")
    assert report.kind is InvariantKind.JONES
    assert [check.crossings for check in report.checks] == [4, 5]
    assert report.satisfied


def test_move_invariance_check_rejects_bad_site(left_trefoil):
    with pytest.raises(InvalidMoveError):
        move_invariance_check(left_trefoil, [MoveSpec(MoveKind.R2_REMOVE, 1)])


def test_invariant_kind_and_move_groups():
    assert InvariantKind.parse("NOR") is InvariantKind.NOR
    with pytest.raises(ValueError):
        InvariantKind.parse("homfly")
    assert parse_move_groups("r1, r3") == (MoveKind.R1_ADD, MoveKind.R1_REMOVE, MoveKind.R3)
    with pytest.raises(ValueError):
        parse_move_groups("r4")
    with pytest.raises(ValueError):
        parse_move_groups(" , ")


def test_random_move_sequence_is_reproducible(knots):
    first = random_move_sequence(knots["4_1"], count=8, seed=3)
    second = random_move_sequence(knots["4_1"], count=8, seed=3)
    assert first == second
    assert len(first) == 8


@pytest.mark.parametrize("name", TABLE_NAMES)
def test_enhanced_invariant_survives_random_moves(knots, name):
    """每个表中纽结做 20 步可复现的随机移动，增强不变量不变"""
    moves = random_move_sequence(knots[name], count=20, seed=7)
    report = move_invariance_check(knots[name], moves, InvariantKind.ENHANCED)
    assert report.satisfied, [str(c.move) for c in report.checks if not c.equal]


def test_tricolor_invariant_survives_kinks(knots):
    """扭结交叉点总是 Mono，R1 不改变三色不变量"""
    moves = [
        MoveSpec(MoveKind.R1_ADD, 1, sign=1),
        MoveSpec(MoveKind.R1_ADD, 3, sign=-1, over_first=True),
    ]
    assert move_invariance_check(knots["7_4"], moves, InvariantKind.TRICOLOR).satisfied


def test_tricolor_invariant_survives_moves_with_trivial_colorings(knots):
    """只有平凡三色着色时每个交叉点都是 Mono"""
    moves = random_move_sequence(knots["4_1"], count=8, seed=11, growth_limit=2)
    assert move_invariance_check(knots["4_1"], moves, InvariantKind.TRICOLOR).satisfied


def test_tri_count_survives_random_moves(knots):
    moves = random_move_sequence(knots["7_4"], count=6, seed=11, growth_limit=2)
    assert move_invariance_check(knots["7_4"], moves, InvariantKind.TRI).satisfied


def test_two_coloured_r2_changes_tricolor_values():
    """两个异色圆圈做 R2 后两个交叉点都是 Poly，V 从 δ 变成 y^2 + y^-2 - 2x^2 - 2x^-2"""
    x, y = TRICOLOR_RING.gens()
    delta = -(x ** 2) - x ** -2
    separate = [v.value for v in tricolor_invariant(orient(parse_pd("", 2)))]
    assert separate == [delta] * 9

    pushed = orient(parse_pd("X+[4,2,3,1] X-[3,2,4,1]"))
    assert pushed.writhe() == 0
    values = [v.value for v in tricolor_invariant(pushed)]
    assert len(values) == 9
    assert values.count(delta) == 3
    assert values.count(y ** 2 + y ** -2 - 2 * x ** 2 - 2 * x ** -2) == 6


def test_virtual_trefoil_enhanced_invariant_survives_random_moves(virtual_trefoil):
    """虚三叶结带有 E/W 型交叉点，增强不变量在两种方案下都不变"""
    moves = random_move_sequence(virtual_trefoil, count=10, seed=5, growth_limit=3)
    for kind in (InvariantKind.ENHANCED, InvariantKind.NOR):
        report = move_invariance_check(virtual_trefoil, moves, kind)
        assert report.satisfied, [str(c.move) for c in report.checks if not c.equal]
