"""
运行器模块，负责协调图表读取、不变量计算、验证套件和报告生成
"""

import cmath
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from .algebra import CoefficientScheme, make_scheme
from .axioms import (
    InvariantKind,
    kink_factors,
    matches_reference_table,
    move_invariance_check,
    non_crossing_matchings,
    r3_coloring_table,
    r3_loop_table,
    random_move_sequence,
    verify_out_equation,
    verify_r2_equations,
    verify_r3_equations,
)
from .axioms.omega3 import REFERENCE_COLORING_TABLE
from .bracket import (
    JONES_RING,
    enhanced_invariant,
    jones_eval,
    jones_polynomial,
    kauffman_bracket,
    multiset,
    normalized_bracket,
    tricolor_invariant,
)
from .coloring import tri_count
from .config import config
from .diagram import Diagram, MoveKind, components, mirror, orient
from .knot_table import BUNDLED_TABLE, KnotTableEntry, find_entry, load_table
from .parsers import get_parser_for_source
from .utils.exceptions import (
    AlgebraError,
    ColoringError,
    DiagramParseError,
    DiagramValidationError,
    InvalidMoveError,
    OrientationError,
    SkeinkitError,
    TableError,
    UsageError,
)
from .utils.logger import get_logger

# 获取 logger 实例
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_USAGE = 64

SUITES = ("axioms", "moves", "tri-jones")


@dataclass
class RunResult:
    """一次命令的结果：报告字典和退出码"""
    report: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = EXIT_OK


def _summary(diagram: Diagram) -> Dict[str, Any]:
    diagram = orient(diagram)
    return {
        "diagram": diagram.name or "diagram",
        "crossings": diagram.crossing_count,
        "writhe": diagram.writhe(),
        "components": len(components(diagram)),
        "virtual": diagram.is_virtual,
    }


def _values_report(values) -> Dict[str, Any]:
    return {
        "values": [v.to_json() for v in values],
        "multiset": dict(sorted(multiset(values).items())),
    }


class InvariantRunner:
    """
    运行器类，负责把命令行请求翻译为各模块的调用
    """

    def __init__(self, scheme: str = "symbolic"):
        """初始化运行器"""
        self.scheme_name = scheme
        self._scheme: Optional[CoefficientScheme] = None
        logger.info(f"InvariantRunner initialized (scheme={scheme}).")

    @property
    def scheme(self) -> CoefficientScheme:
        if self._scheme is None:
            try:
                self._scheme = make_scheme(self.scheme_name)
            except ValueError as e:
                raise UsageError(str(e)) from e
        return self._scheme

    # --- 图表来源 ---

    def load_diagram(self, pd: Optional[str] = None, conway: Optional[str] = None,
                     knot: Optional[str] = None, table: Optional[str] = None) -> Diagram:
        """
        按来源读取图表，三种来源必须恰好给出一个

        Args:
            pd: PD 文件或内联 PD 文本
            conway: Conway 文件或内联记号
            knot: 纽结表中的名称
            table: 纽结表路径，默认内置表

        Returns:
            Diagram: 已定向的图表
        """
        sources = [s for s in (pd, conway, knot) if s is not None]
        if len(sources) != 1:
            raise UsageError("必须且只能给出 --pd、--conway、--knot 中的一个")
        if knot is not None:
            entries = load_table(table or BUNDLED_TABLE)
            entry = find_entry(entries, knot)
            if entry is None:
                raise UsageError(f"纽结表中没有名为 {knot} 的条目")
            return orient(entry.diagram)
        source = pd if pd is not None else conway
        parser = get_parser_for_source(source, "pd" if pd is not None else "conway")
        logger.info(f"使用解析器: {parser.__class__.__name__}")
        return orient(parser.parse(source))

    def load_entries(self, table: Optional[str] = None, diagram: Optional[Diagram] = None) -> List[KnotTableEntry]:
        """验证套件的输入：单个图表或整个纽结表"""
        if diagram is not None:
            return [KnotTableEntry(diagram.name or "diagram", diagram)]
        return load_table(table or BUNDLED_TABLE)

    # --- compute ---

    def compute(self, diagram: Diagram, invariant: str) -> Dict[str, Any]:
        """
        计算一个不变量

        Args:
            diagram: 图表
            invariant: kauffman / jones / enhanced / nor / tricolor / tri

        Returns:
            Dict[str, Any]: 报告，字段见 README
        """
        try:
            kind = InvariantKind.parse(invariant)
        except ValueError as e:
            raise UsageError(str(e)) from e
        report = {"invariant": kind.value, **_summary(diagram)}
        if kind is InvariantKind.KAUFFMAN:
            report["bracket"] = kauffman_bracket(diagram).to_text()
            report["normalized"] = normalized_bracket(diagram).to_text()
        elif kind is InvariantKind.JONES:
            jones = jones_polynomial(diagram)
            report["variable"] = jones.ring.variables[0]
            report["jones"] = jones.to_text()
        elif kind is InvariantKind.ENHANCED:
            report["scheme"] = self.scheme.family
            report.update(_values_report(enhanced_invariant(diagram, self.scheme)))
        elif kind is InvariantKind.NOR:
            report["scheme"] = "nor"
            report.update(_values_report(enhanced_invariant(diagram, make_scheme("nor"))))
        elif kind is InvariantKind.TRICOLOR:
            report.update(_values_report(tricolor_invariant(diagram)))
        else:
            report["tri"] = tri_count(diagram)
        logger.info(f"{report['diagram']}: {kind.value} 计算完成")
        return report

    # --- verify ---

    def verify_axioms(self) -> Dict[str, Any]:
        """R2/R3 方程组、五个闭包方程、扭结因子以及 Ω3a 记账表"""
        scheme = self.scheme
        r2 = verify_r2_equations(scheme)
        r3 = verify_r3_equations(scheme)
        closures = [verify_out_equation(i, scheme) for i in range(1, len(non_crossing_matchings()) + 1)]
        positive, negative = kink_factors(scheme)
        kink_ok = (positive * negative - scheme.ring.one).is_zero()
        loop_ok = matches_reference_table(r3_loop_table())
        coloring = {side: [list(row) for row in rows] for side, rows in r3_coloring_table().items()}
        reference = {side: [list(row) for row in rows] for side, rows in REFERENCE_COLORING_TABLE.items()}
        # 镜像手性下两侧整体互换
        coloring_ok = coloring == reference or coloring == {"L": reference["L'"], "L'": reference["L"]}
        items = [
            {"check": "r2", "ok": r2.satisfied, "equations": r2.to_json()},
            {"check": "r3", "ok": r3.satisfied, "equations": r3.to_json()},
            {"check": "closures", "ok": all(c.satisfied for c in closures),
             "equations": [c.to_json() for c in closures]},
            {"check": "kink", "ok": kink_ok,
             "factors": [_text(positive), _text(negative)]},
            {"check": "loop-table", "ok": loop_ok},
            {"check": "coloring-table", "ok": coloring_ok, "table": coloring},
        ]
        return {"suite": "axioms", "scheme": scheme.family, "items": items}

    def verify_moves(self, entries: Sequence[KnotTableEntry], invariants: Sequence[str],
                     kinds: Sequence[MoveKind], seed: Optional[int] = None,
                     count: Optional[int] = None) -> Dict[str, Any]:
        """
        对每个条目生成可复现的随机移动序列，检验所选不变量保持不变

        每个条目的种子由基础种子和条目序号决定，与处理顺序无关。
        """
        seed = config.get("verify", "seed") if seed is None else seed
        try:
            parsed = [InvariantKind.parse(name) for name in invariants]
        except ValueError as e:
            raise UsageError(str(e)) from e
        items = []
        for index, entry in enumerate(entries):
            try:
                moves = random_move_sequence(entry.diagram, count, seed + index, kinds)
            except InvalidMoveError as e:
                logger.error(f"{entry.name}: 无法生成移动序列: {e}")
                items.append({"name": entry.name, "ok": False, "error": str(e)})
                continue
            for kind in parsed:
                items.append(self._guarded(
                    entry.name, lambda entry=entry, moves=moves, kind=kind: self._move_item(entry, moves, kind)))
        return {"suite": "moves", "seed": seed, "items": items}

    def _move_item(self, entry: KnotTableEntry, moves, kind: InvariantKind) -> Dict[str, Any]:
        report = move_invariance_check(entry.diagram, moves, kind)
        item = report.to_json()
        item["name"] = entry.name
        return item

    def verify_tri_jones(self, entries: Sequence[KnotTableEntry],
                         tolerance: Optional[float] = None) -> Dict[str, Any]:
        """每个条目检查 |tri(L) - 3·|V_L(e^{2πi/6})|^2| ≤ tolerance"""
        tolerance = config.get("verify", "tolerance") if tolerance is None else tolerance
        point = cmath.exp(2j * cmath.pi / 6)
        items = []
        for entry in entries:
            def check(entry=entry):
                tri = tri_count(entry.diagram)
                value = 3 * abs(jones_eval(entry.diagram, point)) ** 2
                return {"name": entry.name, "tri": tri, "three_abs_v_squared": round(value, 12),
                        "ok": abs(tri - value) <= tolerance}
            items.append(self._guarded(entry.name, check))
        return {"suite": "tri-jones", "tolerance": tolerance, "items": items}

    def _guarded(self, name: str, check: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
        """单个条目出错时记入报告，其他条目继续"""
        try:
            return check()
        except (InvalidMoveError, ColoringError, AlgebraError, OrientationError) as e:
            logger.error(f"{name}: 检查失败: {e}")
            return {"name": name, "ok": False, "error": str(e)}

    # --- table ---

    def table_report(self, entries: Sequence[KnotTableEntry]) -> Dict[str, Any]:
        """列出条目的基本量，并核对 expected 中给出的值"""
        items = []
        for entry in entries:
            items.append(self._guarded(entry.name, lambda entry=entry: self._table_item(entry)))
        return {"suite": "table", "items": items}

    def _table_item(self, entry: KnotTableEntry) -> Dict[str, Any]:
        diagram = orient(entry.diagram)
        item = {"name": entry.name, **_summary(diagram)}
        item.pop("diagram")
        item["tri"] = tri_count(diagram)
        mismatches = []
        expected = entry.expected
        if "tri" in expected and expected["tri"] != item["tri"]:
            mismatches.append("tri")
        if "components" in expected and expected["components"] != item["components"]:
            mismatches.append("components")
        if "jones" in expected or "jones_up_to_mirror" in expected:
            jones = jones_polynomial(diagram)
            item["jones"] = jones.to_text()
            if "jones" in expected and JONES_RING.parse(expected["jones"]) != jones:
                mismatches.append("jones")
            if "jones_up_to_mirror" in expected:
                target = JONES_RING.parse(expected["jones_up_to_mirror"])
                if target not in (jones, jones_polynomial(mirror(diagram))):
                    mismatches.append("jones_up_to_mirror")
        item["mismatches"] = mismatches
        item["ok"] = not mismatches
        return item

    # --- 入口 ---

    def run(self, action: Callable[[], Dict[str, Any]]) -> RunResult:
        """
        执行一个命令并把异常映射为退出码

        Args:
            action: 返回报告字典的无参函数

        Returns:
            RunResult
        """
        try:
            report = action()
        except UsageError as e:
            logger.error(f"用法错误: {e}")
            return RunResult({"ok": False, "error": str(e)}, EXIT_USAGE)
        except (DiagramParseError, DiagramValidationError, OrientationError, TableError) as e:
            logger.error(f"输入错误: {e}")
            return RunResult({"ok": False, "error": str(e)}, EXIT_INPUT)
        except SkeinkitError as e:
            logger.error(f"计算失败: {e}")
            return RunResult({"ok": False, "error": str(e)}, EXIT_FAILED)

        if "items" in report:
            report["ok"] = all(item.get("ok", False) for item in report["items"])
        else:
            report.setdefault("ok", True)
        return RunResult(report, EXIT_OK if report["ok"] else EXIT_FAILED)


def _text(value: Any) -> str:
    return value.to_text() if hasattr(value, "to_text") else str(value)
