"""
Reidemeister 约束方程组的验证：R2 的 16 个方程、R3 的 20 个方程和 R1 扭结因子

每个方程按残差 lhs - rhs 是否为环中的零来判定，从不比较字符串。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..algebra import CoefficientScheme
from ..utils.logger import get_logger

logger = get_logger(__name__)

# R2 方程中配对的方向：(不带撇号, 带撇号)
R2_PAIRS = (("w", "e"), ("e", "w"), ("s", "s"), ("n", "n"))

# R3 方程的四组方向三元组：两侧分别是 L 和 L' 中的类型
R3_GROUPS = (
    (("n", "n", "n"), ("s", "s", "s")),
    (("n", "w", "e"), ("s", "e", "w")),
    (("w", "s", "e"), ("e", "n", "w")),
    (("w", "e", "n"), ("e", "w", "s")),
)


@dataclass(frozen=True)
class ConstraintEntry:
    """一个方程的检查结果"""
    eq_id: str
    lhs: Any
    rhs: Any
    residual: Any

    @property
    def satisfied(self) -> bool:
        return self.residual.is_zero()

    def to_json(self) -> Dict[str, Any]:
        return {"eq": self.eq_id, "residual": _text(self.residual), "ok": self.satisfied}


@dataclass
class ConstraintReport:
    """一组方程的检查结果"""
    name: str
    entries: List[ConstraintEntry] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return all(entry.satisfied for entry in self.entries)

    def failures(self) -> List[ConstraintEntry]:
        return [entry for entry in self.entries if not entry.satisfied]

    def add(self, eq_id: str, lhs: Any, rhs: Any) -> ConstraintEntry:
        entry = ConstraintEntry(eq_id, lhs, rhs, lhs - rhs)
        self.entries.append(entry)
        return entry

    def extend(self, other: "ConstraintReport") -> None:
        self.entries.extend(other.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> List[Dict[str, Any]]:
        return [entry.to_json() for entry in self.entries]


def _text(value: Any) -> str:
    return value.to_text() if hasattr(value, "to_text") else str(value)


def verify_r2_equations(scheme: CoefficientScheme) -> ConstraintReport:
    """
    R2 方程组：对每对方向 (p, q)
        a_p a'_q = 1,  a_p b'_q + b_p a'_q + b_p b'_q d = 0,
        b_p b'_q = 1,  b_p a'_q + a_p b'_q + a_p a'_q d = 0

    Args:
        scheme: 系数方案

    Returns:
        ConstraintReport: 16 个方程
    """
    a, b, d = scheme.a, scheme.b, scheme.d
    one, zero = scheme.ring.one, scheme.ring.zero
    report = ConstraintReport("r2")
    for p, q in R2_PAIRS:
        tag = f"r2.{p}{q}'"
        report.add(f"{tag}.aa", a(p) * a(q, True), one)
        report.add(f"{tag}.a-mix", a(p) * b(q, True) + b(p) * a(q, True) + b(p) * b(q, True) * d, zero)
        report.add(f"{tag}.bb", b(p) * b(q, True), one)
        report.add(f"{tag}.b-mix", b(p) * a(q, True) + a(p) * b(q, True) + a(p) * a(q, True) * d, zero)
    logger.info(f"R2 方程: {len(report) - len(report.failures())}/{len(report)} 满足")
    return report


def _triple(scheme: CoefficientScheme, letters: str, directions: Tuple[str, str, str]) -> Any:
    """三个交叉点系数之积，中间一个带撇号"""
    first, middle, last = directions
    pick = {"a": scheme.a, "b": scheme.b}
    return (pick[letters[0]](first) * pick[letters[1]](middle, True)
            * pick[letters[2]](last))


def verify_r3_equations(scheme: CoefficientScheme) -> ConstraintReport:
    """
    R3 方程组：四组方向，每组五个方程

    Args:
        scheme: 系数方案

    Returns:
        ConstraintReport: 20 个方程
    """
    d = scheme.d
    report = ConstraintReport("r3")
    for p, q in R3_GROUPS:
        tag = f"r3.{''.join(p)}|{''.join(q)}"
        for letters in ("bba", "bab", "abb"):
            report.add(f"{tag}.{letters}", _triple(scheme, letters, p), _triple(scheme, letters, q))
        for name, left, right in (("bbb", p, q), ("bbb'", q, p)):
            expansion = (d * _triple(scheme, "aaa", right) + _triple(scheme, "aab", right)
                         + _triple(scheme, "aba", right) + _triple(scheme, "baa", right))
            report.add(f"{tag}.{name}", _triple(scheme, "bbb", left), expansion)
    logger.info(f"R3 方程: {len(report) - len(report.failures())}/{len(report)} 满足")
    return report


def kink_factors(scheme: CoefficientScheme) -> Tuple[Any, Any]:
    """
    R1 扭结因子 (d·a_n + b_n, d·a'_n + b'_n)，两者之积应为 1
    """
    d = scheme.d
    return d * scheme.a("n") + scheme.b("n"), d * scheme.a("n", True) + scheme.b("n", True)
