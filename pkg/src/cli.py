"""
skeinkit 命令行入口

    skeinkit compute --invariant jones --knot 3_1
    skeinkit verify axioms --scheme nor --format json
    skeinkit verify moves --pd trefoil.pd --moves r1,r2,r3 --seed 7
    skeinkit verify tri-jones --table knots.jsonl
    skeinkit table

退出码：0 成功，1 验证失败，2 输入错误，64 用法错误。
"""

import argparse
import sys
from typing import List, Optional

from .core.axioms import InvariantKind, parse_move_groups
from .core.config import config
from .core.output import ReportWriter
from .core.runner import EXIT_USAGE, SUITES, InvariantRunner, RunResult
from .core.utils.exceptions import UsageError
from .core.utils.logger import get_logger, setup_logging

logger = get_logger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """用法错误抛出 UsageError，由 main 映射为退出码 64"""

    def error(self, message: str):
        raise UsageError(message)


def _add_source_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("图表来源")
    group.add_argument("--pd", help="PD 文件或内联 PD 文本，例如 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'")
    group.add_argument("--conway", help="Conway 文件或内联记号，例如 '3,1,3'")
    group.add_argument("--knot", help="纽结表中的条目名称")


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--table", help="JSONL 纽结表，默认使用内置表")
    parser.add_argument("--scheme", default="symbolic", choices=("symbolic", "nor"), help="系数方案")
    parser.add_argument("--format", choices=("text", "json"), help="输出格式，默认取配置")
    parser.add_argument("--output", help="把报告写入该文件（或目录，按图表名和不变量命名）而不是标准输出")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="skeinkit", description="着色括号纽结不变量的计算与验证")
    parser.add_argument("--config", help="JSON 配置文件")
    parser.add_argument("--log-level", help="控制台日志级别，例如 INFO、DEBUG")
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)

    compute = sub.add_parser("compute", help="计算一个不变量")
    compute.add_argument("--invariant", required=True, help=", ".join(k.value for k in InvariantKind))
    _add_source_options(compute)
    _add_common_options(compute)

    verify = sub.add_parser("verify", help="运行验证套件")
    verify.add_argument("suite", choices=SUITES)
    _add_source_options(verify)
    _add_common_options(verify)
    verify.add_argument("--moves", default="r1,r2,r3", help="移动组，逗号分隔")
    verify.add_argument("--invariant", default="enhanced", help="moves 套件检验的不变量，逗号分隔")
    verify.add_argument("--count", type=int, help="每个图表的随机移动步数")
    verify.add_argument("--seed", type=int, help="随机种子")
    verify.add_argument("--tolerance", type=float, help="tri-jones 的数值容差")

    table = sub.add_parser("table", help="列出纽结表并核对期望值")
    _add_common_options(table)
    return parser


def _has_source(args: argparse.Namespace) -> bool:
    return any(getattr(args, name, None) is not None for name in ("pd", "conway", "knot"))


def _dispatch(args: argparse.Namespace, runner: InvariantRunner):
    """返回一个生成报告的无参函数"""
    def load():
        return runner.load_diagram(args.pd, args.conway, args.knot, args.table)

    if args.command == "compute":
        return lambda: runner.compute(load(), args.invariant)
    if args.command == "table":
        return lambda: runner.table_report(runner.load_entries(args.table))

    if args.suite == "axioms":
        return runner.verify_axioms

    def entries():
        return runner.load_entries(args.table, load() if _has_source(args) else None)

    if args.suite == "moves":
        def moves():
            try:
                kinds = parse_move_groups(args.moves)
            except ValueError as e:
                raise UsageError(str(e)) from e
            invariants = [name.strip() for name in args.invariant.split(",") if name.strip()]
            return runner.verify_moves(entries(), invariants, kinds, args.seed, args.count)
        return moves
    return lambda: runner.verify_tri_jones(entries(), args.tolerance)


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行主函数

    Args:
        argv: 参数列表，默认取 sys.argv[1:]

    Returns:
        int: 退出码
    """
    writer = ReportWriter()
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("需要子命令: compute、verify 或 table")
    except UsageError as e:
        print(f"skeinkit: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.config and not config.load_from_file(args.config):
        print(f"skeinkit: 无法读取配置文件 {args.config}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(args.log_level)
    logger.info(f"命令: {args.command}")

    runner = InvariantRunner(args.scheme)
    result: RunResult = runner.run(_dispatch(args, runner))

    content = writer.render(result.report, args.format)
    if args.output:
        path = writer.write(content + "\n", args.output, result.report, args.format)
        logger.info(f"报告已写入: {path}")
    else:
        print(content)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
