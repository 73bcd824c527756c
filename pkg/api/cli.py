"""命令行入口：参数解析、设置合并、处理器分发与运行清单写出。

退出码：0 成功；1 输入或配置错误；2 认证不完整（存在未解决盒或排除样本超限）。
"""

from __future__ import annotations

import argparse
import logging
import time
from dataclasses import asdict
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from api.handlers.base import EXIT_CONFIG_ERROR, HandlerResult
from api.handlers.context import HandlerContext
from api.handlers.registry import get_handler
from config.settings import Settings
from core.errors import AtlasError, ConfigError
from core.io.manifest import write_manifest
from core.logging_config import setup_logging
from core.model.geometry import Geometry
from core.model.geometry_io import dump_geometry_config, load_geometry
from core.model.systems import build_constraints, build_cusp_system, build_singular_system
from core.numeric.rational import format_rational, rational_from_decimal
from core.poly.dump import dump_system
from core.solver.report import SolverOptions
from models.run import RunConfig, RunManifest

logger = logging.getLogger(__name__)

TOOL_NAME = "rpr-cusp-atlas"
COMMON_KEYS = (
    "geometry", "out", "threads", "min_width", "max_depth", "max_boxes",
    "verbose", "dump_system", "dump_config", "beta_sign", "command",
)


class _ArgumentParser(argparse.ArgumentParser):
    """参数错误抛出 ConfigError，由 run() 统一映射为退出码 1。"""

    def error(self, message: str):  # type: ignore[override]
        raise ConfigError(message)


def _tool_version() -> str:
    try:
        return version(TOOL_NAME)
    except PackageNotFoundError:
        return "0.1.0"


def decimal_default(value: float) -> str:
    """设置中的浮点默认值写成可被精确读入的十进制文本（1e-05 → 0.00001）。"""
    return format_rational(Fraction(repr(value)))


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--geometry", default="preset:benchmark", help="几何 YAML 文件或 preset:<name>")
    common.add_argument("--out", default=settings.output_dir, help="输出目录")
    common.add_argument("--threads", type=int, default=None, help="工作进程数上限")
    common.add_argument("--min-width", type=float, default=None)
    common.add_argument("--max-depth", type=int, default=None)
    common.add_argument("--max-boxes", type=int, default=None)
    common.add_argument("--beta-sign", type=int, choices=(1, -1), default=None, help="覆盖 β 的符号")
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--dump-system", action="store_true", help="写出方程组文本 system.txt")
    common.add_argument("--dump-config", action="store_true", help="写出精确几何 geometry.yaml")

    parser = _ArgumentParser(prog="rpr-atlas", description="平面 3-RPR 机构的认证奇异与尖点分析")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {_tool_version()}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    dk = sub.add_parser("dk", parents=[common], help="正运动学：给定杆长的全部装配模式")
    for name in ("--r1", "--r2", "--r3"):
        dk.add_argument(name, required=True)

    cusps = sub.add_parser("cusps", parents=[common], help="单个 ρ1 切片上的尖点")
    cusps.add_argument("--r1", required=True)

    sl = sub.add_parser("slice", parents=[common], help="奇异曲线切片（CSV + SVG）")
    sl.add_argument("--r1", required=True)
    sl.add_argument("--grid", type=int, default=settings.grid_size)
    sl.add_argument("--min", default="0")
    sl.add_argument("--max", default=decimal_default(settings.slice_max))
    sl.add_argument("--sections", type=int, default=0, help="叠加 N 条竖线上的认证奇异点")

    pr = sub.add_parser("profile", parents=[common], help="尖点计数随 ρ1 的剖面")
    pr.add_argument("--range", required=True, help="lo:hi")
    pr.add_argument("--step", default=decimal_default(settings.profile_step))
    pr.add_argument("--tol", default=decimal_default(settings.bracket_tol))

    ik = sub.add_parser("ik", parents=[common], help="逆运动学：由位姿求杆长")
    ik.add_argument("--B1x", dest="B1x", required=True)
    ik.add_argument("--B1y", dest="B1y", required=True)
    ik.add_argument("--alpha-degrees", default=None)
    ik.add_argument("--tx", default=None)
    ik.add_argument("--ty", default=None)
    return parser


def _load(config: RunConfig, beta_sign: Optional[int], settings: Settings) -> Geometry:
    geometry = load_geometry(config.geometry, tol=rational_from_decimal(settings.beta_tol))
    if beta_sign is not None and beta_sign != geometry.beta_sign:
        geometry = geometry.mirrored()
    return geometry


def _dump_artifacts(context: HandlerContext) -> None:
    g = context.geometry
    if context.config.dump_system:
        text = "\n".join(
            dump_system(s) for s in (build_constraints(g), build_singular_system(g), build_cusp_system(g))
        )
        path = context.output_path("system.txt")
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        context.record_output(path)
    if context.config.dump_config:
        path = context.output_path("geometry.yaml")
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dump_geometry_config(g), encoding="utf-8")
        context.record_output(path)


def run(argv: Optional[Sequence[str]] = None, settings: Optional[Settings] = None) -> int:
    """执行一次命令行运行并返回退出码。"""
    settings = settings or Settings()
    setup_logging(level=settings.log_level, log_file=settings.log_file)
    try:
        args = build_parser(settings).parse_args(argv)
    except ConfigError as exc:
        logger.error("参数错误: %s", exc)
        return EXIT_CONFIG_ERROR
    if args.verbose:
        setup_logging(level=settings.log_level, log_file=settings.log_file, verbose=True)

    params = {k: v for k, v in vars(args).items() if k not in COMMON_KEYS}
    context: Optional[HandlerContext] = None
    started = time.perf_counter()
    try:
        config = RunConfig(
            command=args.command,
            geometry=args.geometry,
            output_dir=args.out,
            threads=args.threads or settings.threads,
            min_width=args.min_width or settings.min_width,
            max_depth=args.max_depth or settings.max_depth,
            verbose=args.verbose,
            dump_system=args.dump_system,
            dump_config=args.dump_config,
            parameters=params,
        )
        options = SolverOptions.from_settings(
            settings,
            threads=config.threads,
            min_width=config.min_width,
            max_depth=config.max_depth,
            max_boxes=args.max_boxes,
        )
        geometry = _load(config, args.beta_sign, settings)
        context = HandlerContext(
            config=config, geometry=geometry, options=options, out_dir=Path(config.output_dir)
        )
        handler = get_handler(config.command)
        if handler is None:
            raise ConfigError(f"未知子命令: {config.command}")
        _dump_artifacts(context)
        result = handler.handle(context)
    except (AtlasError, ValidationError, FileNotFoundError) as exc:
        logger.error("%s 失败: %s", args.command, exc)
        result = HandlerResult(exit_code=EXIT_CONFIG_ERROR)
        if context is None:
            return result.exit_code

    logger.info("%s 完成，退出码 %d，用时 %.2fs", args.command, result.exit_code, time.perf_counter() - started)
    manifest = RunManifest(
        version=_tool_version(),
        command=context.config.command,
        arguments=params | {"geometry": args.geometry, "beta_sign": args.beta_sign},
        settings=asdict(options) | {"beta_tol": settings.beta_tol},
        geometry=context.geometry.describe(),
        d2_perturbation=context.geometry.d2_perturbation,
        degrees=result.degrees,
        outputs=sorted(context.outputs),
        stats=result.stats,
        exit_code=result.exit_code,
    )
    write_manifest(context.out_dir, manifest)
    return result.exit_code


def main() -> None:
    raise SystemExit(run())
