#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""命令行入口模块

子命令: validate, graph, states, alexander, exchange-graph, transform,
torus, verify-all。数据写到 stdout（text / json / dot），日志与进度
写到 stderr。

退出码:
    0  成功
    1  图解被拒绝（不交错、不约化或不是素图解）
    2  定理检验失败
    3  输入输出或解析错误

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from tqdm import tqdm

from .config import COMMANDS, OUTPUT_FORMATS, SUPPORTED_LANGUAGES, RunConfig, config_manager
from .crowell import CrowellGraph, build_crowell, check_region_compatibility
from .errors import (
    ColoringConflictError,
    DiagramRejectedError,
    PDParseError,
    StateError,
    TheoremCheckError,
)
from .i18n import i18n
from .knot_io import Diagram, faces, find_entry, is_alternating, is_prime_diagram, is_reduced, load_table, parse_code
from .moves import exchange_graph, is_connected, lattice_obstruction, replay, transform
from .statespace import alexander, default_root, enumerate_states
from .table_processor import (
    CHECK_NAMES,
    STATUS_ERROR,
    STATUS_FAIL,
    STATUS_REJECTED,
    RowResult,
    TableProcessor,
    torus_family_matches,
)
from .torus import characterize
from .utils import setup_logging

logger = logging.getLogger(__name__)

# 退出码
EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_THEOREM = 2
EXIT_IO = 3

JSON_SCHEMA_VERSION = 1
PROG_NAME = "crowell-states"


class CliUsageError(ValueError):
    """命令行参数错误。"""


class _ArgumentParser(argparse.ArgumentParser):
    """参数错误抛异常而不是以退出码 2 退出（2 保留给定理检验失败）。"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliUsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--pd", help="inline knot code: PD, Conway[...] or Tait[u-v ...], e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"")
    common.add_argument("--file", dest="input_path", help="file containing a knot code")
    common.add_argument("--knot", help="knot name looked up in the table")
    common.add_argument("--table", help="knot table (name<TAB>code); overrides CROWELL_TABLE")
    common.add_argument("--root", type=int, help="root crossing id (default: smallest)")
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default="text")
    common.add_argument("--seed", type=int, help="seed for random transform pairs")
    common.add_argument("--pairs", type=int, help="random transform pairs per knot (verify-all)")
    common.add_argument("--workers", type=int, help="worker threads (verify-all)")
    common.add_argument("--lang", choices=SUPPORTED_LANGUAGES, help="output language")

    parser = _ArgumentParser(prog=PROG_NAME, description=i18n.get("app.subtitle"))
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> Tuple[RunConfig, Optional[str]]:
    """解析命令行参数。

    Returns:
        Tuple[RunConfig, Optional[str]]: (运行配置, 语言)

    Raises:
        ValueError: 参数不合法
    """
    args = build_parser().parse_args(argv)
    settings = config_manager.config
    config = RunConfig(
        command=args.command,
        pd=args.pd,
        input_path=args.input_path,
        knot=args.knot,
        table=args.table,
        root=args.root,
        output_format=args.output_format,
        seed=args.seed if args.seed is not None else settings.seed,
        pairs=args.pairs,
        workers=args.workers,
    )
    return config, args.lang


# ==================== 输入 ====================


def _load_diagram(config: RunConfig) -> Diagram:
    if config.pd is not None:
        return parse_code(config.pd)
    if config.input_path is not None:
        path = Path(config.input_path)
        return parse_code(path.read_text(encoding="utf-8"), name=path.stem)
    table = config_manager.config.resolve_table_path(config.table)
    entry = find_entry(load_table(table), config.knot or "")
    if entry is None:
        raise PDParseError(i18n.get("error.unknown_knot", name=config.knot))
    return entry.to_diagram()


def _root(g: CrowellGraph, config: RunConfig) -> int:
    if config.root is None:
        return default_root(g)
    if config.root not in g.vertices:
        raise CliUsageError(f"--root {config.root}: no such crossing")
    return config.root


def _require_format(config: RunConfig, *allowed: str) -> None:
    if config.output_format not in allowed:
        raise CliUsageError(f"{config.command} does not support --format {config.output_format}")


def _key_text(key: Sequence[int]) -> str:
    return ",".join(str(e) for e in key)


def _write_json(out: TextIO, data: Dict[str, Any]) -> None:
    out.write(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n")


def _write_lines(out: TextIO, lines: List[str]) -> None:
    out.write("\n".join(lines) + "\n")


# ==================== 子命令 ====================


def _cmd_validate(d: Diagram, config: RunConfig, out: TextIO) -> int:
    _require_format(config, "text", "json")
    alternating = is_alternating(d)
    reduced = is_reduced(d)
    prime = is_prime_diagram(d)
    face_count = len(faces(d))
    if config.output_format == "json":
        _write_json(out, {
            "schema": JSON_SCHEMA_VERSION,
            "name": d.name,
            "crossings": d.n,
            "faces": face_count,
            "alternating": alternating,
            "reduced": reduced,
            "prime": prime,
        })
    else:
        _write_lines(out, [
            i18n.get("validate.crossings", count=d.n),
            i18n.get("validate.faces", count=face_count),
            i18n.get("validate.alternating", value=i18n.flag(alternating)),
            i18n.get("validate.reduced", value=i18n.flag(reduced)),
            i18n.get("validate.prime", value=i18n.flag(prime)),
        ])
    return EXIT_OK if alternating and reduced and prime else EXIT_REJECTED


def _cmd_graph(d: Diagram, config: RunConfig, out: TextIO) -> int:
    g = build_crowell(d)
    compatible = check_region_compatibility(g)
    if config.output_format == "dot":
        out.write(g.to_dot())
    elif config.output_format == "json":
        data = g.to_dict()
        data["compatible"] = compatible
        _write_json(out, data)
    else:
        lines = [
            i18n.get("graph.summary", vertices=len(g.vertices), edges=len(g.edges)),
            i18n.get("graph.compatible", value=i18n.flag(compatible)),
        ]
        lines += [f"e{e.id}: {e.tail} -> {e.head} [{e.weight.value}]" for e in g.edges]
        _write_lines(out, lines)
    return EXIT_OK if compatible else EXIT_THEOREM


def _cmd_states(d: Diagram, config: RunConfig, out: TextIO) -> int:
    _require_format(config, "text", "json")
    g = build_crowell(d)
    states = enumerate_states(g, _root(g, config))
    if config.output_format == "json":
        _write_json(out, states.to_dict())
    else:
        lines = [i18n.get("states.count", root=states.root, count=len(states))]
        lines += [f"{_key_text(s.key)} d={deg}" for s, deg in zip(states, states.degrees)]
        _write_lines(out, lines)
    return EXIT_OK


def _cmd_alexander(d: Diagram, config: RunConfig, out: TextIO) -> int:
    _require_format(config, "text", "json")
    g = build_crowell(d)
    root = _root(g, config)
    poly, m = alexander(g, root)
    if config.output_format == "json":
        _write_json(out, {
            "schema": JSON_SCHEMA_VERSION,
            "root": root,
            "coefficients": list(poly.coefficients),
            "polynomial": poly.render(),
            "minus_t": poly.render_minus_t(),
            "m": m,
        })
    else:
        _write_lines(out, [poly.render(), f"m={m}"])
    return EXIT_OK


def _cmd_exchange_graph(d: Diagram, config: RunConfig, out: TextIO) -> int:
    g = build_crowell(d)
    states = enumerate_states(g, _root(g, config))
    xg = exchange_graph(states, g)
    connected = is_connected(xg)
    if config.output_format == "dot":
        out.write(xg.to_dot())
    elif config.output_format == "json":
        data = xg.to_dict()
        data["connected"] = connected
        data["degree_one"] = lattice_obstruction(xg)
        _write_json(out, data)
    else:
        _write_lines(out, [
            i18n.get("exchange.summary", nodes=xg.node_count, edges=xg.edge_count),
            i18n.get("exchange.connected", value=i18n.flag(connected)),
            i18n.get("exchange.degree_one", count=lattice_obstruction(xg)),
        ])
    return EXIT_OK if connected else EXIT_THEOREM


def _cmd_transform(d: Diagram, config: RunConfig, out: TextIO) -> int:
    _require_format(config, "text", "json")
    g = build_crowell(d)
    states = enumerate_states(g, _root(g, config))
    rng = random.Random(config.seed)
    t1, t2 = rng.choice(states.states), rng.choice(states.states)
    seq = transform(t1, t2, g)
    if replay(t1, seq, g)[-1] != t2:
        raise TheoremCheckError("replay does not reach the target state")
    if config.output_format == "json":
        data = seq.to_dict()
        data["source"] = list(t1.key)
        data["target"] = list(t2.key)
        _write_json(out, data)
    else:
        lines = [
            i18n.get("transform.source", key=_key_text(t1.key)),
            i18n.get("transform.target", key=_key_text(t2.key)),
            i18n.get("transform.length", count=len(seq)),
        ]
        lines += [
            f"{m.vertex}: e{m.removed_edge} -> e{m.added_edge} ({m.degree_delta:+d})"
            for m in seq
        ]
        _write_lines(out, lines)
    return EXIT_OK


def _cmd_torus(d: Diagram, config: RunConfig, out: TextIO) -> int:
    _require_format(config, "text", "json")
    verdict = characterize(d)
    if config.output_format == "json":
        _write_json(out, verdict.to_dict())
    else:
        if verdict.is_torus:
            lines = [i18n.get("torus.yes", k=2 * verdict.n + 1, n=verdict.n)]
        else:
            lines = [i18n.get("torus.no")]
        lines.append(i18n.get("torus.prime", value=i18n.flag(verdict.prime_diagram)))
        if verdict.report is not None:
            for name, value in verdict.report.to_dict().items():
                lines.append(f"{name}: {value}")
        lines.append(i18n.get("torus.note"))
        _write_lines(out, lines)
    if verdict.report is not None and not verdict.report.verdict:
        return EXIT_THEOREM
    return EXIT_OK


_HANDLERS: Dict[str, Callable[[Diagram, RunConfig, TextIO], int]] = {
    "validate": _cmd_validate,
    "graph": _cmd_graph,
    "states": _cmd_states,
    "alexander": _cmd_alexander,
    "exchange-graph": _cmd_exchange_graph,
    "transform": _cmd_transform,
    "torus": _cmd_torus,
}


# ==================== verify-all ====================


def _status_label(result: RowResult, check: str) -> str:
    return i18n.get("verify.pass") if result.checks.get(check) else i18n.get("verify.fail")


def _render_matrix(results: List[RowResult]) -> List[str]:
    name_width = max([len("knot")] + [len(r.name) for r in results])
    widths = [max(len(c), 6) for c in CHECK_NAMES]
    header = "  ".join(["knot".ljust(name_width)] + [c.ljust(w) for c, w in zip(CHECK_NAMES, widths)])
    lines = [header.rstrip()]
    for r in results:
        if r.status in (STATUS_REJECTED, STATUS_ERROR):
            lines.append(f"{r.name.ljust(name_width)}  {i18n.get('verify.rejected', reason=r.error_message)}")
            continue
        cells = [_status_label(r, c).ljust(w) for c, w in zip(CHECK_NAMES, widths)]
        lines.append("  ".join([r.name.ljust(name_width)] + cells).rstrip())
    return lines


def _verify_exit_code(results: List[RowResult]) -> int:
    statuses = {r.status for r in results}
    if STATUS_FAIL in statuses:
        return EXIT_THEOREM
    if STATUS_ERROR in statuses:
        return EXIT_IO
    if STATUS_REJECTED in statuses:
        return EXIT_REJECTED
    return EXIT_OK


def _cmd_verify_all(config: RunConfig, out: TextIO, show_progress: bool) -> int:
    _require_format(config, "text", "json")
    table = config_manager.config.resolve_table_path(config.table)
    entries = load_table(table)
    processor = TableProcessor(
        transform_pairs=config.pairs,
        seed=config.seed,
        max_workers=config.workers,
    )
    with tqdm(
        total=len(entries),
        desc=i18n.get("verify.progress"),
        file=sys.stderr,
        disable=not show_progress,
    ) as pbar:
        results, stats = processor.process_table(
            entries, progress_callback=lambda *_: pbar.update(1)
        )
    logger.info(i18n.get(
        "verify.done", passed=stats.passed, total=stats.total_rows, time=f"{stats.duration:.1f}"
    ))
    torus_family = torus_family_matches(results)

    if config.output_format == "json":
        _write_json(out, {
            "schema": JSON_SCHEMA_VERSION,
            "table": table.name,
            "checks": list(CHECK_NAMES),
            "rows": [
                {
                    "name": r.name,
                    "status": r.status,
                    "checks": {c: r.checks.get(c, False) for c in CHECK_NAMES},
                    "polynomial": r.polynomial,
                    "states": r.state_count,
                    "torus_n": r.torus_n,
                    "error": r.error_message,
                }
                for r in results
            ],
            "summary": {
                "passed": stats.passed,
                "total": stats.total_rows,
                "success_rate": round(stats.success_rate, 4),
                "torus_family": torus_family,
            },
        })
    else:
        lines = _render_matrix(results)
        lines.append(i18n.get("verify.torus_family", names=", ".join(torus_family) or "-"))
        lines.append(i18n.get(
            "verify.summary",
            passed=stats.passed,
            total=stats.total_rows,
            rate=f"{stats.success_rate:.1%}",
        ))
        _write_lines(out, lines)
    return _verify_exit_code(results)


# ==================== 入口 ====================


def run(
    config: RunConfig,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    show_progress: bool = False,
) -> int:
    """执行一次命令。

    Args:
        config: 运行配置
        out: 数据输出流，默认 stdout
        err: 错误信息输出流，默认 stderr
        show_progress: verify-all 是否显示进度条

    Returns:
        int: 退出码
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if config.command == "verify-all":
            return _cmd_verify_all(config, out, show_progress)
        return _HANDLERS[config.command](_load_diagram(config), config, out)
    except PDParseError as e:
        err.write(i18n.get("error.parse", message=e) + "\n")
        return EXIT_IO
    except OSError as e:
        err.write(i18n.get("error.io", message=e) + "\n")
        return EXIT_IO
    except CliUsageError as e:
        err.write(i18n.get("error.config", message=e) + "\n")
        return EXIT_IO
    except (DiagramRejectedError, ColoringConflictError) as e:
        err.write(i18n.get("error.rejected", message=e) + "\n")
        return EXIT_REJECTED
    except (TheoremCheckError, StateError) as e:
        logger.error(f"{config.command}: {e}")
        err.write(i18n.get("error.theorem", message=e) + "\n")
        return EXIT_THEOREM


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings = config_manager.config
    i18n.set_language(settings.language)
    try:
        config, lang = parse_args(argv)
    except ValueError as e:
        sys.stderr.write(i18n.get("error.config", message=e) + "\n")
        return EXIT_IO
    if lang:
        i18n.set_language(lang)
    setup_logging(log_to_file=settings.log_to_file)
    logger.debug(f"{config.command} ({i18n.display_name})")
    return run(config, show_progress=sys.stderr.isatty())


if __name__ == "__main__":
    sys.exit(main())
