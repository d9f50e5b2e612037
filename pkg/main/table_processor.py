#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""纽结表批量校验模块

对纽结表中的每个图解运行完整的校验套件：行列式校验、根无关性、
交换图连通性、交换的对合性与 ±1 性质、构造性变换回放、指定末端边
的状态构造，以及环面纽结刻画。单行失败不会中断整个批次。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .config import config_manager
from .crowell import CrowellGraph, build_crowell, check_region_compatibility, graph_invariants_hold
from .errors import CrowellError, DiagramRejectedError, EdgeIntoRootError, PDParseError
from .knot_io import (
    Diagram,
    TableEntry,
    checkerboard,
    faces,
    is_alternating,
    is_prime_diagram,
    is_reduced,
)
from .moves import (
    exchange,
    exchange_graph,
    graph_distance,
    is_connected,
    replay,
    rooted_meet,
    terminal_edges,
    transform,
)
from .statespace import (
    StateSet,
    alexander,
    alexander_oracle,
    arborescence_count_oracle,
    default_root,
    enumerate_states,
    extend_to_state,
    is_valid_state,
    rooted_path,
    state_sum,
    state_with_terminal_edge,
)
from .torus import characterize

# 校验项（pass/fail 矩阵的列）
CHECK_NAMES = (
    "diagram",
    "crowell",
    "oracles",
    "normalization",
    "connected",
    "exchange",
    "transform",
    "terminal_edges",
    "paths",
    "torus",
)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_REJECTED = "rejected"
STATUS_ERROR = "error"


@dataclass
class RowResult:
    """纽结表单行的校验结果。

    Attributes:
        name: 纽结名称
        checks: 校验项 -> 是否通过，按 CHECK_NAMES 顺序
        status: pass / fail / rejected / error
        error_message: 失败或拒绝的原因
        polynomial: 归一化的 Alexander 多项式文本
        state_count: 默认根下的状态数
        torus_n: 若为 (2,2n+1) 环面纽结则为 n
    """

    name: str
    checks: Dict[str, bool] = field(default_factory=dict)
    status: str = STATUS_PASS
    error_message: Optional[str] = None
    polynomial: Optional[str] = None
    state_count: Optional[int] = None
    torus_n: Optional[int] = None

    @property
    def success(self) -> bool:
        return self.status == STATUS_PASS


@dataclass
class ProcessStats:
    """批量校验统计信息。"""

    total_rows: int = 0
    passed: int = 0
    failed: int = 0
    rejected: int = 0
    errors: int = 0
    start_time: Optional[datetime] = None
    end_time: Optional[datetime] = None

    @property
    def duration(self) -> float:
        """处理耗时（秒），未完成时返回 0.0。"""
        if self.start_time and self.end_time:
            return (self.end_time - self.start_time).total_seconds()
        return 0.0

    @property
    def success_rate(self) -> float:
        """通过率，范围 0-1，无数据时返回 0.0。"""
        if self.total_rows == 0:
            return 0.0
        return self.passed / self.total_rows


# 类型别名
ProgressCallback = Callable[[int, int, str, RowResult], None]


class TableProcessor:
    """纽结表处理器。

    Example:
        >>> processor = TableProcessor(transform_pairs=10, parallel=False)
        >>> results, stats = processor.process_table(load_table("resources/knots_upto9.tsv"))
        >>> print(f"通过率: {stats.success_rate:.1%}")
    """

    def __init__(
        self,
        logger: Optional[logging.Logger] = None,
        transform_pairs: Optional[int] = None,
        seed: Optional[int] = None,
        parallel: Optional[bool] = None,
        max_workers: Optional[int] = None,
    ) -> None:
        config = config_manager.config
        self.logger = logger or logging.getLogger(__name__)
        self.transform_pairs = transform_pairs if transform_pairs is not None else config.transform_pairs
        self.seed = seed if seed is not None else config.seed
        self.parallel = parallel if parallel is not None else config.parallel_processing
        self.max_workers = max_workers if max_workers is not None else config.max_workers

    def process_table(
        self,
        entries: Sequence[TableEntry],
        progress_callback: Optional[ProgressCallback] = None,
    ) -> Tuple[List[RowResult], ProcessStats]:
        """批量校验纽结表，结果按输入顺序返回。

        Args:
            entries: 纽结表条目
            progress_callback: 进度回调，签名为 (当前序号, 总数, 名称, 结果)

        Returns:
            Tuple[List[RowResult], ProcessStats]: (结果列表, 统计信息) 元组
        """
        stats = ProcessStats(total_rows=len(entries), start_time=datetime.now())
        results: List[RowResult] = []

        def record(idx: int, result: RowResult) -> None:
            results.append(result)
            if result.status == STATUS_PASS:
                stats.passed += 1
            elif result.status == STATUS_REJECTED:
                stats.rejected += 1
            elif result.status == STATUS_ERROR:
                stats.errors += 1
            else:
                stats.failed += 1
            if progress_callback:
                progress_callback(idx, len(entries), result.name, result)

        if self.parallel and self.max_workers > 1 and len(entries) > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                futures = [executor.submit(self.verify_entry, entry) for entry in entries]
                for idx, future in enumerate(futures, start=1):
                    record(idx, future.result())
        else:
            for idx, entry in enumerate(entries, start=1):
                record(idx, self.verify_entry(entry))

        stats.total_rows = len(results)
        stats.end_time = datetime.now()
        self.logger.info(
            f"校验完成: {stats.passed}/{stats.total_rows} 通过, "
            f"用时 {stats.duration:.1f}秒"
        )
        return results, stats

    def verify_entry(self, entry: TableEntry) -> RowResult:
        """校验单行，异常被记录在结果中而不是抛出。"""
        result = RowResult(name=entry.name)
        try:
            self.logger.info(f"校验: {entry.name}")
            diagram = entry.to_diagram()
            self._check_diagram(diagram, result)
            if result.status != STATUS_PASS:
                return result
            self._run_checks(diagram, result)
        except PDParseError as e:
            self.logger.warning(f"无法解析 {entry.name}: {e}")
            result.status = STATUS_ERROR
            result.error_message = str(e)
        except DiagramRejectedError as e:
            self.logger.warning(f"图解被拒绝 {entry.name}: {e}")
            result.status = STATUS_REJECTED
            result.error_message = str(e)
        except CrowellError as e:
            self.logger.error(f"校验失败 {entry.name}: {e}")
            result.status = STATUS_FAIL
            result.error_message = str(e)
        except Exception as e:
            self.logger.error(f"处理失败 {entry.name}: {e}")
            result.status = STATUS_ERROR
            result.error_message = f"{type(e).__name__}: {e}"

        if result.status == STATUS_PASS and not all(
            result.checks.get(name, False) for name in CHECK_NAMES
        ):
            result.status = STATUS_FAIL
            failed = [name for name in CHECK_NAMES if not result.checks.get(name, False)]
            result.error_message = f"未通过: {', '.join(failed)}"
            self.logger.error(f"校验失败 {entry.name}: {result.error_message}")
        return result

    # ==================== 校验项 ====================

    def _check_diagram(self, d: Diagram, result: RowResult) -> None:
        problems = []
        if not is_alternating(d):
            problems.append("not alternating")
        elif not is_reduced(d):
            problems.append("not reduced")
        elif not is_prime_diagram(d):
            problems.append("not prime")
        if problems:
            result.status = STATUS_REJECTED
            result.error_message = ", ".join(problems)
            result.checks["diagram"] = False
            self.logger.warning(f"图解被拒绝 {d.name}: {result.error_message}")
            return
        colors = checkerboard(d)
        result.checks["diagram"] = len(faces(d)) == d.n + 2 and len(colors) == d.n + 2

    def _run_checks(self, d: Diagram, result: RowResult) -> None:
        g = build_crowell(d)
        result.checks["crowell"] = graph_invariants_hold(g) and check_region_compatibility(g)

        by_root: Dict[int, StateSet] = {r: enumerate_states(g, r) for r in g.vertices}
        root = default_root(g)
        states = by_root[root]
        result.state_count = len(states)

        result.checks["oracles"] = self._check_oracles(g, by_root)
        result.checks["normalization"] = self._check_normalization(g, result)
        result.checks["connected"] = all(
            is_connected(exchange_graph(s, g)) for s in by_root.values()
        )
        result.checks["exchange"] = self._check_exchanges(g, states)
        result.checks["transform"] = self._check_transforms(g, states, d.name)
        result.checks["terminal_edges"] = self._check_terminal_edges(g, states)
        result.checks["paths"] = self._check_paths(g, root)

        verdict = characterize(d)
        if verdict.is_torus:
            result.torus_n = verdict.n
            result.checks["torus"] = bool(
                verdict.report and verdict.report.verdict and verdict.prime_diagram
            )
        else:
            result.checks["torus"] = verdict.report is None

    def _check_oracles(self, g: CrowellGraph, by_root: Dict[int, StateSet]) -> bool:
        for r, states in by_root.items():
            if len(states) != arborescence_count_oracle(g, r):
                self.logger.error(f"根 {r}: 状态数与行列式不符")
                return False
            if alexander(g, r)[0] != alexander_oracle(g, r):
                self.logger.error(f"根 {r}: 状态和与行列式多项式不符")
                return False
            if state_sum(g, r).evaluate(-1) != len(states):
                return False
        return True

    def _check_normalization(self, g: CrowellGraph, result: RowResult) -> bool:
        polys = {alexander(g, r)[0] for r in g.vertices}
        if len(polys) != 1:
            return False
        poly = polys.pop()
        result.polynomial = poly.render()
        signs_ok = all(c > 0 for c in poly.minus_t_coefficients())
        return signs_ok and poly.is_palindromic() and poly.coefficient(0) != 0

    def _check_exchanges(self, g: CrowellGraph, states: StateSet) -> bool:
        xg = exchange_graph(states, g)
        if xg.node_count != len(states):
            return False
        for s, degree in zip(states, states.degrees):
            for v, _ in terminal_edges(s, g):
                moved = exchange(s, v, g)
                if exchange(moved, v, g) != s:
                    return False
                if abs(moved.t_degree(g) - degree) != 1:
                    return False
        return True

    def _check_transforms(self, g: CrowellGraph, states: StateSet, name: str) -> bool:
        rng = random.Random(f"{self.seed}:{name}")
        xg = exchange_graph(states, g)
        for _ in range(self.transform_pairs):
            t1, t2 = rng.choice(states.states), rng.choice(states.states)
            seq = transform(t1, t2, g)
            trail = replay(t1, seq, g)
            if trail[-1] != t2 or not all(is_valid_state(s, g) for s in trail):
                return False
            milestones = list(seq.milestones)
            if any(b <= a for a, b in zip(milestones, milestones[1:])):
                return False
            meets = [rooted_meet(s, t2, g) for s in trail]
            if any(not a <= b for a, b in zip(meets, meets[1:])):
                return False
            if len(seq) < graph_distance(xg, t1.key, t2.key):
                return False
        return True

    def _check_terminal_edges(self, g: CrowellGraph, states: StateSet) -> bool:
        root = states.root
        for e in g.edges:
            if e.head == root:
                try:
                    state_with_terminal_edge(g, root, e.id)
                except EdgeIntoRootError:
                    continue
                return False
            built = state_with_terminal_edge(g, root, e.id)
            if built not in states or (e.head, e.id) not in terminal_edges(built, g):
                return False
            if not any((e.head, e.id) in terminal_edges(s, g) for s in states):
                return False
        return True

    def _check_paths(self, g: CrowellGraph, root: int) -> bool:
        for v in g.vertices:
            path = rooted_path(g, root, v)
            heads = [g.edge(e).head for e in path]
            if path and (g.edge(path[0]).tail != root or heads[-1] != v):
                return False
            if len(set(heads)) != len(heads) or root in heads:
                return False
            state = extend_to_state(g, root, path)
            if not set(path) <= state.edge_ids:
                return False
        return True


def torus_family_matches(results: Sequence[RowResult]) -> List[str]:
    """多项式属于环面纽结族的行名（按输入顺序）。"""
    return [r.name for r in results if r.torus_n is not None]
