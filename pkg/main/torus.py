#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""(2,2n+1) 环面纽结模块

环面纽结族的 Alexander 多项式为 1 + (-t) + ... + (-t)^(2n)。
若交错图解的多项式属于该族，则其 Crowell 图的 +1 边构成一个
Hamilton 有向环，-t 边连接环上相邻的顶点，状态空间是一条路径。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Tuple

import networkx as nx

from .crowell import CrowellGraph, Weight, build_crowell
from .errors import InvalidNError, PolyMismatchError
from .knot_io import Diagram, closed_braid_diagram, is_prime_diagram
from .moves import ExchangeGraph, exchange_graph, terminal_edges
from .polynomial import IntPoly
from .statespace import StateSet, alexander, enumerate_states

logger = logging.getLogger(__name__)

JSON_SCHEMA_VERSION = 1

PRIMALITY_NOTE = "primality checked on the diagram (Tait graph 2-connectivity)"


@dataclass(frozen=True)
class TorusReport:
    """环面纽结结构检验报告，所有布尔字段都显式给出。"""

    n: int
    poly_matches: bool
    plus_cycle: bool
    minus_cycle: bool
    path_statespace: bool
    endpoint_leaf_counts: Tuple[int, int]
    interior_leaf_counts: bool
    degrees_distinct: bool

    @property
    def verdict(self) -> bool:
        return (
            self.poly_matches
            and self.plus_cycle
            and self.minus_cycle
            and self.path_statespace
            and self.endpoint_leaf_counts == (1, 1)
            and self.interior_leaf_counts
            and self.degrees_distinct
        )

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["endpoint_leaf_counts"] = list(self.endpoint_leaf_counts)
        data["verdict"] = self.verdict
        return data


@dataclass(frozen=True)
class TorusVerdict:
    """characterize 的结果。"""

    is_torus: bool
    n: Optional[int]
    prime_diagram: bool
    report: Optional[TorusReport]
    note: str = PRIMALITY_NOTE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": JSON_SCHEMA_VERSION,
            "is_torus": self.is_torus,
            "n": self.n,
            "prime_diagram": self.prime_diagram,
            "report": self.report.to_dict() if self.report else None,
            "note": self.note,
        }


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidNError(f"n 必须 >= 1: {n}")


def torus_poly(n: int) -> IntPoly:
    """1 + (-t) + (-t)^2 + ... + (-t)^(2n)。"""
    _check_n(n)
    return IntPoly.from_minus_t([1] * (2 * n + 1))


def is_torus_alexander(p: IntPoly) -> Optional[int]:
    """若 p 等于某个 torus_poly(n)，返回 n。"""
    if p.degree < 2 or p.degree % 2:
        return None
    n = p.degree // 2
    return n if p == torus_poly(n) else None


def standard_torus_diagram(n: int) -> Diagram:
    """σ1^(2n+1) 的闭包，即 (2,2n+1) 环面纽结的标准图解。"""
    _check_n(n)
    return closed_braid_diagram([1] * (2 * n + 1), name=f"T(2,{2 * n + 1})")


def _single_cycle(g: CrowellGraph, weight: Weight) -> Optional[nx.DiGraph]:
    sub = nx.DiGraph()
    sub.add_nodes_from(g.vertices)
    for e in g.edges:
        if e.weight is weight:
            sub.add_edge(e.tail, e.head)
    ok = (
        sub.number_of_edges() == len(g.vertices)
        and all(sub.in_degree(v) == 1 and sub.out_degree(v) == 1 for v in g.vertices)
        and nx.is_strongly_connected(sub)
    )
    return sub if ok else None


def verify_torus_structure(g: CrowellGraph, states: StateSet, xg: ExchangeGraph) -> TorusReport:
    """检验环面纽结的结构性结论。

    Raises:
        PolyMismatchError: 多项式不属于环面纽结族
    """
    total = IntPoly.zero()
    for degree in states.degrees:
        total = total + IntPoly.minus_t_power(degree)
    poly, _ = total.normalize()
    n = is_torus_alexander(poly)
    if n is None:
        raise PolyMismatchError(f"多项式 {poly.render()} 不属于 (2,2n+1) 环面纽结族")

    plus = _single_cycle(g, Weight.PLUS_ONE)
    minus_ok = False
    if plus is not None:
        successor = {u: v for u, v in plus.edges}
        minus_edges = [e for e in g.edges if e.weight is Weight.MINUS_T]
        consecutive = all(
            successor[e.tail] == e.head or successor[e.head] == e.tail for e in minus_edges
        )
        minus_ok = consecutive and _single_cycle(g, Weight.MINUS_T) is not None

    graph = xg.graph
    path_ok = (
        graph.number_of_nodes() == 2 * n + 1
        and nx.is_connected(graph)
        and graph.number_of_edges() == graph.number_of_nodes() - 1
        and all(deg <= 2 for _, deg in graph.degree())
    )

    endpoints: Tuple[int, int] = (0, 0)
    interior_ok = False
    if path_ok:
        ends = sorted(k for k, deg in graph.degree() if deg == 1)
        if len(ends) == 2:
            endpoints = tuple(  # type: ignore[assignment]
                len(terminal_edges(graph.nodes[k]["state"], g)) for k in ends
            )
        interior_ok = all(
            len(terminal_edges(graph.nodes[k]["state"], g)) == 2
            for k, deg in graph.degree() if deg == 2
        )

    degrees_ok = sorted(states.degrees) == list(range(2 * n + 1))
    report = TorusReport(
        n=n,
        poly_matches=True,
        plus_cycle=plus is not None,
        minus_cycle=minus_ok,
        path_statespace=path_ok,
        endpoint_leaf_counts=endpoints,
        interior_leaf_counts=interior_ok,
        degrees_distinct=degrees_ok,
    )
    logger.debug(f"环面结构检验 n={n}: {report.verdict}")
    return report


def characterize(d: Diagram) -> TorusVerdict:
    """由 Alexander 多项式判定约化交错图解是否为 (2,2n+1) 环面纽结。

    多项式匹配时返回完整报告；素性在图解上组合地检验。
    """
    g = build_crowell(d)
    prime = is_prime_diagram(d)
    poly, _ = alexander(g)
    n = is_torus_alexander(poly)
    if n is None:
        return TorusVerdict(is_torus=False, n=None, prime_diagram=prime, report=None)
    states = enumerate_states(g)
    report = verify_torus_structure(g, states, exchange_graph(states, g))
    return TorusVerdict(is_torus=True, n=n, prime_diagram=prime, report=report)
