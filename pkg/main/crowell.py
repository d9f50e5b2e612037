#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Crowell 图构造模块

由约化交错图解构造带权有向图 G(D)：每个交叉点是一个顶点，每条弧
是一条有向边，从它作为上穿弧经过的交叉点指向它作为下穿弧终止的
交叉点。每个顶点恰有两条入边，权分别为 +1 与 -t：位于上穿弧
（按其方向）左侧的那半条下穿弧得到 -t。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, List, Tuple

import networkx as nx

from .errors import NotAlternatingError, NotReducedError
from .knot_io import (
    UNDER_IN,
    UNDER_OUT,
    Color,
    Diagram,
    Face,
    checkerboard,
    faces,
    is_alternating,
    is_reduced,
)

logger = logging.getLogger(__name__)

JSON_SCHEMA_VERSION = 1


class Weight(str, Enum):
    """Crowell 边权。"""

    PLUS_ONE = "+1"
    MINUS_T = "-t"


@dataclass(frozen=True)
class CrowellEdge:
    """G(D) 的一条有向边（对应图解的一条弧，id 即弧编号）。

    Attributes:
        id: 边编号
        tail: 起点（该弧作为上穿弧经过的交叉点）
        head: 终点（该弧作为下穿弧到达的交叉点）
        weight: 边权
        tail_slot: 弧在起点处的槽位（奇数）
        head_slot: 弧在终点处的槽位（偶数）
    """

    id: int
    tail: int
    head: int
    weight: Weight
    tail_slot: int
    head_slot: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class CrowellGraph:
    """Crowell 有向图及其面结构。

    Attributes:
        vertices: 顶点（交叉点编号），升序
        edges: 边，按编号升序，edges[i].id == i + 1
        rotation: 每个顶点逆时针的四个边编号（与交叉点槽位对齐）
        faces: 图解的面
        colors: 每个面的颜色，与 faces 对齐
    """

    vertices: Tuple[int, ...]
    edges: Tuple[CrowellEdge, ...]
    rotation: Tuple[Tuple[int, int, int, int], ...]
    faces: Tuple[Face, ...]
    colors: Tuple[Color, ...]

    def edge(self, edge_id: int) -> CrowellEdge:
        return self.edges[edge_id - 1]

    @cached_property
    def _incidence(self) -> Tuple[Dict[int, Tuple[CrowellEdge, ...]], Dict[int, Tuple[CrowellEdge, ...]]]:
        ins: Dict[int, List[CrowellEdge]] = defaultdict(list)
        outs: Dict[int, List[CrowellEdge]] = defaultdict(list)
        for e in self.edges:
            ins[e.head].append(e)
            outs[e.tail].append(e)
        order = {Weight.PLUS_ONE: 0, Weight.MINUS_T: 1}
        return (
            {v: tuple(sorted(ins[v], key=lambda e: (order[e.weight], e.id))) for v in self.vertices},
            {v: tuple(sorted(outs[v], key=lambda e: e.id)) for v in self.vertices},
        )

    def in_edges(self, v: int) -> Tuple[CrowellEdge, ...]:
        """入边，+1 权在前。"""
        return self._incidence[0][v]

    def out_edges(self, v: int) -> Tuple[CrowellEdge, ...]:
        return self._incidence[1][v]

    def other_in_edge(self, v: int, edge_id: int) -> CrowellEdge:
        first, second = self.in_edges(v)
        return second if first.id == edge_id else first

    @cached_property
    def _edge_faces(self) -> Dict[int, Tuple[int, int]]:
        left: Dict[int, int] = {}
        right: Dict[int, int] = {}
        for face in self.faces:
            for step in face.boundary:
                e = self.edge(step.arc)
                if step.crossing == e.tail and step.slot == e.tail_slot:
                    left[e.id] = face.index
                else:
                    right[e.id] = face.index
        return {e.id: (left[e.id], right[e.id]) for e in self.edges}

    def left_face(self, edge_id: int) -> int:
        """沿边方向看位于左侧的面。"""
        return self._edge_faces[edge_id][0]

    def right_face(self, edge_id: int) -> int:
        return self._edge_faces[edge_id][1]

    @cached_property
    def _corner_faces(self) -> Dict[Tuple[int, int], int]:
        return {corner: face.index for face in self.faces for corner in face.corners}

    def corner_face(self, v: int, corner: int) -> int:
        """顶点 v 处角 corner（槽位 corner 与 corner+1 之间）所在的面。"""
        return self._corner_faces[(v, corner % 4)]

    def face_edges(self, face_index: int) -> Tuple[int, ...]:
        return self.faces[face_index].arcs

    def face_is_forward(self, face_index: int) -> bool:
        """面边界上第一步是否与边方向一致。"""
        step = self.faces[face_index].boundary[0]
        return self.left_face(step.arc) == face_index

    def face_cycle(self, face_index: int) -> List[int]:
        """面边界按边方向排列的有向环（边编号）。"""
        arcs = list(self.faces[face_index].arcs)
        return arcs if self.face_is_forward(face_index) else arcs[::-1]

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for e in self.edges:
            graph.add_edge(e.tail, e.head, key=e.id, weight=e.weight.value)
        return graph

    def to_undirected(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for e in self.edges:
            graph.add_edge(e.tail, e.head, key=e.id)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": JSON_SCHEMA_VERSION,
            "vertices": list(self.vertices),
            "edges": [
                {"id": e.id, "tail": e.tail, "head": e.head, "weight": e.weight.value}
                for e in self.edges
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph crowell {"]
        for v in self.vertices:
            lines.append(f'  v{v} [label="{v}"];')
        for e in self.edges:
            style = "solid" if e.weight is Weight.PLUS_ONE else "dashed"
            lines.append(
                f'  v{e.tail} -> v{e.head} [label="{e.weight.value}", style={style}, id="e{e.id}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_crowell(d: Diagram) -> CrowellGraph:
    """由约化交错图解构造 Crowell 图。

    Args:
        d: 图解

    Returns:
        CrowellGraph: 满足全部不变量的 Crowell 图

    Raises:
        NotAlternatingError: 图解不交错
        NotReducedError: 图解不约化
    """
    if not is_alternating(d):
        raise NotAlternatingError(f"图解 {d.name or '<inline>'} 不是交错的")
    if not is_reduced(d):
        raise NotReducedError(f"图解 {d.name or '<inline>'} 不是约化的")

    edges: List[CrowellEdge] = []
    for arc in range(1, d.arc_count + 1):
        first, second = d.occurrences[arc]
        under_end, over_end = (first, second) if first[1] % 2 == 0 else (second, first)
        head, head_slot = under_end
        tail, tail_slot = over_end
        head_crossing = d.crossing(head)
        minus_slot = UNDER_IN if head_crossing.over_in_slot == 1 else UNDER_OUT
        weight = Weight.MINUS_T if head_slot == minus_slot else Weight.PLUS_ONE
        edges.append(CrowellEdge(arc, tail, head, weight, tail_slot, head_slot))

    traced = faces(d)
    colors = checkerboard(d)
    graph = CrowellGraph(
        vertices=tuple(c.id for c in d.crossings),
        edges=tuple(edges),
        rotation=tuple(c.arcs for c in d.crossings),
        faces=tuple(traced),
        colors=tuple(colors[f.index] for f in traced),
    )
    logger.debug(f"构造 Crowell 图: {len(graph.vertices)} 个顶点, {len(graph.edges)} 条边")
    return graph


def graph_invariants_hold(g: CrowellGraph) -> bool:
    """检查 Crowell 图的结构不变量。

    每个顶点入度、出度均为 2，入边一条 +1 一条 -t，旋转顺序中出入交替；
    两种权的边各 n 条。
    """
    n = len(g.vertices)
    plus = sum(1 for e in g.edges if e.weight is Weight.PLUS_ONE)
    if plus != n or len(g.edges) != 2 * n:
        return False
    for v, rotation in zip(g.vertices, g.rotation):
        ins = g.in_edges(v)
        if len(ins) != 2 or len(g.out_edges(v)) != 2:
            return False
        if {e.weight for e in ins} != {Weight.PLUS_ONE, Weight.MINUS_T}:
            return False
        for slot, edge_id in enumerate(rotation):
            e = g.edge(edge_id)
            incoming = e.head == v and e.head_slot == slot
            if incoming != (slot % 2 == 0):
                return False
    return True


def check_region_compatibility(g: CrowellGraph) -> bool:
    """每个面的边界是有向环，且顺/逆向与棋盘颜色一致。

    同色的面朝同一方向环绕，异色的面朝相反方向。
    """
    direction_by_color: Dict[Color, bool] = {}
    for face, color in zip(g.faces, g.colors):
        directions = set()
        for step in face.boundary:
            e = g.edge(step.arc)
            directions.add(step.crossing == e.tail and step.slot == e.tail_slot)
        if len(directions) != 1:
            logger.debug(f"面 {face.index} 的边界不是有向环")
            return False
        forward = directions.pop()
        if direction_by_color.setdefault(color, forward) != forward:
            return False
    if len(direction_by_color) == 2 and len(set(direction_by_color.values())) != 2:
        return False
    return True
