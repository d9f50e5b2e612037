#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""纽结图解输入输出模块

解析 PD 编码为定向的平面四价图解，追踪面结构，计算棋盘着色，
并提供交错、约化、素图解等判定。同时负责读取纽结表文件，以及
由闭辫子、Conway 记号和 Tait 图生成 PD 编码。

PD 约定:
    X(a,b,c,d) 的四个槽位按逆时针排列，槽位 0 是进入的下穿弧，
    槽位 2 是离开的下穿弧（c = a + 1 mod 2n）。上穿弧沿 1 -> 3
    或 3 -> 1 方向走，由编号是否连续决定。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import logging
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache, partial, reduce
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .errors import (
    ArcCountMismatchError,
    ColoringConflictError,
    MalformedTokenError,
    MultiComponentError,
    NonplanarEmbeddingError,
    TableFormatError,
)

logger = logging.getLogger(__name__)

# 槽位常量
SLOT_COUNT = 4
UNDER_IN = 0
UNDER_OUT = 2

# PD 记号匹配
_TOKEN_RE = re.compile(r"X\s*(?:\(([^()]*)\)|\[([^\[\]]*)\])")
_GAP_RE = re.compile(r"[\s,;]*")
_WRAPPER_RE = re.compile(r"^\s*PD\s*[\[\(](.*)[\]\)]\s*$", re.DOTALL)

# 纽结表
TABLE_COMMENT = "#"
TABLE_SEPARATOR = "\t"

Dart = Tuple[int, int]


class Color(str, Enum):
    """棋盘着色的颜色。"""

    BLACK = "black"
    WHITE = "white"

    @property
    def opposite(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


@dataclass(frozen=True)
class Crossing:
    """图解中的一个交叉点。

    Attributes:
        id: 交叉点编号（按 PD 记号顺序从 1 开始）
        arcs: 逆时针顺序的四个弧编号，第一个为进入的下穿弧
        over_in_slot: 上穿弧进入交叉点的槽位，1 或 3
    """

    id: int
    arcs: Tuple[int, int, int, int]
    over_in_slot: int = 1

    @property
    def over_out_slot(self) -> int:
        return 4 - self.over_in_slot

    @property
    def is_kink(self) -> bool:
        return len(set(self.arcs)) < SLOT_COUNT

    def is_outgoing(self, slot: int) -> bool:
        """槽位上的弧是否沿纽结定向离开该交叉点。"""
        return slot == UNDER_OUT or slot == self.over_out_slot

    def token(self) -> str:
        return "X({},{},{},{})".format(*self.arcs)


@dataclass(frozen=True)
class BoundaryStep:
    """面边界上的一步：沿某条弧离开某交叉点的某个槽位。

    面位于这一步的左侧。side 记录面相对于纽结定向位于弧的哪一侧。
    """

    arc: int
    crossing: int
    slot: int
    side: str


@dataclass(frozen=True)
class Face:
    """图解补集中的一个区域。

    Attributes:
        index: 面编号（追踪顺序），0 号面视为无界面
        boundary: 循环的边界步序列
        corners: 面所占据的角 (交叉点, 角编号)，角 k 位于槽位 k 与 k+1 之间
    """

    index: int
    boundary: Tuple[BoundaryStep, ...]
    corners: Tuple[Tuple[int, int], ...]

    @property
    def arcs(self) -> Tuple[int, ...]:
        return tuple(step.arc for step in self.boundary)

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def crossings(self) -> Tuple[int, ...]:
        return tuple(c for c, _ in self.corners)


@dataclass(frozen=True)
class Diagram:
    """定向的纽结图解。

    Attributes:
        crossings: 交叉点元组，crossings[i].id == i + 1
        name: 图解名称（例如纽结表中的 3_1），不参与相等比较
    """

    crossings: Tuple[Crossing, ...]
    name: str = field(default="", compare=False)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    def crossing(self, crossing_id: int) -> Crossing:
        return self.crossings[crossing_id - 1]

    @cached_property
    def occurrences(self) -> Dict[int, Tuple[Dart, Dart]]:
        """每条弧的两个端点 (交叉点, 槽位)。"""
        ends: Dict[int, List[Dart]] = defaultdict(list)
        for crossing in self.crossings:
            for slot, arc in enumerate(crossing.arcs):
                ends[arc].append((crossing.id, slot))
        return {arc: (pair[0], pair[1]) for arc, pair in ends.items()}

    def other_end(self, crossing_id: int, slot: int) -> Dart:
        arc = self.crossing(crossing_id).arcs[slot]
        first, second = self.occurrences[arc]
        return second if first == (crossing_id, slot) else first

    def to_pd(self) -> str:
        return " ".join(c.token() for c in self.crossings)


@dataclass(frozen=True)
class TableEntry:
    """纽结表中的一行，code 可以是 PD 编码、Conway[...] 或 Tait[...]。"""

    name: str
    code: str
    line_no: int

    def to_diagram(self) -> Diagram:
        return parse_code(self.code, name=self.name)


# ==================== PD 解析 ====================


def _split_tokens(text: str) -> List[Tuple[int, int, int, int]]:
    wrapped = _WRAPPER_RE.match(text)
    if wrapped:
        text = wrapped.group(1)

    tuples: List[Tuple[int, int, int, int]] = []
    pos = 0
    for match in _TOKEN_RE.finditer(text):
        gap = text[pos:match.start()]
        if not _GAP_RE.fullmatch(gap):
            raise MalformedTokenError(f"无法识别的内容: {gap.strip()!r}")
        body = match.group(1) if match.group(1) is not None else match.group(2)
        parts = [p.strip() for p in body.split(",")]
        if len(parts) != SLOT_COUNT or not all(p.isdigit() for p in parts):
            raise MalformedTokenError(f"交叉点记号需要四个正整数: {match.group(0)}")
        values = tuple(int(p) for p in parts)
        if min(values) < 1:
            raise MalformedTokenError(f"弧编号必须从 1 开始: {match.group(0)}")
        tuples.append(values)  # type: ignore[arg-type]
        pos = match.end()

    tail = text[pos:]
    if not _GAP_RE.fullmatch(tail):
        raise MalformedTokenError(f"无法识别的内容: {tail.strip()!r}")
    if not tuples:
        raise MalformedTokenError("输入中没有任何 X(a,b,c,d) 记号")
    return tuples


def parse_pd(text: str, name: str = "") -> Diagram:
    """解析 PD 编码。

    Args:
        text: 由 X(a,b,c,d) 记号组成的文本，可带 PD[...] 外壳
        name: 图解名称

    Returns:
        Diagram: 通过全部不变量检查的图解

    Raises:
        MalformedTokenError: 记号格式错误或输入为空
        ArcCountMismatchError: 弧编号没有恰好使用两次
        MultiComponentError: 编号不能追踪成单一闭曲线
        NonplanarEmbeddingError: 欧拉公式不成立

    Example:
        >>> d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
        >>> d.n
        3
    """
    tuples = _split_tokens(text)
    n = len(tuples)
    arc_count = 2 * n

    counts = Counter(arc for arcs in tuples for arc in arcs)
    bad = sorted(
        set(range(1, arc_count + 1)).symmetric_difference(counts)
        | {arc for arc, k in counts.items() if k != 2}
    )
    if bad:
        raise ArcCountMismatchError(
            f"{n} 个交叉点需要弧 1..{arc_count} 各出现两次，异常弧: {bad}"
        )

    def succ(arc: int) -> int:
        return arc % arc_count + 1

    crossings: List[Crossing] = []
    strands = set()
    for idx, (a, b, c, d) in enumerate(tuples, start=1):
        if c != succ(a):
            if a == succ(c):
                raise MalformedTokenError(
                    f"X({a},{b},{c},{d}): 槽位 0 必须是进入的下穿弧"
                )
            raise MultiComponentError(f"X({a},{b},{c},{d}): 下穿弧编号不连续")
        if d == succ(b):
            over_in = 1
            strands.add((b, d))
        elif b == succ(d):
            over_in = 3
            strands.add((d, b))
        else:
            raise MultiComponentError(f"X({a},{b},{c},{d}): 上穿弧编号不连续")
        strands.add((a, c))
        crossings.append(Crossing(id=idx, arcs=(a, b, c, d), over_in_slot=over_in))

    if len(strands) != arc_count:
        raise MultiComponentError("弧编号不能追踪成单一闭曲线")

    diagram = Diagram(crossings=tuple(crossings), name=name)
    face_count = len(_trace_faces(diagram))
    if n - arc_count + face_count != 2:
        raise NonplanarEmbeddingError(
            f"V - E + F = {n} - {arc_count} + {face_count} != 2"
        )
    logger.debug(f"解析图解 {name or '<inline>'}: {n} 个交叉点, {face_count} 个面")
    return diagram


def closed_braid_diagram(word: Sequence[int], name: str = "") -> Diagram:
    """由辫子字生成闭辫子的 PD 编码。

    生成元 i > 0 表示 σ_i，-i 表示 σ_i 的逆。弦从左向右走，
    位置 1 在最上方，弧从位置 1 的左端开始沿定向编号。

    Args:
        word: 非零整数序列
        name: 图解名称

    Returns:
        Diagram: 闭辫子图解

    Raises:
        MalformedTokenError: 辫子字为空或含 0
        MultiComponentError: 闭包是多分支链环

    Example:
        >>> closed_braid_diagram([1, 1, 1]).to_pd()
        'X(1,4,2,5) X(5,2,6,3) X(3,6,4,1)'
    """
    if not word or any(g == 0 for g in word):
        raise MalformedTokenError(f"非法辫子字: {list(word)}")

    strand_count = max(abs(g) for g in word) + 1
    labels: List[Dict[str, int]] = [{} for _ in word]
    position, arc = 1, 1
    for _ in range(strand_count):
        for k, generator in enumerate(word):
            i = abs(generator)
            if position == i:
                labels[k]["ul"], labels[k]["lr"] = arc, arc + 1
                position, arc = i + 1, arc + 1
            elif position == i + 1:
                labels[k]["ll"], labels[k]["ur"] = arc, arc + 1
                position, arc = i, arc + 1
        if position == 1:
            break

    arc_count = 2 * len(word)
    if position != 1 or arc - 1 != arc_count:
        raise MultiComponentError(f"辫子 {list(word)} 的闭包不是纽结")

    def wrap(label: int) -> int:
        return (label - 1) % arc_count + 1

    tokens = []
    for generator, lab in zip(word, labels):
        if generator > 0:
            arcs = (lab["ul"], lab["ll"], lab["lr"], lab["ur"])
        else:
            arcs = (lab["ll"], lab["lr"], lab["ur"], lab["ul"])
        tokens.append("X({},{},{},{})".format(*(wrap(a) for a in arcs)))
    return parse_pd(" ".join(tokens), name=name)


# ==================== 由 Conway 记号与 Tait 图生成 ====================

Port = Tuple[int, int]

# 切缘 (tangle) 的四个端点，与交叉点端口同为逆时针编号
NW, SW, SE, NE = 0, 1, 2, 3

_CONWAY_RE = re.compile(r"^\s*Conway\s*\[([^\[\]]*)\]\s*$")
_TAIT_RE = re.compile(r"^\s*Tait\s*\[([^\[\]]*)\]\s*$")


@dataclass
class Shadow:
    """纽结影子：还没有分配上下穿的四价平面图。

    每个交叉点的端口 0..3 沿同一旋转方向排列，0-2 与 1-3 是直穿
    交叉点的两条线。`links` 双向记录端口之间的连接。
    """

    n: int = 0
    links: Dict[Port, Port] = field(default_factory=dict)

    def add_crossing(self) -> int:
        self.n += 1
        return self.n - 1

    def connect(self, p: Port, q: Port) -> None:
        if p in self.links or q in self.links:
            raise NonplanarEmbeddingError(f"端口重复连接: {p} {q}")
        self.links[p] = q
        self.links[q] = p


def shadow_to_diagram(shadow: Shadow, name: str = "") -> Diagram:
    """沿影子走一圈，按交错规则分配上下穿，生成并解析 PD 编码。

    从交叉点 0 的端口 0 出发，第偶数次经过交叉点时走下穿。

    Raises:
        MalformedTokenError: 影子没有交叉点
        NonplanarEmbeddingError: 有悬空端口，或影子无法交错
        MultiComponentError: 影子不是单一闭曲线
    """
    n = shadow.n
    if n == 0:
        raise MalformedTokenError("影子没有交叉点")
    if len(shadow.links) != SLOT_COUNT * n:
        raise NonplanarEmbeddingError(f"{SLOT_COUNT * n - len(shadow.links)} 个端口悬空")

    arc_count = 2 * n
    visits: List[Port] = []
    port: Port = (0, 0)
    while len(visits) <= arc_count:
        visits.append(port)
        crossing, k = port
        port = shadow.links[(crossing, (k + 2) % SLOT_COUNT)]
        if port == (0, 0):
            break
    strands = {(c, k % 2) for c, k in visits}
    if port != (0, 0) or len(visits) != arc_count or len(strands) != arc_count:
        raise MultiComponentError(f"影子不是单一闭曲线 ({len(visits)}/{arc_count})")

    labels: Dict[Port, int] = {}
    under_in: Dict[int, int] = {}
    for step, (c, k) in enumerate(visits):
        labels[(c, k)] = step or arc_count
        labels[(c, (k + 2) % SLOT_COUNT)] = step + 1
        if step % 2 == 0:
            under_in[c] = k
    if len(under_in) != n:
        raise NonplanarEmbeddingError("影子无法交错")

    tokens = []
    for c in range(n):
        u = under_in[c]
        arcs = [labels[(c, (u + i) % SLOT_COUNT)] for i in range(SLOT_COUNT)]
        tokens.append("X({},{},{},{})".format(*arcs))
    return parse_pd(" ".join(tokens), name=name)


@dataclass
class _Tangle:
    ends: List[Port]


def _single_crossing(shadow: Shadow) -> _Tangle:
    c = shadow.add_crossing()
    return _Tangle([(c, NW), (c, SW), (c, SE), (c, NE)])


def _twist(shadow: Shadow, tangle: _Tangle, horizontal: bool) -> None:
    c = shadow.add_crossing()
    if horizontal:
        shadow.connect(tangle.ends[NE], (c, NW))
        shadow.connect(tangle.ends[SE], (c, SW))
        tangle.ends[NE], tangle.ends[SE] = (c, NE), (c, SE)
    else:
        shadow.connect(tangle.ends[SW], (c, NW))
        shadow.connect(tangle.ends[SE], (c, NE))
        tangle.ends[SW], tangle.ends[SE] = (c, SW), (c, SE)


def _rational_tangle(shadow: Shadow, entries: Sequence[int], flip: bool) -> _Tangle:
    # 最后一项水平扭转；flip 时整体换向（Montesinos 的 "a 0" 形式）
    tangle = _single_crossing(shadow)
    k = len(entries)
    for i, count in enumerate(entries):
        horizontal = ((k - 1 - i) % 2 == 0) != flip
        for _ in range(count - 1 if i == 0 else count):
            _twist(shadow, tangle, horizontal)
    return tangle


def _tangle_sum(shadow: Shadow, left: _Tangle, right: _Tangle) -> _Tangle:
    shadow.connect(left.ends[NE], right.ends[NW])
    shadow.connect(left.ends[SE], right.ends[SW])
    return _Tangle([left.ends[NW], left.ends[SW], right.ends[SE], right.ends[NE]])


def conway_diagram(code: str, name: str = "") -> Diagram:
    """由 Conway 记号生成交错图解。

    "2112" 这样的一串数字是有理纽结，每位是一段扭转数；逗号分隔的
    各部分是 Montesinos 纽结的有理切缘，末尾的 "+" 再加一个水平扭转。
    上下穿按交错规则分配，结果可能是记号所指纽结的镜像。

    Raises:
        MalformedTokenError: 记号无法识别
        MultiComponentError: 记号给出的是多分支链环

    Example:
        >>> conway_diagram("22").n
        4
    """
    text = code.strip()
    extra = text.endswith("+")
    parts = (text[:-1] if extra else text).split(",")
    if not all(p.isdigit() and "0" not in p for p in parts) or (extra and len(parts) < 2):
        raise MalformedTokenError(f"无法识别的 Conway 记号: {code!r}")

    shadow = Shadow()
    if len(parts) == 1:
        tangle = _rational_tangle(shadow, [int(ch) for ch in parts[0]], flip=False)
    else:
        pieces = [_rational_tangle(shadow, [int(ch) for ch in p], flip=True) for p in parts]
        tangle = reduce(partial(_tangle_sum, shadow), pieces)
        if extra:
            _twist(shadow, tangle, horizontal=True)
    shadow.connect(tangle.ends[NW], tangle.ends[NE])
    shadow.connect(tangle.ends[SW], tangle.ends[SE])
    return shadow_to_diagram(shadow, name=name)


def tait_diagram(edges: Sequence[Tuple[int, int]], name: str = "") -> Diagram:
    """以平面多重图为 Tait 图，取中间图 (medial graph) 得到交错图解。

    第 i 条边对应交叉点 i。平行边在嵌入中相邻排列。

    Raises:
        MalformedTokenError: 边表为空或含自环
        NonplanarEmbeddingError: 图不是平面图
        MultiComponentError: 图不连通，或中间图是多分支链环
    """
    if not edges or any(u == v for u, v in edges):
        raise MalformedTokenError(f"Tait 图需要非空且无自环的边表: {list(edges)}")

    simple = nx.Graph()
    bundles: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for idx, (u, v) in enumerate(edges):
        simple.add_edge(u, v)
        bundles[(min(u, v), max(u, v))].append(idx)
    if not nx.is_connected(simple):
        raise MultiComponentError("Tait 图不连通")
    planar, embedding = nx.check_planarity(simple)
    if not planar:
        raise NonplanarEmbeddingError("Tait 图不是平面图")

    def port(edge_id: int, vertex: int, toward_next: bool) -> Port:
        base = 0 if edges[edge_id][0] == vertex else 2
        return (edge_id, base + (0 if toward_next else 1))

    shadow = Shadow(n=len(edges))
    for u in embedding.nodes:
        rotation: List[int] = []
        for w in embedding.neighbors_cw_order(u):
            bundle = bundles[(min(u, w), max(u, w))]
            rotation.extend(bundle if u < w else reversed(bundle))
        for i, edge_id in enumerate(rotation):
            following = rotation[(i + 1) % len(rotation)]
            shadow.connect(port(edge_id, u, True), port(following, u, False))
    logger.debug(f"Tait 图 {name or '<inline>'}: {simple.number_of_nodes()} 个顶点, {len(edges)} 条边")
    return shadow_to_diagram(shadow, name=name)


def _parse_edge_list(body: str) -> List[Tuple[int, int]]:
    edges: List[Tuple[int, int]] = []
    for token in body.replace(",", " ").split():
        ends = token.split("-")
        if len(ends) != 2 or not all(e.isdigit() for e in ends):
            raise MalformedTokenError(f"无法识别的边: {token!r}")
        edges.append((int(ends[0]), int(ends[1])))
    return edges


def parse_code(text: str, name: str = "") -> Diagram:
    """解析任一种纽结编码：PD 编码、`Conway[...]` 或 `Tait[u-v ...]`。

    Example:
        >>> parse_code("Conway[3]").n
        3
    """
    match = _CONWAY_RE.match(text)
    if match:
        return conway_diagram(match.group(1), name=name)
    match = _TAIT_RE.match(text)
    if match:
        return tait_diagram(_parse_edge_list(match.group(1)), name=name)
    return parse_pd(text, name=name)


# ==================== 面与着色 ====================


@lru_cache(maxsize=512)
def _trace_faces(d: Diagram) -> Tuple[Face, ...]:
    visited = set()
    traced: List[Face] = []
    for crossing in d.crossings:
        for slot in range(SLOT_COUNT):
            start = (crossing.id, slot)
            if start in visited:
                continue
            steps: List[BoundaryStep] = []
            corners: List[Tuple[int, int]] = []
            dart = start
            while True:
                visited.add(dart)
                cid, s = dart
                here = d.crossing(cid)
                side = "left" if here.is_outgoing(s) else "right"
                steps.append(BoundaryStep(here.arcs[s], cid, s, side))
                nxt_cid, nxt_slot = d.other_end(cid, s)
                corner = (nxt_slot - 1) % SLOT_COUNT
                corners.append((nxt_cid, corner))
                dart = (nxt_cid, corner)
                if dart == start:
                    break
            traced.append(Face(len(traced), tuple(steps), tuple(corners)))
    return tuple(traced)


def faces(d: Diagram) -> List[Face]:
    """按左转规则追踪旋转系统得到的全部面。"""
    return list(_trace_faces(d))


def corner_faces(d: Diagram) -> Dict[Tuple[int, int], int]:
    """(交叉点, 角编号) -> 面编号。"""
    return {corner: face.index for face in _trace_faces(d) for corner in face.corners}


def arc_faces(d: Diagram) -> Dict[int, Tuple[int, int]]:
    """每条弧两侧的面编号。"""
    sides: Dict[int, List[int]] = defaultdict(list)
    for face in _trace_faces(d):
        for step in face.boundary:
            sides[step.arc].append(face.index)
    return {arc: (pair[0], pair[1]) for arc, pair in sides.items()}


def checkerboard(d: Diagram, unbounded: Color = Color.WHITE) -> Dict[int, Color]:
    """棋盘着色，0 号面（无界面）取 unbounded 色。

    Raises:
        ColoringConflictError: 相邻面无法异色
    """
    dual = nx.MultiGraph()
    dual.add_nodes_from(face.index for face in _trace_faces(d))
    for arc, (left, right) in arc_faces(d).items():
        dual.add_edge(left, right, key=arc)

    colors: Dict[int, Color] = {0: unbounded}
    for u, v in nx.bfs_edges(dual, 0):
        colors[v] = colors[u].opposite
    if len(colors) != dual.number_of_nodes():
        raise ColoringConflictError("对偶图不连通")
    for u, v, arc in dual.edges(keys=True):
        if colors[u] == colors[v]:
            raise ColoringConflictError(f"弧 {arc} 两侧的面 {u}, {v} 同色")
    return colors


def tait_graph(d: Diagram, color: Color = Color.BLACK) -> nx.MultiGraph:
    """Tait 图：指定颜色的面为顶点，每个交叉点连接它两个该颜色的角。"""
    colors = checkerboard(d)
    corners = corner_faces(d)
    graph = nx.MultiGraph()
    graph.add_nodes_from(sorted(f for f, c in colors.items() if c is color))
    for crossing in d.crossings:
        k = 0 if colors[corners[(crossing.id, 0)]] is color else 1
        graph.add_edge(
            corners[(crossing.id, k)], corners[(crossing.id, k + 2)], key=crossing.id
        )
    return graph


# ==================== 判定 ====================


def is_alternating(d: Diagram) -> bool:
    """每条弧的一端在上穿槽位、另一端在下穿槽位。"""
    return all(
        (first[1] + second[1]) % 2 == 1 for first, second in d.occurrences.values()
    )


def is_reduced(d: Diagram) -> bool:
    """没有一个面在同一交叉点占据两个对角。"""
    corners = corner_faces(d)
    for crossing in d.crossings:
        cid = crossing.id
        if corners[(cid, 0)] == corners[(cid, 2)]:
            return False
        if corners[(cid, 1)] == corners[(cid, 3)]:
            return False
    return True


def is_prime_diagram(d: Diagram) -> bool:
    """约化图解是否为素图解（Tait 图 2-连通）。"""
    if not is_reduced(d):
        return False
    if d.n <= 2:
        return True
    simple = nx.Graph(tait_graph(d))
    simple.remove_edges_from(list(nx.selfloop_edges(simple)))
    return simple.number_of_nodes() >= 2 and nx.is_biconnected(simple)


# ==================== 纽结表 ====================


def load_table(path: Union[str, Path]) -> List[TableEntry]:
    """读取纽结表文件，每行 `名称<TAB>编码`，# 开头为注释。

    Raises:
        OSError: 文件无法读取
        TableFormatError: 某行缺少 TAB 分隔
    """
    entries: List[TableEntry] = []
    with open(path, "r", encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith(TABLE_COMMENT):
                continue
            if TABLE_SEPARATOR not in raw:
                raise TableFormatError(f"{path}:{line_no}: 缺少 TAB 分隔符")
            name, code = raw.rstrip("\r\n").split(TABLE_SEPARATOR, 1)
            entries.append(TableEntry(name.strip(), code.strip(), line_no))
    logger.debug(f"读取纽结表 {path}: {len(entries)} 项")
    return entries


def find_entry(entries: Sequence[TableEntry], name: str) -> Optional[TableEntry]:
    for entry in entries:
        if entry.name == name:
            return entry
    return None
