#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""末端边交换模块

叶子顶点 v 的父边换成 v 的另一条入边，称为一次交换。本模块构造
交换图、统计非格障碍（度为 1 的节点），并实现把任意状态 T1 变换到
T2 的构造性算法：不断清空某个顶点 w 之下的子树，再在 w 处交换，
使两棵树的有根交不断增大。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Set, Tuple

import networkx as nx

from .crowell import CrowellGraph, Weight
from .errors import (
    HypothesisViolationError,
    KinkVertexError,
    NotTerminalError,
    VertexIsRootError,
    WPrimeNotFoundError,
)
from .statespace import State, StateSet, is_valid_state

logger = logging.getLogger(__name__)

JSON_SCHEMA_VERSION = 1

StateKey = Tuple[int, ...]


@dataclass(frozen=True)
class Move:
    """一次交换。

    Attributes:
        vertex: 交换发生的叶子顶点
        removed_edge: 被移除的父边
        added_edge: 新的父边
        degree_delta: t 次数的变化（+1 或 -1）
        context: 产生该交换时正在清空的顶点链，扩大有根交的交换为空
    """

    vertex: int
    removed_edge: int
    added_edge: int
    degree_delta: int
    context: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertex": self.vertex,
            "removed_edge": self.removed_edge,
            "added_edge": self.added_edge,
            "degree_delta": self.degree_delta,
            "context": list(self.context),
        }


@dataclass(frozen=True)
class MoveSequence:
    """交换序列及有根交大小的里程碑记录。"""

    moves: Tuple[Move, ...] = ()
    milestones: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": JSON_SCHEMA_VERSION,
            "length": len(self.moves),
            "moves": [m.to_dict() for m in self.moves],
            "milestones": list(self.milestones),
        }


@dataclass(frozen=True)
class BelowSet:
    """Bel(w, T) 的组合代理。

    Attributes:
        vertices: 严格位于 w 之下的顶点
        components: vertices 在 G 中导出子图的连通分支，Bel1 在前
        edges: 两端都在 vertices ∪ {w} 中的边
        enclosed_faces: 所有角都在 vertices ∪ {w} 中的面
    """

    vertices: FrozenSet[int]
    components: Tuple[FrozenSet[int], ...]
    edges: FrozenSet[int]
    enclosed_faces: FrozenSet[int]


@dataclass
class ExchangeGraph:
    """交换图：节点为状态规范键，边为一次交换。

    节点属性 degree（t 次数）与 state；边属性 moves（交换顶点列表）。
    """

    graph: nx.Graph
    root: int
    meta: Dict[str, Any] = field(default_factory=dict)

    @property
    def node_count(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    def degree_one_nodes(self) -> List[StateKey]:
        return sorted(k for k, deg in self.graph.degree() if deg == 1)

    def to_dict(self) -> Dict[str, Any]:
        nodes = sorted(self.graph.nodes)
        edges = sorted(tuple(sorted((u, v))) for u, v in self.graph.edges)
        return {
            "schema": JSON_SCHEMA_VERSION,
            "root": self.root,
            "nodes": [
                {"key": list(k), "degree": self.graph.nodes[k]["degree"]} for k in nodes
            ],
            "edges": [
                {
                    "source": list(u),
                    "target": list(v),
                    "moves": sorted(self.graph.edges[u, v]["moves"]),
                }
                for u, v in edges
            ],
        }

    def to_dot(self) -> str:
        """DOT 导出：节点标签为 t 次数，tooltip 为规范键。"""
        nodes = sorted(self.graph.nodes)
        ids = {k: f"s{i}" for i, k in enumerate(nodes)}
        lines = ["graph exchange {", "  node [shape=circle];"]
        for k in nodes:
            key_text = ",".join(str(e) for e in k)
            lines.append(
                f'  {ids[k]} [label="{self.graph.nodes[k]["degree"]}", tooltip="{key_text}"];'
            )
        for u, v in sorted(tuple(sorted((a, b))) for a, b in self.graph.edges):
            moves = ",".join(str(m) for m in sorted(self.graph.edges[u, v]["moves"]))
            lines.append(f'  {ids[u]} -- {ids[v]} [label="{moves}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


# ==================== 交换 ====================


def terminal_edges(s: State, g: CrowellGraph) -> List[Tuple[int, int]]:
    """状态的末端边 (叶子顶点, 父边)，按顶点升序。"""
    parents = s.parents
    return [(v, parents[v]) for v in s.leaves(g)]


def exchange_move(s: State, v: int, g: CrowellGraph, context: Tuple[int, ...] = ()) -> Tuple[State, Move]:
    """在叶子 v 处交换，并返回对应的 Move 记录。

    Raises:
        NotTerminalError: v 是根或不是叶子
        KinkVertexError: v 的另一条入边是自环
    """
    if v == s.root or v not in s.leaves(g):
        raise NotTerminalError(f"顶点 {v} 不是当前状态的叶子")
    current = g.edge(s.parent_of(v))
    other = g.other_in_edge(v, current.id)
    if other.is_loop:
        raise KinkVertexError(f"顶点 {v} 的另一条入边 {other.id} 是自环")
    delta = int(other.weight is Weight.MINUS_T) - int(current.weight is Weight.MINUS_T)
    move = Move(v, current.id, other.id, delta, context)
    return s.with_parent(v, other.id), move


def exchange(s: State, v: int, g: CrowellGraph) -> State:
    """在叶子 v 处交换父边。"""
    return exchange_move(s, v, g)[0]


def _neighbours(s: State, g: CrowellGraph) -> List[Tuple[int, StateKey]]:
    found = []
    for v in s.leaves(g):
        try:
            found.append((v, exchange(s, v, g).key))
        except KinkVertexError:
            continue
    return found


def exchange_graph(states: StateSet, g: CrowellGraph, max_workers: int = 1) -> ExchangeGraph:
    """构造交换图，平行交换合并为一条带交换顶点列表的边。

    Args:
        states: 全部状态
        g: Crowell 图
        max_workers: 大于 1 时按状态并行计算邻居，最后统一合并
    """
    graph = nx.Graph()
    for s, degree in zip(states, states.degrees):
        graph.add_node(s.key, degree=degree, state=s)

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            neighbour_lists = list(executor.map(lambda s: _neighbours(s, g), states))
    else:
        neighbour_lists = [_neighbours(s, g) for s in states]

    for s, neighbours in zip(states, neighbour_lists):
        for v, key in neighbours:
            if key not in graph:
                raise HypothesisViolationError(f"交换得到的 {key} 不在状态集中")
            if graph.has_edge(s.key, key):
                graph.edges[s.key, key]["moves"].add(v)
            else:
                graph.add_edge(s.key, key, moves={v})
    return ExchangeGraph(graph=graph, root=states.root)


def is_connected(xg: ExchangeGraph) -> bool:
    return xg.node_count > 0 and nx.is_connected(xg.graph)


def lattice_obstruction(xg: ExchangeGraph) -> int:
    """度为 1 的节点个数；偏序若是格，至多有两个这样的节点。"""
    return len(xg.degree_one_nodes())


def graph_distance(xg: ExchangeGraph, source: StateKey, target: StateKey) -> int:
    return nx.shortest_path_length(xg.graph, tuple(source), tuple(target))


# ==================== 有根交与 Bel ====================


def _meet_vertices(t1: State, t2: State, g: CrowellGraph) -> Set[int]:
    p1, p2 = t1.parents, t2.parents
    meet = {t1.root}
    grew = True
    while grew:
        grew = False
        for v, e in p1.items():
            if v not in meet and p2.get(v) == e and g.edge(e).tail in meet:
                meet.add(v)
                grew = True
    return meet


def rooted_meet(t1: State, t2: State, g: CrowellGraph) -> FrozenSet[int]:
    """两个状态的有根交：从根出发、两棵树共有的最大子树（边编号集）。"""
    if t1.root != t2.root:
        raise HypothesisViolationError("两个状态的根不同")
    p1 = t1.parents
    return frozenset(p1[v] for v in _meet_vertices(t1, t2, g) if v != t1.root)


def _descendants(w: int, t: State, g: CrowellGraph) -> Set[int]:
    children = t.children(g)
    below: Set[int] = set()
    stack = list(children[w])
    while stack:
        u = stack.pop()
        below.add(u)
        stack.extend(children[u])
    return below


def below(w: int, t: State, g: CrowellGraph) -> BelowSet:
    """w 之下的顶点集及其在 G 中的连通分支。

    Bel1 为包含 w 的编号较小的子节点的分支。
    """
    vertices = _descendants(w, t, g)
    closed = vertices | {w}
    sub = g.to_undirected().subgraph(vertices)
    components = [frozenset(c) for c in nx.connected_components(sub)]
    kids = sorted(t.children(g)[w])
    if kids:
        first = kids[0]
        components.sort(key=lambda c: (first not in c, min(c)))
    edges = frozenset(e.id for e in g.edges if e.tail in closed and e.head in closed)
    enclosed = frozenset(
        f.index for f in g.faces if all(c in closed for c in f.crossings)
    )
    return BelowSet(frozenset(vertices), tuple(components), edges, enclosed)


def phi(v: int, t: State, g: CrowellGraph) -> int:
    """v 的非树入边的起点。"""
    if v == t.root:
        raise VertexIsRootError(f"根 {v} 没有父边")
    return g.other_in_edge(v, t.parent_of(v)).tail


def find_w_prime(w: int, t: State, g: CrowellGraph) -> int:
    """在 Bel(w) 中找一个顶点 w'，其非树入边来自 Bel(w) ∪ {w} 之外。

    优先取从外部（不含 w）进入 Bel1 的边的终点，编号最小者。

    Raises:
        WPrimeNotFoundError: 不存在这样的顶点
    """
    bel = below(w, t, g)
    closed = bel.vertices | {w}
    candidates = sorted(u for u in bel.vertices if phi(u, t, g) not in closed)
    if not candidates:
        raise WPrimeNotFoundError(f"Bel({w}) 中没有满足条件的 w'")
    if bel.components:
        first = bel.components[0]
        preferred = {e.head for e in g.edges if e.head in first and e.tail not in closed}
        chosen = [u for u in candidates if u in preferred]
        if chosen:
            return chosen[0]
    return candidates[0]


def clear_below(
    w: int,
    t: State,
    g: CrowellGraph,
    context: Tuple[int, ...] = (),
) -> Tuple[MoveSequence, State]:
    """清空 w 之下的子树，使 w 成为叶子，w 的父边保持不变。

    Raises:
        VertexIsRootError: w 是根
        HypothesisViolationError: phi(w) 位于 Bel(w) 中，或 Bel(w) 没有缩小
    """
    if w == t.root:
        raise VertexIsRootError(f"不能清空根 {w} 之下的子树")
    bel = below(w, t, g)
    if phi(w, t, g) in bel.vertices:
        raise HypothesisViolationError(f"phi({w}) 位于 Bel({w}) 中")

    chain = context + (w,)
    moves: List[Move] = []
    current = t
    while bel.vertices:
        w_prime = find_w_prime(w, current, g)
        logger.debug(f"清空 {w}: |Bel| = {len(bel.vertices)}, w' = {w_prime}")
        nested, current = clear_below(w_prime, current, g, chain)
        moves.extend(nested.moves)
        current, move = exchange_move(current, w_prime, g, chain)
        moves.append(move)
        shrunk = below(w, current, g)
        if not shrunk.vertices < bel.vertices:
            raise HypothesisViolationError(f"Bel({w}) 没有严格缩小")
        bel = shrunk
    return MoveSequence(tuple(moves)), current


def transform(t1: State, t2: State, g: CrowellGraph) -> MoveSequence:
    """构造从 t1 到 t2 的交换序列。

    每一步选编号最小的、沿 t2 的边与有根交相邻的顶点 w，清空 w 之下
    的子树后在 w 处交换，有根交严格增大。

    Raises:
        HypothesisViolationError: 根不同或有根交没有增大
    """
    if t1.root != t2.root:
        raise HypothesisViolationError("两个状态的根不同")
    target_parents = t2.parents
    current = t1
    moves: List[Move] = []
    meet = _meet_vertices(current, t2, g)
    milestones = [len(meet) - 1]
    while current != t2:
        frontier = sorted(
            v for v in g.vertices
            if v not in meet and g.edge(target_parents[v]).tail in meet
        )
        w = frontier[0]
        cleared, current = clear_below(w, current, g)
        moves.extend(cleared.moves)
        current, move = exchange_move(current, w, g)
        moves.append(move)
        grown = _meet_vertices(current, t2, g)
        if not (meet < grown):
            raise HypothesisViolationError(f"在 {w} 处交换后有根交没有增大")
        meet = grown
        milestones.append(len(meet) - 1)
    logger.debug(f"变换完成: {len(moves)} 步, 里程碑 {milestones}")
    return MoveSequence(tuple(moves), tuple(milestones))


def replay(t1: State, seq: MoveSequence, g: CrowellGraph) -> List[State]:
    """依次执行交换序列，返回包含起点在内的全部中间状态。

    Raises:
        NotTerminalError: 某一步不可执行或与记录不符
    """
    trail = [t1]
    current = t1
    for move in seq:
        if current.parent_of(move.vertex) != move.removed_edge:
            raise NotTerminalError(f"顶点 {move.vertex} 的父边不是 {move.removed_edge}")
        current, done = exchange_move(current, move.vertex, g)
        if done.added_edge != move.added_edge or not is_valid_state(current, g):
            raise NotTerminalError(f"在 {move.vertex} 处的交换与记录不符")
        trail.append(current)
    return trail
