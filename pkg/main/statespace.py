#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""状态空间模块

状态是 Crowell 图中以根 v0 为根、边背离根的生成树形图。
本模块负责枚举状态、计算状态和（Alexander 多项式）、用 sympy
行列式做独立校验，并实现有根路径、树扩张与指定末端边的状态构造。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

import networkx as nx
import sympy
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from .crowell import CrowellGraph, Weight
from .errors import (
    EdgeIntoRootError,
    HypothesisViolationError,
    NoStatesError,
    NotATreeError,
)
from .polynomial import T_SYMBOL, IntPoly

logger = logging.getLogger(__name__)

JSON_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class State:
    """以 root 为根的生成树形图。

    Attributes:
        root: 根顶点
        parent_edge: 非根顶点到其父边编号的有序对，按顶点升序
    """

    root: int
    parent_edge: Tuple[Tuple[int, int], ...]

    @property
    def key(self) -> Tuple[int, ...]:
        """规范键：边编号升序。"""
        return tuple(sorted(e for _, e in self.parent_edge))

    @property
    def parents(self) -> Dict[int, int]:
        return dict(self.parent_edge)

    @property
    def edge_ids(self) -> frozenset:
        return frozenset(e for _, e in self.parent_edge)

    def parent_of(self, v: int) -> int:
        for vertex, edge_id in self.parent_edge:
            if vertex == v:
                return edge_id
        raise KeyError(v)

    def with_parent(self, v: int, edge_id: int) -> "State":
        updated = dict(self.parent_edge)
        updated[v] = edge_id
        return State(self.root, tuple(sorted(updated.items())))

    def tails(self, g: CrowellGraph) -> Dict[int, int]:
        """非根顶点 -> 父顶点。"""
        return {v: g.edge(e).tail for v, e in self.parent_edge}

    def children(self, g: CrowellGraph) -> Dict[int, List[int]]:
        kids: Dict[int, List[int]] = {v: [] for v in g.vertices}
        for v, e in self.parent_edge:
            kids[g.edge(e).tail].append(v)
        return kids

    def leaves(self, g: CrowellGraph) -> List[int]:
        """没有子节点的非根顶点，升序。"""
        internal = {g.edge(e).tail for _, e in self.parent_edge}
        return [v for v, _ in self.parent_edge if v not in internal]

    def t_degree(self, g: CrowellGraph) -> int:
        return sum(1 for _, e in self.parent_edge if g.edge(e).weight is Weight.MINUS_T)


@dataclass(frozen=True)
class StateSet:
    """某个根下的全部状态，按规范键排序。"""

    root: int
    states: Tuple[State, ...]
    degrees: Tuple[int, ...]
    _index: Dict[Tuple[int, ...], int] = field(
        default_factory=dict, init=False, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        self._index.update({s.key: i for i, s in enumerate(self.states)})

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[State]:
        return iter(self.states)

    def __getitem__(self, index: int) -> State:
        return self.states[index]

    def index_of(self, key: Tuple[int, ...]) -> int:
        return self._index[tuple(key)]

    def __contains__(self, state: object) -> bool:
        return isinstance(state, State) and state.key in self._index

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": JSON_SCHEMA_VERSION,
            "root": self.root,
            "count": len(self.states),
            "states": [
                {"key": list(s.key), "degree": d} for s, d in zip(self.states, self.degrees)
            ],
        }


def default_root(g: CrowellGraph) -> int:
    return min(g.vertices)


def _resolve_root(g: CrowellGraph, root: Optional[int]) -> int:
    if root is None:
        return default_root(g)
    if root not in g.vertices:
        raise ValueError(f"根 {root} 不是图的顶点")
    return root


def make_state(g: CrowellGraph, root: int, parent_edge: Mapping[int, int]) -> State:
    """校验并构造状态。

    Raises:
        NotATreeError: 父边映射不构成以 root 为根的生成树形图
    """
    expected = set(g.vertices) - {root}
    if set(parent_edge) != expected:
        raise NotATreeError(f"父边映射的顶点集 {sorted(parent_edge)} 与非根顶点不符")
    for v, edge_id in parent_edge.items():
        if not 1 <= edge_id <= len(g.edges) or g.edge(edge_id).head != v:
            raise NotATreeError(f"边 {edge_id} 不指向顶点 {v}")
    for v in expected:
        seen = {v}
        u = g.edge(parent_edge[v]).tail
        while u != root:
            if u in seen:
                raise NotATreeError(f"顶点 {v} 的祖先链含环")
            seen.add(u)
            u = g.edge(parent_edge[u]).tail
    return State(root, tuple(sorted(parent_edge.items())))


def is_valid_state(s: State, g: CrowellGraph) -> bool:
    try:
        make_state(g, s.root, s.parents)
    except NotATreeError:
        return False
    return True


# ==================== 枚举与状态和 ====================


def enumerate_states(g: CrowellGraph, root: Optional[int] = None) -> StateSet:
    """回溯枚举以 root 为根的全部状态。

    按顶点编号依次为每个非根顶点选择一条入边，一旦形成环立即剪枝。

    Raises:
        NoStatesError: 没有任何状态
    """
    root = _resolve_root(g, root)
    others = [v for v in g.vertices if v != root]
    choice: Dict[int, int] = {}
    found: List[State] = []

    def closes_cycle(v: int) -> bool:
        u = g.edge(choice[v]).tail
        while u != root and u in choice:
            if u == v:
                return True
            u = g.edge(choice[u]).tail
        return u == v

    def extend(i: int) -> None:
        if i == len(others):
            found.append(State(root, tuple(sorted(choice.items()))))
            return
        v = others[i]
        for e in g.in_edges(v):
            choice[v] = e.id
            if not closes_cycle(v):
                extend(i + 1)
            del choice[v]

    extend(0)
    if not found:
        raise NoStatesError(f"以 {root} 为根没有状态")
    found.sort(key=lambda s: s.key)
    logger.debug(f"根 {root}: 枚举到 {len(found)} 个状态")
    return StateSet(root, tuple(found), tuple(s.t_degree(g) for s in found))


def state_weight(s: State, g: CrowellGraph) -> IntPoly:
    """状态的权 (-t)^d，d 为树中 -t 边的条数。"""
    return IntPoly.minus_t_power(s.t_degree(g))


def state_sum(g: CrowellGraph, root: Optional[int] = None) -> IntPoly:
    """未归一化的状态和。"""
    total = IntPoly.zero()
    for s in enumerate_states(g, root):
        total = total + state_weight(s, g)
    return total


def alexander(g: CrowellGraph, root: Optional[int] = None) -> Tuple[IntPoly, int]:
    """状态和归一化后的 Alexander 多项式。

    Returns:
        Tuple[IntPoly, int]: (常数项为正的多项式, m)，多项式 = (-t)^m * 状态和
    """
    return state_sum(g, root).normalize()


# ==================== 行列式校验 ====================


def _laplacian_minor(g: CrowellGraph, root: int, weighted: bool) -> sympy.Matrix:
    others = [v for v in g.vertices if v != root]
    index = {v: i for i, v in enumerate(others)}
    matrix = sympy.zeros(len(others), len(others))
    for e in g.edges:
        if e.head == root:
            continue
        w = (-T_SYMBOL if e.weight is Weight.MINUS_T else 1) if weighted else 1
        matrix[index[e.head], index[e.head]] += w
        if e.tail != root:
            matrix[index[e.tail], index[e.head]] -= w
    return matrix


def _bareiss_det(minor: sympy.Matrix, weighted: bool) -> sympy.Expr:
    # ZZ 或 ZZ[t] 上的无分式 (Bareiss) 消元
    domain = ZZ[T_SYMBOL] if weighted else ZZ
    dm = DomainMatrix.from_Matrix(minor).convert_to(domain)
    return domain.to_sympy(dm.det())


def arborescence_count_oracle(g: CrowellGraph, root: Optional[int] = None) -> int:
    """有向矩阵树定理：入度拉普拉斯矩阵去掉根行根列的行列式。"""
    root = _resolve_root(g, root)
    minor = _laplacian_minor(g, root, weighted=False)
    if minor.rows == 0:
        return 1
    return int(_bareiss_det(minor, weighted=False))


def alexander_oracle(g: CrowellGraph, root: Optional[int] = None) -> IntPoly:
    """带权拉普拉斯子式的行列式，归一化后应与 alexander 完全一致。"""
    root = _resolve_root(g, root)
    minor = _laplacian_minor(g, root, weighted=True)
    if minor.rows == 0:
        return IntPoly.one()
    determinant = sympy.expand(_bareiss_det(minor, weighted=True))
    poly, _ = IntPoly.from_sympy(determinant).normalize()
    return poly


# ==================== 路径与树扩张 ====================


def _excise_loops(root: int, walk: Iterable[int], g: CrowellGraph) -> List[int]:
    """去掉有向途径中的环，得到同起止点的简单有向路径。"""
    vertices = [root]
    path: List[int] = []
    for edge_id in walk:
        head = g.edge(edge_id).head
        if head in vertices:
            cut = vertices.index(head)
            vertices = vertices[: cut + 1]
            path = path[:cut]
        else:
            vertices.append(head)
            path.append(edge_id)
    return path


def _path_vertices(g: CrowellGraph, root: int, path: List[int]) -> List[int]:
    return [root] + [g.edge(e).head for e in path]


def rooted_path(g: CrowellGraph, root: int, v: int) -> List[int]:
    """从 root 到 v 的简单有向路径（边编号序列）。

    先取无向最短路；每条逆向边用它左侧面的其余边界（一条同向的
    有向路）替换，最后去掉途径中的环。

    Raises:
        HypothesisViolationError: 构造结果不是到 v 的有向路径
    """
    if v == root:
        return []
    undirected = g.to_undirected()
    hops = nx.shortest_path(undirected, root, v)
    walk: List[int] = []
    for a, b in zip(hops, hops[1:]):
        forward = sorted(e.id for e in g.out_edges(a) if e.head == b)
        if forward:
            walk.append(forward[0])
            continue
        backward = min(e.id for e in g.out_edges(b) if e.head == a)
        cycle = g.face_cycle(g.left_face(backward))
        at = cycle.index(backward)
        walk.extend(cycle[at + 1:] + cycle[:at])
    path = _excise_loops(root, walk, g)
    verts = _path_vertices(g, root, path)
    if verts[-1] != v or len(set(verts)) != len(verts):
        raise HypothesisViolationError(f"无法构造从 {root} 到 {v} 的有向路径")
    return path


def _check_partial_tree(g: CrowellGraph, root: int, tree_edges: Iterable[int]) -> Dict[int, int]:
    parent: Dict[int, int] = {}
    for edge_id in tree_edges:
        if not 1 <= edge_id <= len(g.edges):
            raise NotATreeError(f"边 {edge_id} 不存在")
        head = g.edge(edge_id).head
        if head == root:
            raise NotATreeError(f"边 {edge_id} 指向根")
        if head in parent and parent[head] != edge_id:
            raise NotATreeError(f"顶点 {head} 有两条父边")
        parent[head] = edge_id
    for v in parent:
        seen = {v}
        u = g.edge(parent[v]).tail
        while u != root:
            if u in seen or u not in parent:
                raise NotATreeError(f"顶点 {v} 不能沿树边回到根")
            seen.add(u)
            u = g.edge(parent[u]).tail
    return parent


def extend_to_state(g: CrowellGraph, root: int, tree_edges: Iterable[int]) -> State:
    """把从 root 出发的部分有根树扩张成状态。

    对每个尚未在树中的顶点（按编号），取 rooted_path 在最后一个树顶点
    之后的一段加入树中。

    Raises:
        NotATreeError: 输入不是从 root 出发的部分有根树
    """
    parent = _check_partial_tree(g, root, tree_edges)
    in_tree: Set[int] = {root} | set(parent)
    for v in g.vertices:
        if v in in_tree:
            continue
        path = rooted_path(g, root, v)
        verts = _path_vertices(g, root, path)
        last = max(i for i, u in enumerate(verts) if u in in_tree)
        for edge_id in path[last:]:
            parent[g.edge(edge_id).head] = edge_id
        in_tree.update(verts[last:])
    return make_state(g, root, parent)


def _region_edges(g: CrowellGraph, region: int, excluded: Set[int]) -> Set[int]:
    """region 的相邻面（不经 excluded 中的边相邻）的边界边，去掉 region 自身的边界。"""
    boundary = set(g.face_edges(region))
    neighbours = set()
    for edge_id in boundary - excluded:
        for face in (g.left_face(edge_id), g.right_face(edge_id)):
            if face != region:
                neighbours.add(face)
    edges: Set[int] = set()
    for face in neighbours:
        edges.update(g.face_edges(face))
    return edges - boundary


def _directed_search(
    g: CrowellGraph,
    sources: Iterable[int],
    target: int,
    avoid: int,
    allowed: Optional[Set[int]] = None,
) -> Optional[List[int]]:
    """多源 BFS，返回从某个源到 target、不经过 avoid 的有向路径。"""
    previous: Dict[int, Optional[int]] = {}
    queue: deque = deque()
    for s in sorted(set(sources)):
        if s != avoid:
            previous[s] = None
            queue.append(s)
    while queue:
        u = queue.popleft()
        if u == target:
            path: List[int] = []
            while previous[u] is not None:
                edge_id = previous[u]
                path.append(edge_id)
                u = g.edge(edge_id).tail
            return path[::-1]
        for e in g.out_edges(u):
            if allowed is not None and e.id not in allowed:
                continue
            if e.head == avoid or e.head in previous:
                continue
            previous[e.head] = e.id
            queue.append(e.head)
    return None


def _corner_region(g: CrowellGraph, into: int, out: int) -> int:
    """入边 into 与出边 out 在公共端点处所夹的面。"""
    incoming, outgoing = g.edge(into), g.edge(out)
    if incoming.head != outgoing.tail:
        raise HypothesisViolationError(f"边 {into} 与 {out} 不相邻")
    s_in, s_out = incoming.head_slot, outgoing.tail_slot
    corner = s_in if s_out == (s_in + 1) % 4 else s_out
    return g.corner_face(incoming.head, corner)


def state_with_terminal_edge(g: CrowellGraph, root: int, e0: int) -> State:
    """构造以 e0 为末端边（e0 的终点是叶子）的状态。

    Raises:
        EdgeIntoRootError: e0 指向根
        HypothesisViolationError: 构造失败（图解不满足约化、素的前提）
    """
    edge = g.edge(e0)
    w0, w1 = edge.tail, edge.head
    if w1 == root:
        raise EdgeIntoRootError(f"边 {e0} 指向根 {root}")
    if edge.is_loop:
        raise HypothesisViolationError(f"边 {e0} 是自环")

    gamma = rooted_path(g, root, w0)
    verts = _path_vertices(g, root, gamma)
    if w1 in verts:
        i = verts.index(w1)
        e_in, e_out = gamma[i - 1], gamma[i]
        v_in, v_out = g.edge(e_in).tail, g.edge(e_out).head
        region = _corner_region(g, e_in, e_out)
        allowed = _region_edges(g, region, {e_in, e_out})
        detour = _directed_search(g, [v_in], v_out, avoid=w1, allowed=allowed)
        if detour is not None:
            walk = gamma[: i - 1] + detour + gamma[i + 1:]
            gamma = _excise_loops(root, walk, g)
        else:
            logger.warning(f"边 {e0}: 区域绕行失败，改用全局搜索")
            fallback = _directed_search(g, [root], w0, avoid=w1)
            if fallback is None:
                raise HypothesisViolationError(f"无法避开顶点 {w1} 到达 {w0}")
            gamma = fallback
        verts = _path_vertices(g, root, gamma)

    tree = set(gamma) | {e0}
    tree_vertices = set(verts) | {w1}
    for out in g.out_edges(w1):
        u = out.head
        if u in tree_vertices:
            continue
        region = _corner_region(g, e0, out.id)
        allowed = _region_edges(g, region, {e0, out.id})
        sources = tree_vertices - {w1}
        branch = _directed_search(g, sources, u, avoid=w1, allowed=allowed)
        if branch is None:
            logger.warning(f"边 {e0}: 保护顶点 {u} 的区域搜索失败，改用全局搜索")
            branch = _directed_search(g, sources, u, avoid=w1)
        if branch is None:
            raise HypothesisViolationError(f"无法避开顶点 {w1} 到达 {u}")
        tree.update(branch)
        tree_vertices.update(g.edge(b).head for b in branch)

    state = extend_to_state(g, root, tree)
    if state.parent_of(w1) != e0 or w1 not in state.leaves(g):
        raise HypothesisViolationError(f"边 {e0} 不是所构造状态的末端边")
    return state
