#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""状态空间测试模块

包含状态枚举、状态和、行列式校验、有根路径、树扩张以及
指定末端边的状态构造的测试。
"""

import logging

import pytest
from hypothesis import given, strategies as st, settings

import sys
from pathlib import Path

# 添加项目根目录到路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from main.config import DEFAULT_TABLE_PATH, PROJECT_ROOT
from main.crowell import build_crowell
from main.errors import EdgeIntoRootError, NoStatesError, NotATreeError, StateError
from main.knot_io import closed_braid_diagram, find_entry, load_table
from main import statespace
from main.polynomial import IntPoly
from main.statespace import (
    State,
    alexander,
    alexander_oracle,
    arborescence_count_oracle,
    default_root,
    enumerate_states,
    extend_to_state,
    is_valid_state,
    make_state,
    rooted_path,
    state_sum,
    state_weight,
    state_with_terminal_edge,
)

TABLE = load_table(PROJECT_ROOT / DEFAULT_TABLE_PATH)

# 手工核对过的 Alexander 多项式（升幂系数）
KNOWN_POLYNOMIALS = {
    "3_1": (1, -1, 1),
    "4_1": (1, -3, 1),
    "5_1": (1, -1, 1, -1, 1),
    "5_2": (2, -3, 2),
    "6_1": (2, -5, 2),
    "6_2": (1, -3, 3, -3, 1),
    "7_1": (1, -1, 1, -1, 1, -1, 1),
    "7_6": (1, -5, 7, -5, 1),
    "9_1": (1, -1, 1, -1, 1, -1, 1, -1, 1),
}

# 纽结表中每个纽结的行列式 |Δ(-1)|
DETERMINANTS = {
    "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9, "6_2": 11, "6_3": 13,
    "7_1": 7, "7_2": 11, "7_3": 13, "7_4": 15, "7_5": 17, "7_6": 19, "7_7": 21,
    "8_1": 13, "8_2": 17, "8_3": 17, "8_4": 19, "8_5": 21, "8_6": 23, "8_7": 23,
    "8_8": 25, "8_9": 25, "8_10": 27, "8_11": 27, "8_12": 29, "8_13": 29, "8_14": 31,
    "8_15": 33, "8_16": 35, "8_17": 37, "8_18": 45,
    "9_1": 9, "9_2": 15, "9_3": 19, "9_4": 21, "9_5": 23, "9_6": 27, "9_7": 29,
    "9_8": 31, "9_9": 31, "9_10": 33, "9_11": 33, "9_12": 35, "9_13": 37, "9_14": 37,
    "9_15": 39, "9_16": 39, "9_17": 39, "9_18": 41, "9_19": 41, "9_20": 41, "9_21": 43,
    "9_22": 43, "9_23": 45, "9_24": 45, "9_25": 47, "9_26": 47, "9_27": 49, "9_28": 51,
    "9_29": 51, "9_30": 53, "9_31": 55, "9_32": 59, "9_33": 61, "9_34": 69, "9_35": 27,
    "9_36": 37, "9_37": 45, "9_38": 57, "9_39": 55, "9_40": 75, "9_41": 49,
}


def crowell_of(name):
    entry = find_entry(TABLE, name)
    return build_crowell(entry.to_diagram())


@pytest.fixture
def trefoil():
    return crowell_of("3_1")


class TestState:
    """State 与 StateSet 测试"""

    def test_trefoil_states(self, trefoil):
        """测试三叶结的三个状态"""
        states = enumerate_states(trefoil)
        assert states.root == 1
        assert [s.key for s in states] == [(3, 5), (4, 5), (4, 6)]
        assert states.degrees == (2, 1, 0)

    def test_state_helpers(self, trefoil):
        """测试父边、子节点、叶子与 t 次数"""
        s = make_state(trefoil, 1, {2: 4, 3: 6})
        assert s.key == (4, 6)
        assert s.parents == {2: 4, 3: 6}
        assert s.parent_of(3) == 6
        assert s.tails(trefoil) == {2: 1, 3: 2}
        assert s.children(trefoil) == {1: [2], 2: [3], 3: []}
        assert s.leaves(trefoil) == [3]
        assert s.t_degree(trefoil) == 0
        assert s.with_parent(3, 5).key == (4, 5)
        assert state_weight(s.with_parent(3, 5), trefoil) == IntPoly((0, -1))

    def test_state_set_lookup(self, trefoil):
        """测试按规范键查找"""
        states = enumerate_states(trefoil)
        assert len(states) == 3
        assert states.index_of((4, 5)) == 1
        assert states[1].key == (4, 5)
        assert states[0] in states
        other_root = enumerate_states(trefoil, 2)
        assert [s.key for s in other_root] == [(1, 5), (1, 6), (2, 6)]
        assert not any(s in states for s in other_root)

    def test_state_set_to_dict(self, trefoil):
        """测试 JSON 结构"""
        data = enumerate_states(trefoil).to_dict()
        assert data["schema"] == 1
        assert data["count"] == 3
        assert data["states"][0] == {"key": [3, 5], "degree": 2}

    @pytest.mark.parametrize(
        "parents",
        [{2: 3, 3: 6}, {2: 4}, {2: 5, 3: 5}, {2: 4, 3: 99}],
    )
    def test_make_state_rejects(self, trefoil, parents):
        """测试不构成生成树形图的父边映射"""
        with pytest.raises(NotATreeError):
            make_state(trefoil, 1, parents)
        assert not is_valid_state(State(1, tuple(sorted(parents.items()))), trefoil)

    def test_unknown_root(self, trefoil):
        """测试不存在的根"""
        with pytest.raises(ValueError):
            enumerate_states(trefoil, 9)

    def test_error_hierarchy(self):
        """测试状态相关异常的基类"""
        for exc in (NoStatesError, NotATreeError, EdgeIntoRootError):
            assert issubclass(exc, StateError)


class TestStateSum:
    """状态和与行列式校验测试"""

    def test_trefoil_alexander(self, trefoil):
        """测试三叶结的 Alexander 多项式"""
        poly, m = alexander(trefoil)
        assert poly.render() == "1 - t + t^2"
        assert m == 0

    @pytest.mark.parametrize("name", sorted(KNOWN_POLYNOMIALS))
    def test_known_polynomials(self, name):
        """测试已知纽结的多项式，且与根无关"""
        g = crowell_of(name)
        expected = IntPoly(KNOWN_POLYNOMIALS[name])
        for root in g.vertices:
            assert alexander(g, root)[0] == expected

    @pytest.mark.parametrize("name", sorted(KNOWN_POLYNOMIALS))
    def test_state_count_is_determinant(self, name):
        """状态数等于行列式 |Δ(-1)|"""
        g = crowell_of(name)
        determinant = abs(IntPoly(KNOWN_POLYNOMIALS[name]).evaluate(-1))
        for root in g.vertices:
            assert len(enumerate_states(g, root)) == determinant

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_oracles(self, entry):
        """状态枚举与矩阵树定理一致"""
        g = build_crowell(entry.to_diagram())
        for root in g.vertices:
            states = enumerate_states(g, root)
            assert len(states) == arborescence_count_oracle(g, root)
            assert alexander(g, root)[0] == alexander_oracle(g, root)
            assert state_sum(g, root).evaluate(-1) == len(states)

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_normalized_shape(self, entry):
        """归一化多项式常数项非零、回文，按 (-t) 展开系数全为正"""
        g = build_crowell(entry.to_diagram())
        poly, _ = alexander(g)
        assert poly.coefficient(0) != 0
        assert poly.is_palindromic()
        assert all(c > 0 for c in poly.minus_t_coefficients())

    def test_table_names_match_determinants(self):
        """纽结表的名称集合与行列式表一致"""
        assert sorted(e.name for e in TABLE) == sorted(DETERMINANTS)

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_table_determinant(self, entry):
        """状态数等于纽结表中该纽结的行列式"""
        g = build_crowell(entry.to_diagram())
        assert len(enumerate_states(g)) == DETERMINANTS[entry.name]

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_normalization_relation(self, entry):
        """每个根上：归一化多项式常数项为正，且 (-t)^(-m) 乘回去就是状态和"""
        g = build_crowell(entry.to_diagram())
        for root in g.vertices:
            poly, m = alexander(g, root)
            assert poly.coefficient(0) > 0
            assert IntPoly.minus_t_power(-m) * poly == state_sum(g, root)

    @given(st.integers(min_value=1, max_value=5))
    @settings(max_examples=5, deadline=None)
    def test_torus_family(self, n: int):
        """σ1^(2n+1) 闭包的多项式为 1 + (-t) + ... + (-t)^(2n)"""
        g = build_crowell(closed_braid_diagram([1] * (2 * n + 1)))
        poly, _ = alexander(g)
        assert poly == IntPoly.from_minus_t([1] * (2 * n + 1))


class TestPathsAndExtension:
    """有根路径与树扩张测试"""

    def test_trefoil_paths(self, trefoil):
        """测试三叶结的有根路径"""
        assert rooted_path(trefoil, 1, 1) == []
        assert rooted_path(trefoil, 1, 2) == [4]
        assert rooted_path(trefoil, 1, 3) == [5]

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_paths_are_simple_and_directed(self, entry):
        """有根路径是从根出发的简单有向路径"""
        g = build_crowell(entry.to_diagram())
        root = default_root(g)
        for v in g.vertices:
            path = rooted_path(g, root, v)
            tail = root
            seen = {root}
            for edge_id in path:
                e = g.edge(edge_id)
                assert e.tail == tail
                assert e.head not in seen
                seen.add(e.head)
                tail = e.head
            assert tail == v

    def test_extend_trefoil(self, trefoil):
        """测试三叶结的树扩张"""
        assert extend_to_state(trefoil, 1, []).key == (4, 5)
        assert extend_to_state(trefoil, 1, [6, 4]).key == (4, 6)

    @pytest.mark.parametrize("edges", [[1], [3], [4, 3]])
    def test_extend_rejects_non_tree(self, trefoil, edges):
        """测试输入不是从根出发的部分有根树"""
        with pytest.raises(NotATreeError):
            extend_to_state(trefoil, 1, edges)

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_extend_contains_input(self, entry):
        """扩张得到的状态包含输入路径"""
        g = build_crowell(entry.to_diagram())
        root = default_root(g)
        for v in g.vertices:
            path = rooted_path(g, root, v)
            state = extend_to_state(g, root, path)
            assert is_valid_state(state, g)
            assert set(path) <= state.edge_ids


class TestTerminalEdgeStates:
    """指定末端边的状态构造测试"""

    def test_edge_into_root(self, trefoil):
        """测试指向根的边"""
        with pytest.raises(EdgeIntoRootError):
            state_with_terminal_edge(trefoil, 1, 1)

    def test_trefoil(self, trefoil):
        """测试三叶结每条不指向根的边"""
        expected = {3: (3, 5), 4: (4, 5), 5: (4, 5), 6: (4, 6)}
        for edge_id, key in expected.items():
            state = state_with_terminal_edge(trefoil, 1, edge_id)
            head = trefoil.edge(edge_id).head
            assert state.parent_of(head) == edge_id
            assert head in state.leaves(trefoil)
            if edge_id in (3, 6):
                assert state.key == key

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_every_edge_can_be_terminal(self, entry):
        """每条不指向根的边都是某个状态的末端边"""
        g = build_crowell(entry.to_diagram())
        root = default_root(g)
        states = enumerate_states(g, root)
        for e in g.edges:
            if e.head == root:
                continue
            state = state_with_terminal_edge(g, root, e.id)
            assert state in states
            assert state.parent_of(e.head) == e.id
            assert e.head in state.leaves(g)

    def test_global_fallback_is_logged(self, monkeypatch, caplog):
        """区域内搜索失败时改用全局搜索并记录警告，结果仍是合法状态"""
        monkeypatch.setattr(statespace, "_region_edges", lambda g, region, excluded: set())
        monkeypatch.setattr(logging.getLogger("main"), "propagate", True)
        g = crowell_of("4_1")
        root = default_root(g)
        with caplog.at_level(logging.WARNING, logger="main.statespace"):
            for e in g.edges:
                if e.head == root:
                    continue
                state = state_with_terminal_edge(g, root, e.id)
                assert is_valid_state(state, g)
                assert e.head in state.leaves(g)
        fallbacks = [r for r in caplog.records if "改用全局搜索" in r.getMessage()]
        assert fallbacks
        assert all(r.levelno == logging.WARNING for r in fallbacks)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
