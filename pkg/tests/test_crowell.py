#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Crowell 图构造测试模块"""

from dataclasses import replace

import pytest

import sys
from pathlib import Path

# 添加项目根目录到路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from main.config import DEFAULT_TABLE_PATH, PROJECT_ROOT
from main.crowell import Weight, build_crowell, check_region_compatibility, graph_invariants_hold
from main.errors import DiagramRejectedError, NotAlternatingError, NotReducedError
from main.knot_io import load_table, parse_pd

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
KINKED_TREFOIL = "X(1,4,2,5) X(3,8,4,1) X(5,2,6,3) X(7,6,8,7)"
NON_ALTERNATING = "X(4,2,5,1) X(3,6,4,1) X(5,2,6,3)"

TABLE = load_table(PROJECT_ROOT / DEFAULT_TABLE_PATH)


@pytest.fixture
def trefoil():
    return build_crowell(parse_pd(TREFOIL, name="3_1"))


class TestBuildCrowell:
    """Crowell 图构造测试"""

    def test_trefoil_edges(self, trefoil):
        """测试三叶结的边、方向与权"""
        expected = {
            1: (2, 1, Weight.MINUS_T),
            2: (3, 1, Weight.PLUS_ONE),
            3: (3, 2, Weight.MINUS_T),
            4: (1, 2, Weight.PLUS_ONE),
            5: (1, 3, Weight.MINUS_T),
            6: (2, 3, Weight.PLUS_ONE),
        }
        assert trefoil.vertices == (1, 2, 3)
        assert {e.id: (e.tail, e.head, e.weight) for e in trefoil.edges} == expected

    def test_slots(self, trefoil):
        """测试起点槽位为奇数、终点槽位为偶数"""
        for e in trefoil.edges:
            assert e.tail_slot % 2 == 1
            assert e.head_slot % 2 == 0
            assert not e.is_loop

    def test_in_edges_plus_first(self, trefoil):
        """测试入边 +1 在前"""
        first, second = trefoil.in_edges(1)
        assert (first.id, second.id) == (2, 1)
        assert trefoil.other_in_edge(1, 2).id == 1
        assert trefoil.other_in_edge(1, 1).id == 2
        assert [e.id for e in trefoil.out_edges(1)] == [4, 5]

    def test_faces_on_both_sides(self, trefoil):
        """测试每条边左右两侧的面不同"""
        for e in trefoil.edges:
            assert trefoil.left_face(e.id) != trefoil.right_face(e.id)

    def test_face_cycles_are_directed(self, trefoil):
        """测试面边界按边方向首尾相接"""
        for face in trefoil.faces:
            cycle = trefoil.face_cycle(face.index)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                assert trefoil.edge(a).head == trefoil.edge(b).tail

    def test_networkx_views(self, trefoil):
        """测试 networkx 视图"""
        directed = trefoil.to_networkx()
        assert directed.number_of_edges() == 6
        assert all(directed.in_degree(v) == 2 for v in trefoil.vertices)
        assert all(directed.out_degree(v) == 2 for v in trefoil.vertices)
        assert trefoil.to_undirected().number_of_edges() == 6

    def test_to_dict(self, trefoil):
        """测试 JSON 结构"""
        data = trefoil.to_dict()
        assert data["schema"] == 1
        assert data["vertices"] == [1, 2, 3]
        assert data["edges"][0] == {"id": 1, "tail": 2, "head": 1, "weight": "-t"}

    def test_to_dot(self, trefoil):
        """测试 DOT 导出"""
        dot = trefoil.to_dot()
        assert dot.startswith("digraph crowell {")
        assert 'v2 -> v1 [label="-t", style=dashed, id="e1"];' in dot
        assert 'v3 -> v1 [label="+1", style=solid, id="e2"];' in dot
        assert dot.rstrip().endswith("}")

    def test_not_alternating_rejected(self):
        """测试非交错图解被拒绝"""
        with pytest.raises(NotAlternatingError):
            build_crowell(parse_pd(NON_ALTERNATING))

    def test_not_reduced_rejected(self):
        """测试非约化图解被拒绝"""
        with pytest.raises(NotReducedError):
            build_crowell(parse_pd(KINKED_TREFOIL))
        assert issubclass(NotReducedError, DiagramRejectedError)


class TestCrowellInvariants:
    """Crowell 图结构不变量测试"""

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_invariants(self, entry):
        """每个顶点一条 +1 入边、一条 -t 入边，出入交替"""
        g = build_crowell(entry.to_diagram())
        assert graph_invariants_hold(g)
        assert len(g.edges) == 2 * len(g.vertices)

    @pytest.mark.parametrize("entry", TABLE, ids=lambda e: e.name)
    def test_region_compatibility(self, entry):
        """每个面的边界是有向环，方向与棋盘颜色一致"""
        g = build_crowell(entry.to_diagram())
        assert check_region_compatibility(g)

    def test_flipped_edge_breaks_regions(self, trefoil):
        """反转一条边后，两侧的面都不再是有向环"""
        e = trefoil.edge(1)
        flipped = replace(e, tail=e.head, head=e.tail, tail_slot=e.head_slot, head_slot=e.tail_slot)
        broken = replace(trefoil, edges=(flipped,) + trefoil.edges[1:])
        assert check_region_compatibility(trefoil)
        assert not check_region_compatibility(broken)
        assert not graph_invariants_hold(broken)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
