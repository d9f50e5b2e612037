#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""异常定义模块

定义纽结图解析、Crowell 图构造、状态空间与交换移动中使用的全部异常。
命令行入口按异常族映射退出码。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations


class CrowellError(Exception):
    """所有领域异常的基类。"""


# ==================== PD 解析 ====================


class PDParseError(CrowellError):
    """PD 编码或纽结表无法解析为合法图解。"""


class MalformedTokenError(PDParseError):
    """PD 记号格式错误，或输入为空。"""


class ArcCountMismatchError(PDParseError):
    """某条弧没有恰好出现两次。"""


class MultiComponentError(PDParseError):
    """弧编号无法沿定向追踪成单一闭曲线（链环而非纽结）。"""


class NonplanarEmbeddingError(PDParseError):
    """面追踪不满足欧拉公式 V - E + F = 2。"""


class TableFormatError(PDParseError):
    """纽结表文件的某一行格式错误。"""


class ColoringConflictError(CrowellError):
    """区域无法进行棋盘着色（相邻面颜色相同）。"""


# ==================== 图解被拒绝 ====================


class DiagramRejectedError(CrowellError):
    """图解合法，但不满足交错/约化等前提条件。"""


class NotAlternatingError(DiagramRejectedError):
    """图解不是交错的。"""


class NotReducedError(DiagramRejectedError):
    """图解含有可消去的交叉点（不是约化的）。"""


# ==================== 状态 ====================


class StateError(CrowellError):
    """状态（有根生成树形图）相关的错误。"""


class NoStatesError(StateError):
    """图没有任何以给定顶点为根的状态。"""


class NotATreeError(StateError):
    """给定边集不是以根出发的部分有根树。"""


class EdgeIntoRootError(StateError):
    """指定的边指向根，无法成为状态的末端边。"""


class NotTerminalError(StateError):
    """顶点不是当前状态的叶子，无法做交换。"""


class KinkVertexError(StateError):
    """顶点的另一条入边是自环（扭结），交换无意义。"""


class VertexIsRootError(StateError):
    """操作不允许作用在根上。"""


# ==================== 定理检验 ====================


class TheoremCheckError(CrowellError):
    """构造过程中某个应当成立的结构性质被违反。"""


class HypothesisViolationError(TheoremCheckError):
    """输入不满足约化、素、交错等构造所依赖的前提。"""


class WPrimeNotFoundError(HypothesisViolationError):
    """在 Bel(w) 中找不到满足条件的顶点 w'。"""


class PolyMismatchError(TheoremCheckError):
    """Alexander 多项式不属于 (2,2n+1) 环面纽结族。"""


class InvalidNError(CrowellError, ValueError):
    """环面纽结参数 n 必须 >= 1。"""
