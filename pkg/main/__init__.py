#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Crowell 状态空间

交错纽结图解上的 Crowell 状态模型：解析 PD 编码，构造 Crowell 图，
枚举状态（有根生成树），由状态和计算 Alexander 多项式，并在状态
之间执行交换移动与变换。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

模块结构:
    - knot_io: PD 编码解析、面、棋盘着色、交错与约化检验
    - crowell: Crowell 图构造
    - statespace: 状态枚举、状态和、路径与状态扩展
    - moves: 交换移动、交换图、状态变换
    - torus: (2,2n+1) 环面纽结刻画
    - table_processor: 纽结表批量校验
    - cli: 命令行入口
    - config: 配置管理
    - utils: 日志
"""

from __future__ import annotations

# 版本信息
__version__ = "1.0.0"
__author__ = "虎哥"
__app_name__ = "Crowell 状态空间"
__app_name_en__ = "Crowell State Space"
__license__ = "MIT"

# 导出模块
from .config import CrowellConfig, RunConfig, ConfigManager, config_manager
from .errors import (
    CrowellError,
    PDParseError,
    DiagramRejectedError,
    StateError,
    TheoremCheckError,
)
from .polynomial import IntPoly
from .knot_io import (
    Diagram, Crossing, Face, Color, parse_pd, parse_code,
    conway_diagram, tait_diagram, closed_braid_diagram, load_table,
)
from .crowell import CrowellGraph, CrowellEdge, Weight, build_crowell
from .statespace import State, StateSet, enumerate_states, alexander
from .moves import Move, MoveSequence, ExchangeGraph, exchange, exchange_graph, transform
from .torus import TorusReport, TorusVerdict, characterize
from .table_processor import TableProcessor, RowResult, ProcessStats
from .utils import setup_logging
from .cli import main

__all__ = [
    # 版本信息
    "__version__",
    "__author__",
    "__app_name__",
    "__app_name_en__",
    # 配置
    "CrowellConfig",
    "RunConfig",
    "ConfigManager",
    "config_manager",
    # 异常
    "CrowellError",
    "PDParseError",
    "DiagramRejectedError",
    "StateError",
    "TheoremCheckError",
    # 图解与 Crowell 图
    "IntPoly",
    "Diagram",
    "Crossing",
    "Face",
    "Color",
    "parse_pd",
    "parse_code",
    "conway_diagram",
    "tait_diagram",
    "closed_braid_diagram",
    "load_table",
    "CrowellGraph",
    "CrowellEdge",
    "Weight",
    "build_crowell",
    # 状态空间
    "State",
    "StateSet",
    "enumerate_states",
    "alexander",
    "Move",
    "MoveSequence",
    "ExchangeGraph",
    "exchange",
    "exchange_graph",
    "transform",
    # 环面纽结
    "TorusReport",
    "TorusVerdict",
    "characterize",
    # 批量校验
    "TableProcessor",
    "RowResult",
    "ProcessStats",
    # 工具
    "setup_logging",
    # 命令行
    "main",
]
