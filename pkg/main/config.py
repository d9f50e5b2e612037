#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""配置管理模块

使用 dataclass 定义配置结构，从 JSON 文件加载。CrowellConfig 保存
批量校验的默认参数；RunConfig 描述一次命令行调用。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Set

from .i18n import DEFAULT_LANGUAGE, language_codes

# 配置文件名
CONFIG_FILENAME = "config.json"

# 纽结表
DEFAULT_TABLE_PATH = "resources/knots_upto9.tsv"
TABLE_ENV_VAR = "CROWELL_TABLE"

# 支持的语言列表
SUPPORTED_LANGUAGES = language_codes()

# 命令与输出格式
COMMANDS = (
    "validate",
    "graph",
    "states",
    "alexander",
    "exchange-graph",
    "transform",
    "torus",
    "verify-all",
)
OUTPUT_FORMATS = ("text", "json", "dot")

PROJECT_ROOT = Path(__file__).resolve().parent.parent


@dataclass
class CrowellConfig:
    """批量校验配置数据类。

    Attributes:
        table_path: 默认纽结表路径，相对路径以项目根目录为基准
        parallel_processing: 是否并行处理纽结表各行，默认 True
        max_workers: 最大并行工作线程数，范围 1-16，默认 4
        transform_pairs: 每个纽结随机抽取的 (T1, T2) 对数，范围 1-10000，默认 100
        seed: 随机种子，默认 0
        language: 输出语言，默认 zh_CN（简体中文）
        log_to_file: 是否写日志文件，默认 True
    """

    table_path: str = DEFAULT_TABLE_PATH
    parallel_processing: bool = True
    max_workers: int = 4
    transform_pairs: int = 100
    seed: int = 0
    language: str = DEFAULT_LANGUAGE
    log_to_file: bool = True

    def __post_init__(self) -> None:
        """验证并修正配置值，超出范围的值会被自动修正。"""
        self.max_workers = min(max(int(self.max_workers), 1), 16)
        self.transform_pairs = min(max(int(self.transform_pairs), 1), 10000)
        if self.language not in SUPPORTED_LANGUAGES:
            self.language = DEFAULT_LANGUAGE
        if not self.table_path:
            self.table_path = DEFAULT_TABLE_PATH

    def resolve_table_path(self, override: Optional[str] = None) -> Path:
        """确定纽结表路径：命令行参数 > 环境变量 > 配置文件。"""
        raw = override or os.environ.get(TABLE_ENV_VAR) or self.table_path
        path = Path(raw)
        if not path.is_absolute() and not path.exists():
            path = PROJECT_ROOT / path
        return path


@dataclass
class RunConfig:
    """一次命令行调用的参数。

    Attributes:
        command: 子命令
        pd: 内联 PD 编码
        input_path: 含 PD 编码的文件路径
        knot: 纽结表中的名称
        table: 纽结表路径
        root: 根顶点，None 表示编号最小的交叉点
        output_format: text / json / dot
        seed: transform 选取随机状态对的种子
        pairs: verify-all 每个纽结的随机变换对数
        workers: verify-all 并行线程数
    """

    command: str
    pd: Optional[str] = None
    input_path: Optional[str] = None
    knot: Optional[str] = None
    table: Optional[str] = None
    root: Optional[int] = None
    output_format: str = "text"
    seed: int = 0
    pairs: Optional[int] = None
    workers: Optional[int] = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"未知命令: {self.command}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"未知输出格式: {self.output_format}")
        if self.command != "verify-all":
            given = [x for x in (self.pd, self.input_path, self.knot) if x is not None]
            if len(given) != 1:
                raise ValueError("必须且只能指定 --pd、--file、--knot 中的一个")


class ConfigManager:
    """配置管理器。

    负责加载配置。配置文件存储在项目根目录，命令行只读不写。

    Attributes:
        config_file: 配置文件路径
        config: 当前配置实例

    Example:
        >>> manager = ConfigManager()
        >>> manager.config.max_workers
        4
    """

    def __init__(self, config_file: Optional[Path] = None) -> None:
        """初始化配置管理器，加载配置文件。"""
        self.config_file = config_file or PROJECT_ROOT / CONFIG_FILENAME
        self.config = self._load_config()

    def _load_config(self) -> CrowellConfig:
        """从文件加载配置，文件不存在或格式错误时返回默认配置。"""
        if not self.config_file.exists():
            return CrowellConfig()

        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                data = json.load(f)
            # 只使用已知字段，忽略未知字段
            known_fields: Set[str] = {
                f.name for f in CrowellConfig.__dataclass_fields__.values()
            }
            filtered_data = {k: v for k, v in data.items() if k in known_fields}
            return CrowellConfig(**filtered_data)
        except (json.JSONDecodeError, TypeError, ValueError, AttributeError):
            return CrowellConfig()


# 全局配置管理器实例
config_manager = ConfigManager()
