#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""通用工具模块

提供日志配置。日志文件按日期命名；控制台日志写到 stderr，
保证 stdout 只包含数据输出。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Tuple

# 日志配置常量
LOG_DIR_NAME = "logs"
LOG_PREFIX = "crowell_states"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(
    prefix: str = LOG_PREFIX,
    force_new: bool = False,
    log_to_file: bool = True,
    level: int = logging.INFO,
) -> Tuple[logging.Logger, Optional[str]]:
    """设置日志系统。

    配置文件日志和控制台日志。日志记录器名为 prefix，同时挂到
    main 包的日志记录器上，库模块的日志也会输出。

    Args:
        prefix: 日志文件名前缀及日志记录器名称
        force_new: 是否强制创建新的日志处理器，默认为 False
        log_to_file: 是否写日志文件，默认为 True
        level: 日志级别

    Returns:
        Tuple[logging.Logger, Optional[str]]: (logger 实例, 日志文件路径) 元组，
        不写文件时路径为 None

    Example:
        >>> logger, log_path = setup_logging(log_to_file=False)
        >>> logger.info("开始校验")
    """
    log_file: Optional[Path] = None
    if log_to_file:
        project_root = Path(__file__).resolve().parent.parent
        logs_dir = project_root / LOG_DIR_NAME
        logs_dir.mkdir(exist_ok=True)
        today = datetime.now().strftime("%Y%m%d")
        log_file = logs_dir / f"{prefix}_{today}.log"

    logger = logging.getLogger(prefix)
    package_logger = logging.getLogger(__package__ or "main")

    # 如果已有处理器且不强制刷新，直接返回
    if logger.handlers and not force_new:
        return logger, str(log_file) if log_file else None

    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)
    handlers = []

    # 文件处理器
    if log_file is not None:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)

    # 控制台处理器
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    handlers.append(console_handler)

    for target in (logger, package_logger):
        target.handlers.clear()
        target.setLevel(level)
        target.propagate = False
        for handler in handlers:
            target.addHandler(handler)

    if force_new:
        logger.info(f"日志文件: {log_file}")
        logger.info("日志系统初始化完成")

    return logger, str(log_file) if log_file else None
