#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""国际化模块

命令行标签与消息的多语言查找。只翻译界面文本；多项式、状态键、
JSON 与 DOT 等数据从不经过这里。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

import importlib
import logging
from functools import lru_cache
from types import MappingProxyType
from typing import List, Mapping, Optional

logger = logging.getLogger(__name__)

# 语言代码 -> 语言包中的显示名称
LANGUAGE_NAMES: Mapping[str, str] = MappingProxyType({"zh_CN": "中文", "en_US": "English"})

DEFAULT_LANGUAGE = "zh_CN"


def language_codes() -> List[str]:
    """支持的语言代码，默认语言在前。"""
    return list(LANGUAGE_NAMES)


def resolve_language(lang_code: Optional[str]) -> str:
    """未知或空的语言代码回退到默认语言。"""
    if lang_code in LANGUAGE_NAMES:
        return lang_code
    if lang_code:
        logger.debug(f"未知语言 {lang_code}，使用 {DEFAULT_LANGUAGE}")
    return DEFAULT_LANGUAGE


@lru_cache(maxsize=None)
def load_pack(lang_code: str) -> Mapping[str, str]:
    """加载语言包（只读，批量校验的工作线程共享同一份）。

    Raises:
        ImportError: 语言包模块不存在
    """
    pack = importlib.import_module(f".{lang_code}", __name__)
    return MappingProxyType(dict(pack.TRANSLATIONS))


class I18nManager:
    """国际化管理器（单例）。

    Example:
        >>> i18n = I18nManager()
        >>> i18n.get("states.count", root=1, count=3)
        '根 1: 3 个状态'
    """

    _instance: Optional["I18nManager"] = None
    current_language: str
    translations: Mapping[str, str]

    def __new__(cls) -> "I18nManager":
        if cls._instance is None:
            instance = super().__new__(cls)
            instance.current_language = DEFAULT_LANGUAGE
            instance.translations = load_pack(DEFAULT_LANGUAGE)
            cls._instance = instance
        return cls._instance

    def set_language(self, lang_code: str) -> bool:
        """切换语言；未知代码回退到默认语言。

        Returns:
            bool: 请求的语言是否可用
        """
        resolved = resolve_language(lang_code)
        try:
            self.translations = load_pack(resolved)
        except ImportError:
            logger.warning(f"语言包 {resolved} 缺失")
            resolved = DEFAULT_LANGUAGE
            self.translations = load_pack(DEFAULT_LANGUAGE)
        self.current_language = resolved
        return resolved == lang_code

    def get(self, key: str, **kwargs) -> str:
        """查找翻译；键不存在时返回键本身，缺少格式化参数时返回模板。"""
        text = self.translations.get(key, key)
        if not kwargs:
            return text
        try:
            return text.format(**kwargs)
        except (KeyError, IndexError, ValueError):
            return text

    def flag(self, value: bool) -> str:
        return self.get("value.yes" if value else "value.no")

    @property
    def display_name(self) -> str:
        """当前语言的显示名称。"""
        return LANGUAGE_NAMES[self.current_language]

    @classmethod
    def reset(cls) -> None:
        """重置单例（仅用于测试）。"""
        cls._instance = None


# 全局 i18n 实例
i18n = I18nManager()
