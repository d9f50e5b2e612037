#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""I18nManager 测试模块

包含单元测试和属性测试，验证命令行输出的国际化功能。
"""

import pytest
from hypothesis import given, strategies as st, settings

import sys
from pathlib import Path

# 添加项目根目录到路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from main.i18n import DEFAULT_LANGUAGE, I18nManager, language_codes, load_pack, resolve_language


class TestI18nManagerBasic:
    """I18nManager 基础单元测试"""

    def setup_method(self):
        """每个测试前重置单例"""
        I18nManager.reset()

    def test_singleton_pattern(self):
        """测试单例模式"""
        assert I18nManager() is I18nManager()

    def test_default_language(self):
        """测试默认语言为中文"""
        i18n = I18nManager()
        assert i18n.current_language == DEFAULT_LANGUAGE == "zh_CN"

    def test_get_existing_key(self):
        """测试获取存在的翻译键"""
        assert I18nManager().get("app.name") == "Crowell 状态空间"

    def test_set_language_english(self):
        """测试切换到英文"""
        i18n = I18nManager()
        assert i18n.set_language("en_US") is True
        assert i18n.current_language == "en_US"
        assert i18n.get("app.name") == "Crowell State Space"

    def test_unknown_language_falls_back(self):
        """测试未知语言回退到默认语言"""
        i18n = I18nManager()
        i18n.set_language("en_US")
        assert i18n.set_language("fr_FR") is False
        assert i18n.current_language == DEFAULT_LANGUAGE

    def test_flag(self):
        """测试布尔值的本地化文本"""
        i18n = I18nManager()
        assert i18n.flag(True) == "是"
        assert i18n.flag(False) == "否"
        i18n.set_language("en_US")
        assert i18n.flag(True) == "yes"

    def test_language_codes(self):
        """测试支持的语言代码，默认语言在前"""
        assert language_codes() == ["zh_CN", "en_US"]
        assert resolve_language("en_US") == "en_US"
        assert resolve_language(None) == DEFAULT_LANGUAGE
        assert resolve_language("fr_FR") == DEFAULT_LANGUAGE

    def test_display_name(self):
        """测试当前语言的显示名称"""
        i18n = I18nManager()
        assert i18n.display_name == "中文"
        i18n.set_language("en_US")
        assert i18n.display_name == "English"

    def test_packs_are_shared_and_read_only(self):
        """语言包只加载一次且不可修改"""
        pack = load_pack("en_US")
        assert load_pack("en_US") is pack
        with pytest.raises(TypeError):
            pack["app.name"] = "x"


class TestI18nManagerFormatting:
    """I18nManager 字符串格式化测试"""

    def setup_method(self):
        """每个测试前重置单例"""
        I18nManager.reset()

    def test_format_states_count(self):
        """测试状态数量的格式化"""
        assert I18nManager().get("states.count", root=1, count=3) == "根 1: 3 个状态"

    def test_format_english(self):
        """测试英文格式化"""
        i18n = I18nManager()
        i18n.set_language("en_US")
        assert i18n.get("states.count", root=2, count=7) == "root 2: 7 states"
        assert i18n.get("torus.yes", k=5, n=2) == "(2,5) torus knot, n = 2"

    def test_format_missing_param(self):
        """测试缺少格式化参数时返回原模板"""
        assert "{count}" in I18nManager().get("validate.crossings")


class TestI18nManagerPropertyTests:
    """I18nManager 属性测试"""

    def setup_method(self):
        """每个测试前重置单例"""
        I18nManager.reset()

    @given(st.text(min_size=1, max_size=100))
    @settings(max_examples=100)
    def test_fallback_returns_key_for_nonexistent(self, key: str):
        """不存在的键返回键本身"""
        fake_key = f"__nonexistent_prefix__.{key}"
        assert I18nManager().get(fake_key) == fake_key

    @given(st.sampled_from(["zh_CN", "en_US"]))
    @settings(max_examples=20)
    def test_existing_keys_return_translation(self, lang_code: str):
        """存在的键返回非空翻译"""
        I18nManager.reset()
        i18n = I18nManager()
        i18n.set_language(lang_code)
        for key in ["app.name", "verify.pass", "torus.note"]:
            result = i18n.get(key)
            assert result != key
            assert len(result) > 0

    @given(
        st.integers(min_value=0, max_value=1000),
        st.integers(min_value=0, max_value=1000),
        st.floats(min_value=0, max_value=1000, allow_nan=False, allow_infinity=False),
    )
    @settings(max_examples=100)
    def test_multiple_placeholder_formatting(self, passed: int, total: int, time: float):
        """多占位符字符串正确格式化"""
        result = I18nManager().get("verify.done", passed=passed, total=total, time=f"{time:.1f}")
        assert f"{passed}/{total}" in result
        assert "{passed}" not in result
        assert "{time}" not in result


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
