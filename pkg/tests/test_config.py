#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""配置管理测试模块

包含批量校验配置、命令行运行配置和配置文件加载的测试。
"""

import json
import os
import pytest
import tempfile
from dataclasses import asdict
from pathlib import Path
from hypothesis import given, strategies as st, settings

import sys

# 添加项目根目录到路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from main.config import (
    COMMANDS,
    DEFAULT_LANGUAGE,
    DEFAULT_TABLE_PATH,
    PROJECT_ROOT,
    SUPPORTED_LANGUAGES,
    TABLE_ENV_VAR,
    ConfigManager,
    CrowellConfig,
    RunConfig,
)


class TestCrowellConfig:
    """CrowellConfig 数据类测试"""

    def test_default_values(self):
        """测试默认配置值"""
        config = CrowellConfig()
        assert config.table_path == DEFAULT_TABLE_PATH
        assert config.parallel_processing is True
        assert config.max_workers == 4
        assert config.transform_pairs == 100
        assert config.seed == 0
        assert config.language == DEFAULT_LANGUAGE
        assert config.log_to_file is True

    def test_invalid_language_corrected(self):
        """测试无效语言被修正为默认值"""
        config = CrowellConfig(language="invalid_lang")
        assert config.language == DEFAULT_LANGUAGE

    def test_value_validation(self):
        """测试超出范围的值被修正"""
        config = CrowellConfig(max_workers=100, transform_pairs=0)
        assert config.max_workers == 16
        assert config.transform_pairs == 1
        config = CrowellConfig(max_workers=0, transform_pairs=10**6)
        assert config.max_workers == 1
        assert config.transform_pairs == 10000

    def test_empty_table_path_restored(self):
        """测试空的纽结表路径恢复为默认值"""
        assert CrowellConfig(table_path="").table_path == DEFAULT_TABLE_PATH

    def test_default_table_resolves_to_bundled_file(self, monkeypatch):
        """测试默认纽结表解析为项目自带的文件"""
        monkeypatch.delenv(TABLE_ENV_VAR, raising=False)
        path = CrowellConfig().resolve_table_path()
        assert path.resolve() == (PROJECT_ROOT / DEFAULT_TABLE_PATH).resolve()
        assert path.exists()

    def test_table_path_precedence(self, monkeypatch, tmp_path):
        """测试路径优先级：参数 > 环境变量 > 配置"""
        env_table = tmp_path / "env.tsv"
        arg_table = tmp_path / "arg.tsv"
        monkeypatch.setenv(TABLE_ENV_VAR, str(env_table))
        config = CrowellConfig()
        assert config.resolve_table_path() == env_table
        assert config.resolve_table_path(str(arg_table)) == arg_table


class TestRunConfig:
    """RunConfig 测试"""

    def test_single_source_accepted(self):
        """测试恰好一个输入来源"""
        config = RunConfig(command="alexander", knot="3_1")
        assert config.output_format == "text"
        assert config.root is None

    def test_no_source_rejected(self):
        """测试缺少输入来源"""
        with pytest.raises(ValueError):
            RunConfig(command="states")

    def test_two_sources_rejected(self):
        """测试多个输入来源"""
        with pytest.raises(ValueError):
            RunConfig(command="graph", pd="X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", knot="3_1")

    def test_verify_all_needs_no_source(self):
        """测试 verify-all 不需要输入来源"""
        assert RunConfig(command="verify-all").command == "verify-all"

    def test_unknown_command_rejected(self):
        """测试未知命令"""
        with pytest.raises(ValueError):
            RunConfig(command="simplify", knot="3_1")

    def test_unknown_format_rejected(self):
        """测试未知输出格式"""
        with pytest.raises(ValueError):
            RunConfig(command="graph", knot="3_1", output_format="svg")

    @given(st.sampled_from([c for c in COMMANDS if c != "verify-all"]))
    @settings(max_examples=20)
    def test_every_command_accepts_pd(self, command: str):
        """测试每个单图解命令都接受 --pd"""
        config = RunConfig(command=command, pd="X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
        assert config.command == command


class TestConfigManager:
    """ConfigManager 加载测试"""

    def test_missing_file_uses_defaults(self):
        """测试配置文件不存在时使用默认值"""
        with tempfile.TemporaryDirectory() as tmpdir:
            manager = ConfigManager(Path(tmpdir) / "config.json")
            assert manager.config == CrowellConfig()

    def test_corrupt_file_uses_defaults(self):
        """测试配置文件损坏时使用默认值"""
        with tempfile.TemporaryDirectory() as tmpdir:
            config_file = Path(tmpdir) / "config.json"
            config_file.write_text("{not json", encoding="utf-8")
            assert ConfigManager(config_file).config == CrowellConfig()

    def test_unknown_fields_ignored(self):
        """测试未知字段被忽略（旧版本配置）"""
        with tempfile.TemporaryDirectory() as tmpdir:
            config_file = Path(tmpdir) / "config.json"
            with open(config_file, "w", encoding="utf-8") as f:
                json.dump({"max_filename_length": 100, "max_workers": 2}, f)
            manager = ConfigManager(config_file)
            assert manager.config.max_workers == 2
            assert manager.config.language == DEFAULT_LANGUAGE

    def test_loaded_values_are_clamped(self):
        """测试从文件读取的越界值经过 __post_init__ 校正"""
        with tempfile.TemporaryDirectory() as tmpdir:
            config_file = Path(tmpdir) / "config.json"
            with open(config_file, "w", encoding="utf-8") as f:
                json.dump({"language": "en_US", "max_workers": 99}, f)
            manager = ConfigManager(config_file)
            assert manager.config.max_workers == 16
            assert manager.config.language == "en_US"

    @given(
        st.booleans(),
        st.integers(min_value=1, max_value=16),
        st.integers(min_value=1, max_value=10000),
        st.integers(min_value=0, max_value=2**31),
        st.sampled_from(SUPPORTED_LANGUAGES),
    )
    @settings(max_examples=50)
    def test_config_round_trip(self, parallel, workers, pairs, seed, lang):
        """写入文件后重新加载得到相同的配置"""
        with tempfile.TemporaryDirectory() as tmpdir:
            config_file = Path(tmpdir) / "config.json"
            expected = CrowellConfig(
                parallel_processing=parallel,
                max_workers=workers,
                transform_pairs=pairs,
                seed=seed,
                language=lang,
            )
            config_file.write_text(json.dumps(asdict(expected)), encoding="utf-8")
            assert ConfigManager(config_file).config == expected


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
