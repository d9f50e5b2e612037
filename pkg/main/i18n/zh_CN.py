#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""简体中文语言包

命令行输出中的标签与提示信息。多项式、状态键、JSON 与 DOT 等数据不翻译。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.
"""

TRANSLATIONS = {
    # ============================================================
    # 应用信息
    # ============================================================
    "app.name": "Crowell 状态空间",
    "app.subtitle": "交错纽结的状态和、末端边交换与环面纽结刻画",

    # ============================================================
    # 通用取值
    # ============================================================
    "value.yes": "是",
    "value.no": "否",

    # ============================================================
    # validate
    # ============================================================
    "validate.crossings": "交叉点: {count}",
    "validate.faces": "面: {count}",
    "validate.alternating": "交错: {value}",
    "validate.reduced": "约化: {value}",
    "validate.prime": "素图解: {value}",

    # ============================================================
    # graph / states
    # ============================================================
    "graph.summary": "顶点 {vertices} 个, 边 {edges} 条",
    "graph.compatible": "区域方向与着色相容: {value}",
    "states.count": "根 {root}: {count} 个状态",

    # ============================================================
    # exchange-graph / transform
    # ============================================================
    "exchange.summary": "节点 {nodes} 个, 边 {edges} 条",
    "exchange.connected": "连通: {value}",
    "exchange.degree_one": "度为 1 的节点: {count}",
    "transform.source": "起点 T1: {key}",
    "transform.target": "终点 T2: {key}",
    "transform.length": "交换步数: {count}",

    # ============================================================
    # torus
    # ============================================================
    "torus.yes": "(2,{k}) 环面纽结, n = {n}",
    "torus.no": "不是 (2,2n+1) 环面纽结",
    "torus.prime": "图解素性: {value}",
    "torus.note": "注: 素性由 Tait 图 2-连通性在图解上检验，替代多项式因式分解的论证",

    # ============================================================
    # verify-all
    # ============================================================
    "verify.progress": "校验纽结表",
    "verify.pass": "通过",
    "verify.fail": "失败",
    "verify.rejected": "已拒绝: {reason}",
    "verify.summary": "{passed}/{total} 通过 ({rate})",
    "verify.torus_family": "环面纽结族: {names}",
    "verify.done": "校验完成: {passed}/{total} 通过, 用时 {time} 秒",

    # ============================================================
    # 错误
    # ============================================================
    "error.parse": "输入错误: {message}",
    "error.io": "无法读取: {message}",
    "error.rejected": "图解被拒绝: {message}",
    "error.theorem": "定理检验失败: {message}",
    "error.unknown_knot": "纽结表中没有 {name}",
    "error.config": "参数错误: {message}",
}
