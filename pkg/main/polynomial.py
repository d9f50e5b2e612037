#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""整系数多项式模块

IntPoly 表示 t 的整系数多项式，系数按升幂存储。支持加减乘、求值、
按 (-t) 的幂展示，以及归一化（去掉 t 的最低次幂并记录平移量 m）。

Copyright (c) 2024-2026 虎哥
Licensed under the MIT License.

Version: 1.0.0
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union

import sympy

T_SYMBOL = sympy.Symbol("t")


@dataclass(frozen=True)
class IntPoly:
    """t 的整系数多项式（不可变）。

    Attributes:
        coefficients: 升幂系数，coefficients[k] 是 t^k 的系数；末尾零会被去掉

    Example:
        >>> p = IntPoly((1, -1, 1))
        >>> p.render()
        '1 - t + t^2'
    """

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    # ==================== 构造 ====================

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "IntPoly":
        """coefficient * t^power。"""
        if power < 0:
            raise ValueError(f"幂次必须非负: {power}")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def minus_t_power(cls, power: int) -> "IntPoly":
        """(-t)^power。"""
        return cls.monomial(power, -1 if power % 2 else 1)

    @classmethod
    def from_minus_t(cls, coefficients: Iterable[int]) -> "IntPoly":
        """由 (-t) 的幂系数构造，即 sum c_k (-t)^k。"""
        return cls(
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(coefficients))
        )

    @classmethod
    def from_sympy(cls, expr: sympy.Expr, symbol: sympy.Symbol = T_SYMBOL) -> "IntPoly":
        """从 sympy 表达式转换，表达式必须是 symbol 的整系数多项式。"""
        poly = sympy.Poly(sympy.expand(expr), symbol)
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]
        return cls(tuple(coeffs))

    # ==================== 属性 ====================

    @property
    def degree(self) -> int:
        """最高次数，零多项式为 -1。"""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def low_degree(self) -> int:
        """最低非零项的次数，零多项式为 -1。"""
        for k, c in enumerate(self.coefficients):
            if c:
                return k
        return -1

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def minus_t_coefficients(self) -> Tuple[int, ...]:
        """按 (-t) 的幂展开时的系数。"""
        return tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coefficients))

    def is_palindromic(self) -> bool:
        """去掉最低次幂后系数是否回文。"""
        body = self.coefficients[max(self.low_degree, 0):]
        return body == body[::-1]

    def evaluate(self, x: int) -> int:
        """Horner 法求值。"""
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def normalize(self) -> Tuple["IntPoly", int]:
        """乘以 (-t)^m，使最低次项为正的常数项。

        Returns:
            Tuple[IntPoly, int]: (归一化多项式, m)，归一化多项式 = (-t)^m * 原多项式
        """
        if self.is_zero:
            return self, 0
        low = self.low_degree
        sign = -1 if low % 2 else 1
        return IntPoly(tuple(sign * c for c in self.coefficients[low:])), -low

    def to_sympy(self, symbol: sympy.Symbol = T_SYMBOL) -> sympy.Expr:
        return sum(
            (c * symbol**k for k, c in enumerate(self.coefficients)), sympy.Integer(0)
        )

    # ==================== 运算 ====================

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPoly(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return IntPoly.zero()
        product: List[int] = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPoly(tuple(product))

    __rmul__ = __mul__

    # ==================== 展示 ====================

    def render(self, var: str = "t") -> str:
        """按升幂渲染，例如 '1 - 3t + t^2'。"""
        return _render_terms(
            ((k, c) for k, c in enumerate(self.coefficients) if c),
            lambda k: var if k == 1 else f"{var}^{k}",
            joiner="",
        )

    def render_minus_t(self) -> str:
        """按 (-t) 的幂渲染，例如 '1 + (-t) + (-t)^2'。"""
        return _render_terms(
            ((k, c) for k, c in enumerate(self.minus_t_coefficients()) if c),
            lambda k: "(-t)" if k == 1 else f"(-t)^{k}",
            joiner="*",
        )

    def __str__(self) -> str:
        return self.render()


def _coerce(value: Union[IntPoly, int]) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    return IntPoly((int(value),))


def _render_terms(terms, power_text, joiner: str) -> str:
    parts: List[str] = []
    for k, c in terms:
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        elif magnitude == 1:
            body = power_text(k)
        else:
            body = f"{magnitude}{joiner}{power_text(k)}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"
