"""
Базовый класс компиляторов схем и описание экземпляра предиката.
"""

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Mapping

from ...exceptions import UnsupportedSchemaError
from ...models import SchemaKind
from ..ast import And, Formula
from ..membership import Binding, SymbolicSet, binding_ambient


@dataclass(frozen=True, eq=False)
class PredicateInstance:
    """Экземпляр схемы предложения.

    Attributes:
        schema: Вид схемы
        n: Размерность объемлющего пространства (для Collapse: размерность куба I^n)
        m: Размерность многообразия (Submanifold, Boundary)
        r: Гладкость, 0 или 1
        bindings: Имя параметра -> описание или символическое имя
        p: Сложность символических параметров по числу многочленов
        q: Сложность символических параметров по степени
        nash_threshold: Порог l, начиная с которого C^l влечёт Нэша
        ambient: Пространство образа для Collapse (по умолчанию n)
    """

    schema: SchemaKind
    n: int
    m: int = 0
    r: int = 0
    bindings: Mapping[str, object] = field(default_factory=dict)
    p: int = 1
    q: int = 2
    nash_threshold: int | None = None
    ambient: int | None = None

    def binding(self, key: str, dimension: int) -> Binding:
        """Параметр key как описание или символическое множество в R^dimension."""
        if key not in self.bindings:
            raise UnsupportedSchemaError(f"Схема {self.schema} требует параметр {key}")
        value = self.bindings[key]
        if isinstance(value, str):
            value = SymbolicSet(value, dimension, self.p, self.q)
        if binding_ambient(value) != dimension:
            raise UnsupportedSchemaError(
                f"Параметр {key} задан в R^{binding_ambient(value)}, ожидалось R^{dimension}"
            )
        return value

    def check_nash(self) -> None:
        if self.nash_threshold is not None and self.nash_threshold >= 2:
            raise UnsupportedSchemaError(
                f"Порог Нэша l={self.nash_threshold}: схема C^l при l >= 2 не реализована"
            )

    @property
    def smoothness(self) -> int:
        """Фактическая гладкость схемы с учётом флага Нэша (C^l при l <= 1)."""
        if self.nash_threshold is None:
            return self.r
        return max(self.r, self.nash_threshold)


class NameSupply:
    """Свежие имена связанных переменных: a1, a2, ... по каждому префиксу."""

    def __init__(self):
        self._counters: dict[str, itertools.count] = {}

    def fresh(self, prefix: str, count: int = 1) -> list[str]:
        counter = self._counters.setdefault(prefix, itertools.count(1))
        return [f"{prefix}{next(counter)}" for _ in range(count)]

    def one(self, prefix: str) -> str:
        return self.fresh(prefix)[0]


class SchemaCompiler(ABC):
    """Абстрактный компилятор схемы в предложение первого порядка."""

    @property
    @abstractmethod
    def kind(self) -> SchemaKind:
        """Вид схемы, который обслуживает компилятор."""
        pass

    @abstractmethod
    def clauses(self, inst: PredicateInstance) -> dict[str, Formula]:
        """
        Строит именованные части предложения.

        Args:
            inst: Экземпляр схемы

        Returns:
            dict: Имя части -> формула; предложение есть их конъюнкция
        """
        pass

    def validate(self, inst: PredicateInstance) -> None:
        if inst.schema != self.kind:
            raise UnsupportedSchemaError(f"Компилятор {self.kind} получил экземпляр {inst.schema}")
        if inst.n < 1:
            raise UnsupportedSchemaError(f"Размерность n={inst.n} должна быть >= 1")
        if inst.r not in (0, 1):
            raise UnsupportedSchemaError(f"Гладкость r={inst.r} не поддерживается (только 0 и 1)")
        inst.check_nash()

    def compile(self, inst: PredicateInstance) -> Formula:
        parts = list(self.clauses(inst).values())
        return parts[0] if len(parts) == 1 else And(tuple(parts))
