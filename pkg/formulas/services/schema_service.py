"""
Сервис компиляции геометрических предикатов в предложения первого порядка.
"""

import logging
from dataclasses import replace

from ..exceptions import UnsupportedSchemaError
from ..models import SchemaKind
from .ast import Formula, normalize
from .membership import Binding
from .schemas import (
    BoundaryCompiler,
    CollapseCompiler,
    HomeomorphismCompiler,
    PredicateInstance,
    SchemaCompiler,
    SubmanifoldCompiler,
)

logger = logging.getLogger(__name__)


class SchemaService:
    """Реестр компиляторов схем."""

    COMPILERS: dict[str, SchemaCompiler] = {
        SchemaKind.SUBMANIFOLD: SubmanifoldCompiler(),
        SchemaKind.BOUNDARY: BoundaryCompiler(),
        SchemaKind.HOMEOMORPHISM: HomeomorphismCompiler(),
        SchemaKind.COLLAPSE: CollapseCompiler(),
    }

    @classmethod
    def compiler(cls, kind: str) -> SchemaCompiler:
        if kind not in cls.COMPILERS:
            raise UnsupportedSchemaError(f"Неизвестная схема {kind!r}")
        return cls.COMPILERS[kind]

    @classmethod
    def clauses(cls, inst: PredicateInstance) -> dict[str, Formula]:
        """Именованные части предложения, каждая в нормальной форме имён."""
        parts = cls.compiler(inst.schema).clauses(inst)
        logger.debug(f"[SchemaService] {inst.schema}: части {list(parts)}")
        return {name: normalize(f) for name, f in parts.items()}

    @classmethod
    def compile(cls, inst: PredicateInstance) -> Formula:
        return normalize(cls.compiler(inst.schema).compile(inst))


def compile_submanifold(inst: PredicateInstance) -> Formula:
    """Предложение «S является C^r-подмногообразием размерности m»."""
    if inst.schema != SchemaKind.SUBMANIFOLD:
        raise UnsupportedSchemaError(f"Ожидалась схема submanifold, получено {inst.schema}")
    return SchemaService.compile(inst)


def compile_boundary(inst: PredicateInstance, T: Binding | str | None = None) -> Formula:
    """Предложение «S является C^r-многообразием с краем T».

    Args:
        inst: Экземпляр схемы Boundary
        T: Край; если не задан, берётся из inst.bindings["T"]
    """
    if inst.schema != SchemaKind.BOUNDARY:
        raise UnsupportedSchemaError(f"Ожидалась схема boundary, получено {inst.schema}")
    if T is not None:
        inst = replace(inst, bindings={**inst.bindings, "T": T})
    return SchemaService.compile(inst)


def _homeomorphism(a, b, c, n: int, p: int, q: int) -> PredicateInstance:
    return PredicateInstance(
        SchemaKind.HOMEOMORPHISM, n, bindings={"a": a, "b": b, "c": c}, p=p, q=q
    )


def compile_homeomorphism(a, b, c, n: int, p: int = 1, q: int = 2) -> Formula:
    """Открытая формула λ(a, b, c): график c задаёт гомеоморфизм S_a → S_b."""
    return SchemaService.compile(_homeomorphism(a, b, c, n, p, q))


def compile_homeomorphism_clauses(a, b, c, n: int, p: int = 1, q: int = 2) -> dict[str, Formula]:
    return SchemaService.clauses(_homeomorphism(a, b, c, n, p, q))


def _collapse(x, y, c, n: int, ambient: int | None, p: int, q: int) -> PredicateInstance:
    return PredicateInstance(
        SchemaKind.COLLAPSE, n, bindings={"X": x, "Y": y, "c": c}, p=p, q=q, ambient=ambient
    )


def compile_collapse(
    x, y, c, n: int, ambient: int | None = None, p: int = 1, q: int = 2
) -> Formula:
    """Открытая формула β(X, Y, c) элементарного стягивания по кубу I^n."""
    return SchemaService.compile(_collapse(x, y, c, n, ambient, p, q))


def compile_collapse_clauses(
    x, y, c, n: int, ambient: int | None = None, p: int = 1, q: int = 2
) -> dict[str, Formula]:
    return SchemaService.clauses(_collapse(x, y, c, n, ambient, p, q))
