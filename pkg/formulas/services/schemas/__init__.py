"""
Компиляторы схем предложений.
"""

from .base import NameSupply, PredicateInstance, SchemaCompiler
from .boundary import BoundaryCompiler
from .collapse import CollapseCompiler
from .homeomorphism import HomeomorphismCompiler
from .submanifold import SubmanifoldCompiler

# Экспортируем компиляторы для удобного импорта
__all__ = [
    'NameSupply',
    'PredicateInstance',
    'SchemaCompiler',
    'SubmanifoldCompiler',
    'BoundaryCompiler',
    'HomeomorphismCompiler',
    'CollapseCompiler',
]
