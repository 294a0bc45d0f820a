"""
Сервисный слой описаний полуалгебраических множеств.
"""

from .description import (
    Complexity,
    SaDescription,
    SignCond,
    cobordism_complexity,
    complexity_of,
    describe,
    embed,
    empty_set,
    intersection,
    member,
    product,
    sign_cond,
    transpose,
    union,
    whole_space,
)
from .dsl import format_description, parse_description, parse_descriptions
from .encoding import (
    ParamPoint,
    decode,
    encode,
    format_param_point,
    monomial_count,
    parse_param_point,
    sign_tuples,
)

# Экспортируем описания, DSL и кодирование для удобного импорта
__all__ = [
    'Complexity',
    'ParamPoint',
    'SaDescription',
    'SignCond',
    'cobordism_complexity',
    'complexity_of',
    'decode',
    'describe',
    'embed',
    'empty_set',
    'encode',
    'format_description',
    'format_param_point',
    'intersection',
    'member',
    'monomial_count',
    'parse_description',
    'parse_descriptions',
    'parse_param_point',
    'product',
    'sign_cond',
    'sign_tuples',
    'transpose',
    'union',
    'whole_space',
]
