"""
Сервисный слой приложения формул.
"""

from .ast import (
    FALSE,
    TRUE,
    And,
    Atom,
    Exists,
    ForAll,
    Formula,
    Not,
    Or,
    atoms_of,
    eval_qf,
    free_vars,
    implies,
    is_quantifier_free,
    normalize,
    skeleton,
    substitute,
)
from .infix import parse_infix
from .membership import MAX_SYMBOLIC_P, SymbolicSet, membership, parameter_names
from .schema_service import (
    SchemaService,
    compile_boundary,
    compile_collapse,
    compile_collapse_clauses,
    compile_homeomorphism,
    compile_homeomorphism_clauses,
    compile_submanifold,
)
from .schemas import PredicateInstance
from .sexpr import parse_formula, serialize

# Экспортируем AST, разбор и компиляторы для удобного импорта
__all__ = [
    'Atom',
    'And',
    'Or',
    'Not',
    'Exists',
    'ForAll',
    'Formula',
    'TRUE',
    'FALSE',
    'atoms_of',
    'eval_qf',
    'free_vars',
    'implies',
    'is_quantifier_free',
    'normalize',
    'skeleton',
    'substitute',
    'parse_infix',
    'parse_formula',
    'serialize',
    'MAX_SYMBOLIC_P',
    'SymbolicSet',
    'membership',
    'parameter_names',
    'PredicateInstance',
    'SchemaService',
    'compile_submanifold',
    'compile_boundary',
    'compile_homeomorphism',
    'compile_homeomorphism_clauses',
    'compile_collapse',
    'compile_collapse_clauses',
]
