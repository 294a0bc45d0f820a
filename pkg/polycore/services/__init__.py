"""
Сервисный слой точной полиномиальной арифметики.
"""

from .algebraic import (
    AlgReal,
    as_algreal,
    compare,
    isolate_roots,
    rational_between,
    sign_at,
    sign_at_prefix,
    simplest_between,
    univariate_shadow,
)
from .parser import PolyExpressionParser, Token, TokenStream, parse_poly, tokenize, variable_resolver
from .polynomials import (
    Rat,
    arity,
    coefficients_in,
    dedupe,
    degree_in,
    derivative,
    eval_poly,
    format_poly,
    from_terms,
    irreducible_factors,
    make_poly,
    monomials,
    principal_subresultant_coefficients,
    reducta,
    resultant,
    sign_of,
    terms_of,
    to_rat,
    total_degree,
    variables,
)

# Экспортируем публичный API для удобного импорта
__all__ = [
    'AlgReal',
    'PolyExpressionParser',
    'Rat',
    'Token',
    'TokenStream',
    'arity',
    'as_algreal',
    'coefficients_in',
    'compare',
    'dedupe',
    'degree_in',
    'derivative',
    'eval_poly',
    'format_poly',
    'from_terms',
    'irreducible_factors',
    'isolate_roots',
    'make_poly',
    'monomials',
    'parse_poly',
    'principal_subresultant_coefficients',
    'rational_between',
    'reducta',
    'resultant',
    'sign_at',
    'sign_at_prefix',
    'sign_of',
    'simplest_between',
    'terms_of',
    'to_rat',
    'tokenize',
    'total_degree',
    'univariate_shadow',
    'variable_resolver',
    'variables',
]
