"""
Сервисный слой топологических проверок.
"""

from .checks import compactness_check, regularity_check
from .cobordism import check_cobordism
from .homeomorphism import EXACT_CLAUSES, verify_homeo
from .manifold import check_curve_manifold, check_line_manifold, classify, compile_verdict
from .verdicts import Compactness, Verdict, format_point

# Экспортируем проверки и вердикты для удобного импорта
__all__ = [
    'Compactness',
    'EXACT_CLAUSES',
    'Verdict',
    'check_cobordism',
    'check_curve_manifold',
    'check_line_manifold',
    'classify',
    'compactness_check',
    'compile_verdict',
    'format_point',
    'regularity_check',
    'verify_homeo',
]
