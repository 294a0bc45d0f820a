"""
Сервисный слой симплициальных стягиваний.
"""

from .certificate import (
    CertificateVerdict,
    HomotopyCertificate,
    format_certificate,
    parse_certificate,
    verify_certificate,
)
from .collar import collar_cone_map
from .complex import (
    Simplex,
    SimplicialComplex,
    euler_characteristic,
    format_complex,
    format_simplex,
    free_faces,
    parse_complex,
    parse_simplex,
)
from .search import SearchResult, VisitedSet, collapse_search
from .steps import (
    CollapseStep,
    apply_collapse,
    apply_expansion,
    apply_step,
    collapse,
    expansion,
)

# Экспортируем комплексы, шаги, поиск и сертификаты для удобного импорта
__all__ = [
    'CertificateVerdict',
    'CollapseStep',
    'HomotopyCertificate',
    'SearchResult',
    'Simplex',
    'SimplicialComplex',
    'VisitedSet',
    'apply_collapse',
    'apply_expansion',
    'apply_step',
    'collapse',
    'collapse_search',
    'collar_cone_map',
    'euler_characteristic',
    'expansion',
    'format_certificate',
    'format_complex',
    'format_simplex',
    'free_faces',
    'parse_certificate',
    'parse_complex',
    'parse_simplex',
    'verify_certificate',
]
