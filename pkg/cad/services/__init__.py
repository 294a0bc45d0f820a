"""
Сервисный слой ядра CAD.
"""

from .adjacency import Adjacency, adjacency, connected_components
from .decision import assign_levels, decide
from .decomposition import MAX_DIMENSION, CadCell, CadTree, check_capacity, decompose
from .projection import level_of, project, projection_levels
from .queries import (
    cells_of,
    dimension,
    is_empty,
    is_subset,
    joint_tree,
    locate,
    set_cells,
    sets_equal,
)

# Экспортируем декомпозицию и запросы для удобного импорта
__all__ = [
    'Adjacency',
    'CadCell',
    'CadTree',
    'MAX_DIMENSION',
    'adjacency',
    'assign_levels',
    'cells_of',
    'check_capacity',
    'connected_components',
    'decide',
    'decompose',
    'dimension',
    'is_empty',
    'is_subset',
    'joint_tree',
    'level_of',
    'locate',
    'project',
    'projection_levels',
    'set_cells',
    'sets_equal',
]
