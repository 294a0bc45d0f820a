"""
Поиск последовательности стягиваний K ↘ Y.

Поиск в глубину по свободным граням в лексикографическом порядке с
запоминанием посещённых комплексов. Бюджет ограничивает число раскрытых
состояний. Расширения в поиске не используются.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from django.conf import settings

from ..exceptions import SubcomplexError
from ..models import SearchStatus
from .complex import SimplicialComplex, free_faces
from .steps import CollapseStep, apply_collapse, collapse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchResult:
    """Итог поиска.

    Attributes:
        status: found, exhausted_budget или exhausted_complete
        steps: Найденная последовательность стягиваний
        explored: Число раскрытых состояний
    """

    status: SearchStatus
    steps: tuple[CollapseStep, ...] = ()
    explored: int = 0

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND


class VisitedSet:
    """Общее для потоков множество посещённых комплексов и счётчик бюджета."""

    def __init__(self, budget: int):
        self.budget = budget
        self.explored = 0
        self._seen: set[tuple] = set()
        self._lock = threading.Lock()

    def claim(self, key: tuple) -> bool | None:
        """Атомарно отмечает состояние.

        Returns:
            True, если состояние новое и раскрыто; False, если уже посещено;
            None, если бюджет исчерпан
        """
        with self._lock:
            if key in self._seen:
                return False
            if self.explored >= self.budget:
                return None
            self._seen.add(key)
            self.explored += 1
            return True


@dataclass
class _Branch:
    steps: tuple[CollapseStep, ...] | None = None
    out_of_budget: bool = False


def _moves(k: SimplicialComplex, target: SimplicialComplex) -> list[CollapseStep]:
    return [
        collapse(sigma, tau)
        for sigma, tau in free_faces(k)
        if sigma not in target and tau not in target
    ]


def _dfs(
    start: SimplicialComplex,
    prefix: tuple[CollapseStep, ...],
    target: SimplicialComplex,
    visited: VisitedSet,
    stop: threading.Event | None = None,
) -> _Branch:
    branch = _Branch()
    stack = [(start, prefix)]
    while stack:
        if stop is not None and stop.is_set():
            return branch
        k, steps = stack.pop()
        claimed = visited.claim(k.key)
        if claimed is None:
            branch.out_of_budget = True
            return branch
        if not claimed:
            continue
        if k == target:
            branch.steps = steps
            if stop is not None:
                stop.set()
            return branch
        moves = _moves(k, target)
        for step in reversed(moves):
            stack.append((apply_collapse(k, step), steps + (step,)))
    return branch


def collapse_search(
    k: SimplicialComplex,
    target: SimplicialComplex,
    budget: int | None = None,
    threads: int | None = None,
) -> SearchResult:
    """Ищет последовательность элементарных стягиваний K ↘ target, не трогая target.

    Args:
        k: Исходный комплекс
        target: Подкомплекс, к которому стягиваем
        budget: Предел раскрытых состояний, по умолчанию settings.RCFW_SEARCH_BUDGET
        threads: Число потоков для поддеревьев корня, по умолчанию settings.RCFW_THREADS

    Raises:
        SubcomplexError: target не подкомплекс K
    """
    if not target.is_subcomplex_of(k) or not target.is_face_closed():
        raise SubcomplexError("Целевой комплекс не является подкомплексом исходного")
    budget = budget if budget is not None else getattr(settings, "RCFW_SEARCH_BUDGET", 100000)
    threads = threads if threads is not None else getattr(settings, "RCFW_THREADS", 1)
    visited = VisitedSet(budget)

    moves = _moves(k, target)
    if threads <= 1 or len(moves) <= 1 or k == target:
        branches = [_dfs(k, (), target, visited)]
    else:
        visited.claim(k.key)
        stop = threading.Event()
        starts = [(apply_collapse(k, step), (step,)) for step in moves]
        with ThreadPoolExecutor(max_workers=threads) as executor:
            branches = list(
                executor.map(lambda item: _dfs(item[0], item[1], target, visited, stop), starts)
            )

    found = next((b.steps for b in branches if b.steps is not None), None)
    if found is not None:
        status = SearchStatus.FOUND
    elif any(b.out_of_budget for b in branches):
        status = SearchStatus.EXHAUSTED_BUDGET
    else:
        status = SearchStatus.EXHAUSTED_COMPLETE
    logger.info(f"[CollapseService] Поиск: {status}, раскрыто {visited.explored} состояний")
    return SearchResult(status, found or (), visited.explored)
