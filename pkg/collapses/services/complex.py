"""
Конечные симплициальные комплексы.

Симплекс хранится как frozenset меток вершин. В записи симплекса
однобуквенные метки пишутся слитно (abc), многобуквенные через запятую
(v1,v2,v3), одиночная многобуквенная вершина с запятой в конце (v1,).
Комплекс задаётся списком граней через пробелы и переводы
строк; текст после # игнорируется.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from ..exceptions import ComplexSyntaxError

logger = logging.getLogger(__name__)

Simplex = frozenset[str]


def simplex_key(s: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    """Ключ упорядочения: размерность, затем отсортированные метки."""
    labels = tuple(sorted(s))
    return len(labels), labels


def format_simplex(s: Iterable[str]) -> str:
    labels = sorted(s)
    if all(len(label) == 1 for label in labels):
        return "".join(labels)
    if len(labels) == 1:
        return labels[0] + ","
    return ",".join(labels)


def parse_simplex(token: str, line: int = 0) -> Simplex:
    """Разбирает запись симплекса.

    Raises:
        ComplexSyntaxError: Пустой симплекс, недопустимая метка или повтор вершины
    """
    labels = token.split(",") if "," in token else list(token)
    if len(labels) == 2 and labels[1] == "":
        labels = labels[:1]
    if not labels or any(not label for label in labels):
        raise ComplexSyntaxError("Пустая вершина или пустой симплекс", line, token)
    for label in labels:
        if not label.isalnum():
            raise ComplexSyntaxError(f"Недопустимая метка вершины {label!r}", line, token)
    if len(set(labels)) != len(labels):
        raise ComplexSyntaxError("Вершина повторяется в симплексе", line, token)
    return frozenset(labels)


def faces_of(s: Simplex) -> set[Simplex]:
    """Все непустые грани симплекса, включая его самого."""
    labels = sorted(s)
    return {
        frozenset(c) for k in range(1, len(labels) + 1) for c in itertools.combinations(labels, k)
    }


def boundary_of(s: Simplex) -> list[Simplex]:
    """Гиперграни симплекса (коразмерность 1)."""
    if len(s) < 2:
        return []
    return sorted((s - {v} for v in s), key=simplex_key)


@dataclass(frozen=True)
class SimplicialComplex:
    """Замкнутое относительно граней множество симплексов."""

    simplices: frozenset[Simplex]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        closure: set[Simplex] = set()
        for facet in facets:
            closure |= faces_of(frozenset(facet))
        return cls(frozenset(closure))

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(frozenset())

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    @cached_property
    def vertices(self) -> list[str]:
        return sorted({v for s in self.simplices for v in s})

    @cached_property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @cached_property
    def facets(self) -> list[Simplex]:
        """Максимальные симплексы в лексикографическом порядке."""
        covered = {face for s in self.simplices for face in boundary_of(s)}
        return sorted(self.simplices - covered, key=simplex_key)

    @cached_property
    def key(self) -> tuple:
        """Каноническая форма для мемоизации: отсортированные грани."""
        return tuple(simplex_key(s)[1] for s in self.facets)

    @cached_property
    def f_vector(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return counts

    def is_face_closed(self) -> bool:
        return all(face in self.simplices for s in self.simplices for face in boundary_of(s))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def cofaces(self, s: Simplex) -> list[Simplex]:
        """Симплексы комплекса, содержащие s как гипергрань."""
        return sorted(
            (s | {v} for v in self.vertices if v not in s and (s | {v}) in self.simplices),
            key=simplex_key,
        )

    def without(self, *removed: Simplex) -> "SimplicialComplex":
        return SimplicialComplex(self.simplices - set(removed))

    def with_(self, *added: Simplex) -> "SimplicialComplex":
        return SimplicialComplex(self.simplices | set(added))


def parse_complex(text: str) -> SimplicialComplex:
    """Замыкание по граням перечисленных симплексов.

    Повторные грани допускаются.

    Raises:
        ComplexSyntaxError: Пустой симплекс или повтор вершины внутри грани
    """
    facets = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        facets.extend(parse_simplex(token, number) for token in line.split())
    result = SimplicialComplex.from_facets(facets)
    logger.debug(f"[CollapseService] Комплекс: {len(result.vertices)} вершин, {len(result)} симплексов")
    return result


def format_complex(k: SimplicialComplex) -> str:
    return " ".join(format_simplex(s) for s in k.facets)


def euler_characteristic(k: SimplicialComplex) -> int:
    """Знакопеременная сумма чисел симплексов по размерностям."""
    return sum((-1) ** d * count for d, count in enumerate(k.f_vector))


def free_faces(k: SimplicialComplex) -> list[tuple[Simplex, Simplex]]:
    """Пары (σ, τ), где τ единственный симплекс, собственно содержащий σ.

    Единственная гиперкограница влечёт единственность собственной кограницы:
    кограница коразмерности 2 и выше дала бы по крайней мере две гиперкограницы.
    """
    cofaces: dict[Simplex, list[Simplex]] = {}
    for tau in k.simplices:
        for sigma in boundary_of(tau):
            cofaces.setdefault(sigma, []).append(tau)
    pairs = [(sigma, taus[0]) for sigma, taus in cofaces.items() if len(taus) == 1]
    return sorted(pairs, key=lambda pair: (simplex_key(pair[0]), simplex_key(pair[1])))
