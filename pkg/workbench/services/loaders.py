"""
Чтение входных файлов и ссылок на множества вида PATH[:NAME].
"""

import logging
from pathlib import Path

from django.conf import settings

from collapses.services import SimplicialComplex, parse_complex
from semialgebraic.services import SaDescription, parse_descriptions

from ..exceptions import UsageError

logger = logging.getLogger(__name__)


def resolve_path(path: str) -> Path:
    """Путь к входному файлу; относительные пути ищутся также в каталоге корпуса.

    Raises:
        UsageError: Файл не найден
    """
    candidate = Path(path)
    if candidate.is_file():
        return candidate
    if not candidate.is_absolute():
        corpus = Path(getattr(settings, "RCFW_CORPUS_DIR", ".")) / candidate
        if corpus.is_file():
            return corpus
    raise UsageError(f"Файл не найден: {path}")


def read_text(path: str) -> str:
    resolved = resolve_path(path)
    logger.debug(f"[Loaders] Читаем {resolved}")
    return resolved.read_text(encoding="utf-8")


def split_reference(reference: str) -> tuple[str, str | None]:
    """Делит ссылку PATH[:NAME] на путь и имя множества."""
    path, sep, name = reference.rpartition(":")
    if not sep or not name or "/" in name:
        return reference, None
    return path, name


def load_sets(reference: str) -> list[SaDescription]:
    """Множества по ссылке: одно именованное или все множества файла по порядку.

    Raises:
        UsageError: Файл не найден, пуст или не содержит множества с таким именем
    """
    path, name = split_reference(reference)
    found = parse_descriptions(read_text(path))
    if not found:
        raise UsageError(f"В файле {path} нет ни одного множества")
    if name is None:
        return list(found.values())
    if name not in found:
        raise UsageError(f"Множество {name!r} не найдено в {path}, есть: {', '.join(found)}")
    return [found[name]]


def load_set(reference: str) -> SaDescription:
    """Первое множество по ссылке."""
    return load_sets(reference)[0]


def collect_sets(references: list[str], count: int) -> list[SaDescription]:
    """Ровно count множеств из списка ссылок (файл без имени даёт все свои множества)."""
    found = [d for reference in references for d in load_sets(reference)]
    if len(found) != count:
        raise UsageError(f"Ожидалось множеств: {count}, получено: {len(found)}")
    return found


def load_complex(path: str) -> SimplicialComplex:
    return parse_complex(read_text(path))
