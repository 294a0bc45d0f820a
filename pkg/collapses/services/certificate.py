"""
Сертификаты s-гомотопии относительно фиксированного подкомплекса.

Формат файла:

    base abc
    fixed a
    target a
    C ab abc
    E d ad

Заголовки base, fixed и target необязательны; пустой fixed задаёт пустой
подкомплекс, без target итоговый комплекс не сравнивается.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from ..exceptions import ComplexSyntaxError, InvalidStepError
from ..models import StepKind
from .complex import SimplicialComplex, format_complex, parse_simplex
from .steps import CollapseStep, apply_step

logger = logging.getLogger(__name__)

_HEADERS = ("base", "fixed", "target")


@dataclass(frozen=True)
class HomotopyCertificate:
    base: SimplicialComplex
    steps: tuple[CollapseStep, ...]
    fixed: SimplicialComplex = field(default_factory=SimplicialComplex.empty)
    target: Optional[SimplicialComplex] = None


@dataclass(frozen=True)
class CertificateVerdict:
    """Итог проверки: index указывает на первый неверный шаг.

    index равен None, если сертификат принят или дефект не связан с шагом,
    и числу шагов, если не совпал итоговый комплекс.
    """

    accepted: bool
    index: Optional[int] = None
    reason: str = ""

    def __str__(self) -> str:
        if self.accepted:
            return "accept"
        where = "" if self.index is None else f" step={self.index}"
        return f"reject{where} reason={self.reason}"


def parse_certificate(text: str, base: Optional[SimplicialComplex] = None) -> HomotopyCertificate:
    """Разбирает сертификат.

    Args:
        text: Содержимое файла сертификата
        base: Исходный комплекс, если в файле нет заголовка base

    Raises:
        ComplexSyntaxError: Неизвестная строка, неполный шаг или нет исходного комплекса
    """
    headers: dict[str, SimplicialComplex] = {}
    steps = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        head, rest = tokens[0], tokens[1:]
        if head in _HEADERS:
            headers[head] = SimplicialComplex.from_facets(parse_simplex(t, number) for t in rest)
        elif head in StepKind.values:
            if len(rest) != 2:
                raise ComplexSyntaxError("Шаг записывается как 'C sigma tau' или 'E sigma tau'", number, line)
            sigma, tau = (parse_simplex(t, number) for t in rest)
            steps.append(CollapseStep(StepKind(head), sigma, tau))
        else:
            raise ComplexSyntaxError(f"Неизвестная строка сертификата: {head!r}", number, head)
    base = headers.get("base", base)
    if base is None:
        raise ComplexSyntaxError("Не задан исходный комплекс (строка base)")
    return HomotopyCertificate(
        base, tuple(steps), headers.get("fixed", SimplicialComplex.empty()), headers.get("target")
    )


def format_certificate(cert: HomotopyCertificate) -> str:
    lines = [f"base {format_complex(cert.base)}"]
    if len(cert.fixed):
        lines.append(f"fixed {format_complex(cert.fixed)}")
    if cert.target is not None:
        lines.append(f"target {format_complex(cert.target)}".rstrip())
    lines.extend(str(step) for step in cert.steps)
    return "\n".join(lines) + "\n"


def verify_certificate(cert: HomotopyCertificate) -> CertificateVerdict:
    """Переигрывает шаги, проверяя их применимость и неизменность fixed."""
    if not cert.fixed.is_subcomplex_of(cert.base):
        return CertificateVerdict(False, None, "fixed не подкомплекс base")
    k = cert.base
    for index, step in enumerate(cert.steps):
        if step.kind == StepKind.COLLAPSE and (step.sigma in cert.fixed or step.tau in cert.fixed):
            return CertificateVerdict(False, index, "шаг удаляет симплекс фиксированного подкомплекса")
        try:
            k = apply_step(k, step)
        except InvalidStepError as exc:
            logger.debug(f"[CollapseService] Шаг {index} отклонён: {exc}")
            return CertificateVerdict(False, index, str(exc))
    if cert.target is not None and k != cert.target:
        return CertificateVerdict(False, len(cert.steps), "итоговый комплекс не совпадает с target")
    return CertificateVerdict(True)
