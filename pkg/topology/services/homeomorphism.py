"""
Проверка гомеоморфизма компактных множеств по графику.

При n = 1 все условия решаются точно. Для компактных X, Y непрерывная
биекция с замкнутым графиком есть гомеоморфизм, поэтому ε-δ части
предложения заменяются проверкой замкнутости графика. При n >= 2 доступна
только фальсификация случайными пробами.
"""

import itertools
import logging
import random

from django.conf import settings
from sympy import Rational

from cad.services import decide
from formulas.services import compile_homeomorphism_clauses
from polycore.services import as_algreal
from semialgebraic.services import SaDescription, member

from ..exceptions import PreconditionError
from .checks import compactness_check
from .verdicts import Verdict, accept, reject, unsupported

logger = logging.getLogger(__name__)

# Части предложения, которые решаются точно; порядок задаёт причину отказа
EXACT_CLAUSES = ("graph_in_product", "total", "functional", "injective", "onto")

# Сетка значений образа при фальсификации: k/2 для |k| <= 4
_GRID = tuple(Rational(k, 2) for k in range(-4, 5))


def verify_homeo(x: SaDescription, y: SaDescription, g: SaDescription, seed: int = 0) -> Verdict:
    """Проверяет, что график g задаёт гомеоморфизм X → Y.

    Args:
        x: Компактное множество в R^n
        y: Компактное множество в R^n
        g: График в R^(2n)
        seed: Зерно фальсификации при n >= 2

    Returns:
        Verdict: accept, reject с именем нарушенного условия или unsupported при n >= 2

    Raises:
        PreconditionError: Размерности не согласованы или X, Y не компактны
    """
    n = x.ambient
    if y.ambient != n or g.ambient != 2 * n:
        raise PreconditionError(
            f"Ожидались X, Y в R^n и график в R^2n, получено R^{n}, R^{y.ambient}, R^{g.ambient}"
        )
    if n >= 2:
        return _falsify(x, y, g, seed)

    for name, s in (("X", x), ("Y", y)):
        if not compactness_check(s).compact:
            raise PreconditionError(f"{name} ({s.name}) не компактно")

    clauses = compile_homeomorphism_clauses(x, y, g, n)
    for name in EXACT_CLAUSES:
        if not decide(clauses[name]):
            logger.info(f"[TopologyService] Гомеоморфизм отклонён: {name}")
            return reject(name)
    if not compactness_check(g).closed:
        return reject("graph_closed")
    return accept()


def _falsify(x: SaDescription, y: SaDescription, g: SaDescription, seed: int) -> Verdict:
    """Ищет нарушение на точках графика с рациональными координатами.

    Отказ возможен, принятие нет: без контрпримера возвращается unsupported.
    """
    n = x.ambient
    limit = getattr(settings, "RCFW_FALSIFY_SAMPLES", 200)
    rng = random.Random(seed)
    images: dict[tuple, tuple] = {}
    preimages: dict[tuple, tuple] = {}
    for _ in range(limit):
        den = rng.choice((1, 2))
        source = tuple(Rational(rng.randint(-2 * den, 2 * den), den) for _ in range(n))
        for target in itertools.product(_GRID, repeat=n):
            point = source + target
            if not member(g, point):
                continue
            witness = tuple(as_algreal(v) for v in point)
            if not member(x, source) or not member(y, target):
                return reject("graph_in_product", witness)
            if images.setdefault(source, target) != target:
                return reject("functional", witness)
            if preimages.setdefault(target, source) != source:
                return reject("injective", witness)
    logger.info(f"[TopologyService] Фальсификация n={n}: {limit} проб без контрпримера")
    return unsupported(f"n={n}: точная проверка недоступна, контрпример за {limit} проб не найден")

