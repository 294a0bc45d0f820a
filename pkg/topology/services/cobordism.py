"""
Проверка тройки кобордизма (M; M0, M1) для кривых в R^2.
"""

import logging

from cad.services import joint_tree, set_cells
from semialgebraic.services import SaDescription

from ..exceptions import PreconditionError
from ..models import VerdictKind
from .checks import compactness_check
from .manifold import classify
from .verdicts import Verdict, accept, reject

logger = logging.getLogger(__name__)


def check_cobordism(m: SaDescription, m0: SaDescription, m1: SaDescription) -> Verdict:
    """Край M совпадает с M0 ∪ M1, а M0 и M1 не пересекаются.

    Пустые M0 и M1 допускаются: пересечение тогда пусто.

    Raises:
        PreconditionError: Множества не в R^2 или M не компактная кривая
    """
    if {m.ambient, m0.ambient, m1.ambient} != {2}:
        raise PreconditionError("M, M0 и M1 должны лежать в R^2")
    if not compactness_check(m).compact:
        raise PreconditionError(f"{m.name} не компактно")

    tree = joint_tree(m, m0, m1)
    verdict, boundary = classify(tree, m, 1)
    if verdict.kind == VerdictKind.UNSUPPORTED:
        raise PreconditionError(f"{m.name} не кривая: {verdict.reason}")
    if not verdict.ok:
        return reject(f"M не многообразие: {verdict.reason}", verdict.witness)

    leaves = tree.leaves()
    number = {id(cell): k for k, cell in enumerate(leaves)}
    first = {number[id(cell)] for cell in set_cells(tree, m0)}
    second = {number[id(cell)] for cell in set_cells(tree, m1)}
    common = first & second
    if common:
        return reject("M0 и M1 пересекаются", leaves[min(common)].sample)
    mismatch = boundary ^ (first | second)
    if mismatch:
        logger.info(f"[TopologyService] Край {m.name} не совпадает с M0 ∪ M1")
        return reject("край M не равен M0 ∪ M1", leaves[min(mismatch)].sample)
    return accept()
