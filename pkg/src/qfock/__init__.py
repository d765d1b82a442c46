"""qfock: exact level-one Fock-space actions on symmetric functions in the
Schur basis, with a brute-force vertex-operator oracle and verification
suites.

The ring (:mod:`qfock.qring`) is Z[v, 1/v] with v**2 = q; partitions and the
straightening normalization live in :mod:`qfock.shapes`; the symmetric
function layer in :mod:`qfock.schur`; the closed-form module actions in
:mod:`qfock.fock`; the first-principles evaluator in :mod:`qfock.oracle`;
relation suites in :mod:`qfock.verify`.  The HTTP service is
``qfock.service.app:app`` and the CLI entry point ``qfock.cli:main``.
"""

__version__ = "0.1.0"

from .fock import FockVector, apply_word, chevalley, k_action, qd_action, x_minus, x_minus_divided, x_plus, x_plus_divided
from .qring import HalfLaurent, RatHalfLaurent, exact_divide, qbinomial, qfactorial, qint
from .schur import (
    PowerPoly,
    SchurPoly,
    deformed_inner,
    hall_inner,
    jacobi_trudi,
    lr_product,
    lr_product_oracle,
    mixed_product,
    pieri_e,
    pieri_h,
    power_to_schur,
    schur_to_power,
    weyl_bialternant,
)
from .shapes import (
    Partition,
    conjugate,
    horizontal_strips,
    is_horizontal_strip,
    is_vertical_strip,
    straighten,
    vertical_strips,
    z_lambda,
)
from .words import parse_word

__all__ = [
    "__version__",
    "FockVector",
    "HalfLaurent",
    "Partition",
    "PowerPoly",
    "RatHalfLaurent",
    "SchurPoly",
    "apply_word",
    "chevalley",
    "conjugate",
    "deformed_inner",
    "exact_divide",
    "hall_inner",
    "horizontal_strips",
    "is_horizontal_strip",
    "is_vertical_strip",
    "jacobi_trudi",
    "k_action",
    "lr_product",
    "lr_product_oracle",
    "mixed_product",
    "parse_word",
    "pieri_e",
    "pieri_h",
    "power_to_schur",
    "qbinomial",
    "qd_action",
    "qfactorial",
    "qint",
    "schur_to_power",
    "straighten",
    "vertical_strips",
    "weyl_bialternant",
    "x_minus",
    "x_minus_divided",
    "x_plus",
    "x_plus_divided",
    "z_lambda",
]
