"""Exact symbolic toolkit for Severi strata of irreducible quasihomogeneous
plane-curve singularities x^p + y^q.

The pipeline: versal deformation -> symmetric Saito matrix of the
discriminant -> period (intersection) matrix via Laurent residues at
infinity -> skew Gram matrix -> Pfaffian ideals of the Severi strata,
with exact rational arithmetic throughout.
"""

from .groebner import (Budget, BudgetExceeded, Ideal, groebner_basis,
                       ideal_equal, multiplicity)
from .matrixops import det, mat_mul, transpose
from .milnor_algebra import discriminant, dual_basis, saito_matrix
from .periods import choose_truncation, omega_matrix, weight_cap
from .rationals import QQ
from .reports import RunConfig, run, verify_paper
from .resolution import betti, is_cohen_macaulay, minimal_resolution
from .ring import Poly, PolyError, PolyRing, parse, wdeg
from .singularities import CATALOG, CurveSingularity, custom, singularity
from .strata import (PoissonStructure, is_poisson_closed, lie_closure_check,
                     nodal_parameters, pfaffian, poisson_bracket, presentations,
                     rank_at, severi_ideal, skew_gram)

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "CATALOG", "CurveSingularity", "Ideal",
    "Poly", "PolyError", "PolyRing", "PoissonStructure", "QQ", "RunConfig",
    "betti", "choose_truncation", "custom", "det", "discriminant",
    "dual_basis", "groebner_basis", "ideal_equal", "is_cohen_macaulay", "multiplicity",
    "is_poisson_closed", "lie_closure_check", "mat_mul", "minimal_resolution",
    "nodal_parameters", "omega_matrix", "parse", "pfaffian", "poisson_bracket",
    "presentations", "rank_at", "run", "saito_matrix", "severi_ideal",
    "singularity", "skew_gram", "transpose", "verify_paper", "wdeg",
    "weight_cap",
]
