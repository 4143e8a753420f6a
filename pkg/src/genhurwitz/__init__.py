"""Exact Hurwitz numbers, genus expanded cut-and-join operators and their
generating functions."""

from .characters import char_table, character, check_orthogonality, phi
from .cutjoin import (
    CutJoinOp,
    StructureConstants,
    apply_w,
    build_w,
    class_sum_oracle,
    compose,
    eigen_check,
    normalize,
    schur_z,
    structure_constants,
    verify_composition_law,
)
from .errors import BudgetExceededError, DegreeCapError, DegreeMismatchError, HurwitzError
from .genfun import (
    GenFunSeries,
    MarkedProfile,
    direct_series,
    evolve,
    initial_k0,
    initial_k1,
    pde_residual,
    phi_coefficient,
)
from .hurwitz import (
    CoverSpec,
    GenusResult,
    associativity_check,
    hurwitz_number,
    hurwitz_oracle,
    source_euler,
)
from .laurent import ZLaurent
from .partitions import Partition, aut_factor, class_size, dim_irrep, partitions_of
from .poly import Monomial, PPoly, partial_p, ppoly_add, ppoly_scale

__version__ = "0.1.0"
FORMAT_VERSION = 1

__all__ = [
    "BudgetExceededError",
    "CoverSpec",
    "CutJoinOp",
    "DegreeCapError",
    "DegreeMismatchError",
    "GenFunSeries",
    "GenusResult",
    "HurwitzError",
    "MarkedProfile",
    "Monomial",
    "PPoly",
    "Partition",
    "StructureConstants",
    "ZLaurent",
    "apply_w",
    "associativity_check",
    "aut_factor",
    "build_w",
    "char_table",
    "character",
    "check_orthogonality",
    "class_size",
    "class_sum_oracle",
    "compose",
    "dim_irrep",
    "direct_series",
    "eigen_check",
    "evolve",
    "hurwitz_number",
    "hurwitz_oracle",
    "initial_k0",
    "initial_k1",
    "normalize",
    "partial_p",
    "partitions_of",
    "pde_residual",
    "phi",
    "phi_coefficient",
    "ppoly_add",
    "ppoly_scale",
    "schur_z",
    "source_euler",
    "structure_constants",
    "verify_composition_law",
]
