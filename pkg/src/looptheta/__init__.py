"""Exact-arithmetic tools for residue symplectic forms, metaplectic loop
cocycles, unipotent Weil phases, loop-orbit invariants, and the explicit
quaternionic theta construction on loop SL2."""

from .config import truncation, truncation_depth, set_truncation_depth
from .laurent import (
    LaurentScalar,
    ModuleVector,
    SymplecticSpace,
    project_X,
    project_Y,
    residue,
    residue_form,
)
from .loopgroup import (
    BlockDecomposition,
    LoopMatrix,
    ParabolicSplit,
    UnipotentParams,
    block_decompose,
    decompose_U,
    dual_map,
    exp_block,
    exp_truncated,
    make_unipotent,
)
from . import errors

__version__ = "0.1.0"
