"""Exact verification of heterotic supersymmetric solutions on nilpotent Lie algebras.

Everything is computed in a left-invariant orthonormal coframe with exact
rational polynomial arithmetic; no floating point is used anywhere.
"""

from .scalars import ONE, ZERO, Scalar, symbols
from .exterior import KForm, hodge_star, interior, wedge
from .lie import (
    ClosureError,
    Connection,
    LieAlgebraModel,
    check_closure,
    curvature,
    levi_civita,
    pontrjagin_q1,
    with_torsion,
)
from .gstruct import GStructure, classify, is_instanton, standard_g2, standard_spin7, torsion_3form
from .verifier import VerificationReport, anomaly_solve, verify_model
from .catalog import CATALOG
from .modelfile import ModelFile, parse_model

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "ClosureError",
    "Connection",
    "GStructure",
    "KForm",
    "LieAlgebraModel",
    "ModelFile",
    "ONE",
    "Scalar",
    "VerificationReport",
    "ZERO",
    "anomaly_solve",
    "check_closure",
    "classify",
    "curvature",
    "hodge_star",
    "interior",
    "is_instanton",
    "levi_civita",
    "parse_model",
    "pontrjagin_q1",
    "standard_g2",
    "standard_spin7",
    "symbols",
    "torsion_3form",
    "verify_model",
    "wedge",
    "with_torsion",
]
