"""euclidkit: a verifiable Euclidean geometry kernel.

Ruler-and-compass construction VM with the classical macro library, plane and
solid mensuration by exact formulas, commensurability analysis via continued
fractions, and the inscribed-polygon-doubling pi engine.
"""

from . import construct, measure, mensura, plane, scalar, solids
from .errors import (
    AssertionFailedError,
    ConstructionError,
    DegenerateGeometryWarning,
    DegenerateInputError,
    DomainError,
    GeometryError,
    InfeasibleConstructionError,
    MacroPostconditionError,
    NotConstructibleError,
    ScriptError,
    UnresolvedNameError,
)

__version__ = "0.1.0"

__all__ = [
    "AssertionFailedError", "ConstructionError", "DegenerateGeometryWarning",
    "DegenerateInputError", "DomainError", "GeometryError",
    "InfeasibleConstructionError", "MacroPostconditionError",
    "NotConstructibleError", "ScriptError", "UnresolvedNameError",
    "construct", "measure", "mensura", "plane", "scalar", "solids",
]
