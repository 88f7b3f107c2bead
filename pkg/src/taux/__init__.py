"""taux: exact computations in tau-tilting theory for small algebras."""

from .catalog import IndecCatalog, knit
from .fileio import bundled, load_algebra
from .rigidity import SignedObject, is_support_tau_rigid, mutate, sttilt_enumerate
from .sequences import E, F, phi, psi, mutate_seq, transpose

__all__ = [
    "E",
    "F",
    "IndecCatalog",
    "SignedObject",
    "bundled",
    "is_support_tau_rigid",
    "knit",
    "load_algebra",
    "mutate",
    "mutate_seq",
    "phi",
    "psi",
    "sttilt_enumerate",
    "transpose",
]

__version__ = "0.1.0"
