"""
Service layer package.

Pure building blocks used by the workflows: quiver operations, phase
arithmetic, the coefficient field, the truncated series algebra, the
representation oracle, and file I/O.
"""

from app.services.central_charge import evaluate, phase_cmp
from app.services.file_io import load_charge, load_quiver
from app.services.laurent import RatFunc
from app.services.qseries import QSeries, qdilog, qs_eq, qs_inv, qs_mul
from app.services.quiver_ops import build_quiver, frame, mutate

__all__ = [
    "QSeries",
    "RatFunc",
    "build_quiver",
    "evaluate",
    "frame",
    "load_charge",
    "load_quiver",
    "mutate",
    "phase_cmp",
    "qdilog",
    "qs_eq",
    "qs_inv",
    "qs_mul",
]
