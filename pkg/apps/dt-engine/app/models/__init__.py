"""
Domain models package.

Frozen value types shared by the services and workflows: quivers, central
charges, run transcripts, and the pydantic file schemas.
"""

from app.models.charge import CentralCharge, ChargeError, RationalComplex
from app.models.quiver import ClassVector, FramedQuiver, Quiver, QuiverError
from app.models.run import (
    EnumerationResult,
    GreenRun,
    GreenStep,
    RunStatus,
    SignedStep,
)

__all__ = [
    # Quivers
    "ClassVector",
    "FramedQuiver",
    "Quiver",
    "QuiverError",
    # Charges
    "CentralCharge",
    "ChargeError",
    "RationalComplex",
    # Runs
    "EnumerationResult",
    "GreenRun",
    "GreenStep",
    "RunStatus",
    "SignedStep",
]
