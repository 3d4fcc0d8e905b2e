"""
Utility package for the DT engine.

Only stable, shared utilities are exported here.
Internal helpers should remain module-private.
"""

from app.utils.config import load_config
from app.utils.logger import (
    get_logger,
    log_event,
    set_level,
    set_quiver,
    set_run_id,
    set_stage,
)

__all__ = [
    "load_config",
    "get_logger",
    "log_event",
    "set_level",
    "set_quiver",
    "set_run_id",
    "set_stage",
]
