"""
Centralized logging configuration for the DT engine.

Design goals:
- Structured JSON logs, one object per line
- Run-scoped context (run id, quiver fingerprint, stage) for reconstructing
  long sweeps after the fact
- Logs on stderr; stdout is reserved for command results
"""

from __future__ import annotations

import json
import logging
import os
import sys
import uuid
from contextvars import ContextVar
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from app.utils.config import load_config

# ---------------------------------------------------------------------
# Context variables (run scoped)
# ---------------------------------------------------------------------

run_id_ctx: ContextVar[Optional[str]] = ContextVar("run_id", default=None)
quiver_ctx: ContextVar[Optional[str]] = ContextVar("quiver", default=None)
stage_ctx: ContextVar[Optional[str]] = ContextVar("stage", default=None)


# ---------------------------------------------------------------------
# Helpers to set / get context
# ---------------------------------------------------------------------

def set_run_id(run_id: Optional[str] = None) -> str:
    rid = run_id or uuid.uuid4().hex[:12]
    run_id_ctx.set(rid)
    return rid


def set_quiver(fingerprint: Optional[str]) -> None:
    quiver_ctx.set(fingerprint)


def set_stage(stage: Optional[str]) -> None:
    stage_ctx.set(stage)


def _get_context() -> Dict[str, Optional[str]]:
    return {
        "run_id": run_id_ctx.get(),
        "quiver": quiver_ctx.get(),
        "stage": stage_ctx.get(),
    }


# ---------------------------------------------------------------------
# JSON Log Formatter
# ---------------------------------------------------------------------

class JsonLogFormatter(logging.Formatter):
    """
    Structured JSON formatter with run metadata.
    """

    def format(self, record: logging.LogRecord) -> str:
        base: Dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="milliseconds"),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        base.update({k: v for k, v in _get_context().items() if v})

        if record.exc_info:
            base["exception"] = self.formatException(record.exc_info)

        if hasattr(record, "extra_fields"):
            base.update(record.extra_fields)

        return _to_json(base)


def _to_json(payload: Dict[str, Any]) -> str:
    try:
        return json.dumps(payload, default=str)
    except Exception:
        return str(payload)


# ---------------------------------------------------------------------
# Logger Factory
# ---------------------------------------------------------------------

def get_logger(name: str) -> logging.Logger:
    """
    Create or retrieve a configured logger.
    """

    logger = logging.getLogger(name)

    if logger.handlers:
        return logger

    # Logger must stay usable when the environment holds bad config values;
    # the CLI reports those separately.
    try:
        log_level = load_config().log_level.upper()
    except Exception:
        log_level = os.getenv("LOG_LEVEL", "WARNING").upper()

    logger.setLevel(log_level)
    logger.propagate = False

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JsonLogFormatter())

    logger.addHandler(handler)

    return logger


def set_level(level: str) -> None:
    """
    Apply a level to every logger created through get_logger.
    """
    for name in list(logging.root.manager.loggerDict):
        if name == "app" or name.startswith("app."):
            logging.getLogger(name).setLevel(level.upper())


# ---------------------------------------------------------------------
# Structured logging helpers
# ---------------------------------------------------------------------

def log_event(
    logger: logging.Logger,
    message: str,
    *,
    level: int = logging.INFO,
    extra: Optional[Dict[str, Any]] = None,
) -> None:
    """
    Log a structured event with JSON-safe extra fields.
    """

    logger.log(
        level,
        message,
        extra={"extra_fields": _jsonable(extra or {})},
    )


def _jsonable(data: Dict[str, Any]) -> Dict[str, Any]:
    """
    Tuples become lists and Fractions become "p/q" strings so log lines stay
    parseable.
    """
    out: Dict[str, Any] = {}
    for key, value in data.items():
        if isinstance(value, tuple):
            out[key] = [_scalar(v) for v in value]
        elif isinstance(value, list):
            out[key] = [list(v) if isinstance(v, tuple) else _scalar(v) for v in value]
        else:
            out[key] = _scalar(value)
    return out


def _scalar(value: Any) -> Any:
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)
