"""
Configuration and sample data verification script.
"""

from __future__ import annotations

from pathlib import Path
import sys

REPO_ROOT = Path(__file__).resolve().parents[2]
ENGINE_ROOT = REPO_ROOT / "apps" / "dt-engine"
if str(ENGINE_ROOT) not in sys.path:
    sys.path.insert(0, str(ENGINE_ROOT))

from app.services.file_io import parse_charge, parse_quiver, read_payload
from app.utils.config import load_config
from app.utils.logger import get_logger, log_event

logger = get_logger(__name__)


def _sample_dir(configured: str) -> Path:
    for candidate in (Path(configured), REPO_ROOT / configured, ENGINE_ROOT / "app" / configured):
        if candidate.is_dir():
            return candidate
    raise RuntimeError(f"Sample directory missing: {configured}")


def main() -> None:
    config = load_config()
    sample_dir = _sample_dir(config.data.sample_dir)

    quivers = charges = 0
    for path in sorted(sample_dir.iterdir()):
        if path.suffix.lower() not in {".json", ".yaml", ".yml"}:
            continue
        payload = read_payload(path)
        if "z" in payload:
            parse_charge(payload, strict=True)
            charges += 1
        else:
            parse_quiver(payload, strict=True)
            quivers += 1

    if not quivers:
        raise RuntimeError(f"No sample quivers found in {sample_dir}")

    log_event(
        logger,
        "Configuration verification successful",
        extra={
            "env": config.env,
            "sample_dir": str(sample_dir),
            "quivers": quivers,
            "charges": charges,
            "degree": config.engine.degree,
            "budget": config.engine.budget,
            "strict_validation": config.features.strict_validation,
        },
    )
    print(f"ok: {quivers} quivers, {charges} charges in {sample_dir}")


if __name__ == "__main__":
    try:
        main()
    except Exception as exc:
        logger.error(str(exc))
        sys.exit(1)
