"""
Quiver / charge file loader and canonical writers.

Reads quivers and central charges from JSON or YAML files (schema-validated
before anything else sees them) and renders runs, series and reports in
the stable JSON formats. Sample files ship in `data/sample`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, Type

from pydantic import BaseModel, ValidationError

from app.models.charge import CentralCharge, ChargeError, RationalComplex, to_rational
from app.models.quiver import Matrix, Quiver
from app.models.run import GreenRun
from app.models.schemas import (
    ChargeFileSchema,
    ChargeResultSchema,
    CheckReportSchema,
    ComparisonSchema,
    QuiverFileSchema,
    RunTranscriptSchema,
    SeriesFileSchema,
    SeriesTermSchema,
    StepSchema,
)
from app.services.laurent import AlgebraError, parse_poly
from app.services.qseries import QSeries, series_from_terms, sorted_terms
from app.services.quiver_ops import build_quiver, principal_part
from app.utils.config import load_config
from app.utils.logger import get_logger, log_event

logger = get_logger(__name__)


class FileFormatError(ValueError):
    pass


# ---------------------------------------------------------------------
# Raw payloads
# ---------------------------------------------------------------------

def read_payload(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise FileFormatError(f"Missing file: {path}")

    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"Cannot read {path}: {exc}") from exc

    if path.suffix.lower() in {".yaml", ".yml"}:
        try:
            import yaml
        except Exception as exc:
            raise FileFormatError(
                "PyYAML is required to load YAML input files."
            ) from exc
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise FileFormatError(f"Invalid YAML in {path}: {exc}") from exc
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"Invalid JSON in {path}: {exc}") from exc

    if not isinstance(data, dict):
        raise FileFormatError(f"File must contain a mapping object: {path}")
    return data


def _validate(
    schema: Type[BaseModel],
    payload: Dict[str, Any],
    *,
    what: str,
    strict: Optional[bool],
) -> Any:
    if strict is None:
        strict = load_config().features.strict_validation
    if strict:
        unknown = sorted(set(payload) - set(schema.__fields__))
        if unknown:
            raise FileFormatError(f"{what}: unknown keys {unknown}")
    try:
        return schema.parse_obj(payload)
    except ValidationError as exc:
        raise FileFormatError(f"{what}: {exc}") from exc


# ---------------------------------------------------------------------
# Quivers
# ---------------------------------------------------------------------

def parse_quiver(payload: Dict[str, Any], *, strict: Optional[bool] = None) -> Quiver:
    record = _validate(QuiverFileSchema, payload, what="quiver", strict=strict)
    return build_quiver(record.vertices, record.arrows)


def quiver_to_payload(quiver: Quiver) -> Dict[str, Any]:
    return {
        "vertices": quiver.n,
        "arrows": [[i, j, m] for i, j, m in quiver.arrows()],
    }


def dump_quiver(quiver: Quiver) -> str:
    """
    Canonical text: keys sorted, arrows sorted by (source, target),
    multiplicity always written.
    """
    return json.dumps(quiver_to_payload(quiver), sort_keys=True)


def load_quiver(path: Path) -> Quiver:
    quiver = parse_quiver(read_payload(path))
    log_event(
        logger,
        "Quiver loaded",
        extra={"path": str(path), "vertices": quiver.n, "arrows": len(quiver.arrows())},
    )
    return quiver


# ---------------------------------------------------------------------
# Central charges
# ---------------------------------------------------------------------

def parse_charge(payload: Dict[str, Any], *, strict: Optional[bool] = None) -> CentralCharge:
    record = _validate(ChargeFileSchema, payload, what="charge", strict=strict)
    values = []
    for index, (re, im) in enumerate(record.z, start=1):
        try:
            values.append(RationalComplex(to_rational(re), to_rational(im)))
        except ChargeError as exc:
            raise FileFormatError(f"charge component z_{index}: {exc}") from exc
    return CentralCharge(tuple(values))


def _rational_text(value) -> Any:
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def charge_to_payload(charge: CentralCharge) -> Dict[str, Any]:
    return {"z": [[_rational_text(w.re), _rational_text(w.im)] for w in charge.z]}


def load_charge(path: Path) -> CentralCharge:
    return parse_charge(read_payload(path))


# ---------------------------------------------------------------------
# Sample data
# ---------------------------------------------------------------------

def resolve_sample(name: str) -> Path:
    """
    Locate a packaged sample file by name ("a2.json"); plain paths pass
    through unchanged.
    """
    direct = Path(name)
    if direct.exists():
        return direct

    sample_dir = load_config().data.sample_dir
    candidates = [
        Path(sample_dir) / name,
        Path(__file__).resolve().parents[1] / sample_dir / name,
        Path(__file__).resolve().parents[4] / sample_dir / name,
    ]
    for candidate in candidates:
        if candidate.exists():
            return candidate
    return direct


# ---------------------------------------------------------------------
# Outputs
# ---------------------------------------------------------------------

def run_to_schema(run: GreenRun, permutation: Optional[Sequence[int]]) -> RunTranscriptSchema:
    return RunTranscriptSchema(
        status=run.status.value,
        steps=[
            StepSchema(vertex=s.vertex, class_=list(s.stable_class), phase=s.phase_display)
            for s in run.steps
        ],
        permutation=list(permutation) if permutation is not None else None,
        final_quiver=QuiverFileSchema(**quiver_to_payload(principal_part(run.final))),
    )


def run_to_payload(run: GreenRun, permutation: Optional[Sequence[int]]) -> Dict[str, Any]:
    payload = run_to_schema(run, permutation).dict(by_alias=True)
    if payload["permutation"] is None:
        del payload["permutation"]
    return payload


def series_to_payload(series: QSeries) -> Dict[str, Any]:
    schema = SeriesFileSchema(
        rank=series.rank,
        degree=series.degree,
        terms=[
            SeriesTermSchema(exp=list(exp), num=coeff.num.to_text(), den=coeff.den.to_text())
            for exp, coeff in sorted_terms(series)
        ],
    )
    return schema.dict()


def series_from_payload(payload: Dict[str, Any], lam: Matrix) -> QSeries:
    """
    Series files do not carry lambda; callers supply it from the quiver.
    """
    record = _validate(SeriesFileSchema, payload, what="series", strict=False)
    try:
        return series_from_terms(
            record.rank,
            record.degree,
            lam,
            ((t.exp, parse_poly(t.num), parse_poly(t.den)) for t in record.terms),
        )
    except AlgebraError as exc:
        raise FileFormatError(f"series: {exc}") from exc


def report_to_payload(report) -> Dict[str, Any]:
    schema = CheckReportSchema(
        results=[
            ChargeResultSchema(charge_index=r.charge_index, status=r.status, length=r.length)
            for r in report.results
        ],
        comparisons=[
            ComparisonSchema(i=c.i, j=c.j, equal=c.equal)
            for c in report.comparisons
        ],
    )
    return schema.dict()


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def sequences_to_payload(sequences: Iterable[Sequence[int]], partial: bool, nodes: int) -> Dict[str, Any]:
    return {
        "sequences": [list(s) for s in sequences],
        "partial": partial,
        "nodes_visited": nodes,
    }
