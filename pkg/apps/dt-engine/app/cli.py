"""
Command-line entry points for the green-sequence / DT engine.

Exit codes:
  0  success
  1  check/sweep: some pair of invariants differs
  2  the central charge is not discrete
  3  step budget or search budget exhausted
  4  invalid input (malformed file, bad vertex, invalid charge)
  5  an engine guard failed (phase order, sign coherence, self-duality)
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from typing import Callable, Dict, List, Optional, Sequence

from app.models.charge import ChargeError
from app.models.quiver import QuiverError
from app.services.central_charge import phase_float, evaluate
from app.services.file_io import (
    FileFormatError,
    charge_to_payload,
    dump_quiver,
    dumps,
    load_charge,
    load_quiver,
    report_to_payload,
    resolve_sample,
    run_to_payload,
    sequences_to_payload,
    series_to_payload,
)
from app.services.laurent import AlgebraError
from app.services.quiver_ops import mutate_sequence
from app.services.rep_oracle import PhaseTie, interval_stables_An
from app.utils.config import AppConfig, load_config
from app.utils.logger import get_logger, log_event, set_level, set_quiver, set_run_id, set_stage
from app.workflows.dt_invariants import (
    IndependenceReport,
    InfiniteSpectrum,
    check_independence,
    dt_invariant,
)
from app.workflows.experiments import charge_sweep
from app.workflows.green_engine import (
    EngineError,
    NondiscreteCharge,
    enumerate_mgs,
    run_mutation_method,
    self_duality_check,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_NONDISCRETE = 2
EXIT_BUDGET = 3
EXIT_INVALID = 4
EXIT_ENGINE = 5

INPUT_ERRORS = (QuiverError, ChargeError, FileFormatError, AlgebraError, ValueError)


def _vertex_list(raw: Sequence[str]) -> List[int]:
    vertices: List[int] = []
    for token in raw:
        for part in token.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                vertices.append(int(part))
            except ValueError as exc:
                raise QuiverError(f"not a vertex label: {part!r}") from exc
    return vertices


def build_parser(config: Optional[AppConfig] = None) -> argparse.ArgumentParser:
    config = config or load_config()
    engine = config.engine

    parser = argparse.ArgumentParser(
        prog="dt-engine",
        description=(
            "Maximal green sequences from the mutation method and refined "
            "DT invariants as ordered quantum dilogarithm products."
        ),
    )
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["critical", "error", "warning", "info", "debug"],
        help="Log level for the JSON logs on stderr (default: LOG_LEVEL or warning).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="Mutate a quiver along a vertex sequence.")
    p.add_argument("quiver", help="Quiver JSON/YAML file or packaged sample name.")
    p.add_argument("vertices", nargs="*", help="1-based vertices, e.g. 1 2 1 or 1,2,1.")

    p = sub.add_parser("run", help="Run the mutation method for one central charge.")
    p.add_argument("quiver")
    p.add_argument("charge")
    p.add_argument("--budget", type=int, default=engine.budget)
    p.add_argument("--json", action="store_true", help="Emit the JSON transcript.")

    p = sub.add_parser("dt", help="Compute the refined DT series for one charge.")
    p.add_argument("quiver")
    p.add_argument("charge")
    p.add_argument("--degree", type=int, default=engine.degree)
    p.add_argument("--budget", type=int, default=engine.budget)

    p = sub.add_parser("check", help="Compare DT series across central charges.")
    p.add_argument("quiver")
    p.add_argument("charges", nargs="+")
    p.add_argument("--degree", type=int, default=engine.degree)
    p.add_argument("--budget", type=int, default=engine.budget)

    p = sub.add_parser("enumerate", help="List maximal green sequences.")
    p.add_argument("quiver")
    p.add_argument("--max-len", type=int, default=engine.max_len)
    p.add_argument("--node-budget", type=int, default=engine.node_budget)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="Charge independence over seeded random charges.")
    p.add_argument("quiver")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=engine.seed)
    p.add_argument("--degree", type=int, default=engine.degree)
    p.add_argument("--budget", type=int, default=engine.budget)

    p = sub.add_parser("oracle", help="Stable intervals of linear A_n for a charge.")
    p.add_argument("n", type=int)
    p.add_argument("charge")

    return parser


# ---------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------

def _load_quiver(name: str):
    quiver = load_quiver(resolve_sample(name))
    set_quiver(dump_quiver(quiver))
    return quiver


def _check_bounds(args: argparse.Namespace) -> None:
    if getattr(args, "budget", 1) < 1:
        raise ValueError("--budget must be >= 1")
    if getattr(args, "degree", 0) < 0:
        raise ValueError("--degree must be >= 0")
    if getattr(args, "max_len", 1) < 1 or getattr(args, "node_budget", 1) < 1:
        raise ValueError("--max-len and --node-budget must be >= 1")


def cmd_mutate(args: argparse.Namespace) -> int:
    quiver = _load_quiver(args.quiver)
    result = mutate_sequence(quiver, _vertex_list(args.vertices))
    print(dump_quiver(result))
    return EXIT_OK


def _print_run_table(run, permutation) -> None:
    print(f"{'step':>4}  {'vertex':>6}  {'class':<20}  phase")
    for index, step in enumerate(run.steps, start=1):
        cls = "(" + ",".join(str(x) for x in step.stable_class) + ")"
        print(f"{index:>4}  {step.vertex:>6}  {cls:<20}  {step.phase_display:.6f}")
    print(f"status: {run.status.value}  length: {run.length}")
    if permutation is not None:
        print("permutation: " + " ".join(str(x) for x in permutation))


def cmd_run(args: argparse.Namespace) -> int:
    quiver = _load_quiver(args.quiver)
    charge = load_charge(resolve_sample(args.charge))
    run = run_mutation_method(quiver, charge, args.budget)
    permutation = self_duality_check(run) if run.is_maximal else None

    if args.json:
        print(dumps(run_to_payload(run, permutation)))
    else:
        _print_run_table(run, permutation)
    return EXIT_OK if run.is_maximal else EXIT_BUDGET


def cmd_dt(args: argparse.Namespace) -> int:
    quiver = _load_quiver(args.quiver)
    charge = load_charge(resolve_sample(args.charge))
    series = dt_invariant(quiver, charge, degree=args.degree, budget=args.budget)
    print(dumps(series_to_payload(series)))
    return EXIT_OK


def _note_if_nothing_compared(report: IndependenceReport) -> None:
    if not report.comparisons:
        ok = sum(1 for r in report.results if r.status == "ok")
        print(
            f"note: nothing compared, {ok} of {len(report.results)} charges produced a series",
            file=sys.stderr,
        )


def cmd_check(args: argparse.Namespace) -> int:
    quiver = _load_quiver(args.quiver)
    charges = [load_charge(resolve_sample(name)) for name in args.charges]
    if len(charges) < 2:
        raise ValueError("check needs at least two charge files")
    report = check_independence(quiver, charges, degree=args.degree, budget=args.budget)
    print(dumps(report_to_payload(report)))
    _note_if_nothing_compared(report)
    return EXIT_OK if report.all_equal else EXIT_UNEQUAL


def cmd_enumerate(args: argparse.Namespace) -> int:
    quiver = _load_quiver(args.quiver)
    result = enumerate_mgs(quiver, args.max_len, args.node_budget)
    if args.json:
        print(dumps(sequences_to_payload(result.sequences, result.partial, result.nodes_visited)))
    else:
        for sequence in result.sequences:
            print(" ".join(str(k) for k in sequence))
        if result.partial:
            print(f"partial: node budget {args.node_budget} exhausted", file=sys.stderr)
    return EXIT_BUDGET if result.partial else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    quiver = _load_quiver(args.quiver)
    rng = random.Random(args.seed)
    charges, report = charge_sweep(
        quiver,
        args.samples,
        rng,
        degree=args.degree,
        budget=args.budget,
    )
    payload = report_to_payload(report)
    payload["seed"] = args.seed
    payload["charges"] = [charge_to_payload(c)["z"] for c in charges]
    print(dumps(payload))
    _note_if_nothing_compared(report)
    return EXIT_OK if report.all_equal else EXIT_UNEQUAL


def cmd_oracle(args: argparse.Namespace) -> int:
    charge = load_charge(resolve_sample(args.charge))
    classes = interval_stables_An(args.n, charge)
    print(dumps({
        "classes": [list(c) for c in classes],
        "phases": [phase_float(evaluate(charge, c)) for c in classes],
    }))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "mutate": cmd_mutate,
    "run": cmd_run,
    "dt": cmd_dt,
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        config = load_config()
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    parser = build_parser(config)
    args = parser.parse_args(argv)
    if args.log_level:
        set_level(args.log_level)

    set_run_id()
    set_stage(args.command)

    try:
        _check_bounds(args)
        return COMMANDS[args.command](args)
    except (NondiscreteCharge, PhaseTie) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONDISCRETE
    except InfiniteSpectrum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except INPUT_ERRORS as exc:
        log_event(logger, "Invalid input", extra={"command": args.command, "detail": str(exc)})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except EngineError as exc:
        log_event(
            logger,
            "Engine guard failed",
            level=logging.ERROR,
            extra={"command": args.command, "error": type(exc).__name__, "detail": str(exc)},
        )
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENGINE


def main() -> None:
    sys.exit(run())
