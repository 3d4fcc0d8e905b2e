from __future__ import annotations

import random

import pytest

from app.models.charge import CentralCharge
from app.models.quiver import DimensionMismatch
from app.models.run import RunStatus
from app.services.central_charge import (
    PhaseOrder,
    all_roots_charge_An,
    evaluate,
    phase_cmp,
    random_discrete_charge,
    simples_only_charge,
)
from app.services.quiver_ops import (
    build_quiver,
    frame,
    kronecker,
    linear_a,
    mutate_sequence,
    oriented_cycle,
)
from app.services.rep_oracle import interval_classes
from app.workflows.green_engine import (
    NondiscreteCharge,
    NotMaximal,
    enumerate_mgs,
    replay,
    run_mutation_method,
    self_duality_check,
    signed_steps,
    stable_classes,
)

A2_LONG = CentralCharge.of((1, 1), (-1, 1))
A2_SHORT = CentralCharge.of((-1, 1), (1, 1))


def _phases_decrease(run) -> bool:
    values = [evaluate(run.charge, c) for c in stable_classes(run)]
    return all(phase_cmp(a, b) is PhaseOrder.GREATER for a, b in zip(values, values[1:]))


# ---------------------------------------------------------------------
# Mutation method
# ---------------------------------------------------------------------

def test_a2_long_run():
    run = run_mutation_method(linear_a(2), A2_LONG)

    assert run.status is RunStatus.MAXIMAL_REACHED
    assert run.vertices == [2, 1, 2]
    assert stable_classes(run) == [(0, 1), (1, 1), (1, 0)]
    assert self_duality_check(run) == (2, 1)


def test_a2_short_run():
    run = run_mutation_method(linear_a(2), A2_SHORT)

    assert run.vertices == [1, 2]
    assert stable_classes(run) == [(1, 0), (0, 1)]
    assert self_duality_check(run) == (1, 2)


def test_phase_display_matches_classes():
    run = run_mutation_method(linear_a(2), A2_LONG)

    assert [s.phase_display for s in run.steps] == pytest.approx([0.75, 0.5, 0.25])


def test_kronecker_terminating_side():
    run = run_mutation_method(kronecker(), CentralCharge.of((-1, 1), (1, 1)))

    assert run.is_maximal
    assert stable_classes(run) == [(1, 0), (0, 1)]


def test_kronecker_divergent_side_exhausts_budget():
    run = run_mutation_method(kronecker(), CentralCharge.of((1, 1), (-1, 1)), budget=50)

    assert run.status is RunStatus.BUDGET_EXCEEDED
    assert run.length == 50
    assert stable_classes(run)[:5] == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
    assert _phases_decrease(run)


def test_three_cycle_run():
    q = build_quiver(3, [(1, 3), (2, 1), (3, 2)])
    charge = CentralCharge.of((1, 1), (-1, 1), (0, 1))

    run = run_mutation_method(q, charge)

    assert run.vertices == [2, 3, 2, 1, 2]
    assert stable_classes(run) == [(0, 1, 0), (0, 1, 1), (0, 0, 1), (1, 0, 1), (1, 0, 0)]
    assert self_duality_check(run) == (3, 1, 2)


def test_tie_at_the_start_is_nondiscrete():
    with pytest.raises(NondiscreteCharge):
        run_mutation_method(linear_a(2), CentralCharge.of((1, 1), (1, 1)))


def test_single_vertex_run():
    run = run_mutation_method(build_quiver(1, []), CentralCharge.of((0, 1)))

    assert stable_classes(run) == [(1,)]
    assert self_duality_check(run) == (1,)


def test_all_roots_charge_reaches_dynkin_maximum():
    run = run_mutation_method(linear_a(3), all_roots_charge_An(3))

    assert run.length == 6
    assert set(stable_classes(run)) == set(interval_classes(3))
    assert _phases_decrease(run)


def test_simples_only_charge_tilts_once_per_vertex():
    q = build_quiver(4, [(1, 2), (3, 2), (3, 4)])

    run = run_mutation_method(q, simples_only_charge(q))

    assert run.length == 4
    assert sorted(stable_classes(run)) == sorted(
        tuple(1 if i == j else 0 for i in range(4)) for j in range(4)
    )


def test_budget_counts_steps():
    exact = run_mutation_method(linear_a(2), A2_LONG, budget=3)
    short = run_mutation_method(linear_a(2), A2_LONG, budget=2)

    assert exact.is_maximal
    assert short.status is RunStatus.BUDGET_EXCEEDED
    assert short.length == 2


def test_run_rejects_rank_mismatch_and_bad_budget():
    with pytest.raises(DimensionMismatch):
        run_mutation_method(linear_a(3), A2_LONG)
    with pytest.raises(ValueError):
        run_mutation_method(linear_a(2), A2_LONG, budget=0)


def test_self_duality_needs_maximal_run():
    run = run_mutation_method(kronecker(), CentralCharge.of((1, 1), (-1, 1)), budget=5)

    with pytest.raises(NotMaximal):
        self_duality_check(run)


# ---------------------------------------------------------------------
# Arbitrary sequences
# ---------------------------------------------------------------------

def test_replay_matches_framed_mutation():
    q = linear_a(3)

    assert replay(q, [2, 1, 3]) == mutate_sequence(frame(q), [2, 1, 3])


def test_signed_steps_track_red_mutations():
    steps = signed_steps(linear_a(2), [1, 2, 2, 1])

    assert [s.sign for s in steps] == [1, 1, -1, -1]
    assert [s.stable_class for s in steps] == [(1, 0), (0, 1), (0, 1), (1, 0)]


# ---------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------

def test_enumerate_a2():
    result = enumerate_mgs(linear_a(2), max_len=10, node_budget=1000)

    assert result.sequences == ((1, 2), (2, 1, 2))
    assert not result.partial
    assert result.nodes_visited == 6


def test_enumerate_a3_lengths():
    result = enumerate_mgs(linear_a(3), max_len=10, node_budget=10_000)

    assert result.min_length == 3
    assert result.max_length == 6
    assert list(result.sequences) == sorted(result.sequences)


def test_enumerate_kronecker_finds_only_the_short_sequence():
    result = enumerate_mgs(kronecker(), max_len=8, node_budget=10_000)

    assert result.sequences == ((1, 2),)
    assert not result.partial


def test_enumerate_reports_partial_search():
    result = enumerate_mgs(linear_a(2), max_len=10, node_budget=2)

    assert result.partial
    assert result.nodes_visited == 2


@pytest.mark.parametrize("quiver", [linear_a(3), oriented_cycle(3)])
def test_every_run_is_an_enumerated_sequence(quiver):
    listed = set(enumerate_mgs(quiver, max_len=8, node_budget=100_000).sequences)
    rng = random.Random(2024)
    checked = 0
    for _ in range(20):
        try:
            run = run_mutation_method(quiver, random_discrete_charge(quiver.n, rng))
        except NondiscreteCharge:
            continue
        assert run.is_maximal
        assert tuple(run.vertices) in listed
        checked += 1
    assert checked >= 10
