from __future__ import annotations

import random

from app.services.quiver_ops import kronecker, linear_a
from app.workflows.experiments import (
    charge_sweep,
    longest_run,
    random_quiver,
    random_walk_violations,
    sign_coherence_sweep,
    terminating_runs,
)


def test_random_quiver_is_seeded_and_bounded():
    first = random_quiver(4, 2, random.Random(9))
    second = random_quiver(4, 2, random.Random(9))

    assert first == second
    assert all(m <= 2 for _, _, m in first.arrows())


def test_random_walks_stay_sign_coherent():
    rng = random.Random(1)

    assert random_walk_violations(linear_a(4), 12, rng) == []
    assert random_walk_violations(kronecker(3), 12, rng, green_only=False) == []


def test_small_sign_coherence_sweep():
    assert sign_coherence_sweep(20, random.Random(2)) == []


def test_charge_sweep_returns_its_charges():
    charges, report = charge_sweep(linear_a(2), 4, random.Random(4), degree=4, budget=100)

    assert len(charges) == 4
    assert len(report.results) == 4
    assert report.all_equal


def test_terminating_runs_drop_budget_exhausted_runs():
    q = kronecker()
    charges, _ = charge_sweep(q, 6, random.Random(8), degree=2, budget=30)

    runs = terminating_runs(q, charges, 30)

    assert all(run.is_maximal for run in runs)
    assert all(run.length == 2 for run in runs)


def test_longest_run_on_a2():
    run = longest_run(linear_a(2), 40, random.Random(6), 100)

    assert run is not None
    assert run.length == 3
