"""
End-to-end acceptance suites for the green engine and the DT invariants.

Randomized suites are seeded; every run they collect is re-checked for
self-duality, completeness and phase monotonicity at the end of the module.
"""

from __future__ import annotations

import random
from typing import List

import pytest

from app.models.charge import CentralCharge
from app.models.run import GreenRun
from app.services.central_charge import (
    PhaseOrder,
    evaluate,
    phase_cmp,
    random_discrete_charge,
)
from app.services.laurent import ONE_POLY, RatFunc, v_power
from app.services.qseries import dilog_coefficient, qdilog, qs_eq, qs_inv, qs_mul, qs_one
from app.services.quiver_ops import build_quiver, kronecker, lambda_matrix, linear_a
from app.services.rep_oracle import interval_classes, interval_stables_An
from app.workflows.dt_invariants import check_independence, dt_invariant
from app.workflows.experiments import longest_run, random_charges, sign_coherence_sweep, terminating_runs
from app.workflows.green_engine import (
    enumerate_mgs,
    run_mutation_method,
    self_duality_check,
    stable_classes,
)

SEED = 20130101
BUDGET = 1000

A2_LONG = CentralCharge.of((1, 1), (-1, 1))
A2_SHORT = CentralCharge.of((-1, 1), (1, 1))
THREE_CYCLE = build_quiver(3, [(1, 3), (2, 1), (3, 2)])


def _generic_An(n: int, charge: CentralCharge) -> bool:
    values = [evaluate(charge, c) for c in interval_classes(n)]
    return all(
        phase_cmp(a, b) is not PhaseOrder.EQUAL
        for i, a in enumerate(values)
        for b in values[i + 1:]
    )


# ---------------------------------------------------------------------
# A2
# ---------------------------------------------------------------------

def test_a2_green_sequences():
    result = enumerate_mgs(linear_a(2), max_len=10, node_budget=1000)
    assert result.sequences == ((1, 2), (2, 1, 2))

    long = run_mutation_method(linear_a(2), A2_LONG)
    short = run_mutation_method(linear_a(2), A2_SHORT)

    assert long.vertices == [2, 1, 2]
    assert stable_classes(long) == [(0, 1), (1, 1), (1, 0)]
    assert short.vertices == [1, 2]
    assert stable_classes(short) == [(1, 0), (0, 1)]


def test_pentagon():
    long = dt_invariant(linear_a(2), A2_LONG, degree=12)
    short = dt_invariant(linear_a(2), A2_SHORT, degree=12)

    assert qs_eq(long, short)
    expected = RatFunc.of(v_power(3), (v_power(2) - ONE_POLY) * (v_power(2) - ONE_POLY))
    assert long.coefficient((1, 1)) == expected
    assert short.coefficient((1, 1)) == expected


# ---------------------------------------------------------------------
# Charge independence at scale
# ---------------------------------------------------------------------

@pytest.mark.parametrize(
    "quiver",
    [linear_a(3), THREE_CYCLE],
    ids=["linear-a3", "three-cycle"],
)
def test_charge_independence_random_charges(quiver):
    charges = random_charges(quiver.n, 20, random.Random(SEED))

    report = check_independence(quiver, charges, degree=8, budget=BUDGET)

    assert sum(r.status == "ok" for r in report.results) >= 2
    assert report.all_equal


# ---------------------------------------------------------------------
# Kronecker
# ---------------------------------------------------------------------

def test_kronecker_dichotomy():
    finite = run_mutation_method(kronecker(), CentralCharge.of((-1, 1), (1, 1)), budget=50)
    assert finite.is_maximal
    assert stable_classes(finite) == [(1, 0), (0, 1)]

    divergent = run_mutation_method(kronecker(), CentralCharge.of((1, 1), (-1, 1)), budget=50)
    assert not divergent.is_maximal
    assert divergent.length == 50
    assert stable_classes(divergent)[:5] == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
    values = [evaluate(divergent.charge, c) for c in stable_classes(divergent)]
    assert all(phase_cmp(a, b) is PhaseOrder.GREATER for a, b in zip(values, values[1:]))


# ---------------------------------------------------------------------
# Sign coherence
# ---------------------------------------------------------------------

def test_sign_coherence_random_walks():
    violations = sign_coherence_sweep(
        200,
        random.Random(SEED),
        max_vertices=4,
        max_mult=2,
        max_len=12,
    )

    assert violations == []


# ---------------------------------------------------------------------
# Oracle equivalence on linear A_n
# ---------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_oracle_equivalence(n):
    rng = random.Random(SEED + n)
    compared = 0
    for _ in range(50):
        charge = random_discrete_charge(n, rng)
        if not _generic_An(n, charge):
            continue
        run = run_mutation_method(linear_a(n), charge, BUDGET)
        assert run.is_maximal
        assert stable_classes(run) == interval_stables_An(n, charge)
        compared += 1

    assert compared >= 25


# ---------------------------------------------------------------------
# Dynkin maximum
# ---------------------------------------------------------------------

def test_dynkin_maximum_on_a3():
    run = longest_run(linear_a(3), 120, random.Random(SEED), BUDGET)

    assert run is not None
    assert run.length == 6
    assert set(stable_classes(run)) == set(interval_classes(3))


def test_a_n_stables_are_intervals(maximal_runs):
    intervals = {n: set(interval_classes(n)) for n in (2, 3, 4)}
    for run in maximal_runs:
        n = run.quiver.n
        if run.quiver == linear_a(n) and n in intervals:
            assert set(stable_classes(run)) <= intervals[n]


# ---------------------------------------------------------------------
# Checks over every collected run
# ---------------------------------------------------------------------

@pytest.fixture(scope="module")
def maximal_runs() -> List[GreenRun]:
    """
    Terminating runs from every suite above, regenerated from the same seeds.
    """
    runs = [
        run_mutation_method(linear_a(2), A2_LONG),
        run_mutation_method(linear_a(2), A2_SHORT),
        run_mutation_method(kronecker(), CentralCharge.of((-1, 1), (1, 1))),
    ]
    for quiver in (linear_a(3), THREE_CYCLE):
        runs.extend(terminating_runs(quiver, random_charges(quiver.n, 20, random.Random(SEED)), BUDGET))
    for n in (2, 3, 4):
        rng = random.Random(SEED + n)
        charges = [random_discrete_charge(n, rng) for _ in range(50)]
        runs.extend(terminating_runs(linear_a(n), charges, BUDGET))
    return runs


def test_collected_runs_are_self_dual(maximal_runs):
    assert len(maximal_runs) > 50
    for run in maximal_runs:
        perm = self_duality_check(run)
        assert sorted(perm) == list(range(1, run.quiver.n + 1))


def test_collected_runs_are_complete_and_monotone(maximal_runs):
    for run in maximal_runs:
        n = run.quiver.n
        classes = stable_classes(run)
        for i in range(n):
            assert tuple(1 if j == i else 0 for j in range(n)) in classes
        values = [evaluate(run.charge, c) for c in classes]
        assert all(phase_cmp(a, b) is PhaseOrder.GREATER for a, b in zip(values, values[1:]))


# ---------------------------------------------------------------------
# Quantum dilogarithm
# ---------------------------------------------------------------------

def test_quantum_dilogarithm_fidelity():
    assert dilog_coefficient(1) == RatFunc.of(v_power(1), v_power(2) - ONE_POLY)
    assert dilog_coefficient(2) == RatFunc.of(
        v_power(4),
        (v_power(4) - ONE_POLY) * (v_power(4) - v_power(2)),
    )

    lam = lambda_matrix(linear_a(2))
    e = qdilog(2, 8, lam, (1, 1))
    assert qs_eq(qs_mul(e, qs_inv(e)), qs_one(2, 8, lam))
