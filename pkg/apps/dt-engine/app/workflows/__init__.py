"""
Workflow layer: the mutation method, DT assembly and seeded experiments.
"""

from app.workflows.dt_invariants import check_independence, dt_invariant
from app.workflows.green_engine import enumerate_mgs, run_mutation_method

__all__ = [
    "check_independence",
    "dt_invariant",
    "enumerate_mgs",
    "run_mutation_method",
]
