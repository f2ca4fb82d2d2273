"""Randomized property suites behind ``genent verify``.

Trial ``t`` of a run seeded with ``s`` draws everything from
``default_rng([s, t])``, so any single trial can be replayed on its own and
results do not depend on how trials are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from genent import oracle
from genent.basis import (
    gell_mann_basis,
    lemma_defect,
    random_unit_trace_hermitian,
    spin_half_basis,
    spin_one_basis,
)
from genent.measure import epsilon_subsystem, general_entanglement
from genent.tensor import apply_local_unitaries, haar_random_unitary, random_pure_state

DIM_FAMILIES = [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 3, 2)]
LOCC_FAMILIES = [(2, 2), (2, 3), (2, 2, 2)]
MC_SAMPLES = 10_000
MC_REL_GAP = 0.02


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


@dataclass
class TrialRecord:
    trial: int
    defect: float
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    seed: int
    tolerance: float
    records: list[TrialRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def max_defect(self) -> float:
        return max((r.defect for r in self.records), default=0.0)

    @property
    def failures(self) -> list[TrialRecord]:
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": len(self.records),
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_defect": self.max_defect,
            "failures": len(self.failures),
            "records": [
                {"trial": r.trial, "passed": r.passed, "defect": r.defect, "detail": r.detail}
                for r in self.records
            ],
        }


def _run(name, trials, seed, tol, one_trial: Callable[[int, np.random.Generator], tuple[float, str]]):
    if trials < 1:
        raise ValueError("trials must be >= 1")
    result = SuiteResult(name, seed, tol)
    for t in range(trials):
        defect, detail, *forced = one_trial(t, trial_rng(seed, t))
        ok = forced[0] if forced else defect < tol
        result.records.append(TrialRecord(t, float(defect), bool(ok), detail))
    return result


def lemma_suite(trials: int = 100, seed: int = 0, tol: float = 1e-9) -> SuiteResult:
    """sum_k Tr(sigma A_k)^2 = Tr sigma^2 - 1/D for random unit-trace Hermitian sigma.

    Dimensions cycle through 2..5; the spin bases are checked alongside the
    Gell-Mann ones where they exist.
    """

    def one(t, rng):
        d = 2 + t % 4
        sigma = random_unit_trace_hermitian(d, rng)
        bases = [gell_mann_basis(d)]
        if d == 2:
            bases.append(spin_half_basis())
        elif d == 3:
            bases.append(spin_one_basis())
        return max(lemma_defect(sigma, b) for b in bases), f"D={d}"

    return _run("lemma", trials, seed, tol, one)


def _dims_for(trial_index: int, families) -> tuple[int, ...]:
    return families[trial_index % len(families)]


def lu_invariance_suite(trials: int = 100, seed: int = 0, tol: float = 1e-9) -> SuiteResult:
    def one(t, rng):
        dims = _dims_for(t, DIM_FAMILIES)
        state = random_pure_state(dims, rng)
        rotated = apply_local_unitaries(state, [haar_random_unitary(d, rng) for d in dims])
        a = general_entanglement(state).ge_normalized
        b = general_entanglement(rotated).ge_normalized
        return abs(a - b), f"dims={dims}"

    return _run("lu-invariance", trials, seed, tol, one)


def measurement_independence_suite(
    trials: int = 20, seed: int = 0, tol: float = 1e-8, measurements: int = 20
) -> SuiteResult:
    """Oracle epsilon under random rest-space measurements vs the closed form.

    One trial is one random state; every subsystem is probed with
    ``measurements`` Haar-random rank-one measurements of its complement.
    """

    def one(t, rng):
        dims = _dims_for(t, DIM_FAMILIES)
        state = random_pure_state(dims, rng)
        worst = 0.0
        for j in range(len(dims)):
            closed = epsilon_subsystem(state, j).epsilon_raw
            for _ in range(measurements):
                m = oracle.random_projective_measurement(dims, j, rng)
                worst = max(worst, abs(oracle.epsilon_via_measurement(state, j, m) - closed))
        return worst, f"dims={dims}"

    return _run("measurement-independence", trials, seed, tol, one)


def locc_suite(trials: int = 200, seed: int = 0, tol: float = 1e-9) -> SuiteResult:
    """Defect is the increase of mean E_g over one LOCC round (0 when it drops)."""

    def one(t, rng):
        dims = _dims_for(t, LOCC_FAMILIES)
        state = random_pure_state(dims, rng)
        before, after = oracle.locc_monotonicity_trial(state, rng)
        return max(0.0, after - before), f"dims={dims} before={before:.6f} after={after:.6f}"

    return _run("locc", trials, seed, tol, one)


def oracle_max_case(rng: np.random.Generator):
    """A random two-qubit (state, subsystem, outcome) for the maximization checks."""
    state = random_pure_state((2, 2), rng)
    j = int(rng.integers(2))
    m = oracle.random_projective_measurement(state.dims, j, rng)
    outcome = oracle.apply_measurement(state, m)[0]
    return state, j, outcome


def oracle_max_suite(
    trials: int = 20,
    seed: int = 0,
    tol: float = MC_REL_GAP,
    samples: int = MC_SAMPLES,
) -> SuiteResult:
    """Monte-Carlo maximum vs the exact maximum of the squared expectation shift.

    The defect is the relative gap (exact - sampled) / exact. Dominance
    (sampled <= exact + 1e-10) is mandatory; a gap above ``tol`` gets one
    retry with a fresh sampling seed before the trial counts as failed.
    """

    def one(t, rng):
        state, j, outcome = oracle_max_case(rng)
        exact = oracle.max_r_exact(state, outcome, j)
        gap = 0.0
        for attempt in range(2):
            mc = oracle.max_r_montecarlo(state, outcome, j, samples=samples, seed=[seed, t, attempt])
            if mc > exact + 1e-10:
                return mc - exact, f"dominance violated: sampled {mc!r} > exact {exact!r}", False
            gap = (exact - mc) / exact if exact > 0 else 0.0
            if gap < tol:
                return gap, f"attempt={attempt}"
        return gap, "gap above tolerance after retry"

    return _run("oracle-max", trials, seed, tol, one)


SUITES = {
    "lemma": (lemma_suite, 100),
    "lu-invariance": (lu_invariance_suite, 100),
    "measurement-independence": (measurement_independence_suite, 20),
    "locc": (locc_suite, 200),
    "oracle-max": (oracle_max_suite, 20),
}


def run_suite(name: str, trials: Optional[int] = None, seed: int = 0, tol: Optional[float] = None) -> SuiteResult:
    fn, default_trials = SUITES[name]
    kwargs = {"trials": default_trials if trials is None else trials, "seed": seed}
    if tol is not None:
        kwargs["tol"] = tol
    return fn(**kwargs)
