"""Exit criteria. Each test records one PASS/FAIL line, shown in the
terminal summary under "acceptance criteria"."""

import json
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, random_biseparable
from genent import (
    MultipartiteState,
    apply_local_unitaries,
    concurrence_two_qubit,
    epsilon_subsystem,
    gell_mann_basis,
    general_entanglement,
    genuine_entanglement,
    gram_schmidt_orthonormalize,
    haar_random_unitary,
    meyer_wallach,
    random_pure_state,
    spin_half_basis,
    spin_one_basis,
)
from genent import oracle, verify
from genent.basis import lemma_defect, random_unit_trace_hermitian, spin_one_candidates, spin_one_closed_form
from genent.cli import compute_report, main
from genent.states import ghz, maximally_entangled, w_state
from genent.tensor import random_product_state

FAMILIES = [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 3, 2)]


def record(number, title, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] AC{number:<2} {title}: {detail}")
    assert ok, detail


def test_ac01_golden_values():
    t0 = time.perf_counter()
    bell = ghz(2)
    qubit_qutrit = MultipartiteState.normalized((2, 3), [1, 0, 0, 0, 1, 0])
    cases = {
        "bell": (general_entanglement(bell).ge_normalized, 1.0),
        "bell C^2": (concurrence_two_qubit(bell) ** 2, 1.0),
        "ghz3": (general_entanglement(ghz(3)).ge_normalized, 1.0),
        "w3": (general_entanglement(w_state(3)).ge_normalized, 8 / 9),
        "qubit-qutrit": (general_entanglement(qubit_qutrit).ge_normalized, 0.875),
        "2-qutrit max": (general_entanglement(maximally_entangled(3)).ge_normalized, 1.0),
    }
    worst = max(abs(v - e) for v, e in cases.values())
    rng = np.random.default_rng(1)
    prod_worst = max(
        abs(general_entanglement(random_product_state(dims, rng)).ge_normalized)
        for dims in FAMILIES + [(4, 2, 3), (5, 5)]
        for _ in range(5)
    )
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and prod_worst < 1e-9 and elapsed < 1.0
    record(1, "golden values", ok, f"max err {worst:.1e}, product max {prod_worst:.1e}, {elapsed:.3f}s")


def test_ac02_lemma_identity():
    t0 = time.perf_counter()
    worst = 0.0
    for d in (2, 3, 4, 5):
        bases = [gell_mann_basis(d)] + {2: [spin_half_basis()], 3: [spin_one_basis()]}.get(d, [])
        rng = np.random.default_rng(100 + d)
        for _ in range(100):
            sigma = random_unit_trace_hermitian(d, rng)
            worst = max(worst, *(lemma_defect(sigma, b) for b in bases))
    elapsed = time.perf_counter() - t0
    record(2, "lemma identity", worst < 1e-9 and elapsed < 5, f"max defect {worst:.1e}, {elapsed:.3f}s")


def test_ac03_spin_one_basis():
    basis = gram_schmidt_orthonormalize(spin_one_candidates())
    worst = max(float(np.abs(a - b).max()) for a, b in zip(basis, spin_one_closed_form()))
    ok = worst < 1e-10 and len(basis) == 8
    record(3, "spin-1 Gram-Schmidt basis", ok, f"max entrywise deviation {worst:.1e}")


def test_ac04_form_agreement():
    t0 = time.perf_counter()
    worst = 0.0
    for k in range(200):
        state = random_pure_state(FAMILIES[k % 5], seed=[4, k])
        worst = max(worst, general_entanglement(state).agreement_defect)
    elapsed = time.perf_counter() - t0
    record(4, "expectation vs purity form", worst < 1e-9 and elapsed < 10, f"max gap {worst:.1e}, {elapsed:.3f}s")


def test_ac05_lu_invariance():
    worst = 0.0
    for k in range(100):
        rng = np.random.default_rng([5, k])
        dims = FAMILIES[k % 5]
        state = random_pure_state(dims, rng)
        rotated = apply_local_unitaries(state, [haar_random_unitary(d, rng) for d in dims])
        diff = general_entanglement(state).ge_normalized - general_entanglement(rotated).ge_normalized
        worst = max(worst, abs(diff))
    record(5, "local-unitary invariance", worst < 1e-9, f"max |dE_g| {worst:.1e}")


def test_ac06_measurement_independence():
    t0 = time.perf_counter()
    worst = 0.0
    checks = 0
    for k in range(20):
        rng = np.random.default_rng([6, k])
        dims = FAMILIES[k % 5]
        state = random_pure_state(dims, rng)
        for j in range(len(dims)):
            closed = epsilon_subsystem(state, j).epsilon_raw
            for _ in range(20):
                m = oracle.random_projective_measurement(dims, j, rng)
                worst = max(worst, abs(oracle.epsilon_via_measurement(state, j, m) - closed))
                checks += 1
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-8 and elapsed < 60
    record(6, "measurement independence", ok, f"{checks} checks, max gap {worst:.1e}, {elapsed:.2f}s")


def test_ac07_montecarlo_dominance_and_convergence():
    result = verify.oracle_max_suite(trials=20, seed=7, tol=0.02, samples=10_000)
    # dominance on its own, over several sample counts and higher dimensions
    dominance = 0.0
    for k in range(30):
        rng = np.random.default_rng([7, k])
        dims = [(2, 2), (3, 2), (2, 3, 2)][k % 3]
        state = random_pure_state(dims, rng)
        j = int(rng.integers(len(dims)))
        for o in oracle.apply_measurement(state, oracle.random_projective_measurement(dims, j, rng)):
            exact = oracle.max_r_exact(state, o, j)
            mc = oracle.max_r_montecarlo(state, o, j, samples=int(rng.integers(1, 2000)), seed=[7, k])
            dominance = max(dominance, mc - exact)
    ok = result.passed and dominance <= 1e-10
    record(7, "Monte-Carlo maximization", ok,
           f"max relative gap {result.max_defect:.2e} (<2e-2), max overshoot {dominance:.1e}")


def test_ac08_locc_monotonicity():
    t0 = time.perf_counter()
    result = verify.locc_suite(trials=200, seed=8, tol=1e-9)
    elapsed = time.perf_counter() - t0
    ok = result.passed and elapsed < 60
    record(8, "LOCC monotonicity", ok,
           f"{len(result.failures)} violations in 200 trials, max increase {result.max_defect:.1e}, {elapsed:.2f}s")


def test_ac09_genuine_variant():
    worst_sep = 0.0
    for k in range(20):
        state, _ = random_biseparable(np.random.default_rng([9, k]))
        worst_sep = max(worst_sep, abs(genuine_entanglement(state)))
    g_ghz = genuine_entanglement(ghz(3))
    g_w = genuine_entanglement(w_state(3))
    bound = 0.0
    for k in range(50):
        state = random_pure_state([(2, 2, 2), (2, 3, 2), (2, 2, 2, 2)][k % 3], seed=[9, 100 + k])
        r = general_entanglement(state, genuine=True)
        bound = max(bound, r.genuine - r.ge_normalized)
    ok = worst_sep < 1e-10 and g_ghz > 0.1 and g_w > 0.1 and bound <= 1e-10 and abs(g_ghz - 5 / 6) < 1e-9
    record(9, "genuine N-partite variant", ok,
           f"biseparable max {worst_sep:.1e}, GHZ {g_ghz:.12f}, W {g_w:.6f}, max(E^N - E) {bound:.1e}")


def test_ac10_qubit_specializations():
    worst_mw = 0.0
    for k in range(100):
        state = random_pure_state((2,) * (2 + k % 5), seed=[10, k])
        worst_mw = max(worst_mw, abs(meyer_wallach(state) - general_entanglement(state).ge_normalized))
    worst_c = 0.0
    for k in range(100):
        state = random_pure_state((2, 2), seed=[10, 1000 + k])
        worst_c = max(worst_c, abs(general_entanglement(state).ge_normalized - concurrence_two_qubit(state) ** 2))
    ok = worst_mw < 1e-10 and worst_c < 1e-9
    record(10, "qubit specializations", ok, f"MW gap {worst_mw:.1e}, |E_g - C^2| {worst_c:.1e}")


def test_ac11_cli_round_trip(tmp_path, capsys):
    fields = ("ge_raw", "ge_normalized", "ge_via_purity", "agreement_defect", "genuine", "per_subsystem")
    problems = []
    for kind, extra in [("random", ["--dims", "2,3,2"]), ("w", ["--n", "4"]), ("product", ["--dims", "3,2"])]:
        path = tmp_path / f"{kind}.json"
        main(["generate", kind, *extra, "--seed", "11", "--out", str(path)])
        runs = []
        for k in range(2):
            out = tmp_path / f"{kind}-report-{k}.json"
            main(["compute", str(path), "--genuine", "--out", str(out)])
            runs.append(out.read_bytes())
        file_report = json.loads(runs[0])
        data = json.loads(path.read_text())
        state = MultipartiteState(data["dims"], [complex(*a) for a in data["amplitudes"]])
        memory = compute_report(state, data["label"], None, 1e-9, genuine=True)
        if runs[0] != runs[1]:
            problems.append(f"{kind}: repeated compute differs")
        if any(file_report[f] != memory[f] for f in fields):
            problems.append(f"{kind}: file and in-memory reports differ")
    seeded = []
    for _ in range(2):
        main(["compute", "--gen", "random", "--dims", "3,3", "--seed", "12345", "--genuine"])
        seeded.append(capsys.readouterr().out)
    if seeded[0] != seeded[1]:
        problems.append("seeded generation not reproducible")
    capsys.readouterr()
    record(11, "CLI round trip and determinism", not problems, "; ".join(problems) or "byte-identical")
