import itertools
from math import prod

import numpy as np
import pytest

from genent import MultipartiteState

S2 = 1 / np.sqrt(2)


def brute_reduced(amps, dims, keep):
    """Partial trace by enumerating basis labels; shares no code with genent."""
    keep = sorted(keep)
    rest = [k for k in range(len(dims)) if k not in keep]
    dk = prod(dims[k] for k in keep)
    out = np.zeros((dk, dk), dtype=complex)
    labels = list(itertools.product(*[range(d) for d in dims]))
    index = {lab: i for i, lab in enumerate(labels)}

    def flat(sub, ks):
        f = 0
        for k, s in zip(ks, sub):
            f = f * dims[k] + s
        return f

    for a in itertools.product(*[range(dims[k]) for k in keep]):
        for b in itertools.product(*[range(dims[k]) for k in keep]):
            total = 0j
            for r in itertools.product(*[range(dims[k]) for k in rest]):
                la = [0] * len(dims)
                lb = [0] * len(dims)
                for k, s in zip(keep, a):
                    la[k] = s
                for k, s in zip(keep, b):
                    lb[k] = s
                for k, s in zip(rest, r):
                    la[k] = lb[k] = s
                total += amps[index[tuple(la)]] * np.conj(amps[index[tuple(lb)]])
            out[flat(a, keep), flat(b, keep)] = total
    return out


def brute_ge(state):
    """Normalized GE from brute-force reduced states and eigenvalue purities."""
    n = len(state.dims)
    total = 0.0
    for j, d in enumerate(state.dims):
        ev = np.linalg.eigvalsh(brute_reduced(state.amplitudes, state.dims, [j]))
        p = float(np.sum(ev**2))
        total += 1 / (d - 1) - d / (d - 1) * p
    return 1 + total / n


@pytest.fixture
def bell():
    return MultipartiteState((2, 2), [S2, 0, 0, S2])


@pytest.fixture
def ghz3():
    amps = np.zeros(8)
    amps[[0, 7]] = S2
    return MultipartiteState((2, 2, 2), amps)


@pytest.fixture
def w3():
    amps = np.zeros(8)
    amps[[1, 2, 4]] = 1 / np.sqrt(3)
    return MultipartiteState((2, 2, 2), amps)


def random_biseparable(rng):
    """Random |a>|b> across a random cut of 3-4 subsystems, subsystems shuffled.

    Returns the state and the (sorted) block that holds |a>.
    """
    from genent import MultipartiteState, permute_subsystems, tensor_product
    from genent.tensor import random_local_vector

    n = int(rng.integers(3, 5))
    dims = tuple(int(d) for d in rng.integers(2, 4, size=n))
    k = int(rng.integers(1, n))

    def factor(ds):
        size = prod(ds)
        return MultipartiteState(ds, random_local_vector(size, rng))

    joint = tensor_product(factor(dims[:k]), factor(dims[k:]))
    perm = rng.permutation(n)
    block = sorted(int(np.flatnonzero(perm == i)[0]) for i in range(k))
    return permute_subsystems(joint, perm), block


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
