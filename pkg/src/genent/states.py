"""Standard probe states: Bell, GHZ, W, random product and random entangled."""

from __future__ import annotations

from math import prod
from typing import Optional, Sequence

import numpy as np

from genent.errors import InvalidArgumentError
from genent.tensor import MultipartiteState, random_product_state, random_pure_state


def bell() -> MultipartiteState:
    """(|00> + |11>)/sqrt(2)."""
    return ghz(2)


def ghz(n: int, dims: Optional[Sequence[int]] = None) -> MultipartiteState:
    """sum_k |k, k, ..., k> / sqrt(d) on n subsystems of equal dimension d."""
    if n < 2:
        raise InvalidArgumentError(f"GHZ needs n >= 2, got {n}")
    dims = tuple(dims) if dims is not None else (2,) * n
    if len(dims) != n:
        raise InvalidArgumentError(f"dims {dims} do not have n={n} entries")
    if len(set(dims)) != 1:
        raise InvalidArgumentError(f"GHZ is only defined for equal local dimensions, got {dims}")
    d = dims[0]
    amps = np.zeros(prod(dims), dtype=np.complex128)
    for k in range(d):
        amps[np.ravel_multi_index((k,) * n, dims)] = 1 / np.sqrt(d)
    return MultipartiteState(dims, amps)


def maximally_entangled(d: int) -> MultipartiteState:
    return ghz(2, (d, d))


def w_state(n: int) -> MultipartiteState:
    """Equal superposition of the n single-excitation qubit basis states."""
    if n < 2:
        raise InvalidArgumentError(f"W needs n >= 2, got {n}")
    amps = np.zeros(2**n, dtype=np.complex128)
    for k in range(n):
        amps[2 ** (n - 1 - k)] = 1 / np.sqrt(n)
    return MultipartiteState((2,) * n, amps)


def generate(kind: str, n: Optional[int] = None, dims: Optional[Sequence[int]] = None, seed=None):
    """Build a named state; returns (state, label)."""
    if kind == "bell":
        if n not in (None, 2) or dims not in (None, (2, 2)):
            raise InvalidArgumentError("bell takes no size parameters (it is always two qubits)")
        return bell(), "bell"
    if kind == "ghz":
        if dims is not None:
            if n is not None and n != len(dims):
                raise InvalidArgumentError(f"--n {n} disagrees with dims {dims}")
            return ghz(len(dims), dims), f"ghz(dims={','.join(map(str, dims))})"
        n = 3 if n is None else n
        return ghz(n), f"ghz(n={n})"
    if kind == "w":
        if dims is not None:
            if any(d != 2 for d in dims):
                raise InvalidArgumentError("W states are defined for qubits only")
            if n is not None and n != len(dims):
                raise InvalidArgumentError(f"--n {n} disagrees with dims {dims}")
            n = len(dims)
        n = 3 if n is None else n
        return w_state(n), f"w(n={n})"
    if kind in ("product", "random"):
        if dims is None:
            dims = (2,) * (2 if n is None else n)
        elif n is not None and n != len(dims):
            raise InvalidArgumentError(f"--n {n} disagrees with dims {dims}")
        if len(dims) < 2:
            raise InvalidArgumentError("need at least two subsystems")
        make = random_product_state if kind == "product" else random_pure_state
        return make(dims, seed), f"{kind}(dims={','.join(map(str, dims))},seed={seed})"
    raise InvalidArgumentError(f"unknown state kind {kind!r}")
