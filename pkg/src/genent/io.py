"""JSON state files and GE reports.

A state file looks like::

    {"dims": [2, 2], "amplitudes": [[0.707..., 0.0], ...], "label": "bell"}

Floats are written with ``repr``, which round-trips every double exactly.
"""

from __future__ import annotations

import json
from math import prod
from typing import Optional

import numpy as np

from genent.errors import GenentError, InvariantViolationError
from genent.measure import GEReport
from genent.tensor import NORM_TOL, MultipartiteState

INGEST_NORM_TOL = 1e-8


class MalformedFileError(GenentError):
    pass


def state_to_dict(state: MultipartiteState, label: Optional[str] = None) -> dict:
    out = {
        "dims": list(state.dims),
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    if label is not None:
        out["label"] = label
    return out


def state_from_dict(data) -> tuple[MultipartiteState, Optional[str], list[str]]:
    """Parse and validate a state file's content.

    Structural problems raise :class:`MalformedFileError`; a wrong amplitude
    count, bad dimensions or a norm off by more than 1e-8 raise
    :class:`InvariantViolationError`. Norm defects between the strict
    internal tolerance and 1e-8 are fixed by renormalizing, with a warning.
    """
    if not isinstance(data, dict):
        raise MalformedFileError("state file must contain a JSON object")
    for key in ("dims", "amplitudes"):
        if key not in data:
            raise MalformedFileError(f"missing field {key!r}")
    dims, raw = data["dims"], data["amplitudes"]
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise MalformedFileError("label must be a string")
    if not isinstance(dims, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise MalformedFileError("dims must be a list of integers")
    if not isinstance(raw, list):
        raise MalformedFileError("amplitudes must be a list of [re, im] pairs")
    pairs = []
    for k, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise MalformedFileError(f"amplitude {k} is not a [re, im] pair of numbers")
        pairs.append(complex(pair[0], pair[1]))

    if len(dims) < 2:
        raise InvariantViolationError("at least two subsystems", f"dims {dims}")
    if any(d < 2 for d in dims):
        raise InvariantViolationError("every dimension >= 2", f"dims {dims}")
    if len(pairs) != prod(dims):
        raise InvariantViolationError(
            "amplitude count equals product of dims", f"{len(pairs)} != {prod(dims)}"
        )
    amps = np.array(pairs, dtype=np.complex128)
    if not np.all(np.isfinite(amps)):
        raise InvariantViolationError("finite amplitudes")
    norm_sq = float(np.vdot(amps, amps).real)
    warnings = []
    if abs(norm_sq - 1) > INGEST_NORM_TOL:
        raise InvariantViolationError(
            "unit norm", f"squared norm {norm_sq!r} is off by more than {INGEST_NORM_TOL}"
        )
    if abs(norm_sq - 1) > NORM_TOL:
        warnings.append(f"renormalized input (squared norm was {norm_sq!r})")
        return MultipartiteState.normalized(dims, amps), label, warnings
    return MultipartiteState(dims, amps), label, warnings


def load_state(path) -> tuple[MultipartiteState, Optional[str], list[str]]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MalformedFileError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedFileError(f"{path} is not valid JSON: {exc}") from exc
    return state_from_dict(data)


def report_to_dict(
    report: GEReport,
    label: Optional[str] = None,
    seed=None,
    tolerance: float = 1e-9,
    warnings: Optional[list[str]] = None,
    version: str = "",
) -> dict:
    out = {
        "label": label,
        "dims": list(report.dims),
        "per_subsystem": [
            {
                "index": s.index,
                "dim": s.dim,
                "epsilon_raw": s.epsilon_raw,
                "epsilon_normalized": s.epsilon_normalized,
                "expectation_norm_sq": s.expectation_norm_sq,
            }
            for s in report.per_subsystem
        ],
        "ge_raw": report.ge_raw,
        "ge_normalized": report.ge_normalized,
        "ge_via_purity": report.ge_via_purity,
        "agreement_defect": report.agreement_defect,
        "tolerance": tolerance,
        "forms_agree": report.agreement_defect < tolerance,
    }
    if report.genuine is not None:
        out["genuine"] = report.genuine
    out["version"] = version
    out["seed"] = seed
    out["warnings"] = list(warnings or [])
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"
