"""Command-line interface.

Exit status: 0 success, 1 a verification property failed, 2 bad arguments or
malformed input file, 3 an input violates a state invariant, 4 the dimension
guard tripped.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

import numpy as np

import genent
from genent import io, states, verify
from genent.basis import (
    gram_schmidt_orthonormalize,
    spin_one_basis,
    spin_one_candidates,
    spin_one_closed_form,
)
from genent.errors import InvalidArgumentError, InvariantViolationError, ResourceLimitError
from genent.measure import general_entanglement, local_expectations
from genent.tensor import random_product_state, random_pure_state

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3
EXIT_RESOURCE = 4

KINDS = ("ghz", "w", "bell", "product", "random")


def _dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=0, help="RNG seed (default 0)")
    common.add_argument("--out", help="write the JSON output here instead of stdout")
    common.add_argument("--quiet", action="store_true", help="print only the headline number")
    common.add_argument(
        "--tolerance", type=float, default=None,
        help="comparison tolerance used for pass/agree flags in the report",
    )

    parser = argparse.ArgumentParser(
        prog="genent", description="General Entanglement of multipartite pure states."
    )
    parser.add_argument("--version", action="version", version=f"genent {genent.__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="compute GE for a state file or generated state")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("input", nargs="?", help="state file (JSON)")
    src.add_argument("--gen", choices=KINDS, help="generate the state instead of reading a file")
    p.add_argument("--n", type=int, help="number of subsystems for --gen")
    p.add_argument("--dims", type=_dims, help="comma-separated local dimensions for --gen")
    p.add_argument("--genuine", action="store_true", help="also compute the genuine N-partite GE")

    p = sub.add_parser("generate", parents=[common], help="write a state file")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--dims", type=_dims)

    p = sub.add_parser("verify", parents=[common], help="run a randomized property suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--trials", type=_positive, default=None)

    sub.add_parser("spin1-demo", parents=[common], help="spin-1 basis construction and GE check")
    return parser


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def compute_report(state, label, seed, tolerance, warnings=(), genuine=False) -> dict:
    report = general_entanglement(state, genuine=genuine)
    return io.report_to_dict(
        report, label=label, seed=seed, tolerance=tolerance,
        warnings=list(warnings), version=genent.__version__,
    )


def cmd_compute(args) -> int:
    if args.gen:
        state, label = states.generate(args.gen, args.n, args.dims, args.seed)
        warnings = []
        seed = args.seed
    else:
        if args.n is not None or args.dims is not None:
            raise InvalidArgumentError("--n and --dims only apply with --gen")
        state, label, warnings = io.load_state(args.input)
        seed = None
    tol = 1e-9 if args.tolerance is None else args.tolerance
    report = compute_report(state, label, seed, tol, warnings, args.genuine)
    if args.quiet:
        _emit(f"{report['ge_normalized']!r}\n", args.out)
    else:
        _emit(io.dumps(report), args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    state, label = states.generate(args.kind, args.n, args.dims, args.seed)
    _emit(io.dumps(io.state_to_dict(state, label)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    result = verify.run_suite(args.suite, args.trials, args.seed, args.tolerance)
    for r in result.failures:
        print(
            f"FAIL {result.suite}: trial {r.trial} defect {r.defect:.3e} ({r.detail}); "
            f"reproduce with --seed {result.seed} --trials {r.trial + 1}",
            file=sys.stderr,
        )
    if args.quiet:
        _emit(f"{'PASS' if result.passed else 'FAIL'} {result.max_defect!r}\n", args.out)
    else:
        _emit(io.dumps(result.to_dict()), args.out)
    return EXIT_OK if result.passed else EXIT_PROPERTY


def _matrix_json(m) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def spin1_report(seed: int = 0, tolerance: float = 1e-10) -> dict:
    basis = gram_schmidt_orthonormalize(spin_one_candidates())
    expected = spin_one_closed_form()
    deviations = [float(np.abs(a - b).max()) for a, b in zip(basis, expected)]

    def ge_pair(state):
        # spin-1 specialization: E_g = 1 - (3 / 2N) sum_j |<A^(j)>|^2
        n = state.n_subsystems
        total = sum(float(a @ a) for a in (local_expectations(state, j, spin_one_basis()) for j in range(n)))
        via_basis = 1 - 1.5 * total / n
        via_purity = general_entanglement(state).ge_via_purity
        return {"ge_spin1_basis": via_basis, "ge_via_purity": via_purity,
                "agreement_defect": abs(via_basis - via_purity)}

    cases = {
        "random": ge_pair(random_pure_state((3, 3), seed)),
        "maximally_entangled": ge_pair(states.maximally_entangled(3)),
        "product": ge_pair(random_product_state((3, 3), seed)),
    }
    max_dev = max(deviations)
    return {
        "basis": [
            {"index": k + 1, "operator": _matrix_json(a), "deviation_from_closed_form": dev}
            for k, (a, dev) in enumerate(zip(basis, deviations))
        ],
        "max_basis_deviation": max_dev,
        "states": cases,
        "tolerance": tolerance,
        "passed": max_dev < tolerance and all(c["agreement_defect"] < 1e-9 for c in cases.values()),
        "version": genent.__version__,
        "seed": seed,
    }


def cmd_spin1_demo(args) -> int:
    tol = 1e-10 if args.tolerance is None else args.tolerance
    report = spin1_report(args.seed, tol)
    if args.quiet:
        _emit(f"{report['max_basis_deviation']!r}\n", args.out)
    else:
        _emit(io.dumps(report), args.out)
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "generate": cmd_generate,
    "verify": cmd_verify,
    "spin1-demo": cmd_spin1_demo,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except io.MalformedFileError as exc:
        print(f"genent: malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolationError as exc:
        print(f"genent: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ResourceLimitError as exc:
        print(f"genent: dimension guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidArgumentError as exc:
        print(f"genent: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
