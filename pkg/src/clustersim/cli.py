"""Command-line front end: each capability of the library is a subcommand
emitting JSON (or CSV for `sample`)."""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import counts as counts_mod
from .classical_bound import classical_bound, margin_report
from .entclass import PAIR_PARTITIONS, classify_by_fidelity, fidelity_ceiling, rank_signature
from .mbqc import (
    SINGLE_QUBIT_INSTRUCTIONS,
    TWO_QUBIT_INSTRUCTIONS,
    GateInstruction,
    execute,
    execute_density,
    single_rotation_pattern,
    target_single,
    target_two_qubit,
    two_qubit_pattern,
)
from .noise import NoiseSpec, apply_noise
from .states import cluster4, fidelity, named_state
from .witness import build_b2, build_b4, required_settings, witness_expectation


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_angle(text: str) -> float:
    """Radians; accepts floats and the literals pi, pi/2, -pi/2, etc."""
    text = text.strip()
    try:
        return float(text)
    except ValueError:
        pass
    sign = 1.0
    if text.startswith("-"):
        sign, text = -1.0, text[1:]
    if text == "pi":
        return sign * math.pi
    if text.startswith("pi/"):
        try:
            return sign * math.pi / float(text[3:])
        except ValueError:
            pass
    raise UsageError(f"cannot parse angle {text!r}")


def _resource_state(noise: str | None):
    """The cluster resource, pure or noisy per the --noise flag."""
    state = cluster4()
    if noise is None:
        return state
    try:
        spec = NoiseSpec.parse(noise)
    except ValueError as exc:
        raise UsageError(str(exc))
    return apply_noise(state, spec)


def _state_json(state) -> dict:
    return json.loads(state.to_json())


def _cmd_witness(args) -> dict:
    b2, b4 = build_b2(), build_b4()
    if args.counts:
        records = _read_counts(args.counts)
        result = {}
        for name, obs in (("b2", b2), ("b4", b4)):
            try:
                bound, sigma = counts_mod.witness_from_counts(records, obs)
                result[name] = {"bound": bound, "sigma": sigma}
            except ValueError:
                result[name] = None
        if result["b2"] is None and result["b4"] is None:
            raise DataError("counts file covers neither witness's settings")
        return {"command": "witness", "source": "counts", **result}
    state = _resource_state(args.noise)
    return {
        "command": "witness",
        "source": "state",
        "noise": args.noise,
        "b2": {"bound": witness_expectation(state, b2), "sigma": None},
        "b4": {"bound": witness_expectation(state, b4), "sigma": None},
        "settings": {
            "b2": [s.bases for s in required_settings(b2)],
            "b4": [s.bases for s in required_settings(b4)],
        },
    }


def _cmd_schmidt(args) -> dict:
    states = {
        "cluster4": cluster4(),
        "ghz4": named_state("ghz4"),
        "w4": named_state("w4"),
        "dicke4": named_state("dicke4"),
    }
    signatures = {name: list(rank_signature(s)) for name, s in states.items()}
    ceilings = {
        key: {f"k{k}": fidelity_ceiling(cluster4(), part, k) for k in (1, 2, 3, 4)}
        for key, part in PAIR_PARTITIONS.items()
    }
    out = {"command": "schmidt", "signatures": signatures, "ceilings": ceilings}
    if args.fidelity is not None:
        if not 0.0 <= args.fidelity <= 1.0:
            raise UsageError("--fidelity must lie in [0, 1]")
        out["fidelity"] = args.fidelity
        out["excluded_classes"] = classify_by_fidelity(args.fidelity)
    return out


def _mbqc_row(task, instr, noise):
    if task == "two-qubit":
        pattern = two_qubit_pattern(instr)
        target = target_two_qubit(instr)
    else:
        pattern = single_rotation_pattern(instr)
        target = target_single(instr)
    n_branches = 2 ** len(pattern.steps)
    fids = []
    for i in range(n_branches):
        branch = format(i, f"0{len(pattern.steps)}b")
        if noise is None:
            out, _, _ = execute(pattern, cluster4(), branch=branch)
        else:
            out, _, _ = execute_density(pattern, _resource_state(noise), branch)
        fids.append(fidelity(out, target))
    return {
        "alpha": instr.alpha,
        "beta": instr.beta,
        "branch_fidelities": fids,
        "mean_fidelity": sum(fids) / len(fids),
    }


def _cmd_mbqc(args) -> dict:
    if (args.alpha is None) != (args.beta is None):
        raise UsageError("--alpha and --beta must be given together")
    if args.alpha is not None:
        instructions = [GateInstruction(parse_angle(args.alpha), parse_angle(args.beta))]
    elif args.task == "two-qubit":
        instructions = list(TWO_QUBIT_INSTRUCTIONS)
    else:
        instructions = list(SINGLE_QUBIT_INSTRUCTIONS)
    rows = [_mbqc_row(args.task, instr, args.noise) for instr in instructions]
    return {"command": "mbqc", "task": args.task, "noise": args.noise, "rows": rows}


def _cmd_bounds(args) -> dict:
    if args.task == "two-qubit":
        targets = [target_two_qubit(i) for i in TWO_QUBIT_INSTRUCTIONS]
        measured = (0.895, 0.010)
    else:
        targets = [target_single(i) for i in SINGLE_QUBIT_INSTRUCTIONS]
        measured = (0.926, 0.010)
    value, strategy = classical_bound(targets, bits=2)
    return {
        "command": "bounds",
        "task": args.task,
        "bound": value,
        "groups": [list(g) for g in strategy.groups],
        "prepared_states": [_state_json(s) for s in strategy.prepared_states],
        "margin_sigma": margin_report(measured[0], measured[1], value),
    }


def _cmd_sample(args) -> str:
    state = _resource_state(args.noise)
    settings = (
        [s.strip() for s in args.settings.split(",")]
        if args.settings
        else [s.bases for s in required_settings(build_b4())]
    )
    records = []
    for i, bases in enumerate(settings):
        try:
            setting = counts_mod.TomographicSetting(bases)
        except ValueError as exc:
            raise UsageError(str(exc))
        records.append(counts_mod.sample_counts(state, setting, args.shots, args.seed + i))
    return counts_mod.serialize_counts(records)


def _read_counts(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}")
    try:
        return counts_mod.parse_counts(text)
    except ValueError as exc:
        raise DataError(str(exc))


def _cmd_ingest(args) -> dict:
    records = _read_counts(args.counts)
    result = {"command": "ingest", "file": args.counts}
    covered_any = False
    for name, obs in (("b2", build_b2()), ("b4", build_b4())):
        try:
            bound, sigma = counts_mod.witness_from_counts(records, obs)
            result[name] = {"bound": bound, "sigma": sigma}
            covered_any = True
        except ValueError:
            result[name] = None
    if not covered_any:
        raise DataError("counts file covers neither witness's settings")
    return result


def build_parser() -> _Parser:
    parser = _Parser(prog="clustersim")
    sub = parser.add_subparsers(dest="subcommand")

    p = sub.add_parser("witness", help="fidelity lower bounds from state or counts")
    p.add_argument("--noise", help="e.g. white:0.86 or dephase:0.05:1,2")
    p.add_argument("--counts", help="CSV file of coincidence counts")
    p.add_argument("--out")

    p = sub.add_parser("schmidt", help="rank signatures and fidelity ceilings")
    p.add_argument("--fidelity", type=float, help="classify which classes this fidelity excludes")
    p.add_argument("--out")

    p = sub.add_parser("mbqc", help="pattern fidelity tables")
    p.add_argument("--task", choices=["two-qubit", "single"], required=True)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--noise")
    p.add_argument("--out")

    p = sub.add_parser("bounds", help="classical no-entanglement fidelity bounds")
    p.add_argument("--task", choices=["two-qubit", "single"], required=True)
    p.add_argument("--out")

    p = sub.add_parser("sample", help="write synthetic count CSVs")
    p.add_argument("--shots", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noise")
    p.add_argument("--settings", help="comma-separated, e.g. XXZZ,ZZXX")
    p.add_argument("--out")

    p = sub.add_parser("ingest", help="read count CSVs, print witness bounds")
    p.add_argument("--counts", required=True)
    p.add_argument("--out")

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.subcommand is None:
            raise UsageError("a subcommand is required")
        if args.subcommand == "sample":
            if args.shots < 1:
                raise UsageError("--shots must be positive")
            output = _cmd_sample(args)
        else:
            handler = {
                "witness": _cmd_witness,
                "schmidt": _cmd_schmidt,
                "mbqc": _cmd_mbqc,
                "bounds": _cmd_bounds,
                "ingest": _cmd_ingest,
            }[args.subcommand]
            output = json.dumps(handler(args), indent=2) + "\n"
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "out", None):
        try:
            with open(args.out, "w") as fh:
                fh.write(output)
        except OSError as exc:
            print(f"data error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
