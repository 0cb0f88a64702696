"""Command-line harness: seeded experiment suites with JSON reports.

Five subcommands cover the library surface: ``equivalence`` (solver vs
coefficient formula on orthogonal frames), ``factor`` (factorization scan
over a built or loaded relation), ``maximality`` (candidate sweep with
witness rejections, exhaustive in dimension 2), ``chain`` (nested chain
unions), and ``pair-ip`` (adapted inner product for one vector pair).

Reports are canonical JSON.  With a fixed config the payload is
byte-identical across runs and platforms; only ``duration_s`` varies.
Exit codes: 0 verdict pass, 1 verdict fail, 2 usage or parse error.
``ORTHO_SEED`` in the environment overrides ``--seed``.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from typing import Any, Sequence

from .dependence import Relation, build_orthogonal_relation, factor_check
from .errors import OrthoError, RelationParseError
from .inner_product import (
    GramInnerProduct,
    evaluate,
    frame_adapted_inner_product,
    gram_schmidt,
    identity_inner_product,
    is_orthogonal_tuple,
    verify_projection_equivalence,
)
from .linalg import (
    Frame,
    Vector,
    derive_seed,
    is_independent,
    sample_frame,
    sample_span_point,
    solve_coordinates,
)
from .maximality import (
    MaximalityReport,
    chain_union_check,
    exhaustive_candidates_2d,
    first_nonorthogonal_pair,
    sample_chain,
    verify_orthogonal_maximality,
)
from .serialize import (
    canonical_dumps,
    gram_to_json,
    load_gram,
    load_relation,
    maximality_report_to_json,
    outcome_to_json,
    rational_from_json,
    rational_to_json,
    vector_to_json,
)

CHAIN_DEPTH = 4
_CHAIN_STREAM = 0x434E


@dataclass(frozen=True)
class RunConfig:
    """Shared experiment parameters; every command echoes them back."""

    dim: int = 2
    m: int = 2
    frames: int = 8
    points: int = 4
    bound: int = 5
    seed: int = 0
    gram: str | None = None

    def __post_init__(self) -> None:
        if not 2 <= self.m <= self.dim <= 16:
            raise ValueError(
                f"need 2 <= m <= dim <= 16, got m={self.m}, dim={self.dim}"
            )
        if self.frames < 0 or self.points < 0:
            raise ValueError("frame and point counts must be >= 0")
        if self.bound < 1:
            raise ValueError(f"bound must be positive, got {self.bound}")

    def to_json(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "m": self.m,
            "frames": self.frames,
            "points": self.points,
            "bound": self.bound,
            "seed": self.seed,
            "gram": self.gram,
        }

    def load_inner_product(self) -> GramInnerProduct:
        if self.gram is None:
            return identity_inner_product(self.dim)
        return load_gram(self.gram)


@dataclass(frozen=True)
class Report:
    """One command run: config echo, payload, verdict, wall-clock time."""

    command: str
    config: RunConfig
    payload: dict[str, Any]
    verdict: str
    duration_s: float

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "config": self.config.to_json(),
            "payload": self.payload,
            "verdict": self.verdict,
            "duration_s": self.duration_s,
        }


def _report(command: str, config: RunConfig, payload: dict[str, Any],
            passed: bool, started: float) -> Report:
    return Report(
        command=command,
        config=config,
        payload=payload,
        verdict="pass" if passed else "fail",
        duration_s=round(time.perf_counter() - started, 6),
    )


def cmd_equivalence(config: RunConfig) -> Report:
    """Solver coordinates vs the coefficient formula on orthogonal frames."""
    started = time.perf_counter()
    G = config.load_inner_product()
    trials = failures = 0
    for k in range(config.frames):
        raw = sample_frame(config.dim, config.m, config.bound,
                           derive_seed(config.seed, k, 0))
        frame = gram_schmidt(G, raw)
        for t in range(config.points):
            x = sample_span_point(frame, config.bound,
                                  derive_seed(config.seed, k, t + 1))
            trials += 1
            if not verify_projection_equivalence(G, frame, x):
                failures += 1
    payload = {"trials": trials, "failures": failures}
    return _report("equivalence", config, payload, failures == 0, started)


def cmd_factor(config: RunConfig, input_path: str | None = None) -> Report:
    """Factorization scan over a loaded relation or a fresh orthogonal one."""
    started = time.perf_counter()
    if input_path is not None:
        rel = load_relation(input_path)
    else:
        G = config.load_inner_product()
        rel = build_orthogonal_relation(
            G, config.frames, config.points, config.bound, config.seed,
            m=config.m,
        )
    outcome = factor_check(rel)
    return _report("factor", config, outcome_to_json(outcome),
                   outcome.passed, started)


def _recheck_rejection(G: GramInnerProduct, report: MaximalityReport) -> bool:
    """Reproduce a rejection from scratch: re-solve both frames at the
    collision point and confirm the slot values disagree as reported."""
    i = report.index
    candidate_value = solve_coordinates(report.candidate, report.collision_point)[i - 1]
    witness_value = solve_coordinates(report.orthogonal_witness,
                                      report.collision_point)[i - 1]
    return (
        (candidate_value, witness_value) == report.values
        and candidate_value != witness_value
        and report.orthogonal_witness[i - 1] == report.candidate[i - 1]
        and is_orthogonal_tuple(G, report.orthogonal_witness)
    )


def cmd_maximality(config: RunConfig) -> Report:
    """Candidate sweep: orthogonal frames accepted, the rest rejected with
    verified witnesses.  Exhaustive grid in dimension 2, sampled above."""
    started = time.perf_counter()
    if config.m != config.dim:
        raise ValueError(
            f"maximality sweep needs m == dim, got m={config.m}, dim={config.dim}"
        )
    G = config.load_inner_product()
    if config.dim == 2:
        candidates: tuple[Frame, ...] = exhaustive_candidates_2d(config.bound)
    else:
        candidates = tuple(
            sample_frame(config.dim, config.dim, config.bound,
                         derive_seed(config.seed, k, 0))
            for k in range(config.frames)
        )
    reports = verify_orthogonal_maximality(G, candidates)
    accepted = sum(1 for r in reports if r.accepted)
    rejected = [r for r in reports if not r.accepted]
    sound = all(
        first_nonorthogonal_pair(G, r.candidate) is None
        for r in reports if r.accepted
    ) and all(_recheck_rejection(G, r) for r in rejected)
    payload = {
        "summary": {
            "total": len(reports),
            "orthogonal_accepted": accepted,
            "nonorthogonal_rejected": len(rejected),
        },
        "rejected": [maximality_report_to_json(r) for r in rejected],
    }
    return _report("maximality", config, payload, sound, started)


def cmd_chain(config: RunConfig) -> Report:
    """Nested chain inside a built orthogonal relation; union must factor."""
    started = time.perf_counter()
    G = config.load_inner_product()
    rel = build_orthogonal_relation(
        G, config.frames, config.points, config.bound, config.seed, m=config.m,
    )
    chain = sample_chain(rel, CHAIN_DEPTH,
                         derive_seed(config.seed, _CHAIN_STREAM))
    union_passes = chain_union_check(chain)
    payload = {
        "chain_lengths": [len(member) for member in chain],
        "union_passes": union_passes,
    }
    return _report("chain", config, payload, union_passes, started)


def cmd_pair_ip(config: RunConfig, a: Vector, b: Vector) -> Report:
    """Adapted inner product for one independent pair in dimension 2."""
    started = time.perf_counter()
    frame = Frame((a, b))
    G = frame_adapted_inner_product(frame)
    x = sample_span_point(frame, config.bound, derive_seed(config.seed, 0))
    solver = solve_coordinates(frame, x)
    formula = tuple(
        evaluate(G, v, x) / evaluate(G, v, v) for v in frame
    )
    pair_value = evaluate(G, a, b)
    passed = pair_value == 0 and solver == formula
    payload = {
        "gram": gram_to_json(G),
        "pair_inner_product": rational_to_json(pair_value),
        "x": vector_to_json(x),
        "coordinates_solver": vector_to_json(solver),
        "coordinates_formula": vector_to_json(formula),
    }
    return _report("pair-ip", config, payload, passed, started)


def parse_vector_literal(text: str) -> Vector:
    """Comma-separated rationals, e.g. ``3,-1/2``.  Use ``--a=-1,2`` for a
    leading minus so the shell parser does not read it as a flag."""
    parts = text.split(",")
    return tuple(
        rational_from_json(part.strip(), f"component {k + 1}")
        for k, part in enumerate(parts)
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ortho",
        description="Exact-arithmetic orthogonality checks: coordinate "
                    "functionals, factorization through projections, and "
                    "maximality sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--dim", type=int, default=2, help="ambient dimension")
        p.add_argument("--m", type=int, default=2, help="vectors per frame")
        p.add_argument("--frames", type=int, default=8, help="frame count")
        p.add_argument("--points", type=int, default=4,
                       help="span points per frame")
        p.add_argument("--bound", type=int, default=5,
                       help="integer entry bound for sampling")
        p.add_argument("--seed", type=int, default=0, help="master seed")
        p.add_argument("--gram", default=None,
                       help="path to a Gram matrix JSON file "
                            "(default: identity)")
        p.add_argument("--output", default=None,
                       help="write the JSON report here instead of stdout")

    p_eq = sub.add_parser(
        "equivalence",
        help="check solver coordinates against the coefficient formula",
    )
    add_common(p_eq)

    p_factor = sub.add_parser(
        "factor", help="run the factorization scan over a relation",
    )
    add_common(p_factor)
    p_factor.add_argument("--input", default=None,
                          help="relation JSON file; omitted means a built "
                               "orthogonal relation")

    p_max = sub.add_parser(
        "maximality",
        help="sweep candidate frames; non-orthogonal ones get witnesses",
    )
    add_common(p_max)

    p_chain = sub.add_parser(
        "chain", help="nested chain of sub-relations; union must factor",
    )
    add_common(p_chain)

    p_pair = sub.add_parser(
        "pair-ip", help="adapted inner product for one vector pair",
    )
    add_common(p_pair)
    p_pair.add_argument("--a", required=True,
                        help="first vector, e.g. --a=1,0")
    p_pair.add_argument("--b", required=True,
                        help="second vector, e.g. --b=-1,2")

    return parser


def _emit(report: Report, output: str | None) -> None:
    text = canonical_dumps(report.to_json())
    if output is None:
        print(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    seed = args.seed
    env_seed = os.environ.get("ORTHO_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            print(f"ortho: ORTHO_SEED is not an integer: {env_seed!r}",
                  file=sys.stderr)
            return 2

    try:
        config = RunConfig(
            dim=args.dim, m=args.m, frames=args.frames, points=args.points,
            bound=args.bound, seed=seed, gram=args.gram,
        )
        if args.command == "equivalence":
            report = cmd_equivalence(config)
        elif args.command == "factor":
            report = cmd_factor(config, args.input)
        elif args.command == "maximality":
            if config.m != config.dim:
                raise ValueError(
                    f"maximality needs --m equal to --dim, got m={config.m}, "
                    f"dim={config.dim}"
                )
            report = cmd_maximality(config)
        elif args.command == "chain":
            report = cmd_chain(config)
        else:
            a = parse_vector_literal(args.a)
            b = parse_vector_literal(args.b)
            if len(a) != 2 or len(b) != 2:
                raise ValueError("pair-ip expects two 2-dimensional vectors")
            if not is_independent([a, b]):
                raise ValueError(f"vectors {args.a} and {args.b} are dependent")
            report = cmd_pair_ip(config, a, b)
    except (RelationParseError, OrthoError, ValueError, OSError) as exc:
        print(f"ortho: {exc}", file=sys.stderr)
        return 2

    _emit(report, args.output)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
