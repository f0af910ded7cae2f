"""Trace-replay command line: feed an insertion/query stream to one mode.

Stream format: first significant line ``H <n>``, then ``I <u> <v>`` or ``Q``
per line; ``#`` starts a comment.  Answers stream to stdout as produced, one
line per query: integers for the exact modes, 6-significant-digit decimals
for the sampled ones.  ``--stats FILE`` serializes the run counters as JSON;
``--figures DIR`` additionally renders the report plots from them.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .approx import MultiSampleMinCut, SingleSampleMinCut
from .exact_inc import ExactMinCut
from .limited_exact import LimitedMinCut

MODES = ("exact", "limited", "approx-multi", "approx-single")


class StreamFormatError(ValueError):
    """Malformed trace line; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class StreamOp:
    kind: str  # "insert" | "query"
    u: int = -1
    v: int = -1


@dataclass
class Config:
    mode: str
    k: int | None = None
    epsilon: float | None = None
    seed: int | None = None
    sparsifier: str = "contract"
    override_k: int | None = None
    override_p: float | None = None
    stats_path: str | None = None
    figures_dir: str | None = None

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "limited" and (self.k is None or self.k < 1):
            raise ValueError("limited mode requires --k >= 1")
        if self.mode.startswith("approx"):
            if self.epsilon is None:
                raise ValueError(f"{self.mode} requires --epsilon")
            if self.seed is None:
                raise ValueError(f"{self.mode} requires --seed")


def parse_stream(text: str) -> tuple[int, list[StreamOp]]:
    n = None
    ops: list[StreamOp] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "H" or len(fields) != 2:
                raise StreamFormatError(lineno, "expected header 'H <n>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise StreamFormatError(lineno, f"bad vertex count {fields[1]!r}") from None
            if n < 2:
                raise StreamFormatError(lineno, "need at least two vertices")
            continue
        if fields[0] == "Q":
            if len(fields) != 1:
                raise StreamFormatError(lineno, "query takes no arguments")
            ops.append(StreamOp("query"))
        elif fields[0] == "I":
            if len(fields) != 3:
                raise StreamFormatError(lineno, "expected 'I <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise StreamFormatError(lineno, "vertex ids must be integers") from None
            if not (0 <= u < n and 0 <= v < n):
                raise StreamFormatError(lineno, f"vertex id out of range [0, {n})")
            if u == v:
                raise StreamFormatError(lineno, "self-loop rejected")
            ops.append(StreamOp("insert", u, v))
        else:
            raise StreamFormatError(lineno, f"unknown operation {fields[0]!r}")
    if n is None:
        raise StreamFormatError(1, "missing header 'H <n>'")
    return n, ops


def _build_state(config: Config, n: int):
    if config.mode == "exact":
        return ExactMinCut(n, sparsifier=config.sparsifier)
    if config.mode == "limited":
        return LimitedMinCut(n, config.k)
    if config.mode == "approx-multi":
        return MultiSampleMinCut(n, config.epsilon, config.seed, override_k=config.override_k)
    return SingleSampleMinCut(n, config.epsilon, config.seed,
                              override_k=config.override_k, override_p=config.override_p)


def format_answer(value, approximate: bool) -> str:
    if not approximate:
        return str(int(value))
    return f"{value:.6g}"


def run(config: Config, stream_text: str, out=None) -> tuple[list[str], dict]:
    """Replay a trace; returns the emitted answer lines and the stats dict."""
    config.validate()
    n, ops = parse_stream(stream_text)
    state = _build_state(config, n)
    approximate = config.mode.startswith("approx")
    answers: list[str] = []
    for op in ops:
        if op.kind == "insert":
            state.insert(op.u, op.v)
        else:
            line = format_answer(state.query(), approximate)
            answers.append(line)
            if out is not None:
                print(line, file=out, flush=True)
    stats = state.stats.to_json()
    stats["mode"] = config.mode
    stats["n"] = n
    stats["insertions"] = sum(1 for op in ops if op.kind == "insert")
    stats["answers"] = answers
    return answers, stats


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="mincut-stream",
        description="Replay an edge-insertion trace and answer min-cut size queries.",
    )
    parser.add_argument("input", nargs="?", help="trace file (default: standard input)")
    parser.add_argument("--mode", required=True, choices=MODES)
    parser.add_argument("--k", type=int, help="clamp for limited mode")
    parser.add_argument("--epsilon", type=float, help="approximation parameter")
    parser.add_argument("--seed", type=int, help="sampling seed for approx modes")
    parser.add_argument("--sparsifier", choices=("identity", "contract"), default="contract")
    parser.add_argument("--override-k", type=int, dest="override_k",
                        help="test knob: replace the sampled-clamp constant")
    parser.add_argument("--override-p", type=float, dest="override_p",
                        help="test knob: replace the initial sampling threshold")
    parser.add_argument("--stats", dest="stats_path", help="write run statistics JSON here")
    parser.add_argument("--figures", dest="figures_dir",
                        help="render report figures from the stats into this directory")
    args = parser.parse_args(argv)

    config = Config(mode=args.mode, k=args.k, epsilon=args.epsilon, seed=args.seed,
                    sparsifier=args.sparsifier, override_k=args.override_k,
                    override_p=args.override_p, stats_path=args.stats_path,
                    figures_dir=args.figures_dir)
    try:
        config.validate()
    except ValueError as exc:
        print(f"mincut-stream: {exc}", file=sys.stderr)
        return 2

    try:
        if args.input:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
        else:
            text = sys.stdin.read()
    except OSError as exc:
        print(f"mincut-stream: {exc}", file=sys.stderr)
        return 1

    try:
        _, stats = run(config, text, out=sys.stdout)
    except (StreamFormatError, ValueError) as exc:
        print(f"mincut-stream: {exc}", file=sys.stderr)
        return 1

    if config.stats_path:
        with open(config.stats_path, "w", encoding="utf-8") as handle:
            json.dump(stats, handle, indent=2, sort_keys=True)
            handle.write("\n")
    if config.figures_dir:
        from .report import render_report

        render_report(stats, config.figures_dir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
