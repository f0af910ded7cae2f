"""Render run-statistics JSON into figures.

Consumes the stats emitted by the replay CLI and writes PNGs: the answer
trajectory over queries, the rebuild counters, and the per-phase insertion
profile.  Not part of the maintenance contracts; purely a reporting aid.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _answer_values(stats: dict) -> list[float]:
    out = []
    for raw in stats.get("answers", []):
        try:
            out.append(float(raw))
        except ValueError:
            out.append(math.nan)
    return out


def render_report(stats: dict, outdir: str) -> list[str]:
    os.makedirs(outdir, exist_ok=True)
    written: list[str] = []

    answers = _answer_values(stats)
    if answers:
        fig, ax = plt.subplots(figsize=(6, 3.2))
        ax.step(range(1, len(answers) + 1), answers, where="post")
        ax.set_xlabel("query index")
        ax.set_ylabel("reported min cut")
        ax.set_title(f"answer trajectory ({stats.get('mode', '?')})")
        fig.tight_layout()
        path = os.path.join(outdir, "answers.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    counters = {
        "full": stats.get("full_rebuilds", 0),
        "partial": stats.get("partial_rebuilds", 0),
        "special": stats.get("special_steps", 0),
        "sample": stats.get("rebuild_steps", 0),
    }
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    ax.bar(list(counters), list(counters.values()), color="#4878d0")
    ax.set_ylabel("rebuild events")
    ax.set_title("rebuild accounting")
    fig.tight_layout()
    path = os.path.join(outdir, "rebuilds.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    phases = stats.get("phase_insertions", [])
    if phases:
        fig, ax = plt.subplots(figsize=(6, 3.2))
        ax.bar(range(1, len(phases) + 1), phases, color="#ee854a")
        ax.set_xlabel("phase")
        ax.set_ylabel("insertions")
        ax.set_title("insertions per phase")
        fig.tight_layout()
        path = os.path.join(outdir, "phases.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    return written


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="mincut-stream-report",
        description="Render figures from mincut-stream statistics JSON.",
    )
    parser.add_argument("stats", help="stats JSON file written by mincut-stream --stats")
    parser.add_argument("-o", "--outdir", default="report", help="output directory for PNGs")
    args = parser.parse_args(argv)
    try:
        with open(args.stats, "r", encoding="utf-8") as handle:
            stats = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"mincut-stream-report: {exc}", file=sys.stderr)
        return 1
    for path in render_report(stats, args.outdir):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
