"""Run counters shared by the maintenance modes and serialized by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class RunStats:
    """Rebuild/phase accounting.

    ``phase_insertions`` holds one entry per finished phase (insertions seen
    while the tracked cut value stayed put); ``lambda_h_history`` records
    (superphase index, value) pairs at every phase start; ``sparsifier_sizes``
    records (n_H, m_H) at every full rebuild.
    """

    full_rebuilds: int = 0
    partial_rebuilds: int = 0
    special_steps: int = 0
    rebuild_steps: int = 0
    max_stored_edges: int = 0
    approx_fallbacks: int = 0
    phase_insertions: list[int] = field(default_factory=list)
    superphase_vertices: list[int] = field(default_factory=list)
    sparsifier_sizes: list[tuple[int, int]] = field(default_factory=list)
    lambda_h_history: list[tuple[int, int]] = field(default_factory=list)
    lambda_star_history: list[int] = field(default_factory=list)
    _current_phase: int = 0

    def note_insertion(self) -> None:
        self._current_phase += 1

    def close_phase(self) -> None:
        self.phase_insertions.append(self._current_phase)
        self._current_phase = 0

    def note_stored_edges(self, count: int) -> None:
        if count > self.max_stored_edges:
            self.max_stored_edges = count

    def to_json(self) -> dict:
        return {
            "full_rebuilds": self.full_rebuilds,
            "partial_rebuilds": self.partial_rebuilds,
            "special_steps": self.special_steps,
            "rebuild_steps": self.rebuild_steps,
            "max_stored_edges": self.max_stored_edges,
            "approx_fallbacks": self.approx_fallbacks,
            "phase_insertions": list(self.phase_insertions),
            "superphase_vertices": list(self.superphase_vertices),
            "sparsifier_sizes": [list(t) for t in self.sparsifier_sizes],
            "lambda_h_history": [list(t) for t in self.lambda_h_history],
            "lambda_star_history": list(self.lambda_star_history),
        }
