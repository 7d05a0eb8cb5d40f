"""Trajectory containers and the line-delimited dataset file format.

A trajectory is an ordered sequence of (state, action) pairs with optional
per-step rewards.  Datasets are stored as JSON-lines files, one record per
trajectory: ``{"episode_id", "states", "actions", "rewards", "label"}``
where ``rewards`` and ``label`` may be null.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

FORMAT_VERSION = 1


@dataclass
class Trajectory:
    """States, actions, and optional rewards for one episode or segment."""

    states: np.ndarray
    actions: np.ndarray
    rewards: np.ndarray | None = None

    def __post_init__(self):
        self.states = _as_step_matrix(self.states, "states")
        self.actions = _as_step_matrix(self.actions, "actions")
        if len(self.states) != len(self.actions):
            raise ValueError(
                f"states and actions disagree on length: "
                f"{len(self.states)} vs {len(self.actions)}"
            )
        if self.rewards is not None:
            self.rewards = np.asarray(self.rewards, dtype=np.float64).reshape(-1)
            if len(self.rewards) != len(self.states):
                raise ValueError(
                    f"rewards length {len(self.rewards)} does not match "
                    f"trajectory length {len(self.states)}"
                )

    def __len__(self) -> int:
        return len(self.states)

    @property
    def length(self) -> int:
        return len(self.states)

    def segment(self, start: int, stop: int) -> "Trajectory":
        """Contiguous sub-trajectory covering steps [start, stop)."""
        if not (0 <= start < stop <= len(self)):
            raise ValueError(f"invalid segment bounds [{start}, {stop}) for length {len(self)}")
        rewards = None if self.rewards is None else self.rewards[start:stop]
        return Trajectory(self.states[start:stop], self.actions[start:stop], rewards)


def _as_step_matrix(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be a (length, dim) array, got shape {arr.shape}")
    return arr


@dataclass
class LabeledSegment:
    """A (sub)trajectory plus its binary safety label (1 = safe)."""

    trajectory: Trajectory
    label: int

    def __post_init__(self):
        if self.label not in (0, 1):
            raise ValueError(f"label must be 0 or 1, got {self.label}")


def save_trajectories(
    path: str | Path,
    trajectories: Sequence[Trajectory],
    labels: Sequence[int | None] | None = None,
    episode_ids: Sequence[int] | None = None,
) -> None:
    """Write trajectories as one JSON record per line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as f:
        for i, traj in enumerate(trajectories):
            record = {
                "episode_id": int(episode_ids[i]) if episode_ids is not None else i,
                "states": traj.states.tolist(),
                "actions": traj.actions.tolist(),
                "rewards": None if traj.rewards is None else traj.rewards.tolist(),
                "label": None if labels is None or labels[i] is None else int(labels[i]),
            }
            f.write(json.dumps(record) + "\n")


def load_trajectories(path: str | Path) -> list[tuple[int, Trajectory, int | None]]:
    """Read a JSON-lines trajectory file into (episode_id, trajectory, label) tuples."""
    out = []
    with Path(path).open() as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            traj = Trajectory(rec["states"], rec["actions"], rec.get("rewards"))
            label = rec.get("label")
            out.append((int(rec["episode_id"]), traj, None if label is None else int(label)))
    return out


def save_segments(path: str | Path, segments: Iterable[LabeledSegment]) -> None:
    segments = list(segments)
    save_trajectories(
        path,
        [s.trajectory for s in segments],
        labels=[s.label for s in segments],
    )


def load_segments(path: str | Path) -> list[LabeledSegment]:
    out = []
    for _, traj, label in load_trajectories(path):
        if label is None:
            raise ValueError(f"segment dataset {path} contains a record without a label")
        out.append(LabeledSegment(traj, label))
    return out
