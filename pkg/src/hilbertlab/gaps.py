"""Finite windows of strictly increasing sequences with their gap profile.

A window stores nodes lam_0, ..., lam_{N+1}. Indices 1..N are active; the
two endpoints are ghost nodes that exist only so that

    delta_k = min(lam_k - lam_{k-1}, lam_{k+1} - lam_k)

is defined for every active index. Instances are immutable and safe to
share across threads.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import IndexOutOfRange, NegativeEntry, NotIncreasing, TooShort


@dataclass(frozen=True, eq=False)
class GapSequence:
    nodes: np.ndarray

    def __post_init__(self):
        arr = np.array(self.nodes, dtype=float)
        if arr.ndim != 1 or arr.size < 3:
            raise TooShort(f"need at least 3 nodes, got shape {arr.shape}")
        if not np.all(np.diff(arr) > 0):
            raise NotIncreasing("nodes must be strictly increasing")
        arr.setflags(write=False)
        object.__setattr__(self, "nodes", arr)

    @property
    def n(self) -> int:
        """Number of active nodes."""
        return self.nodes.size - 2

    @property
    def active(self) -> np.ndarray:
        """The active nodes lam_1 .. lam_N."""
        return self.nodes[1:-1]

    @cached_property
    def deltas(self) -> np.ndarray:
        """delta_k for k = 1..N (0-indexed array of length N)."""
        diffs = np.diff(self.nodes)
        out = np.minimum(diffs[:-1], diffs[1:])
        out.setflags(write=False)
        return out

    def delta(self, k: int) -> float:
        """delta_k for a 1-indexed active index k."""
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"k={k} outside 1..{self.n}")
        return float(self.deltas[k - 1])

    def to_json(self) -> str:
        return json.dumps({"nodes": self.nodes.tolist(), "n": self.n})


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Nonnegative coefficients paired with the active nodes of a window."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError(f"weights must be a nonempty vector, got shape {arr.shape}")
        if np.any(arr < 0):
            raise NegativeEntry("weights must be nonnegative")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return self.values.size


def new_gap_sequence(nodes) -> GapSequence:
    """Validate a raw node vector (ghosts included) into a GapSequence."""
    return GapSequence(np.asarray(nodes, dtype=float))


def generate_uniform(n: int, spacing: float) -> GapSequence:
    """lam_k = k * spacing for k = 0..n+1, so every delta equals spacing."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if spacing <= 0:
        raise ValueError(f"spacing must be positive, got {spacing}")
    return GapSequence(np.arange(n + 2, dtype=float) * spacing)


def generate_cluster(n: int) -> GapSequence:
    """Unit-spaced head followed by a cluster of n-1 nodes at spacing 1/n.

    Active deltas: delta_1 = 1 and delta_k = 1/n for 2 <= k <= n.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    tail = 2.0 + np.arange(1, n, dtype=float) / n
    return GapSequence(np.concatenate(([0.0, 1.0, 2.0], tail)))


def generate_random(n: int, min_gap: float, seed: int) -> GapSequence:
    """Seeded window with gaps drawn uniformly from [min_gap, 10*min_gap]."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if min_gap <= 0:
        raise ValueError(f"min_gap must be positive, got {min_gap}")
    rng = np.random.default_rng(seed)
    gaps = rng.uniform(min_gap, 10.0 * min_gap, size=n + 1)
    nodes = np.concatenate(([0.0], np.cumsum(gaps)))
    return GapSequence(nodes)


def from_json(text: str) -> GapSequence:
    """Parse the {"nodes": [...], "n": N} serialization."""
    payload = json.loads(text)
    seq = new_gap_sequence(payload["nodes"])
    if "n" in payload and int(payload["n"]) != seq.n:
        raise ValueError(f"inconsistent serialization: n={payload['n']} but {seq.n} active nodes")
    return seq


def from_csv(path) -> GapSequence:
    """Import a node vector from a file with one node per line."""
    with open(path, "r", encoding="utf-8") as fh:
        nodes = [float(line.strip()) for line in fh if line.strip()]
    return new_gap_sequence(nodes)
