"""Discretized state space and per-cell performance maps.

A performance map is the policy representation: a regular grid of support
points over the normalized state cube, with learned action information per
cell. The best-response flavor keeps the single best (action, utility) pair
seen in each cell; the gradient flavor keeps a bounded window of recent
(action, utility) samples. Exploitation interpolates over all visited cells
with inverse-squared-distance weights.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from sbpg.errors import ConfigurationError, PolicyNotReadyError

log = logging.getLogger(__name__)

Cell = tuple[int, ...]


@dataclass(frozen=True)
class SupportGrid:
    """Equally spaced support points over [0, 1]^dims, `resolution` per axis."""

    dims: int
    resolution: int

    def __post_init__(self) -> None:
        if self.dims < 1:
            raise ConfigurationError(f"grid dims must be >= 1, got {self.dims}")
        if self.resolution < 2:
            raise ConfigurationError(
                f"grid resolution must be >= 2 so support spans [0, 1], got {self.resolution}"
            )

    @property
    def centers(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.resolution)

    @property
    def cell_count(self) -> int:
        return self.resolution**self.dims

    def locate(self, state) -> Cell:
        """Nearest support point; exact ties resolve to the lower index."""
        if len(state) != self.dims:
            raise ConfigurationError(
                f"state has {len(state)} components, grid expects {self.dims}"
            )
        scale = self.resolution - 1
        idx = []
        for x in state:
            if not (0.0 <= x <= 1.0) or not math.isfinite(x):
                raise ConfigurationError(f"state component {x!r} outside [0, 1]")
            k = math.ceil(x * scale - 0.5)
            idx.append(min(scale, max(0, k)))
        return tuple(idx)

    def support(self, cell: Cell) -> tuple[float, ...]:
        scale = self.resolution - 1
        return tuple(k / scale for k in cell)


class BestResponseMap:
    """Per-cell maximum of explored (action, utility) pairs.

    A cell only changes when a strictly better utility arrives, so the stored
    utility is non-decreasing over the lifetime of a run.
    """

    def __init__(self, grid: SupportGrid):
        self.grid = grid
        shape = (grid.resolution,) * grid.dims
        self.actions = np.zeros(shape)
        self.utilities = np.full(shape, -np.inf)
        self.visited = np.zeros(shape, dtype=bool)
        self._cache: tuple[np.ndarray, np.ndarray] | None = None

    def update(self, cell: Cell, action: float, utility: float) -> bool:
        """Apply the max rule; returns True when the cell was replaced."""
        if not (math.isfinite(action) and math.isfinite(utility)):
            log.warning("rejecting non-finite sample (a=%r, u=%r) at %s", action, utility, cell)
            return False
        if utility > self.utilities[cell]:
            self.utilities[cell] = utility
            self.actions[cell] = action
            self.visited[cell] = True
            self._cache = None
            return True
        return False

    def representative(self) -> tuple[np.ndarray, np.ndarray]:
        """(visited support coordinates, their stored actions)."""
        if self._cache is None:
            idx = np.argwhere(self.visited)
            self._cache = (self.grid.centers[idx], self.actions[self.visited])
        return self._cache

    def records(self):
        for cell in np.argwhere(self.visited):
            cell = tuple(int(k) for k in cell)
            yield cell, self.actions[cell], self.utilities[cell], 1


class GradientMap:
    """Per-cell sliding window of explored (action, utility) samples.

    Every cell starts from the pseudo-sample (0, 0), which seeds the first
    gradient step; it falls out of the window like any other entry. The most
    recent entry of a cell is its representative action for interpolation.
    """

    def __init__(self, grid: SupportGrid, window: int = 8):
        if window < 2:
            raise ConfigurationError(f"sample window must be >= 2, got {window}")
        self.grid = grid
        self.window = window
        self.stacks: dict[Cell, list[tuple[float, float]]] = {}
        shape = (grid.resolution,) * grid.dims
        self.actions = np.zeros(shape)
        self.visited = np.zeros(shape, dtype=bool)
        self._cache: tuple[np.ndarray, np.ndarray] | None = None

    def stack(self, cell: Cell) -> list[tuple[float, float]]:
        return self.stacks.setdefault(cell, [(0.0, 0.0)])

    def push(self, cell: Cell, action: float, utility: float) -> bool:
        if not (math.isfinite(action) and math.isfinite(utility)):
            log.warning("rejecting non-finite sample (a=%r, u=%r) at %s", action, utility, cell)
            return False
        stack = self.stack(cell)
        stack.append((float(action), float(utility)))
        if len(stack) > self.window:
            del stack[0]
        self.actions[cell] = action
        self.visited[cell] = True
        self._cache = None
        return True

    def representative(self) -> tuple[np.ndarray, np.ndarray]:
        if self._cache is None:
            idx = np.argwhere(self.visited)
            self._cache = (self.grid.centers[idx], self.actions[self.visited])
        return self._cache

    def records(self):
        for cell in np.argwhere(self.visited):
            cell = tuple(int(k) for k in cell)
            stack = self.stacks[cell]
            action, utility = stack[-1]
            yield cell, action, utility, len(stack)


@dataclass
class FrozenMap:
    """Exploitation-only map rebuilt from an exported file."""

    grid: SupportGrid
    cells: list[Cell]
    cell_actions: list[float] = field(default_factory=list)

    def representative(self) -> tuple[np.ndarray, np.ndarray]:
        coords = np.array([self.grid.support(c) for c in self.cells])
        return coords, np.asarray(self.cell_actions)


def interpolate_action(pmap, state, gamma: float) -> float:
    """Distance-weighted blend of all visited cells' actions.

    Weights are 1 / (D^2 + gamma) with D the Euclidean distance from the
    query state to each visited support point. With gamma = 0 a query that
    lands exactly on a visited support point returns that cell's action
    (avoids the 1/0 weight); the result is clamped to [0, 1].
    """
    if gamma < 0:
        raise ConfigurationError(f"gamma must be >= 0, got {gamma}")
    coords, actions = pmap.representative()
    if len(actions) == 0:
        raise PolicyNotReadyError("no visited cells to interpolate from")
    d2 = np.sum((coords - np.asarray(state, dtype=float)) ** 2, axis=1)
    if gamma == 0.0:
        hit = np.nonzero(d2 == 0.0)[0]
        if hit.size:
            return float(np.clip(actions[hit[0]], 0.0, 1.0))
    weights = 1.0 / (d2 + gamma)
    value = float(np.dot(weights, actions) / np.sum(weights))
    return float(np.clip(value, 0.0, 1.0))


MAP_EXPORT_FIELDS = ("action", "utility", "stack_depth")


def export_map(pmap, path) -> None:
    """One CSV row per visited cell: indices, support coords, action, utility, depth."""
    dims = pmap.grid.dims
    header = (
        [f"cell_{i}" for i in range(dims)]
        + [f"support_{i}" for i in range(dims)]
        + list(MAP_EXPORT_FIELDS)
    )
    rows = sorted(pmap.records(), key=lambda r: r[0])
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for cell, action, utility, depth in rows:
            support = pmap.grid.support(cell)
            writer.writerow(
                [*cell, *(repr(s) for s in support), repr(float(action)), repr(float(utility)), depth]
            )


def load_map(path, grid: SupportGrid | None = None) -> FrozenMap:
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        dims = sum(1 for name in header if name.startswith("cell_"))
        cells, actions = [], []
        resolution = 2
        for row in reader:
            cell = tuple(int(v) for v in row[:dims])
            cells.append(cell)
            actions.append(float(row[2 * dims]))
            # support columns are k / (L - 1); any nonzero index recovers L
            for k, s in zip(cell, row[dims : 2 * dims]):
                if k > 0:
                    resolution = max(resolution, round(k / float(s)) + 1)
    if grid is None:
        grid = SupportGrid(dims=dims, resolution=resolution)
    return FrozenMap(grid=grid, cells=cells, cell_actions=actions)
