"""Synthetic games with closed-form utilities for verifying game conditions.

Two sampled checks are provided: alignment of unilateral utility deviations
with the shared objective, and monotonicity of the objective along the state
transition rule. The stock construction gives every player the identical
objective phi(a, s) = -sum_j (a_j - mean(s))^2, which satisfies the first
condition exactly, and a transition that relaxes the state toward the joint
action mean, which satisfies the second by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass
class ReferenceGame:
    """Closed-form test game: per-player utilities, shared objective, transition."""

    n_players: int
    state_dim: int
    utility: Callable[[int, np.ndarray, np.ndarray], float]
    potential: Callable[[np.ndarray, np.ndarray], float]
    transition: Callable[[np.ndarray, np.ndarray], np.ndarray]
    initial_state: np.ndarray


def exact_potential_game(n_players: int, relax: float = 0.25) -> ReferenceGame:
    """Players share phi = -sum (a_j - mean(s))^2; state relaxes toward mean(a)."""

    def potential(a, s):
        target = float(np.mean(s))
        return -float(np.sum((np.asarray(a) - target) ** 2))

    def utility(i, a, s):
        return potential(a, s)

    def transition(a, s):
        pull = float(np.mean(a))
        return np.asarray(s) + relax * (pull - np.asarray(s))

    return ReferenceGame(
        n_players=n_players,
        state_dim=n_players,
        utility=utility,
        potential=potential,
        transition=transition,
        initial_state=np.full(n_players, 0.5),
    )


def single_target_game(target: float) -> ReferenceGame:
    """One player, fixed optimum at `target`, frozen state. For learner tests."""

    def potential(a, s):
        return -float((a[0] - target) ** 2)

    return ReferenceGame(
        n_players=1,
        state_dim=1,
        utility=lambda i, a, s: potential(a, s),
        potential=potential,
        transition=lambda a, s: np.asarray(s),
        initial_state=np.zeros(1),
    )


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    max_residual: float
    samples: int
    violations: int = 0

    def __bool__(self) -> bool:
        return self.passed


def verify_potential_condition(
    game: ReferenceGame, samples: int, tolerance: float = 1e-9, rng=None
) -> CheckResult:
    """Sampled check that unilateral utility changes equal objective changes.

    Draws random (player, joint action, deviation, state) tuples and compares
    u_i(a) - u_i(a') against phi(a) - phi(a') for the single-coordinate
    deviation a'. Passes when the largest residual stays within tolerance.
    """
    rng = np.random.default_rng(rng)
    worst = 0.0
    violations = 0
    for _ in range(samples):
        i = int(rng.integers(game.n_players))
        a = rng.random(game.n_players)
        s = rng.random(game.state_dim)
        a_dev = a.copy()
        a_dev[i] = rng.random()
        du = game.utility(i, a, s) - game.utility(i, a_dev, s)
        dphi = game.potential(a, s) - game.potential(a_dev, s)
        residual = abs(du - dphi)
        if residual > tolerance:
            violations += 1
        worst = max(worst, residual)
    return CheckResult(violations == 0, worst, samples, violations)


def verify_state_transition_condition(
    game: ReferenceGame, samples: int, tolerance: float = 1e-9, rng=None
) -> CheckResult:
    """Sampled check that the objective never decreases along a transition."""
    rng = np.random.default_rng(rng)
    worst = 0.0
    violations = 0
    for _ in range(samples):
        a = rng.random(game.n_players)
        s = rng.random(game.state_dim)
        before = game.potential(a, s)
        after = game.potential(a, game.transition(a, s))
        drop = before - after
        if drop > tolerance:
            violations += 1
        worst = max(worst, drop)
    return CheckResult(violations == 0, worst, samples, violations)
