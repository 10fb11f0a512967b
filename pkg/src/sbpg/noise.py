"""Mean-reverting exploration noise."""

from __future__ import annotations

from dataclasses import dataclass

from sbpg.errors import ConfigurationError


@dataclass
class OUNoise:
    """Discrete Ornstein-Uhlenbeck process, optionally clamped to +-clip.

    x_{t+1} = x_t + theta * (mu - x_t) + sigma * g,  g ~ N(0, 1)

    Without clamping the stationary standard deviation is close to
    sigma / sqrt(2 * theta) for small theta.
    """

    theta: float = 0.15
    mu: float = 0.0
    sigma: float = 0.2
    clip: float | None = 0.3
    x: float = 0.0

    def __post_init__(self) -> None:
        if self.theta <= 0:
            raise ConfigurationError(f"theta must be > 0, got {self.theta}")
        if self.sigma < 0:
            raise ConfigurationError(f"sigma must be >= 0, got {self.sigma}")

    def reset(self) -> None:
        self.x = self.mu

    def step(self, rng) -> float:
        g = rng.standard_normal() if self.sigma > 0 else 0.0
        self.x = self.x + self.theta * (self.mu - self.x) + self.sigma * g
        if self.clip is not None:
            self.x = min(self.clip, max(-self.clip, self.x))
        return self.x
