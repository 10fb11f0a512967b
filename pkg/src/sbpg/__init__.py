"""State-based potential games with best-response and gradient-based learning.

A small research package: game primitives (support grids, performance maps,
interpolation, potential-condition checks), four self-learning policies, a
continuous-flow bulk-good plant simulation, and an experiment harness with a
CLI (`sbpg train/test/compare/sweep/verify`).
"""

from sbpg.errors import ConfigurationError, PolicyNotReadyError
from sbpg.maps import BestResponseMap, GradientMap, SupportGrid, interpolate_action

__all__ = [
    "BestResponseMap",
    "ConfigurationError",
    "GradientMap",
    "PolicyNotReadyError",
    "SupportGrid",
    "interpolate_action",
]

__version__ = "0.1.0"
