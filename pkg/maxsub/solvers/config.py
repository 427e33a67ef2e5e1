"""Tunables shared by every solver."""
import enum
import math
import numbers
from dataclasses import dataclass

from ..exceptions import ConfigError

DEFAULT_EPS = 0.1
# argmax of the asymptotic guarantee over t_s, see bounds.optimize_bound_params
FLIP_POINT_DEFAULT = 0.372
# internal accuracy of the initial Sample Greedy runs
INIT_EPS = 1.0 / math.e - 0.25
# approximation factor the initializer is assumed to reach
INIT_FACTOR = 1.0 / 8.0


class PMode(str, enum.Enum):
    THEORETICAL = 'theoretical'
    PRACTICAL = 'practical'


@dataclass(frozen=True)
class SolverConfig:
    k: int
    eps: float = DEFAULT_EPS
    t_s: float = FLIP_POINT_DEFAULT
    p_mode: PMode = PMode.PRACTICAL
    seed: int = 0
    L_override: int = None
    strict_pool: bool = False

    def __post_init__(self):
        if not isinstance(self.k, numbers.Integral) or isinstance(self.k, bool) or self.k < 1:
            raise ConfigError(f'k must be a positive integer, got {self.k!r}')
        object.__setattr__(self, 'k', int(self.k))
        if not 0.0 < self.eps < 1.0:
            raise ConfigError(f'eps must lie in (0, 1), got {self.eps}')
        if not 0.0 <= self.t_s <= 1.0:
            raise ConfigError(f't_s must lie in [0, 1], got {self.t_s}')
        try:
            object.__setattr__(self, 'p_mode', PMode(self.p_mode))
        except ValueError:
            raise ConfigError(f'unknown p-mode {self.p_mode!r}') from None
        if self.L_override is not None and self.L_override < 1:
            raise ConfigError(f'L must be positive, got {self.L_override}')


def attempts_for(eps):
    """⌈log2(1/eps)⌉, at least one."""
    return max(1, math.ceil(math.log2(1.0 / eps) - 1e-12))


def iterations_for(k, eps):
    """L such that, with an INIT_FACTOR start, at most half the iterations can fail the local-opt test."""
    return math.ceil(2 * k / (INIT_FACTOR * eps * (1.0 - 1.0 / math.e)))


def sample_probability(k, eps, p_mode):
    if PMode(p_mode) is PMode.THEORETICAL:
        return 8.0 / (k * eps * eps) * math.log(2.0 / eps)
    return 8.0 / (k * eps)
