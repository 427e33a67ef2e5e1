"""Project-level defaults, overridable through ``settings.MAXSUB``."""
from django.conf import settings

from .bruteforce import BRUTE_FORCE_MAX_N
from .solvers.config import DEFAULT_EPS, FLIP_POINT_DEFAULT

DEFAULTS = {
    'EPS': DEFAULT_EPS,
    'REPS': 8,
    'P_MODE': 'practical',
    'FLIP_POINT': FLIP_POINT_DEFAULT,
    'WORKERS': 1,
    'BRUTE_FORCE_MAX_N': BRUTE_FORCE_MAX_N,
    'MASTER_SEED': 0,
}


def get_setting(name):
    overrides = getattr(settings, 'MAXSUB', {})
    if name in overrides:
        return overrides[name]
    return DEFAULTS[name]
