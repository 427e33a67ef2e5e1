"""Exhaustive optimum, used as the ground truth of the ratio checks."""
import itertools
import logging
from dataclasses import dataclass

from .exceptions import InvalidConstraintError, SizeGuardError
from .oracle import Solution

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_N = 24
TIE_TOL = 1e-12


@dataclass
class OptCertificate:
    opt_set: Solution
    opt_value: float
    enumerated: int


def brute_force_opt(h, k, max_n=BRUTE_FORCE_MAX_N):
    """Best subset of the real elements with at most ``k`` members.

    Ties within ``TIE_TOL`` go to the lexicographically smallest sorted tuple.
    """
    n = h.ground.n_real
    if n > max_n:
        raise SizeGuardError(f'refusing to enumerate {n} elements (limit {max_n})')
    if k < 0:
        raise InvalidConstraintError(f'k must be non-negative, got {k}')
    best, best_value, enumerated = (), h.value(Solution()), 1
    for size in range(1, min(k, n) + 1):
        for combo in itertools.combinations(range(n), size):
            enumerated += 1
            value = h.value(Solution(combo))
            if value > best_value + TIE_TOL or (abs(value - best_value) <= TIE_TOL and combo < best):
                best, best_value = combo, value
    logger.debug('enumerated %d subsets of %d elements, optimum %g', enumerated, n, best_value)
    return OptCertificate(Solution(best, capacity=k), best_value, enumerated)
