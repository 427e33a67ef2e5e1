"""Fast local search, guided stochastic greedy and the combined driver."""
import dataclasses
import logging
import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidSolutionError
from ..oracle import Solution
from ..rng import RngStream
from .config import INIT_EPS, attempts_for, iterations_for, sample_probability

logger = logging.getLogger(__name__)

CONDITION_TOL = 1e-9


@dataclass
class LocalOptReport:
    add_gains: np.ndarray
    removal_losses: np.ndarray
    f_S: float
    satisfied: bool
    worst_t: int
    margins: np.ndarray


@dataclass
class FastLocalSearchResult:
    solution: Solution
    failed: bool
    attempts: int
    L: int
    init_queries: int
    report: LocalOptReport = None


@dataclass
class MainResult:
    solution: Solution
    failed: bool
    z_value: float = None
    a_value: float = None
    local_search: FastLocalSearchResult = None


def _rank_order(ids, gains):
    """Indices sorting by gain descending, then id ascending."""
    return np.lexsort((ids, -gains))


def guided_stochastic_greedy(h, Z, cfg, rng=None):
    """k rounds of rank-window sampling, skipping Z for the first ⌈k·t_s⌉ rounds.

    Returns the selected real elements; dummy picks are dropped.
    """
    rng = rng if rng is not None else RngStream(cfg.seed)
    ground = h.ground
    k, n = cfg.k, ground.total
    ids = ground.ids()
    in_z = np.zeros(n, dtype=bool)
    in_z[list(Z)] = True
    p = sample_probability(k, cfg.eps, cfg.p_mode)
    s1 = k / max(n - int(in_z.sum()), 1)
    s2 = k / n
    flip = math.ceil(k * cfg.t_s - 1e-12)
    S = Solution(capacity=k)
    in_s = np.zeros(n, dtype=bool)
    for i in range(1, k + 1):
        guided = i <= flip
        allowed = ~in_z if guided else np.ones(n, dtype=bool)
        if not cfg.strict_pool:
            allowed &= ~in_s
        pool = ids[allowed]
        m = len(pool)
        if m == 0:
            continue
        size = min(math.ceil(p * m), m)
        sample = rng.sample(pool, size)
        gains = h.marginals(sample, S)
        window = min(max(1.0, (s1 if guided else s2) * size), size)
        rank = min(max(math.ceil(rng.uniform_left_open(window)), 1), size)
        pick = _rank_order(sample, gains)[rank - 1]
        u = int(sample[pick])
        if gains[pick] >= 0 and u not in S:
            S.add(u)
            in_s[u] = True
    return S.strip_dummies(ground)


def init_solution(h, cfg, rng=None):
    """Best of ⌈log2(1/ε)⌉ Sample Greedy runs, padded with dummies to size k."""
    rng = rng if rng is not None else RngStream(cfg.seed)
    ground = h.ground
    greedy_cfg = dataclasses.replace(cfg, eps=INIT_EPS, t_s=0.0)
    best, best_value = None, -math.inf
    for j in range(attempts_for(cfg.eps)):
        candidate = guided_stochastic_greedy(h, Solution(), greedy_cfg, rng.child(j))
        value = h.value(candidate)
        if value > best_value:
            best, best_value = candidate, value
    logger.debug('initial solution value %g (%d real elements)', best_value, len(best))
    return Solution(best.real(ground), capacity=cfg.k).pad_with_dummies(ground, cfg.k)


def check_local_opt_condition(h, S, eps):
    """Compare the t largest add-gains with the t smallest removal losses for every t.

    The maximum over size-t outside sets of summed marginals is the sum of the
    t largest marginals (and likewise for the minimum over inside sets), so
    two sorted prefix-sum arrays decide the condition for all t at once.
    """
    ground = h.ground
    k = ground.n_dummy // 2
    if len(S) != k:
        raise InvalidSolutionError(f'expected a solution of size {k}, got {len(S)}')
    ids = ground.ids()
    outside = ids[~np.isin(ids, np.fromiter(S, dtype=np.int64, count=len(S)))]
    add = np.sort(h.marginals(outside, S))[::-1]
    _, losses = h.removal_losses(S)
    losses = np.sort(losses)
    f_S = h.value(S)
    add_prefix = np.concatenate(([0.0], np.cumsum(add[:k])))
    loss_prefix = np.concatenate(([0.0], np.cumsum(losses)))
    margins = add_prefix - loss_prefix - eps * f_S
    worst = int(np.argmax(margins))
    return LocalOptReport(add, losses, f_S, bool(margins[worst] <= CONDITION_TOL), worst, margins)


def query_budget_per_attempt(n, k, L):
    """Queries one attempt spends; ``n`` counts dummies too."""
    return 1 + L * (math.ceil(n / k) + k + 1) + (n + 1)


def fast_local_search(h, cfg, rng=None):
    rng = rng if rng is not None else RngStream(cfg.seed)
    ground = h.ground
    k, n = cfg.k, ground.total
    L = cfg.L_override or iterations_for(k, cfg.eps)
    ids = ground.ids()
    draw = min(math.ceil(n / k), n)

    start = h.queries
    S0 = init_solution(h, cfg, rng.child(0))
    init_queries = h.queries - start

    attempts = attempts_for(cfg.eps)
    stream = rng.child(1)
    report = None
    for attempt in range(attempts):
        arng = stream.child(attempt)
        S = S0.copy()
        f_S = h.value(S)
        chosen = arng.integer(L)
        snapshot = None
        for i in range(L):
            if i == chosen:
                snapshot = S.copy()
            sample = arng.sample(ids, draw)
            gains = h.marginals(sample, S)
            top = _rank_order(sample, gains)[0]
            u = int(sample[top])
            if gains[top] <= 0:
                u = next(d for d in ground.dummy_ids() if d not in S)
            members, losses = h.removal_losses(S)
            v = int(members[np.lexsort((members, losses))[0]])
            candidate = S.swapped(v, u)
            f_candidate = h.value(candidate)
            if f_candidate > f_S:
                S, f_S = candidate, f_candidate
        report = check_local_opt_condition(h, snapshot, cfg.eps)
        if report.satisfied:
            return FastLocalSearchResult(snapshot, False, attempt + 1, L, init_queries, report)
        logger.debug('attempt %d/%d: condition violated at t=%d', attempt + 1, attempts, report.worst_t)
    return FastLocalSearchResult(Solution(capacity=k), True, attempts, L, init_queries, report)


def solve_main_detailed(h, cfg, rng=None):
    rng = rng if rng is not None else RngStream(cfg.seed)
    ground = h.ground
    local = fast_local_search(h, cfg, rng.child(1))
    if local.failed:
        logger.debug('fast local search failed after %d attempts', local.attempts)
        return MainResult(Solution(capacity=cfg.k), True, local_search=local)
    Z = local.solution.strip_dummies(ground)
    A = guided_stochastic_greedy(h, local.solution, cfg, rng.child(2))
    z_value, a_value = h.value(Z), h.value(A)
    if a_value > z_value or (a_value == z_value and A.sort_key(ground) < Z.sort_key(ground)):
        best = A
    else:
        best = Z
    return MainResult(best, False, z_value, a_value, local)


def solve_main(h, cfg, rng=None):
    return solve_main_detailed(h, cfg, rng).solution
