"""Classical local search, guided random greedy and the prior-art baselines."""
import dataclasses
import logging

import numpy as np

from ..oracle import Solution
from ..rng import RngStream
from .fast import guided_stochastic_greedy, init_solution

logger = logging.getLogger(__name__)


def _accepts(improvement, f_S, k, eps):
    # from f(S) = 0 any strict improvement counts
    return improvement > 0 and improvement >= eps / k * f_S


def _best_add(h, S, f_S, cfg):
    reals = np.arange(h.ground.n_real)
    outside = reals[~np.isin(reals, S.elements)]
    if len(outside) == 0:
        return None
    gains = h.marginals(outside, S)
    top = int(np.argmax(gains))
    if not _accepts(gains[top], f_S, cfg.k, cfg.eps):
        return None
    result = S.copy()
    result.add(outside[top])
    return result, f_S + float(gains[top])


def _best_swap(h, S, f_S, cfg):
    reals = np.arange(h.ground.n_real)
    outside = reals[~np.isin(reals, S.elements)]
    if len(outside) == 0:
        return None
    best = None
    for v in sorted(S):
        reduced = S.copy()
        reduced.remove(v)
        base = h.value(reduced)
        totals = base + h.marginals(outside, reduced)
        top = int(np.argmax(totals))
        if best is None or totals[top] > best[0]:
            best = (float(totals[top]), v, int(outside[top]))
    value, v, u = best
    if not _accepts(value - f_S, f_S, cfg.k, cfg.eps):
        return None
    return S.swapped(v, u), value


def _best_delete(h, S, f_S, cfg):
    members, losses = h.removal_losses(S)
    pick = int(np.lexsort((members, losses))[0])
    if not _accepts(-float(losses[pick]), f_S, cfg.k, cfg.eps):
        return None
    result = S.copy()
    result.remove(members[pick])
    return result, f_S - float(losses[pick])


def local_search(h, cfg, rng=None):
    """Add, swap or delete while some move lifts f by a (1 + ε/k) factor."""
    rng = rng if rng is not None else RngStream(cfg.seed)
    ground = h.ground
    S = Solution(init_solution(h, cfg, rng.child(0)).real(ground), capacity=cfg.k)
    f_S = h.value(S)
    moves = 0
    while True:
        if len(S) < cfg.k:
            move = _best_add(h, S, f_S, cfg)
        else:
            move = _best_swap(h, S, f_S, cfg)
        if move is None and len(S) > 0:
            move = _best_delete(h, S, f_S, cfg)
        if move is None:
            break
        S, f_S = move
        moves += 1
    logger.debug('local search stopped after %d moves at %g', moves, f_S)
    return S


def guided_random_greedy(h, Z, cfg, rng=None):
    """k rounds adding a uniform member of the top-k marginal candidates."""
    rng = rng if rng is not None else RngStream(cfg.seed)
    ground = h.ground
    k, n = cfg.k, ground.total
    ids = ground.ids()
    in_z = np.zeros(n, dtype=bool)
    in_z[list(Z)] = True
    flip = int(np.ceil(k * cfg.t_s - 1e-12))
    S = Solution(capacity=k)
    in_s = np.zeros(n, dtype=bool)
    for i in range(1, k + 1):
        allowed = ~in_s & ~in_z if i <= flip else ~in_s
        pool = ids[allowed]
        gains = h.marginals(pool, S)
        candidates = list(pool[np.lexsort((pool, -gains))[:k]])
        if len(candidates) < k:
            spare = (d for d in ground.dummy_ids() if not in_s[d] and d not in candidates)
            while len(candidates) < k:
                candidates.append(next(spare))
        u = int(candidates[rng.integer(k)])
        S.add(u)
        in_s[u] = True
    return S.strip_dummies(ground)


def random_greedy(h, cfg, rng=None):
    return guided_random_greedy(h, Solution(), dataclasses.replace(cfg, t_s=0.0), rng)


def sample_greedy(h, cfg, rng=None):
    return guided_stochastic_greedy(h, Solution(), dataclasses.replace(cfg, t_s=0.0), rng)


def warmup_solve(h, cfg, rng=None, stochastic=False):
    """Local search, then a greedy pass guided away from its output; keep the better."""
    rng = rng if rng is not None else RngStream(cfg.seed)
    ground = h.ground
    Z = local_search(h, cfg, rng.child(0))
    if stochastic:
        A = guided_stochastic_greedy(h, Z, cfg, rng.child(1))
    else:
        A = guided_random_greedy(h, Z, cfg, rng.child(1))
    z_value, a_value = h.value(Z), h.value(A)
    if a_value > z_value or (a_value == z_value and A.sort_key(ground) < Z.sort_key(ground)):
        return A
    return Z
