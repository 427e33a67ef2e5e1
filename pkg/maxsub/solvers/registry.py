"""Solver names as used on the command line and in stored runs."""
from collections import namedtuple

from ..exceptions import ConfigError
from ..oracle import Solution
from ..rng import RngStream
from .baseline import guided_random_greedy, local_search, random_greedy, sample_greedy, warmup_solve
from .fast import fast_local_search, guided_stochastic_greedy, solve_main_detailed

Outcome = namedtuple('Outcome', ['solution', 'failed'])


def _main(h, cfg, rng):
    result = solve_main_detailed(h, cfg, rng)
    return Outcome(result.solution, result.failed)


def _fastls(h, cfg, rng):
    result = fast_local_search(h, cfg, rng)
    return Outcome(result.solution.strip_dummies(h.ground), result.failed)


def _guidedrg(h, cfg, rng):
    Z = local_search(h, cfg, rng.child(0))
    return Outcome(guided_random_greedy(h, Z, cfg, rng.child(1)), False)


def _guidedsg(h, cfg, rng):
    local = fast_local_search(h, cfg, rng.child(0))
    if local.failed:
        return Outcome(Solution(capacity=cfg.k), True)
    return Outcome(guided_stochastic_greedy(h, local.solution, cfg, rng.child(1)), False)


def _plain(solver):
    def run(h, cfg, rng):
        return Outcome(solver(h, cfg, rng), False)
    return run


SOLVERS = {
    'main': _main,
    'warmup': _plain(warmup_solve),
    'localsearch': _plain(local_search),
    'fastls': _fastls,
    'randomgreedy': _plain(random_greedy),
    'samplegreedy': _plain(sample_greedy),
    'guidedrg': _guidedrg,
    'guidedsg': _guidedsg,
}

SOLVER_CHOICES = list(SOLVERS)


def run_solver(name, h, cfg, rng=None):
    try:
        solver = SOLVERS[name]
    except KeyError:
        raise ConfigError(f'unknown algorithm {name!r}; choose from {", ".join(SOLVER_CHOICES)}') from None
    return solver(h, cfg, rng if rng is not None else RngStream(cfg.seed))
