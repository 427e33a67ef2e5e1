"""Seeded experiment orchestration and aggregation."""
import logging
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import groupby

from .exceptions import ConfigError, EmptyInputError
from .loaders import load_instance
from .objectives import ObjectiveKind, SyntheticSpec, build_objective, gen_synthetic
from .oracle import OracleHandle, make_ground_set
from .rng import RngStream, derive_seed
from .solvers.config import DEFAULT_EPS, FLIP_POINT_DEFAULT, PMode, SolverConfig
from .solvers.registry import SOLVER_CHOICES, run_solver

logger = logging.getLogger(__name__)

# child key of the master seed reserved for synthetic instance generation
INSTANCE_STREAM = 1 << 16


@dataclass(frozen=True)
class RunRecord:
    algo: str
    k: int
    seed: int
    value: float
    queries: int
    wall_ms: float
    failed: bool
    rep: int = 0


@dataclass(frozen=True)
class SummaryRow:
    algo: str
    k: int
    mean_value: float
    std_value: float
    mean_queries: float
    failure_rate: float


@dataclass
class ExperimentSpec:
    """One benchmark: an instance source, the algorithms and the k sweep."""
    kind: ObjectiveKind
    algos: list
    ks: list
    data: str = None
    synthetic: SyntheticSpec = None
    lam: float = 0.75
    eps: float = DEFAULT_EPS
    t_s: float = FLIP_POINT_DEFAULT
    p_mode: PMode = PMode.PRACTICAL
    reps: int = 8
    master_seed: int = 0
    workers: int = 1
    L_override: int = None
    strict_pool: bool = False
    _instance: object = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        self.kind = ObjectiveKind(self.kind)
        if self.reps < 1:
            raise ConfigError(f'repetitions must be at least 1, got {self.reps}')
        if not self.algos:
            raise ConfigError('no algorithms selected')
        unknown = [a for a in self.algos if a not in SOLVER_CHOICES]
        if unknown:
            raise ConfigError(f'unknown algorithms: {", ".join(unknown)}')
        if not self.ks:
            raise ConfigError('empty k sweep')
        if (self.data is None) == (self.synthetic is None):
            raise ConfigError('give exactly one of a data file or a synthetic instance')

    def instance(self):
        if self._instance is None:
            if self.data is not None:
                self._instance = load_instance(self.data, self.kind, self.lam)
            else:
                self._instance = gen_synthetic(self.synthetic, RngStream(self.master_seed).child(INSTANCE_STREAM))
        return self._instance

    def config(self, k, seed):
        return SolverConfig(k=k, eps=self.eps, t_s=self.t_s, p_mode=self.p_mode, seed=seed,
                            L_override=self.L_override, strict_pool=self.strict_pool)


def run_single(inst, algo, cfg, rep=0):
    """One seeded run on a fresh oracle handle."""
    handle = OracleHandle(build_objective(inst), make_ground_set(inst.n, cfg.k))
    start = time.perf_counter()
    outcome = run_solver(algo, handle, cfg)
    wall_ms = (time.perf_counter() - start) * 1000.0
    value = handle.audit_value(outcome.solution)
    return RunRecord(algo, cfg.k, cfg.seed, value, handle.queries, wall_ms, outcome.failed, rep)


def _run_job(job):
    return run_single(*job)


def run_experiment(spec):
    inst = spec.instance()
    too_large = [k for k in spec.ks if not 1 <= k <= inst.n]
    if too_large:
        raise ConfigError(f'k values {too_large} do not fit an instance of {inst.n} elements')
    jobs = []
    for algo_index, algo in enumerate(spec.algos):
        for k in spec.ks:
            for rep in range(spec.reps):
                seed = derive_seed(spec.master_seed, algo_index, k, rep)
                jobs.append((inst, algo, spec.config(k, seed), rep))
    logger.info('running %d jobs (%d algorithms, %d k values, %d repetitions) on %d workers',
                len(jobs), len(spec.algos), len(spec.ks), spec.reps, spec.workers)
    if spec.workers > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            records = list(pool.map(_run_job, jobs))
    else:
        records = [_run_job(job) for job in jobs]
    logger.info('experiment finished: %d records', len(records))
    return records


def summarize(records):
    """Per (algo, k) mean and population std of the value, mean queries, failure rate."""
    if not records:
        raise EmptyInputError('cannot summarize an empty record list')
    rows = []
    keyed = sorted(records, key=lambda r: (r.algo, r.k))
    for (algo, k), group in groupby(keyed, key=lambda r: (r.algo, r.k)):
        group = list(group)
        values = [r.value for r in group]
        rows.append(SummaryRow(
            algo=algo,
            k=k,
            mean_value=statistics.fmean(values),
            std_value=statistics.pstdev(values),
            mean_queries=statistics.fmean(r.queries for r in group),
            failure_rate=sum(r.failed for r in group) / len(group),
        ))
    return rows
