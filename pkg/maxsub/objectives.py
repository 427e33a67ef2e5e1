"""Application objectives, their incremental states and synthetic instances."""
import enum
import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigError, ShapeError, WrongObjectiveError

logger = logging.getLogger(__name__)

DEFAULT_FEATURE_DIM = 25


class ObjectiveKind(str, enum.Enum):
    COVERAGE = 'coverage-diversity'
    FACILITY = 'facility-diversity'
    CUT = 'graph-cut'

    @classmethod
    def from_cli(cls, name):
        aliases = {'coverage': cls.COVERAGE, 'facility': cls.FACILITY, 'cut': cls.CUT}
        if name in aliases:
            return aliases[name]
        try:
            return cls(name)
        except ValueError:
            raise ConfigError(f'unknown objective {name!r}') from None

    @property
    def cli_name(self):
        return {ObjectiveKind.COVERAGE: 'coverage',
                ObjectiveKind.FACILITY: 'facility',
                ObjectiveKind.CUT: 'cut'}[self]

    @property
    def is_graph(self):
        return self is ObjectiveKind.CUT


@dataclass(frozen=True, eq=False)
class Instance:
    """Immutable ground-set data: a similarity matrix or a weighted graph."""
    kind: ObjectiveKind
    payload: np.ndarray
    lam: float = None

    def __post_init__(self):
        kind = ObjectiveKind(self.kind)
        payload = np.array(self.payload, dtype=float)
        if payload.ndim != 2 or payload.shape[0] != payload.shape[1]:
            raise ShapeError(f'expected a square matrix, got shape {payload.shape}')
        if payload.shape[0] < 1:
            raise ShapeError('instance needs at least one element')
        if not np.all(np.isfinite(payload)):
            raise ConfigError('instance data contains non-finite entries')
        if np.any(payload < 0):
            raise ConfigError('instance data must be non-negative')
        if kind.is_graph:
            if not np.array_equal(payload, payload.T):
                raise ConfigError('graph weights must be symmetric')
            if np.any(np.diag(payload) != 0):
                raise ConfigError('graph must not contain self-loops')
        lam = self.lam
        if kind is ObjectiveKind.COVERAGE:
            if lam is None or not 0.0 <= lam <= 1.0:
                raise ConfigError(f'coverage-diversity needs lambda in [0, 1], got {lam}')
            lam = float(lam)
        payload.setflags(write=False)
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'payload', payload)
        object.__setattr__(self, 'lam', lam)

    @property
    def n(self):
        return self.payload.shape[0]


def _real_ids(inst, S):
    return np.array(sorted(int(u) for u in S if int(u) < inst.n), dtype=np.int64)


def _expect(inst, kind):
    if inst.kind is not kind:
        raise WrongObjectiveError(f'expected a {kind.value} instance, got {inst.kind.value}')


def _coverage(sim, lam, ids):
    if len(ids) == 0:
        return 0.0
    return float(sim[:, ids].sum() - lam * sim[np.ix_(ids, ids)].sum())


def _facility(sim, ids):
    if len(ids) == 0:
        return 0.0
    return float(sim[:, ids].max(axis=1).sum() - sim[np.ix_(ids, ids)].sum() / sim.shape[0])


def _cut(weights, ids):
    if len(ids) == 0:
        return 0.0
    outside = np.ones(weights.shape[0], dtype=bool)
    outside[ids] = False
    return float(weights[np.ix_(ids, np.flatnonzero(outside))].sum())


def coverage_diversity_value(inst, S):
    _expect(inst, ObjectiveKind.COVERAGE)
    return _coverage(inst.payload, inst.lam, _real_ids(inst, S))


def facility_diversity_value(inst, S):
    _expect(inst, ObjectiveKind.FACILITY)
    return _facility(inst.payload, _real_ids(inst, S))


def cut_value(inst, S):
    _expect(inst, ObjectiveKind.CUT)
    return _cut(inst.payload, _real_ids(inst, S))


class ObjectiveState:
    """Running f(S) plus whatever per-element sums make marginals cheap.

    Subclasses implement ``gains`` (f(u | S) for u outside S), ``losses``
    (f(v | S - v) for v in S) and the ``_insert``/``_delete`` hooks.
    """

    def __init__(self, n):
        self.n = n
        self.value = 0.0
        self.in_set = np.zeros(n, dtype=bool)
        self.members = set()

    def add(self, u):
        gain = float(self.gains(np.array([u]))[0])
        self.members.add(u)
        self.in_set[u] = True
        self._insert(u)
        self.value += gain

    def remove(self, v):
        loss = float(self.losses(np.array([v]))[0])
        self.members.discard(v)
        self.in_set[v] = False
        self._delete(v)
        self.value -= loss

    def gains(self, ids):
        raise NotImplementedError

    def losses(self, ids):
        raise NotImplementedError

    def _insert(self, u):
        pass

    def _delete(self, v):
        pass


class RecomputingState(ObjectiveState):
    """Fallback for objectives without incremental support."""

    def __init__(self, objective):
        super().__init__(objective.n)
        self._objective = objective

    def gains(self, ids):
        base = sorted(self.members)
        return np.array([self._objective.evaluate(base + [int(u)]) - self.value for u in ids])

    def losses(self, ids):
        base = set(self.members)
        return np.array([self.value - self._objective.evaluate(sorted(base - {int(v)})) for v in ids])


class CoverageState(ObjectiveState):

    def __init__(self, sim, lam):
        super().__init__(sim.shape[0])
        self._lam = lam
        self._col = sim.sum(axis=0)
        self._diag = np.diag(sim).copy()
        self._sym = (sim + sim.T) / 2.0
        self._inner = np.zeros(self.n)

    def gains(self, ids):
        return self._col[ids] - self._lam * (2.0 * self._inner[ids] + self._diag[ids])

    def losses(self, ids):
        return self._col[ids] - self._lam * (2.0 * self._inner[ids] - self._diag[ids])

    def _insert(self, u):
        self._inner += self._sym[u]

    def _delete(self, v):
        self._inner -= self._sym[v]


class FacilityState(ObjectiveState):
    """Keeps the best and second-best similarity of every row to S.

    Removals recompute only the rows whose top two may have involved the
    removed element.
    """

    def __init__(self, sim):
        super().__init__(sim.shape[0])
        self._sim = sim
        self._pen = 1.0 / self.n
        self._diag = np.diag(sim).copy()
        self._sym = (sim + sim.T) / 2.0
        self._inner = np.zeros(self.n)
        self._best = np.zeros(self.n)
        self._second = np.zeros(self.n)
        self._arg = np.full(self.n, -1, dtype=np.int64)

    def gains(self, ids):
        cover = np.maximum(self._sim[:, ids] - self._best[:, None], 0.0).sum(axis=0)
        return cover - self._pen * (2.0 * self._inner[ids] + self._diag[ids])

    def losses(self, ids):
        owned = self._arg >= 0
        drop = np.bincount(self._arg[owned], weights=(self._best - self._second)[owned], minlength=self.n)
        return drop[ids] - self._pen * (2.0 * self._inner[ids] - self._diag[ids])

    def _insert(self, u):
        col = self._sim[:, u]
        better = col > self._best
        self._second = np.where(better, self._best, np.maximum(self._second, col))
        self._arg = np.where(better, u, self._arg)
        self._best = np.where(better, col, self._best)
        self._inner += self._sym[u]

    def _delete(self, v):
        self._inner -= self._sym[v]
        rows = np.flatnonzero((self._arg == v) | (self._sim[:, v] >= self._second))
        if len(rows) == 0:
            return
        members = np.array(sorted(self.members), dtype=np.int64)
        if len(members) == 0:
            self._best[rows] = 0.0
            self._second[rows] = 0.0
            self._arg[rows] = -1
            return
        sub = self._sim[np.ix_(rows, members)]
        top = sub.argmax(axis=1)
        self._best[rows] = sub[np.arange(len(rows)), top]
        self._arg[rows] = members[top]
        if len(members) == 1:
            self._second[rows] = 0.0
        else:
            self._second[rows] = np.partition(sub, len(members) - 2, axis=1)[:, len(members) - 2]


class CutState(ObjectiveState):

    def __init__(self, weights):
        super().__init__(weights.shape[0])
        self._w = weights
        self._deg = weights.sum(axis=1)
        self._inner = np.zeros(self.n)

    def gains(self, ids):
        return self._deg[ids] - 2.0 * self._inner[ids]

    # w_vv = 0, so the removal loss has the same closed form
    losses = gains

    def _insert(self, u):
        self._inner += self._w[u]

    def _delete(self, v):
        self._inner -= self._w[v]


class Objective:
    """Set function over ``range(n)``: naive ``evaluate`` plus a state factory."""
    kind = None

    def __init__(self, n):
        self.n = n

    def evaluate(self, ids):
        raise NotImplementedError

    def new_state(self):
        return RecomputingState(self)


class CoverageDiversity(Objective):
    kind = ObjectiveKind.COVERAGE

    def __init__(self, sim, lam):
        super().__init__(sim.shape[0])
        self.sim = sim
        self.lam = lam

    def evaluate(self, ids):
        return _coverage(self.sim, self.lam, np.asarray(ids, dtype=np.int64))

    def new_state(self):
        return CoverageState(self.sim, self.lam)


class FacilityDiversity(Objective):
    kind = ObjectiveKind.FACILITY

    def __init__(self, sim):
        super().__init__(sim.shape[0])
        self.sim = sim

    def evaluate(self, ids):
        return _facility(self.sim, np.asarray(ids, dtype=np.int64))

    def new_state(self):
        return FacilityState(self.sim)


class GraphCut(Objective):
    kind = ObjectiveKind.CUT

    def __init__(self, weights):
        super().__init__(weights.shape[0])
        self.weights = weights

    def evaluate(self, ids):
        return _cut(self.weights, np.asarray(ids, dtype=np.int64))

    def new_state(self):
        return CutState(self.weights)


def build_objective(inst):
    if inst.kind is ObjectiveKind.COVERAGE:
        return CoverageDiversity(inst.payload, inst.lam)
    if inst.kind is ObjectiveKind.FACILITY:
        return FacilityDiversity(inst.payload)
    return GraphCut(inst.payload)


@dataclass(frozen=True)
class SyntheticSpec:
    kind: ObjectiveKind
    n: int
    density: float = 0.5
    lam: float = 0.75
    weight_low: float = 0.0
    weight_high: float = 1.0
    dim: int = DEFAULT_FEATURE_DIM


def gen_synthetic(spec, rng):
    """Erdős–Rényi weighted graph or Gram matrix of random feature vectors."""
    try:
        kind = ObjectiveKind(spec.kind)
    except ValueError:
        raise ConfigError(f'unknown objective kind {spec.kind!r}') from None
    if spec.n < 2:
        raise ConfigError(f'synthetic instances need n >= 2, got {spec.n}')
    gen = rng.generator
    if kind.is_graph:
        if not 0.0 <= spec.density <= 1.0:
            raise ConfigError(f'density must lie in [0, 1], got {spec.density}')
        if not 0.0 <= spec.weight_low <= spec.weight_high:
            raise ConfigError(f'invalid weight range [{spec.weight_low}, {spec.weight_high}]')
        edges = np.triu(gen.random((spec.n, spec.n)) < spec.density, k=1)
        weights = gen.uniform(spec.weight_low, spec.weight_high, size=(spec.n, spec.n))
        upper = np.where(edges, weights, 0.0)
        return Instance(kind, upper + upper.T)
    if spec.dim < 1:
        raise ConfigError(f'feature dimension must be positive, got {spec.dim}')
    features = gen.random((spec.n, spec.dim))
    gram = features @ features.T
    gram = (gram + gram.T) / 2.0
    lam = spec.lam if kind is ObjectiveKind.COVERAGE else None
    if lam is not None and not 0.0 <= lam <= 1.0:
        raise ConfigError(f'lambda must lie in [0, 1], got {lam}')
    return Instance(kind, gram, lam)
