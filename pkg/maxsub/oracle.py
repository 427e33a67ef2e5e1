"""Ground set, solutions and the counted oracle every solver talks to."""
import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigError, InvalidConstraintError, InvalidElementError, InvalidSolutionError

logger = logging.getLogger(__name__)

SUBMODULARITY_TOL = 1e-9

_tokens = itertools.count(1)


@dataclass(frozen=True)
class GroundSet:
    """Dense id space ``[0, n_real + n_dummy)``; dummies occupy the suffix."""
    n_real: int
    n_dummy: int

    @property
    def total(self):
        return self.n_real + self.n_dummy

    def is_dummy(self, u):
        return u >= self.n_real

    def ids(self):
        return np.arange(self.total)

    def dummy_ids(self):
        return range(self.n_real, self.total)


def make_ground_set(n_real, k):
    """Ground set of ``n_real`` elements plus exactly ``2k`` dummies."""
    if n_real < 1:
        raise InvalidConstraintError(f'ground set needs at least one element, got n_real={n_real}')
    if k < 1:
        raise InvalidConstraintError(f'cardinality bound must be positive, got k={k}')
    if k > n_real:
        raise InvalidConstraintError(f'k={k} exceeds the ground set size {n_real}')
    return GroundSet(n_real=int(n_real), n_dummy=2 * int(k))


class Solution:
    """Duplicate-free ordered list of element ids with an optional size bound.

    Every mutation issues a fresh ``token`` so an oracle can tell whether the
    set changed since it last looked at it.
    """
    __slots__ = ('_elements', '_index', 'capacity', 'token')

    def __init__(self, elements=(), capacity=None):
        self._elements = []
        self._index = set()
        self.capacity = capacity
        self.token = next(_tokens)
        for u in elements:
            self.add(u)

    def __repr__(self):
        return f'Solution({self._elements!r}, capacity={self.capacity})'

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, u):
        return int(u) in self._index

    def __eq__(self, other):
        if not isinstance(other, Solution):
            return NotImplemented
        return self._index == other._index

    __hash__ = None

    @property
    def elements(self):
        return tuple(self._elements)

    def add(self, u):
        u = int(u)
        if u in self._index:
            raise InvalidSolutionError(f'element {u} is already in the solution')
        if self.capacity is not None and len(self._elements) >= self.capacity:
            raise InvalidSolutionError(f'solution is full (capacity {self.capacity})')
        self._elements.append(u)
        self._index.add(u)
        self.token = next(_tokens)

    def remove(self, v):
        v = int(v)
        if v not in self._index:
            raise InvalidSolutionError(f'element {v} is not in the solution')
        self._elements.remove(v)
        self._index.discard(v)
        self.token = next(_tokens)

    def swap(self, out, into):
        self.remove(out)
        self.add(into)

    def copy(self):
        return Solution(self._elements, self.capacity)

    def swapped(self, out, into):
        result = self.copy()
        result.swap(out, into)
        return result

    def real(self, ground):
        return [u for u in self._elements if u < ground.n_real]

    def strip_dummies(self, ground):
        return Solution(self.real(ground), self.capacity)

    def pad_with_dummies(self, ground, size):
        """Append the lowest-id dummies not yet present until ``len == size``."""
        for d in ground.dummy_ids():
            if len(self) >= size:
                break
            if d not in self._index:
                self.add(d)
        if len(self) < size:
            raise InvalidSolutionError(f'not enough dummies to pad to {size}')
        return self

    def sort_key(self, ground):
        return tuple(sorted(self.real(ground)))


class QueryLedger:
    """Counter of oracle invocations for one run."""

    def __init__(self):
        self.queries = 0

    def __repr__(self):
        return f'QueryLedger(queries={self.queries})'

    def tick(self, count=1):
        self.queries += int(count)

    def reset(self):
        self.queries = 0


class OracleHandle:
    """Counted evaluation surface over one objective and one ground set.

    One value or marginal invocation costs one query; the vector forms cost
    one query per element. Dummies always have zero marginal and the
    objective never sees them. The handle keeps a single incremental
    objective state and moves it to whichever solution it is asked about.
    """

    def __init__(self, objective, ground, ledger=None):
        if objective.n != ground.n_real:
            raise ConfigError(f'objective has {objective.n} elements but the ground set has {ground.n_real}')
        self.objective = objective
        self.ground = ground
        self.ledger = ledger if ledger is not None else QueryLedger()
        self._state = objective.new_state()
        self._token = None

    @property
    def queries(self):
        return self.ledger.queries

    def _check(self, u):
        if not 0 <= u < self.ground.total:
            raise InvalidElementError(f'element id {u} outside [0, {self.ground.total})')

    def _sync(self, S):
        if S.token == self._token:
            return
        n_real = self.ground.n_real
        target = set()
        for u in S:
            self._check(u)
            if u < n_real:
                target.add(u)
        current = self._state.members
        for v in sorted(current - target):
            self._state.remove(v)
        for u in sorted(target - current):
            self._state.add(u)
        self._token = S.token

    def value(self, S):
        """f(S) with dummies ignored."""
        self.ledger.tick()
        self._sync(S)
        return max(float(self._state.value), 0.0)

    def marginal(self, u, S):
        """f(S + u) - f(S); exactly 0 for dummies and members of S."""
        self.ledger.tick()
        u = int(u)
        self._check(u)
        if u >= self.ground.n_real or u in S:
            return 0.0
        self._sync(S)
        return float(self._state.gains(np.array([u]))[0])

    def marginals(self, ids, S):
        """Vector of f(u | S); costs ``len(ids)`` queries."""
        ids = np.asarray(ids, dtype=np.int64)
        self.ledger.tick(len(ids))
        out = np.zeros(len(ids))
        if len(ids) == 0:
            return out
        if ids.min() < 0 or ids.max() >= self.ground.total:
            bad = ids[(ids < 0) | (ids >= self.ground.total)][0]
            raise InvalidElementError(f'element id {bad} outside [0, {self.ground.total})')
        self._sync(S)
        real = ids < self.ground.n_real
        live = np.flatnonzero(real)
        if len(live):
            live = live[~self._state.in_set[ids[live]]]
            out[live] = self._state.gains(ids[live])
        return out

    def removal_loss(self, v, S):
        """f(v | S - v) for a member ``v`` of S."""
        self.ledger.tick()
        v = int(v)
        self._check(v)
        if v not in S:
            raise InvalidSolutionError(f'element {v} is not in the solution')
        if v >= self.ground.n_real:
            return 0.0
        self._sync(S)
        return float(self._state.losses(np.array([v]))[0])

    def removal_losses(self, S):
        """``(members, losses)`` for every member of S; costs ``len(S)`` queries."""
        members = np.fromiter(S, dtype=np.int64, count=len(S))
        self.ledger.tick(len(members))
        out = np.zeros(len(members))
        if len(members) == 0:
            return members, out
        self._sync(S)
        real = np.flatnonzero(members < self.ground.n_real)
        if len(real):
            out[real] = self._state.losses(members[real])
        return members, out

    def audit_value(self, S):
        """Uncounted from-scratch evaluation, for reporting and cross-checks."""
        ids = [u for u in S if u < self.ground.n_real]
        for u in S:
            self._check(u)
        return max(float(self.objective.evaluate(ids)), 0.0)


def submodularity_probe(h, trials, rng):
    """Check diminishing returns on ``trials`` random chains S ⊆ T, u ∉ T."""
    if trials < 1:
        raise ConfigError(f'trials must be at least 1, got {trials}')
    n = h.ground.n_real
    gen = rng.generator
    for _ in range(trials):
        u = int(gen.integers(n))
        others = np.delete(np.arange(n), u)
        big = others[gen.random(len(others)) < gen.random()]
        small = big[gen.random(len(big)) < 0.5]
        lhs = h.marginal(u, Solution(small))
        rhs = h.marginal(u, Solution(big))
        if lhs < rhs - SUBMODULARITY_TOL:
            logger.debug('diminishing returns violated: u=%d |S|=%d |T|=%d (%g < %g)',
                         u, len(small), len(big), lhs, rhs)
            return False
    return True
