"""Small instances and oracle wrappers shared by the test modules."""
import numpy as np

from maxsub.objectives import Instance, Objective, ObjectiveKind, build_objective
from maxsub.oracle import OracleHandle, make_ground_set


def modular_instance(weights):
    """Coverage-diversity with a diagonal matrix and λ=0 is f(S) = Σ_{u∈S} w_u."""
    return Instance(ObjectiveKind.COVERAGE, np.diag(np.asarray(weights, dtype=float)), 0.0)


def path_graph():
    return Instance(ObjectiveKind.CUT, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])


def triangle_graph():
    return Instance(ObjectiveKind.CUT, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def random_cut(n, rng, density=0.5):
    upper = np.triu(rng.random((n, n)) < density, k=1) * rng.random((n, n))
    return Instance(ObjectiveKind.CUT, upper + upper.T)


def random_similarity(kind, n, rng, lam=0.75, dim=5):
    features = rng.random((n, dim))
    gram = features @ features.T
    return Instance(kind, (gram + gram.T) / 2, lam if kind is ObjectiveKind.COVERAGE else None)


def handle_for(inst, k):
    return OracleHandle(build_objective(inst), make_ground_set(inst.n, k))


class SquareObjective(Objective):
    """|S|², supermodular."""

    def evaluate(self, ids):
        return float(len(ids)) ** 2


class CountingHandle(OracleHandle):
    """Counts queries independently of the ledger."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.calls = 0

    def value(self, S):
        self.calls += 1
        return super().value(S)

    def marginal(self, u, S):
        self.calls += 1
        return super().marginal(u, S)

    def marginals(self, ids, S):
        self.calls += len(ids)
        return super().marginals(ids, S)

    def removal_loss(self, v, S):
        self.calls += 1
        return super().removal_loss(v, S)

    def removal_losses(self, S):
        self.calls += len(S)
        return super().removal_losses(S)
