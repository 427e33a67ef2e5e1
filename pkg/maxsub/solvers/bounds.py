"""Approximation guarantee of the combined algorithm and its best flip point.

The guided greedy phase guarantees ``A·f(OPT) + B·f(OPT ∪ Z) + C·f(OPT ∩ Z)``
and the local optimum Z guarantees ``f(Z) ≥ (f(OPT ∪ Z) + f(OPT ∩ Z)) / (2+ε)``
and ``f(Z) ≥ f(OPT ∩ Z) / (1+ε)``. Mixing the three with weights
``p1, p2, p3`` and requiring the f(OPT ∪ Z) and f(OPT ∩ Z) terms to be
non-negative leaves ``p3·A`` as the coefficient of f(OPT).
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import ConfigError

logger = logging.getLogger(__name__)

T_STEP = 1e-3
FEASIBILITY_TOL = 1e-12


@dataclass(frozen=True)
class BoundParams:
    p1: float
    p2: float
    p3: float
    t_s: float
    bound_value: float


def _steps(t, k):
    # round first so that 0.3 * 10 counts as exactly 3 steps
    tk = np.round(np.asarray(t, dtype=float) * k, 9)
    return np.ceil(tk), np.floor(tk)


def asymptotic_coefficients(t_s):
    """(A, B, C) per unit p3 in the k → ∞ limit."""
    t = np.asarray(t_s, dtype=float)
    grow = np.exp(t - 1.0)
    A = (2.0 - t - np.exp(-t)) * grow
    B = -grow * (2.0 - t - 2.0 * np.exp(-t))
    C = -grow * (1.0 - np.exp(-t))
    return A, B, C


def guarantee_coefficients(k, eps, t_s):
    """Exact finite-k coefficients (A, B, C) with α = 1 - 1/k."""
    if k < 1:
        raise ConfigError(f'k must be positive, got {k}')
    alpha = 1.0 - 1.0 / k
    up, down = _steps(t_s, k)
    with np.errstate(divide='ignore', invalid='ignore'):
        lead = (k - up) / k
        head = np.where(lead > 0, lead * np.power(alpha, k - up - 1), 0.0)
        A = head + np.power(alpha, k - up) - alpha ** k - 2.0 * eps * (1.0 - alpha ** k)
        B = alpha ** k + alpha ** (k - 1) - (2 * k - up - 1) / k * np.power(alpha, k - down)
        C = alpha ** k - np.power(alpha, k - up)
    return A, B, C


def _best_mix(A, B, C, eps):
    """Closed-form optimum of the inner problem over the simplex.

    With p3 fixed, the smallest feasible p1 is optimal because raising p1 by δ
    relaxes the f(OPT ∩ Z) constraint by less than the δ it takes from p2.
    """
    x1 = np.maximum(0.0, -(2.0 + eps) * B)
    x2 = np.maximum(0.0, -(1.0 + eps) * (C + x1 / (2.0 + eps)))
    p3 = 1.0 / (1.0 + x1 + x2)
    useful = A > 0
    p3 = np.where(useful, p3, 0.0)
    p1 = np.where(useful, x1 * p3, 1.0)
    p2 = np.where(useful, x2 * p3, 0.0)
    return p1, p2, p3, np.where(useful, A * p3, 0.0)


def _grid_mix(A, B, C, eps, step):
    """Same problem restricted to the simplex grid of the given step."""
    p3 = np.arange(0.0, 1.0 + step / 2, step)[None, :]
    x1 = np.maximum(0.0, -(2.0 + eps) * B)[:, None]
    p1 = np.ceil(np.round(x1 * p3 / step, 9)) * step
    p2 = 1.0 - p1 - p3
    feasible = (p2 >= -FEASIBILITY_TOL) & (p2 / (1.0 + eps) + p1 / (2.0 + eps) + p3 * C[:, None] >= -FEASIBILITY_TOL)
    values = np.where(feasible, p3 * A[:, None], -np.inf)
    col = np.argmax(values, axis=1)
    rows = np.arange(len(A))
    return p1[rows, col], np.maximum(p2[rows, col], 0.0), np.broadcast_to(p3, values.shape)[rows, col], values[rows, col]


def optimize_bound_params(k, eps, exact=False, step=T_STEP, simplex_step=None):
    """Flip point and mixing weights maximizing the guarantee on a t_s grid.

    ``exact`` uses the finite-k coefficients, otherwise the k → ∞ limit.
    ``simplex_step`` replaces the closed-form inner solve by a grid search.
    Ties go to the smallest t_s.
    """
    if not 0.0 < eps < 1.0:
        raise ConfigError(f'eps must lie in (0, 1), got {eps}')
    if k < 1:
        raise ConfigError(f'k must be positive, got {k}')
    t = np.arange(0.0, 1.0 + step / 2, step)
    A, B, C = guarantee_coefficients(k, eps, t) if exact else asymptotic_coefficients(t)
    if simplex_step is None:
        p1, p2, p3, values = _best_mix(A, B, C, eps)
    else:
        p1, p2, p3, values = _grid_mix(A, B, C, eps, simplex_step)
    best = int(np.argmax(values))
    params = BoundParams(float(p1[best]), float(p2[best]), float(p3[best]), float(t[best]), float(values[best]))
    logger.debug('bound optimum %s', params)
    return params


def evaluate_bound(t_s, p1, p2, p3, eps, k=None):
    """Coefficient of f(OPT) for the given mix, or -inf if the mix is infeasible.

    ``k=None`` evaluates the asymptotic form.
    """
    if min(p1, p2, p3) < 0 or not math.isclose(p1 + p2 + p3, 1.0, abs_tol=FEASIBILITY_TOL):
        raise ConfigError(f'weights ({p1}, {p2}, {p3}) are not a convex combination')
    A, B, C = asymptotic_coefficients(t_s) if k is None else guarantee_coefficients(k, eps, t_s)
    A, B, C = float(A), float(B), float(C)
    union = p1 / (2.0 + eps) + p3 * B
    inter = p2 / (1.0 + eps) + p1 / (2.0 + eps) + p3 * C
    if union < -FEASIBILITY_TOL or inter < -FEASIBILITY_TOL:
        return -math.inf
    return p3 * A
