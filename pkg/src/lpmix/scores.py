"""Orthonormal score functions built from the mid-distribution.

``T_1 = (F_mid - .5) / sd(F_mid)``; higher ``T_j`` come from pmf-weighted
Gram-Schmidt on powers of ``T_1``. The polynomial chain is extended as
``T_1 * q_{j-1}`` rather than ``T_1**j``: both span the same space and give the
same orthonormal sequence (positive leading coefficients), but the former stays
well conditioned up to the full order ``k - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray

from lpmix.empirical import EmpiricalDistribution, quantile

BasisKind = Literal["legendre-continuous", "gram-schmidt-discrete"]

DEFAULT_MAX_ORDER = 4
DROP_TOL = 1e-8


def legendre(j: int, u: ArrayLike):
    """Orthonormal shifted Legendre polynomial ``sqrt(2j+1) * P_j(2u - 1)`` on [0, 1]."""
    if j < 0:
        raise ValueError("order must be non-negative")
    ua = np.asarray(u, dtype=float)
    t = 2.0 * ua - 1.0
    p_prev, p = np.ones_like(t), t
    if j == 0:
        p = p_prev
    for n in range(1, j):
        p_prev, p = p, ((2 * n + 1) * t * p - n * p_prev) / (n + 1)
    out = math.sqrt(2 * j + 1) * p
    return float(out) if out.ndim == 0 else out


def legendre_matrix(m: int, u: ArrayLike) -> NDArray[np.float64]:
    """Columns ``Leg_1(u) .. Leg_m(u)``."""
    ua = np.atleast_1d(np.asarray(u, dtype=float))
    return np.column_stack([legendre(j, ua) for j in range(1, m + 1)]) if m else np.empty((ua.size, 0))


def default_order(dist: EmpiricalDistribution) -> int:
    return min(DEFAULT_MAX_ORDER, dist.k - 1)


@dataclass(frozen=True, eq=False)
class ScoreBasis:
    dist: EmpiricalDistribution
    table: NDArray[np.float64]  # rows: support points, columns: T_1..T_m
    kind: BasisKind
    requested: int

    @property
    def m(self) -> int:
        return int(self.table.shape[1])

    def gram(self) -> NDArray[np.float64]:
        w = self.dist.pmf[:, None]
        return self.table.T @ (w * self.table)


def _wdot(w: NDArray, a: NDArray, b: NDArray) -> float:
    return float(np.dot(w * a, b))


def build_score_basis(dist: EmpiricalDistribution, m: int | None = None) -> ScoreBasis:
    """Orthonormal scores ``T_1..T_m'`` with ``m' = min(m, k - 1, rank)``.

    Modified Gram-Schmidt with one re-orthogonalisation pass under the
    pmf-weighted inner product. A candidate whose residual falls below
    ``DROP_TOL`` times its initial norm ends the chain.
    """
    if dist.k < 2:
        raise ValueError("score functions need at least two support points")
    if m is None:
        m = default_order(dist)
    if m < 1:
        raise ValueError("order m must be at least 1")
    w = dist.pmf
    centred = dist.mid - 0.5
    t1 = centred / math.sqrt(_wdot(w, centred, centred))

    cols = [t1]
    basis = [np.ones_like(t1), t1]
    target = min(m, dist.k - 1)
    while len(cols) < target:
        v = t1 * basis[-1]
        norm0 = math.sqrt(_wdot(w, v, v))
        for _ in range(2):
            for q in basis:
                v = v - _wdot(w, q, v) * q
        norm = math.sqrt(_wdot(w, v, v))
        if norm < DROP_TOL * norm0:
            break
        v = v / norm
        cols.append(v)
        basis.append(v)

    table = np.column_stack(cols)
    table.setflags(write=False)
    kind: BasisKind = "legendre-continuous" if dist.is_continuous else "gram-schmidt-discrete"
    return ScoreBasis(dist=dist, table=table, kind=kind, requested=m)


def eval_scores(basis: ScoreBasis, x: ArrayLike) -> NDArray[np.float64]:
    """Rows ``T_1(x)..T_m(x)``.

    Discrete bases accept support points only; continuous bases map any ``x``
    to its nearest support point.
    """
    xa = np.asarray(x, dtype=float)
    dist = basis.dist
    if dist.is_continuous:
        idx = dist.nearest_index(xa)
    else:
        idx = np.clip(np.searchsorted(dist.support, xa), 0, dist.k - 1)
        if np.any(dist.support[idx] != xa):
            raise KeyError("value outside the support of a discrete score basis")
    return basis.table[idx]


def eval_scores_u(basis: ScoreBasis, u: ArrayLike) -> NDArray[np.float64]:
    """Unit-interval scores ``S_j(u) = T_j(Q(u))``.

    Continuous bases use ``Leg_j(u)`` directly so that ``S_j`` are exact
    polynomials; discrete bases return the step function ``T_j(Q(u))``.
    """
    ua = np.asarray(u, dtype=float)
    if basis.kind == "legendre-continuous":
        out = legendre_matrix(basis.m, ua)
        return out.reshape(ua.shape + (basis.m,))
    xq = np.asarray(quantile(basis.dist, ua))
    return eval_scores(basis, xq)


def sample_scores(basis: ScoreBasis, x: ArrayLike) -> NDArray[np.float64]:
    """Score rows for every observation of a sample the basis was built on."""
    xa = np.asarray(x, dtype=float)
    idx = np.searchsorted(basis.dist.support, xa)
    return basis.table[np.clip(idx, 0, basis.dist.k - 1)]
