"""LP-series copula density with slices, comparison probabilities and conditional quantiles."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from lpmix.comoments import LPComomentMatrix, Rule, lp_comoments
from lpmix.empirical import EmpiricalDistribution, Kind, quantile
from lpmix.scores import ScoreBasis, eval_scores, eval_scores_u, legendre_matrix

DEFAULT_NODES = 512
BISECTION_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class CopulaModel:
    comoments: LPComomentMatrix

    @property
    def basis_x(self) -> ScoreBasis:
        return self.comoments.basis_x

    @property
    def basis_y(self) -> ScoreBasis:
        return self.comoments.basis_y

    @property
    def dist_x(self) -> EmpiricalDistribution:
        return self.basis_x.dist

    @property
    def dist_y(self) -> EmpiricalDistribution:
        return self.basis_y.dist

    @property
    def active(self) -> NDArray[np.float64]:
        c = self.comoments
        return np.where(c.selection, c.values, 0.0)


def estimate_copula(
    x: ArrayLike,
    y: ArrayLike,
    m_x: int | None = None,
    m_y: int | None = None,
    rule: Rule = "threshold",
    kind_x: Kind | None = None,
    kind_y: Kind | None = None,
) -> CopulaModel:
    return CopulaModel(lp_comoments(x, y, m_x, m_y, rule, kind_x, kind_y))


def _series(sx: NDArray, sy: NDArray, coef: NDArray) -> NDArray:
    # terms are sorted before summing so that swapping X and Y is bit-identical
    terms = (sx[..., :, None] * sy[..., None, :]) * coef
    terms = terms.reshape(terms.shape[:-2] + (-1,))
    return 1.0 + np.sort(terms, axis=-1).sum(axis=-1)


def copula_density(model: CopulaModel, u: ArrayLike, v: ArrayLike):
    """``1 + sum_selected LP(j,k) S_j(u;X) S_k(v;Y)``, raw series (may be negative)."""
    ua, va = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    sx = eval_scores_u(model.basis_x, ua)
    sy = eval_scores_u(model.basis_y, va)
    out = _series(sx, sy, model.active)
    return float(out) if out.ndim == 0 else out


def copula_surface(model: CopulaModel, u: ArrayLike, v: ArrayLike) -> NDArray[np.float64]:
    """Density on the grid ``u x v`` (rows follow ``u``)."""
    ua = np.asarray(u, dtype=float).ravel()
    va = np.asarray(v, dtype=float).ravel()
    return copula_density(model, ua[:, None], va[None, :])


def conditional_comparison_density(model: CopulaModel, v: ArrayLike, given_u: float):
    """Slice ``d(v; Y, Y | X = Q(given_u; X))`` of the copula density."""
    return copula_density(model, given_u, v)


def unit_nodes(basis: ScoreBasis, nodes: int = DEFAULT_NODES) -> tuple[NDArray, NDArray]:
    """Gauss-Legendre nodes and weights on (0, 1) that integrate ``S_j`` products exactly.

    Continuous bases get one panel of ``nodes`` points (the scores are
    polynomials); discrete bases get two points on each constant cell.
    """
    if basis.kind == "legendre-continuous":
        t, w = np.polynomial.legendre.leggauss(nodes)
        return 0.5 * (t + 1.0), 0.5 * w
    t, w = np.polynomial.legendre.leggauss(2)
    edges = np.concatenate(([0.0], basis.dist.cdf))
    a, b = edges[:-1, None], edges[1:, None]
    u = (a + 0.5 * (b - a) * (t + 1.0)).ravel()
    wt = (0.5 * (b - a) * w).ravel()
    keep = (u > 0) & (u < 1) & (wt > 0)
    return u[keep], wt[keep]


def integrate_copula(model: CopulaModel, nodes: int = DEFAULT_NODES, power: int = 1, centred: bool = False) -> float:
    """``int int (c - centred)^power`` over the unit square by tensor quadrature."""
    ux, wx = unit_nodes(model.basis_x, nodes)
    vy, wy = unit_nodes(model.basis_y, nodes)
    sx = eval_scores_u(model.basis_x, ux)
    sy = eval_scores_u(model.basis_y, vy)
    c = 1.0 + sx @ model.active @ sy.T - float(centred)
    return float(wx @ c**power @ wy)


def slice_integral(model: CopulaModel, given_u: float, nodes: int = DEFAULT_NODES) -> float:
    vy, wy = unit_nodes(model.basis_y, nodes)
    return float(np.dot(wy, conditional_comparison_density(model, vy, given_u)))


def comparison_probability(model: CopulaModel, y: float, x: float) -> float:
    """``Pr[Y=y|X=x] / Pr[Y=y]``, which by Bayes rule also equals ``Pr[X=x|Y=y] / Pr[X=x]``."""
    model.dist_x.index_of(x)
    model.dist_y.index_of(y)
    tx = eval_scores(model.basis_x, x)
    ty = eval_scores(model.basis_y, y)
    return float(_series(tx, ty, model.active))


def _conditional_cdf_knots(model: CopulaModel, given_u: float, grid: int) -> tuple[NDArray, NDArray]:
    sx = eval_scores_u(model.basis_x, given_u)
    coef = sx @ model.active
    by = model.basis_y
    if by.kind == "legendre-continuous":
        t = np.linspace(0.0, 1.0, grid + 1)
        d = 1.0 + legendre_matrix(by.m, t) @ coef
        neg = np.maximum(-d, 0.0)
        dp = np.maximum(d, 0.0)
        mass = np.concatenate(([0.0], np.cumsum(0.5 * (dp[1:] + dp[:-1]) * np.diff(t))))
        removed = float(np.sum(0.5 * (neg[1:] + neg[:-1]) * np.diff(t)))
    else:
        t = np.concatenate(([0.0], by.dist.cdf))
        d = 1.0 + by.table @ coef
        cell = by.dist.pmf * np.maximum(d, 0.0)
        mass = np.concatenate(([0.0], np.cumsum(cell)))
        removed = float(np.dot(by.dist.pmf, np.maximum(-d, 0.0)))
    if mass[-1] <= 0:
        raise ValueError("conditional density has no positive mass")
    if removed > 0.5:
        warnings.warn(f"clipping removed {removed:.3f} of conditional mass", stacklevel=3)
    return t, mass / mass[-1]


def conditional_quantile(model: CopulaModel, v: float, given_u: float, grid: int = 4096) -> float:
    """``Q(v; Y | X = Q(given_u; X))`` through the conditional law of the rank transform of Y.

    The conditional comparison density is clipped at 0 and renormalised,
    integrated to a CDF, inverted at ``v`` by bisection and mapped through
    ``Q(.; Y)``.
    """
    if not (0 < v < 1 and 0 < given_u < 1):
        raise ValueError("v and given_u must lie strictly inside (0, 1)")
    t, cdf = _conditional_cdf_knots(model, given_u, grid)
    lo, hi = 0.0, 1.0
    while hi - lo > BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        if np.interp(mid, t, cdf) < v:
            lo = mid
        else:
            hi = mid
    w = min(max(hi, 1e-12), 1.0 - 1e-12)
    return float(quantile(model.dist_y, w))
