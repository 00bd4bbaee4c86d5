"""LP comoments, LPINFOR, LP-coherence eigenvalues and the chi-square independence test."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import stats

from lpmix.empirical import Kind, build_empirical
from lpmix.moments import lp_moments
from lpmix.scores import ScoreBasis, sample_scores

Rule = Literal["threshold", "bic", "all"]
RULES: tuple[str, ...] = ("threshold", "bic", "all")


def select_components(values: NDArray, n: int, rule: Rule = "threshold") -> NDArray[np.bool_]:
    """Mask of retained coefficients.

    ``threshold`` keeps ``|c| > 2/sqrt(n)`` (the null law of each coefficient is
    about N(0, 1/n)). ``bic`` keeps the top ``k`` entries maximising
    ``n * sum(c^2) - k * log(n)``. ``all`` keeps everything.
    """
    values = np.asarray(values, dtype=float)
    if rule == "all":
        return np.ones(values.shape, dtype=bool)
    if rule == "threshold":
        return np.abs(values) > 2.0 / math.sqrt(n)
    if rule == "bic":
        flat = values.ravel()
        order = np.argsort(-np.abs(flat), kind="stable")
        gain = np.concatenate(([0.0], np.cumsum(n * flat[order] ** 2 - math.log(n))))
        keep = int(np.argmax(gain))
        mask = np.zeros(flat.size, dtype=bool)
        mask[order[:keep]] = True
        return mask.reshape(values.shape)
    raise ValueError(f"unknown selection rule {rule!r}")


@dataclass(frozen=True, eq=False)
class LPComomentMatrix:
    values: NDArray[np.float64]  # LP(j,k;X,Y), j = 1..m_x, k = 1..m_y
    row0: NDArray[np.float64]  # LP(j,0;X,Y) = E[Y T_j(X)]
    n: int
    selection: NDArray[np.bool_]
    rule: str
    basis_x: ScoreBasis
    basis_y: ScoreBasis

    @property
    def lpinfor(self) -> float:
        return float(np.sum(self.values[self.selection] ** 2))

    @property
    def full_lpinfor(self) -> float:
        return float(np.sum(self.values**2))


def _pairs(x: ArrayLike, y: ArrayLike) -> tuple[NDArray, NDArray]:
    xa = np.asarray(x, dtype=float).ravel()
    ya = np.asarray(y, dtype=float).ravel()
    if xa.shape != ya.shape:
        raise ValueError("x and y must have equal length")
    return xa, ya


def _comoment_values(tx: NDArray, ty: NDArray) -> NDArray:
    n = tx.shape[0]
    out = np.empty((tx.shape[1], ty.shape[1]))
    for j in range(tx.shape[1]):
        for k in range(ty.shape[1]):
            out[j, k] = np.dot(tx[:, j], ty[:, k]) / n
    return out


def lp_comoments(
    x: ArrayLike,
    y: ArrayLike,
    m_x: int | None = None,
    m_y: int | None = None,
    rule: Rule = "threshold",
    kind_x: Kind | None = None,
    kind_y: Kind | None = None,
) -> LPComomentMatrix:
    """Sample comoments ``mean(T_j(x_i) T_k(y_i))`` on the marginal score bases."""
    xa, ya = _pairs(x, y)
    dx = build_empirical(xa, kind_x)
    dy = build_empirical(ya, kind_y)
    if dx.k < 2 or dy.k < 2:
        raise ValueError("each margin needs at least two distinct values")
    bx, by = dx.score_basis(m_x), dy.score_basis(m_y)
    tx, ty = sample_scores(bx, xa), sample_scores(by, ya)
    values = _comoment_values(tx, ty)
    n = int(xa.size)
    return LPComomentMatrix(
        values=values,
        row0=tx.T @ ya / n,
        n=n,
        selection=select_components(values, n, rule),
        rule=rule,
        basis_x=bx,
        basis_y=by,
    )


def spearman(x: ArrayLike, y: ArrayLike) -> float:
    """Tie-robust Spearman correlation ``LP(1,1;X,Y)``."""
    return float(lp_comoments(x, y, 1, 1, rule="all").values[0, 0])


def lpinfor(matrix: LPComomentMatrix, rule: Rule | None = None) -> tuple[float, NDArray[np.bool_]]:
    """Sum of squared selected comoments and the selection mask.

    ``rule=None`` reuses the selection stored on the matrix.
    """
    mask = matrix.selection if rule is None else select_components(matrix.values, matrix.n, rule)
    return float(np.sum(matrix.values[mask] ** 2)), mask


def coherence_eigen(matrix: LPComomentMatrix, vectors: bool = False):
    """Eigenvalues (descending) of ``K K^T``: squared canonical correlations of the scores."""
    k = matrix.values
    w, v = np.linalg.eigh(k @ k.T)
    w = np.where((w < 0) & (w > -1e-10), 0.0, w)
    order = np.argsort(w)[::-1]
    if vectors:
        return w[order], v[:, order]
    return w[order]


@dataclass(frozen=True)
class IndependenceTest:
    statistic: float
    df: int
    p_value: float
    n: int
    permutation_p_value: float | None = None


def independence_test(
    x: ArrayLike,
    y: ArrayLike,
    m_x: int | None = None,
    m_y: int | None = None,
    min_n: int = 20,
    permutations: int = 0,
    seed: int = 0,
) -> IndependenceTest:
    """``n * LPINFOR`` over the full basis, referred to chi-square on ``m_x * m_y`` df."""
    mat = lp_comoments(x, y, m_x, m_y, rule="all")
    n = mat.n
    if n < min_n:
        warnings.warn(f"n = {n} is below {min_n}; chi-square p-value is unreliable", stacklevel=2)
    stat = n * mat.full_lpinfor
    df = mat.basis_x.m * mat.basis_y.m
    perm_p = None
    if permutations:
        xa, ya = _pairs(x, y)
        tx = sample_scores(mat.basis_x, xa)
        ty = sample_scores(mat.basis_y, ya)
        rng = np.random.default_rng(seed)
        hits = 0
        for _ in range(permutations):
            km = tx.T @ ty[rng.permutation(n)] / n
            hits += n * np.sum(km**2) >= stat - 1e-12
        perm_p = (hits + 1) / (permutations + 1)
    return IndependenceTest(stat, df, float(stats.chi2.sf(stat, df)), n, perm_p)


def pearson_from_lp(matrix: LPComomentMatrix, truncate: bool = False) -> float:
    """``sum_jk LP(j;Z(X)) LP(j,k) LP(k;Z(Y))``; ``truncate`` keeps only the (1,1) term."""
    zx = lp_moments(matrix.basis_x.dist, matrix.basis_x).std_coeffs
    zy = lp_moments(matrix.basis_y.dist, matrix.basis_y).std_coeffs
    if truncate:
        return float(zx[0] * matrix.values[0, 0] * zy[0])
    return float(zx @ matrix.values @ zy)


@dataclass(frozen=True)
class ConditionalMeanDecomposition:
    total: float
    components: NDArray[np.float64]
    shares: NDArray[np.float64]


def conditional_mean_decomposition(
    x: ArrayLike, y: ArrayLike, m_x: int | None = None, kind_x: Kind | None = None
) -> ConditionalMeanDecomposition:
    """``Var(E[Y|X]) ~ sum_j LP(j,0;X,Y)^2`` with per-component shares."""
    xa, ya = _pairs(x, y)
    dx = build_empirical(xa, kind_x)
    if dx.k < 2:
        raise ValueError("x needs at least two distinct values")
    tx = sample_scores(dx.score_basis(m_x), xa)
    comp = tx.T @ ya / xa.size
    sq = comp**2
    total = float(sq.sum())
    shares = sq / total if total > 0 else np.zeros_like(sq)
    return ConditionalMeanDecomposition(total, comp, shares)
