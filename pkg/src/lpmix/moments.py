"""Univariate LP moments, tail index, quantile reconstruction and the LP criterion."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np
from numpy.typing import ArrayLike, NDArray

from lpmix.empirical import EmpiricalDistribution, build_empirical
from lpmix.scores import ScoreBasis, eval_scores_u

NORMAL_LP1 = math.sqrt(3.0 / math.pi)
TAIL_THRESHOLD = 0.95
CRITERION_THRESHOLD = 0.975


@dataclass(frozen=True)
class LPMomentVector:
    """LP moments ``LP(j;X) = E[X T_j(X)]`` for ``j = 1..m``.

    ``std_coeffs`` are the moments of the standardized variable, and
    ``var_explained[j-1]`` is their cumulative sum of squares.
    """

    coeffs: NDArray[np.float64]
    mean: float
    var_total: float
    std_coeffs: NDArray[np.float64]
    var_explained: NDArray[np.float64]

    @property
    def m(self) -> int:
        return int(self.coeffs.size)

    @property
    def tail_index(self) -> int | None:
        return tail_index(self)


def lp_moments(dist: EmpiricalDistribution, basis: ScoreBasis | None = None) -> LPMomentVector:
    if basis is None:
        basis = dist.score_basis()
    elif basis.dist is not dist:
        raise ValueError("basis was built on a different distribution")
    sd = dist.sd
    if sd <= 0:
        raise ValueError("distribution has zero variance")
    coeffs = (dist.pmf * dist.support) @ basis.table
    std = coeffs / sd
    return LPMomentVector(
        coeffs=coeffs,
        mean=dist.mean,
        var_total=dist.var,
        std_coeffs=std,
        var_explained=np.cumsum(std**2),
    )


def tail_index(moments: LPMomentVector, threshold: float = TAIL_THRESHOLD) -> int | None:
    """Smallest ``m`` whose cumulative squared standardized moments exceed ``threshold``.

    Returns ``None`` (long tailed) when no computed order reaches it.
    """
    hit = np.nonzero(moments.var_explained > threshold)[0]
    return int(hit[0]) + 1 if hit.size else None


def quantile_reconstruction(
    moments: LPMomentVector,
    basis: ScoreBasis,
    u: ArrayLike,
    threshold: float | None = None,
):
    """``Q_hat(u) = E[X] + sum_j S_j(u) LP(j;X)``.

    With ``threshold`` (e.g. .99) the sum stops at the first order whose
    cumulative explained variance exceeds it.
    """
    ua = np.asarray(u, dtype=float)
    m = moments.m
    if threshold is not None:
        m = tail_index(moments, threshold) or moments.m
    s = eval_scores_u(basis, ua)[..., :m]
    out = moments.mean + s @ moments.coeffs[:m]
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class NormalityComponent:
    statistic: float
    reference: float
    n: int


def normality_component(sample: ArrayLike) -> NormalityComponent:
    """Sample ``LP(1;Z(X)) = E[Z(X) T_1(X)]``; about ``sqrt(3/pi)`` for Normal data."""
    x = np.asarray(sample, dtype=float)
    if x.size < 8:
        raise ValueError("normality component needs n >= 8")
    dist = build_empirical(x)
    mom = lp_moments(dist, dist.score_basis(1))
    return NormalityComponent(float(mom.std_coeffs[0]), NORMAL_LP1, int(x.size))


def _logit(x):
    if np.any((x <= 0) | (x >= 1)):
        raise ValueError("logit needs values in (0, 1)")
    return np.log(x / (1 - x))


def _positive(fn, name):
    def g(x):
        if np.any(x <= 0):
            raise ValueError(f"{name} needs positive values")
        return fn(x)

    return g


def _sqrt(x):
    if np.any(x < 0):
        raise ValueError("sqrt needs non-negative values")
    return np.sqrt(x)


# 1/x is decreasing; negate so every entry is increasing and keeps the ranks of X
TRANSFORMS: dict[str, Callable[[NDArray], NDArray]] = {
    "identity": lambda x: x,
    "log": _positive(np.log, "log"),
    "sqrt": _sqrt,
    "inverse": _positive(lambda x: -1.0 / x, "inverse"),
    "logit": _logit,
}


@dataclass(frozen=True)
class CriterionResult:
    name: str
    value: float
    short_tailed: bool


def lp_criterion_search(
    sample: ArrayLike,
    transforms: Mapping[str, Callable[[NDArray], NDArray]] | None = None,
) -> list[CriterionResult]:
    """Rank increasing transforms ``g`` by ``E[Z(g(X)) Z(F_mid(X))]``.

    Scores are computed once from the ranks of ``X`` and reused for every ``g``.
    Transforms whose domain excludes the sample are skipped with a warning.
    """
    dist = build_empirical(sample)
    if dist.k < 2:
        raise ValueError("sample has a single distinct value")
    t1 = dist.score_basis(1).table[:, 0]
    results = []
    for name, g in (transforms or TRANSFORMS).items():
        try:
            gx = np.asarray(g(dist.support), dtype=float)
        except ValueError as exc:
            warnings.warn(f"transform {name!r} skipped: {exc}", stacklevel=2)
            continue
        mu = np.dot(dist.pmf, gx)
        sd = math.sqrt(np.dot(dist.pmf, (gx - mu) ** 2))
        if not np.isfinite(sd) or sd == 0:
            warnings.warn(f"transform {name!r} skipped: degenerate values", stacklevel=2)
            continue
        value = float(np.dot(dist.pmf, (gx - mu) / sd * t1))
        results.append(CriterionResult(name, value, value > CRITERION_THRESHOLD))
    results.sort(key=lambda r: -r.value)
    return results
