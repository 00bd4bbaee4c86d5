"""Empirical and specified distributions with mid-distribution quantile mechanics.

Every other module reads F, p, the mid-distribution and the quantile
function from :class:`EmpiricalDistribution`; nothing recomputes ranks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import stats

Kind = Literal["continuous-sample", "discrete-sample", "specified-discrete", "specified-continuous"]

CONTINUOUS_KINDS = ("continuous-sample", "specified-continuous")

# slack when locating probable u on a cumulative-sum cdf
_CDF_SLACK = 1e-12


def infer_kind(values: ArrayLike) -> Kind:
    """Continuous when the distinct-value count exceeds ``max(20, sqrt(n))``."""
    values = np.asarray(values, dtype=float)
    n = values.size
    distinct = np.unique(values).size
    if distinct > max(20.0, math.sqrt(n)):
        return "continuous-sample"
    return "discrete-sample"


@dataclass(frozen=True, eq=False)
class EmpiricalDistribution:
    support: NDArray[np.float64]
    pmf: NDArray[np.float64]
    cdf: NDArray[np.float64]
    mid: NDArray[np.float64]
    n: int | None
    kind: Kind
    _bases: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def k(self) -> int:
        return int(self.support.size)

    @property
    def is_continuous(self) -> bool:
        return self.kind in CONTINUOUS_KINDS

    @property
    def mean(self) -> float:
        return float(np.dot(self.pmf, self.support))

    @property
    def var(self) -> float:
        return float(np.dot(self.pmf, (self.support - self.mean) ** 2))

    @property
    def sd(self) -> float:
        return math.sqrt(self.var)

    @property
    def mid_var(self) -> float:
        """Variance of the mid-distribution transform, ``(1 - sum p^3) / 12``."""
        return float((1.0 - np.sum(self.pmf**3)) / 12.0)

    def index_of(self, x: float) -> int:
        """Position of ``x`` in the support; raises if ``x`` is not a support point."""
        i = int(np.searchsorted(self.support, x))
        if i >= self.k or self.support[i] != x:
            raise KeyError(f"{x!r} is not a support point")
        return i

    def nearest_index(self, x: ArrayLike) -> NDArray[np.intp]:
        x = np.asarray(x, dtype=float)
        i = np.clip(np.searchsorted(self.support, x), 1, max(self.k - 1, 1))
        if self.k == 1:
            return np.zeros_like(i)
        left = self.support[i - 1]
        right = self.support[i]
        return np.where(np.abs(x - left) <= np.abs(right - x), i - 1, i)

    def F(self, x: ArrayLike) -> NDArray[np.float64]:
        """Distribution function ``Pr[X <= x]`` at arbitrary ``x``."""
        i = np.searchsorted(self.support, np.asarray(x, dtype=float), side="right")
        return np.concatenate(([0.0], self.cdf))[i]

    def p(self, x: ArrayLike) -> NDArray[np.float64]:
        x = np.asarray(x, dtype=float)
        i = np.clip(np.searchsorted(self.support, x), 0, self.k - 1)
        return np.where(self.support[i] == x, self.pmf[i], 0.0)

    def F_mid(self, x: ArrayLike) -> NDArray[np.float64]:
        return self.F(x) - 0.5 * self.p(x)

    def score_basis(self, m: int | None = None):
        """Cached orthonormal score basis of order ``m`` (see :mod:`lpmix.scores`)."""
        from lpmix.scores import build_score_basis, default_order

        m = default_order(self) if m is None else m
        if m not in self._bases:
            self._bases[m] = build_score_basis(self, m)
        return self._bases[m]


def _from_counts(support: NDArray, weights: NDArray, n: int | None, kind: Kind) -> EmpiricalDistribution:
    total = weights.sum()
    cum = np.cumsum(weights)
    pmf = weights / total
    cdf = cum / total
    cdf[-1] = 1.0
    mid = (cum - 0.5 * weights) / total
    for arr in (support, pmf, cdf, mid):
        arr.setflags(write=False)
    return EmpiricalDistribution(support=support, pmf=pmf, cdf=cdf, mid=mid, n=n, kind=kind)


def build_empirical(sample: ArrayLike, kind: Kind | None = None) -> EmpiricalDistribution:
    """Empirical distribution of ``sample`` over its distinct values.

    The mid-distribution is taken from the distinct-value masses, so it equals
    the tie-averaged ``(rank - 0.5) / n`` without depending on a ranking rule.
    """
    x = np.asarray(sample, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("sample is empty")
    if not np.all(np.isfinite(x)):
        raise ValueError("sample contains non-finite values")
    support, counts = np.unique(x, return_counts=True)
    if kind is None:
        kind = infer_kind(x)
    return _from_counts(support.astype(float), counts.astype(float), int(x.size), kind)


def from_pmf(values: Sequence[float], probs: Sequence[float], tol: float = 1e-9) -> EmpiricalDistribution:
    """Specified discrete distribution from an explicit (value, probability) list."""
    v = np.asarray(values, dtype=float)
    p = np.asarray(probs, dtype=float)
    if v.shape != p.shape or v.ndim != 1 or v.size == 0:
        raise ValueError("values and probs must be equal-length non-empty sequences")
    if not (np.all(np.isfinite(v)) and np.all(np.isfinite(p))):
        raise ValueError("non-finite value or probability")
    if np.any(p <= 0):
        raise ValueError("probabilities must be positive")
    if abs(p.sum() - 1.0) > tol:
        raise ValueError(f"probabilities sum to {p.sum():.12g}, not 1")
    order = np.argsort(v, kind="stable")
    v, p = v[order], p[order]
    if np.any(np.diff(v) == 0):
        raise ValueError("duplicate support values")
    return _from_counts(v, p, None, "specified-discrete")


def quantile_grid(ppf, size: int = 10_000) -> EmpiricalDistribution:
    """Equal-mass grid ``ppf((i - .5) / size)`` standing in for a continuous law."""
    u = (np.arange(1, size + 1) - 0.5) / size
    x = np.asarray(ppf(u), dtype=float)
    if np.any(np.diff(x) <= 0):
        raise ValueError("ppf must be strictly increasing on the grid")
    return _from_counts(x, np.ones(size), None, "specified-continuous")


def normal_grid(size: int = 10_000, loc: float = 0.0, scale: float = 1.0) -> EmpiricalDistribution:
    return quantile_grid(stats.norm(loc, scale).ppf, size)


def uniform_grid(size: int = 10_000, low: float = 0.0, high: float = 1.0) -> EmpiricalDistribution:
    return quantile_grid(lambda u: low + (high - low) * u, size)


def _check_u(u: NDArray) -> None:
    if np.any((u <= 0) | (u >= 1)) or np.any(np.isnan(u)):
        raise ValueError("u must lie strictly inside (0, 1)")


def quantile(dist: EmpiricalDistribution, u: ArrayLike):
    """``Q(u) = inf{x : F(x) >= u}``."""
    ua = np.asarray(u, dtype=float)
    _check_u(ua)
    i = np.searchsorted(dist.cdf, ua - _CDF_SLACK, side="left")
    out = dist.support[np.minimum(i, dist.k - 1)]
    return float(out) if out.ndim == 0 else out


def mid_quantile(dist: EmpiricalDistribution, u: ArrayLike):
    """Piecewise-linear interpolant through ``(mid[i], support[i])``, clamped at the ends."""
    ua = np.asarray(u, dtype=float)
    _check_u(ua)
    out = np.interp(ua, dist.mid, dist.support)
    return float(out) if out.ndim == 0 else out


def standardize(dist: EmpiricalDistribution, x: ArrayLike):
    sd = dist.sd
    if sd <= 0:
        raise ValueError("distribution has zero variance")
    out = (np.asarray(x, dtype=float) - dist.mean) / sd
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class LocationScaleSummary:
    q1: float
    q2: float
    q3: float
    mq: float
    dq: float
    mean: float
    sd: float
    outliers: tuple[float, ...] | None

    def qi(self, x: ArrayLike):
        """Informative-quantile transform ``(x - MQ) / DQ``."""
        if self.dq == 0:
            raise ValueError("quartile deviation is zero")
        out = (np.asarray(x, dtype=float) - self.mq) / self.dq
        return float(out) if out.ndim == 0 else out


def informative_quantile_summary(dist: EmpiricalDistribution) -> LocationScaleSummary:
    """Quartiles, mid-quartile, quartile deviation and Tukey outliers (``|QI| > 1``).

    ``outliers`` is ``None`` when the quartile deviation is zero.
    """
    if dist.k < 2:
        raise ValueError("need at least two distinct support points")
    q1, q2, q3 = (quantile(dist, u) for u in (0.25, 0.5, 0.75))
    mq = 0.5 * (q1 + q3)
    dq = 2.0 * (q3 - q1)
    outliers = None
    if dq > 0:
        flag = np.abs((dist.support - mq) / dq) > 1
        outliers = tuple(float(v) for v in dist.support[flag])
    return LocationScaleSummary(q1, q2, q3, mq, dq, dist.mean, dist.sd, outliers)
