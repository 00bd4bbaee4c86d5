"""Comparison densities, component goodness-of-fit tests and skew-G estimation.

A null model ``G`` is either continuous (scores ``Leg_j(G(x))``) or discrete
(Gram-Schmidt scores of the null pmf). The estimated comparison density is the
orthogonal series ``d(u) = 1 + sum_selected S_j(u) Comp_j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import integrate, stats

from lpmix.comoments import Rule, select_components
from lpmix.empirical import EmpiricalDistribution, build_empirical, from_pmf
from lpmix.scores import eval_scores, legendre, legendre_matrix, quantile

DEFAULT_ORDER = 4
SIMPSON_PANELS = 2048


@dataclass(frozen=True, eq=False)
class NullModel:
    kind: Literal["continuous", "discrete"]
    description: str
    cdf: Callable | None = None
    pdf: Callable | None = None
    ppf: Callable | None = None
    dist: EmpiricalDistribution | None = None

    @classmethod
    def from_scipy(cls, frozen, description: str) -> NullModel:
        return cls("continuous", description, cdf=frozen.cdf, pdf=frozen.pdf, ppf=frozen.ppf)

    @classmethod
    def normal(cls, mu: float = 0.0, sigma: float = 1.0) -> NullModel:
        if sigma <= 0:
            raise ValueError("sigma must be positive")
        return cls.from_scipy(stats.norm(mu, sigma), f"normal({mu:g},{sigma:g})")

    @classmethod
    def uniform(cls, a: float = 0.0, b: float = 1.0) -> NullModel:
        if b <= a:
            raise ValueError("uniform needs a < b")
        return cls.from_scipy(stats.uniform(a, b - a), f"uniform({a:g},{b:g})")

    @classmethod
    def exponential(cls, rate: float = 1.0) -> NullModel:
        if rate <= 0:
            raise ValueError("rate must be positive")
        return cls.from_scipy(stats.expon(scale=1.0 / rate), f"exponential({rate:g})")

    @classmethod
    def discrete(cls, values: Sequence[float], probs: Sequence[float], description: str = "") -> NullModel:
        dist = from_pmf(values, probs)
        desc = description or ",".join(f"{v:g}:{p:g}" for v, p in zip(dist.support, dist.pmf))
        return cls("discrete", desc, dist=dist)

    @classmethod
    def from_distribution(cls, dist: EmpiricalDistribution, description: str = "empirical") -> NullModel:
        return cls("discrete", description, dist=dist)

    def order(self, m: int | None) -> int:
        if self.kind == "continuous":
            return DEFAULT_ORDER if m is None else m
        return min(DEFAULT_ORDER, self.dist.k - 1) if m is None else min(m, self.dist.k - 1)

    def scores(self, x: ArrayLike, m: int) -> NDArray[np.float64]:
        """``T_j(x;G)`` for ``j = 1..m``, one row per value."""
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        if self.kind == "continuous":
            if np.any(self.pdf(xa) <= 0):
                raise ValueError("model violation: observation where the null density is zero")
            return legendre_matrix(m, self.cdf(xa))
        return eval_scores(self.dist.score_basis(m), xa)

    def scores_u(self, u: ArrayLike, m: int) -> NDArray[np.float64]:
        """``T_j(Q(u;G);G)``; equals ``Leg_j(u)`` for continuous nulls."""
        ua = np.asarray(u, dtype=float)
        if self.kind == "continuous":
            return legendre_matrix(m, ua).reshape(ua.shape + (m,))
        xq = np.asarray(quantile(self.dist, ua))
        return eval_scores(self.dist.score_basis(m), xq)


def comparison_distribution(sample: ArrayLike, null: NullModel, u: ArrayLike):
    """``D(u) = F_n(Q(u;G))``, the empirical CDF of the transformed values ``G(x_i)``."""
    if null.kind != "continuous":
        raise ValueError("comparison_distribution needs a continuous null; use discrete_gof_estimate")
    ua = np.asarray(u, dtype=float)
    if np.any((ua <= 0) | (ua >= 1)):
        raise ValueError("u must lie strictly inside (0, 1)")
    g = np.sort(null.cdf(np.asarray(sample, dtype=float)))
    out = np.searchsorted(g, ua, side="right") / g.size
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Components:
    values: NDArray[np.float64]
    se: NDArray[np.float64] | None
    n: int | None

    @property
    def z(self) -> NDArray[np.float64] | None:
        return None if self.se is None else self.values / self.se

    @property
    def statistic(self) -> float | None:
        """``n * sum Comp_j^2``, chi-square on ``m`` df under the null."""
        return None if self.n is None else float(self.n * np.sum(self.values**2))

    @property
    def p_value(self) -> float | None:
        s = self.statistic
        return None if s is None else float(stats.chi2.sf(s, self.values.size))


def gof_components(sample: ArrayLike, null: NullModel, m: int | None = None) -> Components:
    """``Comp_j = mean T_j(x_i; G)`` with null standard errors ``1/sqrt(n)``."""
    x = np.asarray(sample, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("sample is empty")
    m = null.order(m)
    vals = null.scores(x, m).mean(axis=0)
    return Components(vals, np.full(m, 1.0 / math.sqrt(x.size)), int(x.size))


@dataclass(frozen=True, eq=False)
class ComparisonDensityEstimate:
    """Orthogonal-series estimate ``d(u) = 1 + sum_selected S_j(u;G) Comp_j``."""

    components: Components
    selection: NDArray[np.bool_]
    null: NullModel
    clip: bool = False
    _norm: list = field(default_factory=list, repr=False)

    @property
    def m(self) -> int:
        return int(self.components.values.size)

    @property
    def active(self) -> NDArray[np.float64]:
        return np.where(self.selection, self.components.values, 0.0)

    def raw(self, u: ArrayLike):
        ua = np.asarray(u, dtype=float)
        out = 1.0 + self.null.scores_u(ua, self.m) @ self.active
        return float(out) if np.ndim(out) == 0 else out

    def _clip_norm(self) -> float:
        if not self._norm:
            if self.null.kind == "discrete":
                d = 1.0 + self.null.scores(self.null.dist.support, self.m) @ self.active
                self._norm.append(float(np.dot(self.null.dist.pmf, np.maximum(d, 0.0))))
            else:
                u = np.linspace(0.0, 1.0, SIMPSON_PANELS + 1)
                self._norm.append(float(integrate.simpson(np.maximum(self.raw_closed(u), 0.0), x=u)))
        return self._norm[0]

    def raw_closed(self, u: ArrayLike) -> NDArray[np.float64]:
        """Raw series on the closed interval (continuous nulls only)."""
        ua = np.asarray(u, dtype=float)
        s = np.column_stack([legendre(j, ua) for j in range(1, self.m + 1)])
        return 1.0 + s @ self.active

    def __call__(self, u: ArrayLike):
        d = self.raw(u)
        if self.clip:
            d = np.maximum(d, 0.0) / self._clip_norm()
            return float(d) if np.ndim(d) == 0 else d
        return d

    def integral(self) -> float:
        """``int_0^1 d(u) du``: Simpson on 2048 panels, or exact summation for discrete nulls."""
        if self.null.kind == "discrete":
            return float(np.dot(self.null.dist.pmf, self.pmf() / self.null.dist.pmf))
        u = np.linspace(0.0, 1.0, SIMPSON_PANELS + 1)
        d = self.raw_closed(u)
        if self.clip:
            d = np.maximum(d, 0.0) / self._clip_norm()
        return float(integrate.simpson(d, x=u))

    def pdf(self, x: ArrayLike):
        """Skew-G density ``g(x) d(G(x))``."""
        if self.null.kind != "continuous":
            raise ValueError("pdf is defined for continuous nulls; use pmf")
        xa = np.asarray(x, dtype=float)
        u = np.asarray(self.null.cdf(xa), dtype=float)
        s = np.stack([legendre(j, u) for j in range(1, self.m + 1)], axis=-1)
        d = 1.0 + s @ self.active
        if self.clip:
            d = np.maximum(d, 0.0) / self._clip_norm()
        out = self.null.pdf(xa) * d
        return float(out) if np.ndim(out) == 0 else out

    def pmf(self) -> NDArray[np.float64]:
        """Corrected pmf ``g(x) {1 + sum_selected T_j(x;G) Comp_j}`` over the null support."""
        if self.null.kind != "discrete":
            raise ValueError("pmf is defined for discrete nulls; use pdf")
        g = self.null.dist
        p = g.pmf * (1.0 + self.null.scores(g.support, self.m) @ self.active)
        if self.clip:
            p = np.maximum(p, 0.0)
            p = p / p.sum()
        return p


def from_components(
    values: ArrayLike, null: NullModel, n: int | None = None, clip: bool = False
) -> ComparisonDensityEstimate:
    """Estimate from known (e.g. population) components, all selected."""
    v = np.asarray(values, dtype=float)
    se = None if n is None else np.full(v.size, 1.0 / math.sqrt(n))
    return ComparisonDensityEstimate(Components(v, se, n), np.ones(v.size, dtype=bool), null, clip)


def population_components(density_u: Callable, m: int, nodes: int = 64) -> NDArray[np.float64]:
    """``int_0^1 Leg_j(u) d(u) du`` by Gauss-Legendre quadrature."""
    t, w = np.polynomial.legendre.leggauss(nodes)
    u = 0.5 * (t + 1.0)
    w = 0.5 * w
    du = density_u(u)
    return np.array([np.dot(w, legendre(j, u) * du) for j in range(1, m + 1)])


def skew_g_estimate(
    sample: ArrayLike,
    null: NullModel,
    m: int | None = None,
    rule: Rule = "threshold",
    clip: bool = False,
) -> ComparisonDensityEstimate:
    """Skew-G fit: component estimates with the shared selection rule."""
    if null.kind != "continuous":
        raise ValueError("skew-G needs a continuous null")
    comps = gof_components(sample, null, m)
    return ComparisonDensityEstimate(comps, select_components(comps.values, comps.n, rule), null, clip)


@dataclass(frozen=True, eq=False)
class DiscreteGofResult:
    estimate: ComparisonDensityEstimate
    support: NDArray[np.float64]
    null_pmf: NDArray[np.float64]
    observed_pmf: NDArray[np.float64] | None
    p_hat: NDArray[np.float64]

    @property
    def negative(self) -> bool:
        return bool(np.any(self.p_hat < 0))

    @property
    def components(self) -> Components:
        return self.estimate.components


def _affine_first_score(null: NullModel) -> tuple[float, float]:
    g = null.dist
    t1 = null.scores(g.support, 1)[:, 0]
    a = (t1[-1] - t1[0]) / (g.support[-1] - g.support[0])
    b = t1[0] - a * g.support[0]
    if np.max(np.abs(a * g.support + b - t1)) > 1e-10:
        raise ValueError("first null score is not affine in x; a mean constraint does not identify it")
    return a, b


def discrete_gof_estimate(
    null: NullModel,
    *,
    sample: ArrayLike | None = None,
    pmf: ArrayLike | None = None,
    mean: float | None = None,
    n: int | None = None,
    m: int | None = None,
    rule: Rule | None = None,
    clip: bool = False,
) -> DiscreteGofResult:
    """Discrete goodness of fit with the null as the parametric start.

    Give exactly one of ``sample`` (raw observations), ``pmf`` (observed
    probabilities aligned with the null support) or ``mean`` (a first-moment
    constraint). The mean form identifies only the first component and needs
    the first null score to be affine in ``x``; it reports no standard errors.
    ``rule`` defaults to ``threshold`` when ``n`` is known and ``all`` otherwise.
    """
    if null.kind != "discrete":
        raise ValueError("discrete_gof_estimate needs a discrete null")
    if sum(a is not None for a in (sample, pmf, mean)) != 1:
        raise ValueError("give exactly one of sample, pmf, mean")
    g = null.dist
    if g.k < 2:
        raise ValueError("null needs at least two outcomes")
    observed = None
    if mean is not None:
        if m not in (None, 1):
            raise ValueError("a mean constraint identifies only the first component")
        a, b = _affine_first_score(null)
        comps = Components(np.array([a * mean + b]), None, None)
        sel = np.ones(1, dtype=bool)
    else:
        m = null.order(m)
        if sample is not None:
            x = np.asarray(sample, dtype=float).ravel()
            emp = build_empirical(x)
            idx = np.searchsorted(g.support, emp.support)
            idx = np.clip(idx, 0, g.k - 1)
            if np.any(g.support[idx] != emp.support):
                raise ValueError("observed outcomes outside the null support")
            observed = np.zeros(g.k)
            observed[idx] = emp.pmf
            n = int(x.size)
        else:
            observed = np.asarray(pmf, dtype=float).ravel()
            if observed.size != g.k:
                raise ValueError("observed pmf must align with the null support")
            if np.any(observed < 0) or abs(observed.sum() - 1.0) > 1e-9:
                raise ValueError("observed pmf must be non-negative and sum to 1")
        vals = observed @ null.scores(g.support, m)
        se = None if n is None else np.full(m, 1.0 / math.sqrt(n))
        comps = Components(vals, se, n)
        rule = rule or ("threshold" if n is not None else "all")
        if rule == "all" or n is not None:
            sel = select_components(vals, n or 1, rule)
        else:
            raise ValueError(f"rule {rule!r} needs the sample size n")
    est = ComparisonDensityEstimate(comps, sel, null, clip)
    return DiscreteGofResult(est, g.support, g.pmf, observed, est.pmf())
