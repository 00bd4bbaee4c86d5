"""Plot-ready tables (lists of row dicts) for external plotting tools."""

from __future__ import annotations

import csv
import io
from typing import Iterable, Sequence

import numpy as np
from scipy import stats

from lpmix.copula import CopulaModel, conditional_comparison_density, copula_surface
from lpmix.density import ComparisonDensityEstimate
from lpmix.empirical import EmpiricalDistribution, mid_quantile

DEFAULT_SLICES = (0.1, 0.25, 0.5, 0.75, 0.9)


def unit_grid(size: int) -> np.ndarray:
    """Cell midpoints ``(i - .5) / size``; avoids the endpoints where quantiles are undefined."""
    return (np.arange(1, size + 1) - 0.5) / size


def copula_surface_rows(model: CopulaModel, size: int = 50) -> list[dict]:
    g = unit_grid(size)
    dens = copula_surface(model, g, g)
    return [{"u": float(u), "v": float(v), "density": float(dens[i, j])} for i, u in enumerate(g) for j, v in enumerate(g)]


def copula_slice_rows(model: CopulaModel, slices: Sequence[float] = DEFAULT_SLICES, size: int = 100) -> list[dict]:
    g = unit_grid(size)
    rows = []
    for u in slices:
        d = conditional_comparison_density(model, g, float(u))
        rows.extend({"v": float(v), "density": float(dv), "u_slice": float(u)} for v, dv in zip(g, d))
    return rows


def quantile_rows(dist: EmpiricalDistribution) -> list[dict]:
    """Quantile-plot points ``(F_mid(x_j), x_j)`` with the matching normal scores."""
    z = stats.norm.ppf(dist.mid)
    return [
        {"u": float(u), "x": float(x), "u_normal_quantile": float(q)}
        for u, x, q in zip(dist.mid, dist.support, z)
    ]


def mid_quantile_rows(dist: EmpiricalDistribution, size: int = 100) -> list[dict]:
    g = unit_grid(size)
    return [{"u": float(u), "x": float(x)} for u, x in zip(g, mid_quantile(dist, g))]


def comparison_density_rows(est: ComparisonDensityEstimate, size: int = 100) -> list[dict]:
    g = unit_grid(size)
    return [{"u": float(u), "density": float(d)} for u, d in zip(g, est(g))]


def to_csv(rows: Iterable[dict], fieldnames: Sequence[str] | None = None) -> str:
    rows = list(rows)
    buf = io.StringIO()
    names = list(fieldnames or (rows[0].keys() if rows else []))
    writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: (f"{v:.12g}" if isinstance(v, float) else v) for k, v in r.items()})
    return buf.getvalue()
