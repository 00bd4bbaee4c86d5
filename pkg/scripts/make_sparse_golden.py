"""Regenerate tests/data/sparse_chisq.json from an independent oracle.

The oracle builds the null score functions by a QR factorisation of the
pmf-weighted Vandermonde matrix in the standardized mid-distribution, which
shares no code with the package's Gram-Schmidt construction.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "sparse_chisq.json"


def sparse_setup():
    support = np.arange(1, 21, dtype=float)
    null = np.array([0.25, 0.25] + [1 / 36] * 18)
    observed = np.zeros(20)
    observed[:2] = [0.75, 0.25]
    return support, null, observed, 20


def qr_scores(p: np.ndarray, m: int) -> np.ndarray:
    cdf = np.cumsum(p)
    mid = cdf - 0.5 * p
    z = (mid - 0.5) / math.sqrt(np.dot(p, (mid - 0.5) ** 2))
    vander = np.column_stack([z**j for j in range(m + 1)])
    q, r = np.linalg.qr(np.sqrt(p)[:, None] * vander)
    q = q * np.sign(np.diag(r))
    return (q / np.sqrt(p)[:, None])[:, 1:]


def main() -> None:
    support, null, observed, n = sparse_setup()
    m = 4
    t = qr_scores(null, m)
    comps = observed @ t
    sel = np.abs(comps) > 2 / math.sqrt(n)
    p_hat = null * (1 + t @ np.where(sel, comps, 0.0))
    doc = {
        "support": support.tolist(),
        "null_pmf": null.tolist(),
        "observed_pmf": observed.tolist(),
        "n": n,
        "m": m,
        "components": comps.tolist(),
        "selected": [int(j) + 1 for j in np.nonzero(sel)[0]],
        "statistic": float(n * np.sum(comps**2)),
        "p_hat": p_hat.tolist(),
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {OUT}")
    print("components", np.round(comps, 6))


if __name__ == "__main__":
    main()
