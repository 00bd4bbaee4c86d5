"""``lp`` command-line front end.

Each subcommand reads a UTF-8 CSV with a header row and writes one JSON
document ``{"command", "config", "result"}`` (or the subcommand's main table
as CSV). The ``config`` block is the fully resolved run configuration;
``lp replay DOC.json`` re-runs it.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys
import warnings
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from lpmix import copula as cop
from lpmix import plotgrid
from lpmix.comoments import RULES, coherence_eigen, independence_test, lp_comoments, pearson_from_lp
from lpmix.density import NullModel, discrete_gof_estimate, skew_g_estimate
from lpmix.empirical import build_empirical, infer_kind, informative_quantile_summary
from lpmix.inference import binary_labels, classify_fit, feature_screen, two_sample
from lpmix.moments import lp_moments, normality_component, tail_index

COMMANDS = ("moments", "comoments", "gof", "copula", "twosample", "screen", "classify", "quantplot")
MISSING = {"", "na", "nan", "null", "none"}
KIND_NAMES = {"continuous": "continuous-sample", "discrete": "discrete-sample"}


class ValidationError(Exception):
    """Bad configuration or input; exit code 2."""


@dataclass
class Dataset:
    columns: dict[str, np.ndarray]
    kinds: dict[str, str]
    n_rows: int
    dropped: int


def ingest_csv(path: str | Path, columns: Sequence[str] | None = None, kinds: dict[str, str] | None = None) -> Dataset:
    """Read selected numeric columns; rows with a missing selected cell are dropped."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames or []
            rows = list(reader)
    except (OSError, UnicodeDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    cols = list(columns) if columns else list(header)
    for c in cols:
        if c not in header:
            raise ValidationError(f"column {c!r} not found (have {', '.join(header)})")
    kept: dict[str, list[float]] = {c: [] for c in cols}
    dropped = 0
    for i, row in enumerate(rows, start=1):
        cells = [(row.get(c) or "").strip() for c in cols]
        if any(cell.lower() in MISSING for cell in cells):
            dropped += 1
            continue
        for c, cell in zip(cols, cells):
            try:
                kept[c].append(float(cell))
            except ValueError:
                raise ValidationError(f"non-numeric value {cell!r} in column {c!r}, data row {i}") from None
    n = len(rows) - dropped
    if n == 0:
        raise ValidationError("no rows left after dropping missing values")
    if dropped:
        warnings.warn(f"{dropped} rows dropped", stacklevel=2)
    data = {c: np.asarray(v) for c, v in kept.items()}
    hints = kinds or {}
    resolved = {c: KIND_NAMES[hints[c]] if c in hints else infer_kind(data[c]) for c in cols}
    return Dataset(data, resolved, n, dropped)


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    col: str | None = None
    x: str | None = None
    y: str | None = None
    group: str | None = None
    positive: float | None = None
    features: list[str] | None = None
    m: int | None = None
    mx: int | None = None
    my: int | None = None
    rule: str = "threshold"
    kinds: dict[str, str] = field(default_factory=dict)
    format: str = "json"
    null: str | None = None
    mean: float | None = None
    pmf: str | None = None
    clip: bool = False
    grid: int = 50
    slices: list[float] = field(default_factory=lambda: list(plotgrid.DEFAULT_SLICES))
    permutations: int = 0
    threshold: float = 0.95
    seed: int = 0

    @classmethod
    def from_dict(cls, d: dict) -> RunConfig:
        names = {f.name for f in fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ValidationError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown subcommand {self.command!r}")
        if self.rule not in RULES:
            raise ValidationError(f"rule must be one of {RULES}")
        if self.format not in ("json", "csv"):
            raise ValidationError("format must be json or csv")
        for name in ("m", "mx", "my"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValidationError(f"--{name} must be at least 1")
        for k, v in self.kinds.items():
            if v not in KIND_NAMES:
                raise ValidationError(f"kind for {k!r} must be continuous or discrete")
        if any(not 0 < u < 1 for u in self.slices):
            raise ValidationError("slice positions must lie in (0, 1)")
        if self.grid < 1:
            raise ValidationError("--grid must be positive")
        need = {
            "moments": ("col",),
            "quantplot": ("col",),
            "comoments": ("x", "y"),
            "copula": ("x", "y"),
            "twosample": ("col", "group"),
            "screen": ("y",),
            "classify": ("x", "y"),
            "gof": ("null",),
        }[self.command]
        for name in need:
            if getattr(self, name) is None:
                raise ValidationError(f"{self.command} needs --{name}")
        if self.command != "gof" or self.mean is None and self.pmf is None:
            if self.input is None:
                raise ValidationError(f"{self.command} needs --input")


# ---------------------------------------------------------------- null models

_FLOAT = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"


def parse_discrete(text: str) -> tuple[list[float], list[float]]:
    """Parse ``"v1:p1,v2:p2,..."``."""
    vals, probs = [], []
    for item in re.split(r"[,\s]+", text.strip()):
        if not item:
            continue
        try:
            v, p = item.split(":")
            vals.append(float(v))
            probs.append(float(p))
        except ValueError:
            raise ValidationError(f"bad value:prob item {item!r}") from None
    if not vals:
        raise ValidationError("empty discrete null")
    return vals, probs


def parse_null(text: str) -> NullModel:
    """Null model from ``normal(mu,sigma)``, ``uniform(a,b)``, ``exponential(rate)``,
    ``die:a-b [uniform]`` (equal mass on the integers a..b), ``v1:p1,...`` or ``@file``."""
    s = text.strip()
    if s.startswith("@"):
        try:
            s = Path(s[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise ValidationError(f"cannot read null file: {exc}") from exc
        return _discrete_null(s)
    m = re.fullmatch(rf"(normal|uniform|exponential)\(\s*({_FLOAT})\s*(?:,\s*({_FLOAT})\s*)?\)", s)
    if m:
        name, a, b = m.group(1), float(m.group(2)), m.group(3)
        try:
            if name == "exponential":
                if b is not None:
                    raise ValidationError("exponential takes one parameter")
                return NullModel.exponential(a)
            if b is None:
                raise ValidationError(f"{name} takes two parameters")
            return NullModel.normal(a, float(b)) if name == "normal" else NullModel.uniform(a, float(b))
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
    m = re.fullmatch(r"die:\s*(-?\d+)\s*-\s*(-?\d+)(?:\s+uniform)?", s)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi <= lo:
            raise ValidationError("die range needs lo < hi")
        k = hi - lo + 1
        return NullModel.discrete(range(lo, hi + 1), [1.0 / k] * k, f"die:{lo}-{hi} uniform")
    return _discrete_null(s)


def _discrete_null(text: str) -> NullModel:
    vals, probs = parse_discrete(text)
    try:
        return NullModel.discrete(vals, probs)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


# ---------------------------------------------------------------- subcommands


def _kind(data: Dataset, col: str) -> str:
    return data.kinds[col]


def _moments(cfg: RunConfig, data: Dataset):
    x = data.columns[cfg.col]
    dist = build_empirical(x, _kind(data, cfg.col))
    if dist.k < 2:
        raise ValidationError(f"column {cfg.col!r} is constant")
    basis = dist.score_basis(cfg.m)
    mom = lp_moments(dist, basis)
    summ = informative_quantile_summary(dist)
    result = {
        "n": int(x.size),
        "kind": dist.kind,
        "mean": mom.mean,
        "var": mom.var_total,
        "lp_moments": {
            "coeffs": mom.coeffs,
            "standardized": mom.std_coeffs,
            "var_explained": mom.var_explained,
        },
        "tail_index": tail_index(mom, cfg.threshold),
        "quartile_summary": {
            "q1": summ.q1,
            "q2": summ.q2,
            "q3": summ.q3,
            "mq": summ.mq,
            "dq": summ.dq,
            "sd": summ.sd,
            "outliers": None if summ.outliers is None else list(summ.outliers),
        },
        "normality_component": normality_component(x).statistic if x.size >= 8 else None,
    }
    table = [
        {"j": j + 1, "lp": float(c), "lp_z": float(z), "var_explained": float(v)}
        for j, (c, z, v) in enumerate(zip(mom.coeffs, mom.std_coeffs, mom.var_explained))
    ]
    return result, table


def _comoments(cfg: RunConfig, data: Dataset):
    x, y = data.columns[cfg.x], data.columns[cfg.y]
    mat = lp_comoments(x, y, cfg.mx or cfg.m, cfg.my or cfg.m, cfg.rule, _kind(data, cfg.x), _kind(data, cfg.y))
    test = independence_test(x, y, mat.basis_x.m, mat.basis_y.m, permutations=cfg.permutations, seed=cfg.seed)
    result = {
        "n": mat.n,
        "m_x": mat.basis_x.m,
        "m_y": mat.basis_y.m,
        "matrix": mat.values,
        "selection": mat.selection,
        "row0": mat.row0,
        "lpinfor": mat.lpinfor,
        "n_lpinfor": mat.n * mat.lpinfor,
        "full_lpinfor": mat.full_lpinfor,
        "spearman": float(mat.values[0, 0]),
        "eigenvalues": coherence_eigen(mat),
        "pearson": float(np.corrcoef(x, y)[0, 1]),
        "pearson_from_lp": {"full": pearson_from_lp(mat), "truncated": pearson_from_lp(mat, truncate=True)},
        "independence_test": {
            "statistic": test.statistic,
            "df": test.df,
            "p_value": test.p_value,
            "permutation_p_value": test.permutation_p_value,
        },
    }
    table = [
        {"j": j + 1, "k": k + 1, "value": float(mat.values[j, k]), "selected": int(mat.selection[j, k])}
        for j in range(mat.values.shape[0])
        for k in range(mat.values.shape[1])
    ]
    return result, table


def _components_doc(comps, selection) -> dict:
    return {
        "values": comps.values,
        "se": comps.se,
        "z": comps.z,
        "statistic": comps.statistic,
        "p_value": comps.p_value,
        "selection": selection,
    }


def _gof(cfg: RunConfig, data: Dataset | None):
    null = parse_null(cfg.null)
    if null.kind == "discrete":
        try:
            if cfg.mean is not None:
                res = discrete_gof_estimate(null, mean=cfg.mean, m=cfg.m, clip=cfg.clip)
            elif cfg.pmf is not None:
                vals, probs = parse_discrete(cfg.pmf)
                obs = dict(zip(vals, probs))
                extra = set(obs) - set(null.dist.support.tolist())
                if extra:
                    raise ValidationError(f"observed outcomes outside the null support: {sorted(extra)}")
                aligned = [obs.get(float(v), 0.0) for v in null.dist.support]
                # no sample size with an observed pmf, so every component is kept
                res = discrete_gof_estimate(null, pmf=aligned, m=cfg.m, rule="all", clip=cfg.clip)
            else:
                if cfg.col is None:
                    raise ValidationError("gof needs --col, --mean or --pmf")
                res = discrete_gof_estimate(null, sample=data.columns[cfg.col], m=cfg.m, rule=cfg.rule, clip=cfg.clip)
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
        result = {
            "null": null.description,
            "kind": "discrete",
            "components": _components_doc(res.components, res.estimate.selection),
            "support": res.support,
            "null_pmf": res.null_pmf,
            "observed_pmf": res.observed_pmf,
            "p_hat": res.p_hat,
            "negative": res.negative,
        }
        obs = res.observed_pmf if res.observed_pmf is not None else [None] * res.support.size
        table = [
            {"x": float(v), "null_pmf": float(g), "observed_pmf": None if o is None else float(o), "p_hat": float(p)}
            for v, g, o, p in zip(res.support, res.null_pmf, obs, res.p_hat)
        ]
        return result, table
    if cfg.col is None or data is None:
        raise ValidationError("a continuous null needs --input and --col")
    try:
        est = skew_g_estimate(data.columns[cfg.col], null, cfg.m, cfg.rule, cfg.clip)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    curve = plotgrid.comparison_density_rows(est, cfg.grid)
    result = {
        "null": null.description,
        "kind": "continuous",
        "components": _components_doc(est.components, est.selection),
        "integral": est.integral(),
        "density_curve": curve,
    }
    return result, curve


def _copula(cfg: RunConfig, data: Dataset):
    x, y = data.columns[cfg.x], data.columns[cfg.y]
    model = cop.estimate_copula(
        x, y, cfg.mx or cfg.m, cfg.my or cfg.m, cfg.rule, _kind(data, cfg.x), _kind(data, cfg.y)
    )
    slices = plotgrid.copula_slice_rows(model, cfg.slices, cfg.grid)
    surface = plotgrid.copula_surface_rows(model, cfg.grid)
    mat = model.comoments
    result = {
        "n": mat.n,
        "matrix": mat.values,
        "selection": mat.selection,
        "lpinfor": mat.lpinfor,
        "integral": cop.integrate_copula(model),
        "slices": slices,
        "conditional_median": [
            {"u_slice": float(u), "y": cop.conditional_quantile(model, 0.5, float(u))} for u in cfg.slices
        ],
    }
    return result, surface, {"surface": surface, "slices": slices}


def _twosample(cfg: RunConfig, data: Dataset):
    x = data.columns[cfg.col]
    try:
        ind = binary_labels(data.columns[cfg.group], cfg.positive)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    res = two_sample(x[ind == 0], x[ind == 1], cfg.m, cfg.rule)
    dens = res.conditional_density
    n = res.pooled_n
    result = {
        "n": n,
        "n1": int(ind.sum()),
        "lp11": res.lp11,
        "z_score": res.z_score,
        "p_value": res.p_value,
        "t_equiv": res.t_equiv,
        "classical_t": math.sqrt(n - 2) * res.t_equiv if n > 2 else None,
        "lpinfor": res.lpinfor,
        "comoments": res.comoments.values[:, 0],
        "conditional_density": _components_doc(dens.components, dens.selection),
    }
    table = [
        {"j": j + 1, "lp_j1": float(res.comoments.values[j, 0]), "component": float(c), "selected": int(s)}
        for j, (c, s) in enumerate(zip(dens.components.values, dens.selection))
    ]
    return result, table


def _screen(cfg: RunConfig, data: Dataset, threads: int | None):
    names = cfg.features or [c for c in data.columns if c != cfg.y]
    rep = feature_screen({c: data.columns[c] for c in names}, data.columns[cfg.y], cfg.m, cfg.rule, threads)
    rows = [{"rank": e.rank, "feature": e.name, "lpinfor": e.lpinfor, "n_selected": e.n_selected} for e in rep.entries]
    return {"ranking": rows, "skipped": list(rep.skipped)}, rows


def _classify(cfg: RunConfig, data: Dataset):
    x, y = data.columns[cfg.x], data.columns[cfg.y]
    try:
        labels = binary_labels(y, cfg.positive)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    mdl = classify_fit(x, labels, cfg.m)
    g = plotgrid.unit_grid(cfg.grid)
    curve = [{"u": float(u), "probability": float(p)} for u, p in zip(g, mdl.predict_u(g))]
    fitted = mdl.predict(x)
    result = {
        "n": int(x.size),
        "components": list(mdl.components),
        "coef": mdl.coef,
        "converged": mdl.converged,
        "separated": mdl.separated,
        "n_iter": mdl.n_iter,
        "mean_fitted": float(fitted.mean()),
        "accuracy": float(np.mean((fitted > 0.5) == (labels == 1))),
        "curve": curve,
    }
    return result, curve


def _quantplot(cfg: RunConfig, data: Dataset):
    dist = build_empirical(data.columns[cfg.col], _kind(data, cfg.col))
    points = plotgrid.quantile_rows(dist)
    result = {"quantile_points": points, "mid_quantile": plotgrid.mid_quantile_rows(dist, cfg.grid)}
    return result, points


# ---------------------------------------------------------------- driver


def _columns_needed(cfg: RunConfig) -> list[str] | None:
    if cfg.command == "screen":
        return None if cfg.features is None else [*cfg.features, cfg.y]
    cols = [c for c in (cfg.col, cfg.x, cfg.y, cfg.group) if c is not None]
    return list(dict.fromkeys(cols))


def clean(obj: Any) -> Any:
    """JSON-ready copy: floats rounded to 12 significant digits, non-finite to null."""
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if not math.isfinite(v):
            return None
        v = float(f"{v:.12g}")
        return 0.0 if v == 0 else v
    return obj


def run(cfg: RunConfig, threads: int | None = None) -> tuple[int, dict, dict]:
    """Execute ``cfg``; returns ``(exit_code, document, tables)``."""
    try:
        cfg.validate()
        data = None
        if cfg.input is not None:
            data = ingest_csv(cfg.input, _columns_needed(cfg), cfg.kinds)
        handler = {
            "moments": _moments,
            "comoments": _comoments,
            "gof": _gof,
            "copula": _copula,
            "twosample": _twosample,
            "classify": _classify,
            "quantplot": _quantplot,
        }
        if cfg.command == "screen":
            out = _screen(cfg, data, threads)
        else:
            out = handler[cfg.command](cfg, data)
    except ValidationError as exc:
        return 2, {"command": cfg.command, "error": str(exc)}, {}
    except (ValueError, KeyError, ArithmeticError, np.linalg.LinAlgError) as exc:
        return 1, {"command": cfg.command, "error": f"{type(exc).__name__}: {exc}"}, {}
    result, table = out[0], out[1]
    tables = {"main": table, **(out[2] if len(out) > 2 else {})}
    if data is not None:
        result = {**result, "dropped_rows": data.dropped}
    doc = {"command": cfg.command, "config": asdict(cfg), "result": result}
    return 0, clean(doc), tables


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _kind_hint(text: str) -> tuple[str, str]:
    if "=" not in text:
        raise argparse.ArgumentTypeError("expected COLUMN=continuous|discrete")
    col, kind = text.split("=", 1)
    return col, kind


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lp", description="LP mixed-data statistics")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="CSV file with a header row")
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--m", type=int, help="score order (default min(4, distinct - 1))")
    common.add_argument("--rule", choices=RULES, default="threshold", help="component selection (default threshold 2/sqrt(n))")
    common.add_argument("--kind", action="append", type=_kind_hint, default=[], metavar="COL=KIND",
                        help="declare a column continuous or discrete")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, help="worker threads (default $LP_THREADS or all cores)")
    common.add_argument("--grid", type=int, default=50, help="grid size for curves and surfaces")

    p = sub.add_parser("moments", parents=[common], help="LP moments, tail index, quartile summary")
    p.add_argument("--col", required=True)
    p.add_argument("--threshold", type=float, default=0.95, help="tail-index threshold")

    p = sub.add_parser("quantplot", parents=[common], help="quantile, mid-quantile and normal Q-Q points")
    p.add_argument("--col", required=True)

    for name, help_ in (("comoments", "LP comoments, LPINFOR, independence test"), ("copula", "LP copula density")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)
        p.add_argument("--mx", type=int)
        p.add_argument("--my", type=int)
        if name == "comoments":
            p.add_argument("--permutations", type=int, default=0, help="permutation p-value draws")
        else:
            p.add_argument("--slices", type=_float_list, default=list(plotgrid.DEFAULT_SLICES))
            p.add_argument("--surface-csv", help="write the (u, v, density) surface here")
            p.add_argument("--slices-csv", help="write the (v, density, u_slice) slices here")

    p = sub.add_parser("gof", parents=[common], help="component goodness of fit, skew-G, discrete estimate")
    p.add_argument("--null", required=True, help='e.g. "normal(0,1)", "die:1-6 uniform", "1:.5,2:.5", "@file"')
    p.add_argument("--col")
    p.add_argument("--mean", type=float, help="first-moment constraint instead of data")
    p.add_argument("--pmf", help='observed probabilities "v1:p1,v2:p2,..."')
    p.add_argument("--clip", action="store_true", help="truncate negative density at 0 and renormalise")

    p = sub.add_parser("twosample", parents=[common], help="two-sample LP statistics")
    p.add_argument("--col", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--positive", type=float, help="group label treated as sample 1")

    p = sub.add_parser("screen", parents=[common], help="rank features by LPINFOR with y")
    p.add_argument("--y", required=True)
    p.add_argument("--features", type=lambda s: [t for t in s.split(",") if t])

    p = sub.add_parser("classify", parents=[common], help="score-function logistic regression")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--positive", type=float)

    p = sub.add_parser("replay", help="re-run the config block of an emitted JSON document")
    p.add_argument("document")
    p.add_argument("--output")
    p.add_argument("--threads", type=int)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    names = {f.name for f in fields(RunConfig)}
    d = {k: v for k, v in vars(args).items() if k in names and v is not None}
    d["kinds"] = dict(args.kind)
    return RunConfig(**d)


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"lp: warning: {message}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        warnings.showwarning = _show_warning
        return _main(args)


def _main(args: argparse.Namespace) -> int:
    if args.command == "replay":
        try:
            doc = json.loads(Path(args.document).read_text(encoding="utf-8"))
            cfg = RunConfig.from_dict(doc.get("config", doc))
        except (OSError, json.JSONDecodeError, ValidationError, TypeError) as exc:
            print(f"lp: {exc}", file=sys.stderr)
            return 2
    else:
        cfg = config_from_args(args)
    code, doc, tables = run(cfg, args.threads)
    if code:
        print(f"lp: {doc['error']}", file=sys.stderr)
        return code
    if cfg.format == "csv":
        _emit(plotgrid.to_csv(tables["main"]), args.output)
    else:
        _emit(dumps(doc), args.output)
    for key in ("surface", "slices"):
        path = getattr(args, f"{key}_csv", None)
        if path:
            Path(path).write_text(plotgrid.to_csv(tables[key]), encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
