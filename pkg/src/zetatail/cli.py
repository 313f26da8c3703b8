"""Command-line interface.

Every command writes tab-separated text: ``#``-prefixed metadata lines, one
header row, then data rows.  Exit codes: 0 success, 2 usage error, 3 data
error, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from collections.abc import Sequence

import numpy as np

from . import __version__
from .data import REGIONS, region, region_names
from .dist import FAMILIES, DistributionSpec, make_spec, zt0_relative_overdispersion, zt0_zero_ratio
from .errors import ConvergenceError, DataError, DegenerateDataError, DomainError, ZetaTailError
from .fit import COMPARISON_FAMILIES, CountHistogram, FitConfig, compare_models
from .sampling import UniformSource, sample
from .versatility import table4

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NUMERICAL = 4

FIT_FAMILIES = ("geometric0", "zig0", "negbin0", "zeta-tail0", "zeta0", "quadratic0")
FIGURE3_A = (0.25, 1.0, 4.0)

_PARAM_FLAGS = ("a", "p", "pi0", "r", "b", "c", "r_count")


class UsageError(ZetaTailError):
    pass


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return f"{v:.10g}"
    return str(v)


class Table:
    def __init__(self, header: Sequence[str]):
        self.meta: list[str] = []
        self.header = list(header)
        self.rows: list[list[str]] = []

    def note(self, text: str) -> None:
        self.meta.append(text)

    def add(self, *values) -> None:
        self.rows.append([_fmt(v) for v in values])

    def render(self) -> str:
        out = io.StringIO()
        for line in self.meta:
            out.write(f"# {line}\n")
        out.write("\t".join(self.header) + "\n")
        for row in self.rows:
            out.write("\t".join(row) + "\n")
        return out.getvalue()


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(text: str) -> list[int]:
    """``"3"``, ``"1..5"`` or ``"0,2,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo_i, hi_i + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse x range {text!r}; use N, LO..HI or N,M,...") from None


def _spec_from_args(args) -> DistributionSpec:
    params = {k: getattr(args, k) for k in _PARAM_FLAGS if getattr(args, k) is not None}
    return make_spec(args.family, **params)


def read_counts_csv(path: str) -> CountHistogram:
    """Read a ``count,frequency`` CSV into a histogram; errors name the line."""
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None
    with fh:
        reader = csv.reader(fh)
        counts: dict[int, int] = {}
        header_seen = False
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            cells = [c.strip() for c in row]
            if not header_seen:
                if [c.lower() for c in cells] != ["count", "frequency"]:
                    raise DataError(f"{path}: line {line}: expected header 'count,frequency'")
                header_seen = True
                continue
            if len(cells) != 2:
                raise DataError(f"{path}: line {line}: expected 2 fields, got {len(cells)}")
            try:
                x, n = int(cells[0]), int(cells[1])
            except ValueError:
                raise DataError(f"{path}: line {line}: non-integer value in {row!r}") from None
            if x < 0 or n < 0:
                raise DataError(f"{path}: line {line}: negative value in {row!r}")
            if x in counts:
                raise DataError(f"{path}: line {line}: count {x} listed twice")
            counts[x] = n
    if not header_seen:
        raise DataError(f"{path}: line 1: empty file, expected header 'count,frequency'")
    return CountHistogram(counts)


# -- commands ------------------------------------------------------------------


def cmd_eval(args) -> str:
    spec = _spec_from_args(args)
    xs = _parse_range(args.x) if args.x else list(range(spec.origin, spec.origin + 10))
    t = Table(["x", "pmf", "cdf", "survival", "hazard"])
    t.note(f"family={spec.name} " + " ".join(f"{k}={_fmt(v)}" for k, v in spec.params().items()))
    for name, fn in (("mean", spec.mean), ("variance", spec.variance)):
        try:
            t.note(f"{name}={_fmt(fn())}")
        except DomainError:
            t.note(f"{name}=inf")
    for x in xs:
        if x < 0:
            raise UsageError(f"x must be >= 0, got {x}")
        try:
            h = spec.hazard(x)
        except DomainError:
            h = float("nan")
        t.add(x, spec.pmf(x), spec.cdf(x), spec.survival(x), h)
    return t.render()


def _fit_one(label: str, hist: CountHistogram, families: Sequence[str], t: Table) -> None:
    for row in compare_models(hist, families, FitConfig()):
        fit, gof = row.fit, row.gof
        params = ";".join(f"{k}={_fmt(float(v))}" for k, v in fit.spec.params().items())
        t.add(
            label, fit.family, params, fit.loglik, f"{fit.aic:.2f}", gof.chi2, gof.df,
            f"{gof.p_value:.4f}", "*" if row.best_p else "", "*" if row.best_aic else "",
            fit.converged, gof.small_expected,
        )


def cmd_fit(args) -> str:
    if args.all_families or not args.family:
        families = list(COMPARISON_FAMILIES)
    else:
        families = list(dict.fromkeys(args.family))
    t = Table([
        "data", "family", "params", "loglik", "aic", "chi2", "df", "p_value",
        "best_p", "best_aic", "converged", "small_expected",
    ])
    t.note("maximum-likelihood fits; chi-square over bins 0,1,2,3,4+ with df = 4 - k")
    if args.csv:
        sources = [(args.csv, read_counts_csv(args.csv))]
    elif args.all_regions:
        sources = [(r.slug, r.counts) for r in REGIONS]
    elif args.region:
        try:
            rec = region(args.region)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        sources = [(rec.slug, rec.counts)]
    else:
        raise UsageError("fit needs --region NAME, --all-regions or --csv PATH")
    for label, hist in sources:
        t.note(f"{label}: N={hist.total} mean={_fmt(hist.mean())}")
        _fit_one(label, hist, families, t)
    return t.render()


def cmd_figures(args) -> str:
    which = args.which
    if which in (1, 2):
        grid_max = 20.0 if args.grid_max is None else args.grid_max
        step = 0.05 if args.grid_step is None else args.grid_step
        if not (step > 0 and grid_max >= 0):
            raise UsageError("--grid-step must be > 0 and --grid-max >= 0")
        n = int(math.floor(grid_max / step + 1e-9))
        grid = [round(i * step, 12) for i in range(n + 1)]
        if which == 1:
            t = Table(["a", "relative_overdispersion"])
            t.note("Zeta Tail 0(a): (Var/E - 1)/E")
            for a in grid:
                t.add(a, zt0_relative_overdispersion(a))
        else:
            t = Table(["a", "zero_ratio"])
            t.note("P(X=0) under Zeta Tail 0(a) over Geometric 0(p=(a+1)/(a+2)), matched tail: (a+2) zeta(2, a+2)")
            for a in grid:
                t.add(a, zt0_zero_ratio(a))
        return t.render()
    x_max = 20 if args.grid_max is None else int(args.grid_max)
    specs = [make_spec("zeta-tail0", a=a) for a in FIGURE3_A]
    t = Table(["x"] + [f"hazard_a={_fmt(a)}" for a in FIGURE3_A])
    t.note("Zeta Tail 0(a) hazard pmf(x)/P(X>x); limit a+1")
    for x in range(x_max + 1):
        t.add(x, *[s.hazard(x) for s in specs])
    return t.render()


def cmd_sample(args) -> str:
    if args.n < 0:
        raise UsageError(f"--n must be >= 0, got {args.n}")
    spec = _spec_from_args(args)
    draws = sample(spec, args.n, UniformSource(args.seed))
    out = io.StringIO()
    out.write(f"# family={spec.name} " + " ".join(f"{k}={_fmt(v)}" for k, v in spec.params().items()) + "\n")
    out.write(f"# n={args.n} seed={args.seed}\n")
    if args.n:
        out.write(f"# mean={_fmt(float(np.mean(draws)))} variance={_fmt(float(np.var(draws)))}\n")
        values, freqs = np.unique(draws, return_counts=True)
        for v, f in zip(values.tolist(), freqs.tolist()):
            out.write(f"# freq\t{int(v)}\t{f}\n")
    out.write("x\n")
    if args.n:
        out.write("\n".join(str(int(v)) for v in draws.tolist()))
        out.write("\n")
    return out.getvalue()


def cmd_versatility(args) -> str:
    t = Table(["family", "parameterization", "fisher_integral", "v", "nodes"])
    t.note("V = sqrt(E[I(theta)]), theta ~ Lognormal(0, 1), Gauss-Hermite quadrature")
    for rep in table4(args.nodes):
        t.add(rep.family, rep.parameterization, rep.fisher_integral, f"{rep.v:.4f}", rep.node_count)
    return t.render()


# -- parser --------------------------------------------------------------------


def _add_params(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("family parameters")
    g.add_argument("--a", type=float, help="Zeta Tail shape a >= 0")
    g.add_argument("--p", type=float, help="success probability in (0, 1)")
    g.add_argument("--pi0", type=float, help="zero-inflation weight in (0, 1)")
    g.add_argument("--r", type=float, help="Negative Binomial size r > 0")
    g.add_argument("--b", type=float, help="Zeta 0 exponent b > 0")
    g.add_argument("--c", type=float, help="Quadratic 0 parameter c > 0")
    g.add_argument("--r-count", dest="r_count", type=int, help="number of summands for gzt")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetatail", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="pmf, cdf, survival and hazard on a range of x")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--x", help="N, LO..HI or a comma list (default: 10 values from the origin)")
    _add_params(p)
    p.add_argument("--out")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("fit", help="maximum-likelihood fits with chi-square and AIC")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--region", help=f"one of: {', '.join(region_names())}")
    src.add_argument("--all-regions", action="store_true")
    src.add_argument("--csv", help="CSV file with header count,frequency")
    p.add_argument("--family", action="append", choices=FIT_FAMILIES)
    p.add_argument("--all-families", action="store_true")
    p.add_argument("--out")
    p.set_defaults(run=cmd_fit)

    p = sub.add_parser("figures", help="data series behind the three figures")
    p.add_argument(
        "which", type=int, choices=(1, 2, 3),
        help="1: relative overdispersion vs a; 2: zero-probability ratio vs a; 3: hazard vs x",
    )
    p.add_argument("--grid-max", type=float, help="largest a for series 1 and 2 (default 20)")
    p.add_argument("--grid-step", type=float, help="a spacing for series 1 and 2 (default 0.05)")
    p.add_argument("--out")
    p.set_defaults(run=cmd_figures)

    p = sub.add_parser("sample", help="seeded random variates")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    _add_params(p)
    p.add_argument("--out")
    p.set_defaults(run=cmd_sample)

    p = sub.add_parser("versatility", help="versatility measures under a lognormal prior")
    p.add_argument("--nodes", type=int, default=64)
    p.add_argument("--out")
    p.set_defaults(run=cmd_versatility)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.run(args)
    except (UsageError, DegenerateDataError, DataError) as exc:
        code = EXIT_USAGE if isinstance(exc, UsageError) else EXIT_DATA
        print(f"zetatail: error: {exc}", file=sys.stderr)
        return code
    except DomainError as exc:
        print(f"zetatail: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, ArithmeticError) as exc:
        print(f"zetatail: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    _write(text, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
