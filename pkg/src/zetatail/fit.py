"""Maximum-likelihood fitting, AIC, and the 5-bin chi-square goodness-of-fit test."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize
from scipy import special as sc

from .dist import (
    DistributionSpec,
    FAMILIES,
    Geometric0,
    NegativeBinomial0,
    Support,
    ZeroInflatedGeometric0,
    ZetaTail0,
)
from .errors import DataError, DegenerateDataError, DomainError

__all__ = [
    "CountHistogram",
    "FitConfig",
    "FitResult",
    "GofReport",
    "ModelComparison",
    "COMPARISON_FAMILIES",
    "log_likelihood",
    "mle_fit",
    "chi_square_gof",
    "chi2_sf",
    "empirical_hazard",
    "compare_models",
    "geometric0_closed_form",
]


@dataclass(frozen=True)
class CountHistogram:
    """Observed frequencies: event count x -> number of periods with that count."""

    counts: Mapping[int, int]

    def __post_init__(self):
        clean = {}
        for x, n in self.counts.items():
            if int(x) != x or int(n) != n:
                raise DataError(f"counts and frequencies must be integers, got {x}: {n}")
            if x < 0 or n < 0:
                raise DataError(f"counts and frequencies must be non-negative, got {x}: {n}")
            if n:
                clean[int(x)] = clean.get(int(x), 0) + int(n)
        if sum(clean.values()) < 1:
            raise DataError("histogram needs at least one observation")
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    @classmethod
    def from_frequencies(cls, freqs: Iterable[int]) -> "CountHistogram":
        """Build from a frequency row: ``freqs[x]`` is the frequency of count x."""
        return cls({x: n for x, n in enumerate(freqs)})

    @classmethod
    def from_samples(cls, xs) -> "CountHistogram":
        values, freqs = np.unique(np.asarray(xs, dtype=np.int64), return_counts=True)
        return cls(dict(zip(values.tolist(), freqs.tolist())))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def max_count(self) -> int:
        return max(self.counts)

    def mean(self) -> float:
        return sum(x * n for x, n in self.counts.items()) / self.total

    def variance(self) -> float:
        m = self.mean()
        return sum(n * (x - m) ** 2 for x, n in self.counts.items()) / self.total

    def frequency(self, x: int) -> int:
        return self.counts.get(x, 0)

    def merged(self, other: "CountHistogram") -> "CountHistogram":
        out = dict(self.counts)
        for x, n in other.counts.items():
            out[x] = out.get(x, 0) + n
        return CountHistogram(out)


@dataclass(frozen=True)
class FitConfig:
    scalar_xtol: float = 1e-10
    simplex_xtol: float = 1e-9
    simplex_ftol: float = 1e-11
    restarts: int = 5
    jitter: float = 0.5
    max_evals: int = 10**5
    # upper end of the log(1 + a) bracket for Zeta Tail 0
    a_max: float = 1e6
    seed: int = 1983


@dataclass(frozen=True)
class FitResult:
    spec: DistributionSpec
    loglik: float
    aic: float
    iterations: int
    converged: bool

    @property
    def family(self) -> str:
        return self.spec.name

    @property
    def n_params(self) -> int:
        return self.spec.n_params


@dataclass(frozen=True)
class GofReport:
    chi2: float
    df: int
    p_value: float
    bins: list[tuple[str, int, float]] = field(default_factory=list)
    small_expected: bool = False


@dataclass(frozen=True)
class ModelComparison:
    fit: FitResult
    gof: GofReport
    best_p: bool = False
    best_aic: bool = False


COMPARISON_FAMILIES = ("geometric0", "zig0", "negbin0", "zeta-tail0")


def log_likelihood(spec: DistributionSpec, hist: CountHistogram) -> float:
    """Sum of freq(x) * log pmf(x); ``-inf`` when data fall outside the support."""
    total = []
    for x, n in hist.counts.items():
        lp = spec.log_pmf(x)
        if lp == -math.inf:
            return -math.inf
        total.append(n * lp)
    return math.fsum(total)


def _aic(k: int, loglik: float) -> float:
    return 2.0 * k - 2.0 * loglik


def _logit(p: float) -> float:
    return math.log(p) - math.log1p(-p)


def _expit(v: float) -> float:
    return float(sc.expit(v))


def _resolve_family(family) -> type[DistributionSpec]:
    if isinstance(family, str):
        try:
            return FAMILIES[family]
        except KeyError:
            raise DomainError(f"unknown family {family!r}") from None
    return family


def _safe_negll(make, hist):
    def objective(theta):
        try:
            spec = make(theta)
        except DomainError:
            return math.inf
        ll = log_likelihood(spec, hist)
        return -ll if math.isfinite(ll) else math.inf

    return objective


def mle_fit(family, hist: CountHistogram, config: FitConfig = FitConfig()) -> FitResult:
    """Maximum-likelihood fit of a zero-based family to a count histogram.

    One-parameter families use bounded Brent search on a transformed scale;
    two-parameter families use Nelder-Mead on (logit, logit) or (log, logit)
    coordinates with jittered restarts.
    """
    cls = _resolve_family(family)
    if cls.support is not Support.ZERO_BASED:
        raise DomainError(f"fitting supports zero-based families, not {cls.name}")
    if hist.max_count == 0:
        raise DegenerateDataError("all observations are 0; the MLE lies on the parameter boundary")
    if cls is Geometric0:
        return _fit_geometric0(hist, config)
    if cls is ZetaTail0:
        return _fit_scalar(
            lambda u: ZetaTail0(math.expm1(u)), hist, 0.0, math.log1p(config.a_max), config, cls
        )
    if cls is ZeroInflatedGeometric0:
        return _fit_simplex(
            lambda th: ZeroInflatedGeometric0(_expit(th[0]), _expit(th[1])),
            _zig0_start(hist), hist, config,
        )
    if cls is NegativeBinomial0:
        return _fit_simplex(
            lambda th: NegativeBinomial0(math.exp(th[0]), _expit(th[1])),
            _negbin0_start(hist), hist, config,
        )
    names = list(cls.__dataclass_fields__)
    if len(names) == 1:
        name = names[0]
        return _fit_scalar(lambda u: cls(**{name: math.exp(u)}), hist, -20.0, 20.0, config, cls)
    raise DomainError(f"no fitting routine for {cls.name}")


def geometric0_closed_form(hist: CountHistogram) -> float:
    """p-hat = N / (N + sum x freq(x)) = 1 / (1 + mean)."""
    n = hist.total
    s = sum(x * f for x, f in hist.counts.items())
    return n / (n + s)


def geometric0_numeric_mle(hist: CountHistogram, config: FitConfig) -> tuple[float, int, bool]:
    """Bounded Brent search for the Geometric 0 MLE, independent of the closed form.

    The objective is the log-likelihood ratio against a reference ``p0``,
    ``N log(p/p0) + S log((1-p)/(1-p0))``, evaluated with ``log1p``.  Near the
    optimum this avoids subtracting two large log-likelihoods, so the search is
    not limited by the sqrt(machine eps) floor.  One recentring pass follows.
    """
    n = hist.total
    s = sum(x * f for x, f in hist.counts.items())
    # second pass searches an offset from the first optimum, so the
    # relative part of Brent's tolerance (sqrt(eps) * |x|) stays negligible
    centre, p0, half_width = 0.0, 0.5, 40.0
    evals, ok = 0, True
    for _ in range(2):
        def objective(d, centre=centre, p0=p0):
            p = _expit(centre + d)
            return -(n * math.log1p((p - p0) / p0) + s * math.log1p((p0 - p) / (1.0 - p0)))

        res = optimize.minimize_scalar(
            objective, bounds=(-half_width, half_width), method="bounded",
            options={"xatol": config.scalar_xtol, "maxiter": config.max_evals},
        )
        evals += int(res.nfev)
        ok = ok and bool(res.success)
        centre += float(res.x)
        p0 = _expit(centre)
        half_width = 1e-3
    return p0, evals, ok


def _fit_geometric0(hist: CountHistogram, config: FitConfig) -> FitResult:
    p_hat = geometric0_closed_form(hist)
    p_num, evals, ok = geometric0_numeric_mle(hist, config)
    spec = Geometric0(p_hat)
    ll = log_likelihood(spec, hist)
    return FitResult(spec, ll, _aic(1, ll), evals, ok and abs(p_num - p_hat) <= 1e-9)


def _fit_scalar(make, hist, lo, hi, config, cls) -> FitResult:
    objective = _safe_negll(make, hist)
    res = optimize.minimize_scalar(
        objective,
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": config.scalar_xtol, "maxiter": config.max_evals},
    )
    theta = float(res.x)
    spec = make(theta)
    ll = log_likelihood(spec, hist)
    # pinned to the upper end means the likelihood is still rising there
    at_upper = hi - theta < 1e-6 * max(1.0, abs(hi))
    return FitResult(spec, ll, _aic(spec.n_params, ll), int(res.nfev), bool(res.success) and not at_upper)


def _zig0_start(hist: CountHistogram) -> np.ndarray:
    pos = {x: n for x, n in hist.counts.items() if x > 0}
    n_pos = sum(pos.values())
    mean_shift = sum((x - 1) * n for x, n in pos.items()) / n_pos
    p0 = 1.0 / (1.0 + mean_shift)
    f0 = hist.frequency(0) / hist.total
    pi0 = min(max((f0 - p0) / (1.0 - p0), 0.05), 0.95)
    p0 = min(max(p0, 0.05), 0.95)
    return np.array([_logit(p0), _logit(pi0)])


def _negbin0_start(hist: CountHistogram) -> np.ndarray:
    m, v = hist.mean(), hist.variance()
    if v > m * 1.01:
        r0 = m * m / (v - m)
        p0 = m / v
    else:
        r0, p0 = 10.0, 10.0 / (10.0 + m)
    p0 = min(max(p0, 0.02), 0.98)
    return np.array([math.log(r0), _logit(p0)])


def _fit_simplex(make, start, hist, config: FitConfig) -> FitResult:
    objective = _safe_negll(make, hist)
    rng = np.random.default_rng(config.seed)
    options = {
        "xatol": config.simplex_xtol,
        "fatol": config.simplex_ftol,
        "maxfev": config.max_evals,
        "maxiter": config.max_evals,
    }
    best = None
    evals = 0
    for i in range(config.restarts):
        x0 = start if i == 0 else start + rng.normal(0.0, config.jitter, size=start.size)
        res = optimize.minimize(objective, x0, method="Nelder-Mead", options=options)
        evals += int(res.nfev)
        if best is None or res.fun < best.fun:
            best = res
    # polish from the best vertex so the final simplex is small
    res = optimize.minimize(objective, best.x, method="Nelder-Mead", options=options)
    evals += int(res.nfev)
    if res.fun <= best.fun:
        best = res
    spec = make(best.x)
    ll = log_likelihood(spec, hist)
    return FitResult(spec, ll, _aic(2, ll), evals, bool(best.success))


def chi2_sf(x: float, df: int) -> float:
    """Upper tail of the chi-square law: Q(df/2, x/2)."""
    if df < 1:
        raise DomainError(f"chi-square needs df >= 1, got {df}")
    if x < 0:
        raise DomainError(f"chi-square statistic must be >= 0, got {x}")
    return float(sc.gammaincc(df / 2.0, x / 2.0))


def chi_square_gof(spec: DistributionSpec, hist: CountHistogram, n_bins: int = 5) -> GofReport:
    """Pearson chi-square over bins 0, 1, ..., n_bins-2 and an open top bin.

    ``df = n_bins - 1 - k`` with k the number of fitted parameters.
    """
    if spec.support is not Support.ZERO_BASED:
        raise DomainError("chi-square binning assumes a zero-based family")
    n = hist.total
    last = n_bins - 1
    probs = [spec.pmf(x) for x in range(last)] + [spec.survival(last - 1)]
    observed = [hist.frequency(x) for x in range(last)]
    observed.append(sum(f for x, f in hist.counts.items() if x >= last))
    labels = [str(x) for x in range(last)] + [f"{last}+"]
    expected = [n * p for p in probs]
    chi2 = math.fsum((o - e) ** 2 / e for o, e in zip(observed, expected))
    df = n_bins - 1 - spec.n_params
    return GofReport(
        chi2=chi2,
        df=df,
        p_value=chi2_sf(chi2, df),
        bins=list(zip(labels, observed, expected)),
        small_expected=any(e < 1.0 for e in expected),
    )


def empirical_hazard(hist: CountHistogram, x: int) -> float:
    """#(X_j = x) / #(X_j > x)."""
    above = sum(f for k, f in hist.counts.items() if k > x)
    if above == 0:
        raise DomainError(f"empirical hazard undefined at x={x}: no observation exceeds it")
    return hist.frequency(x) / above


def compare_models(
    hist: CountHistogram,
    families: Iterable[str] = COMPARISON_FAMILIES,
    config: FitConfig = FitConfig(),
) -> list[ModelComparison]:
    """Fit each family, run the chi-square test, and flag the best p-value and AIC."""
    rows = []
    for fam in families:
        fit = mle_fit(fam, hist, config)
        rows.append((fit, chi_square_gof(fit.spec, hist)))
    best_p = max(range(len(rows)), key=lambda i: rows[i][1].p_value)
    best_aic = min(range(len(rows)), key=lambda i: rows[i][0].aic)
    return [
        ModelComparison(fit, gof, best_p=(i == best_p), best_aic=(i == best_aic))
        for i, (fit, gof) in enumerate(rows)
    ]
