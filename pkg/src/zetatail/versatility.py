"""Versatility of one-parameter count families.

V = sqrt( E_theta[ I(theta) ] ) with theta ~ Lognormal(0, 1) and I the Fisher
information of a single observation.  With theta = exp(sqrt(2) y) the prior
expectation is a Gauss-Hermite sum over y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial.hermite import hermgauss
from scipy import special as sc

from .errors import ConvergenceError, DomainError
from .specfun import hurwitz_zeta, log_hurwitz_zeta, riemann_zeta

__all__ = [
    "PARAMETERIZATIONS",
    "VersatilityReport",
    "ScoreSum",
    "fisher_information",
    "score",
    "log_pmf",
    "score_sum",
    "log_zeta_moments",
    "versatility_measure",
    "table4",
]

# key -> (family label, parameterization label)
PARAMETERIZATIONS: dict[str, tuple[str, str]] = {
    "geometric0-m": ("Geometric 0", "p = m/(m+1)"),
    "geometric0-inv": ("Geometric 0", "p = 1/(m+1)"),
    "zeta-tail0": ("Zeta Tail 0", "a"),
    "zeta0": ("Zeta 0", "b"),
    "quadratic0": ("Quadratic 0", "c"),
}

_DEFAULT_NODES = 64
_GUARD_NODES = 128
_GUARD_REL = 1e-3
_TAIL_MASS = 1e-12
_MAX_TERMS = 10**6


@dataclass(frozen=True)
class VersatilityReport:
    family: str
    parameterization: str
    fisher_integral: float
    v: float
    node_count: int

    def __post_init__(self):
        if not self.v >= 0:
            raise DomainError(f"versatility must be >= 0, got {self.v}")


@dataclass(frozen=True)
class ScoreSum:
    """Truncated sums over x of pmf * score**k for k = 0, 1, 2."""

    mass: float
    mean_score: float
    fisher: float
    terms: int
    capped: bool


def _key(family: str) -> str:
    if family not in PARAMETERIZATIONS:
        raise DomainError(
            f"unknown parameterization {family!r}; choose from {', '.join(PARAMETERIZATIONS)}"
        )
    return family


def _check_theta(theta: float) -> None:
    if not (theta > 0 and math.isfinite(theta)):
        raise DomainError(f"parameter must be finite and > 0, got {theta}")


# -- log-zeta moments --------------------------------------------------------

_ZM_CUT = 1000
_LN = np.log(np.arange(1, _ZM_CUT, dtype=float))


def _log_zeta_tail(s: float, n: float) -> tuple[float, float, float]:
    """``sum_{m>=n} (ln m)**k m**(-s)`` for k = 0, 1, 2, with n large.

    The integral ``Gamma(k+1, (s-1) ln n) / (s-1)**(k+1)`` plus the first two
    Euler-Maclaurin corrections.
    """
    ln_n = math.log(n)
    z = (s - 1.0) * ln_n
    f_n = math.exp(-s * ln_n)
    out = []
    for k in range(3):
        integral = sc.gammaincc(k + 1, z) * math.factorial(k) / (s - 1.0) ** (k + 1)
        lk = ln_n**k
        d1 = f_n / n * ((k * ln_n ** (k - 1) if k else 0.0) - s * lk)
        out.append(integral + 0.5 * f_n * lk - d1 / 12.0)
    return out[0], out[1], out[2]


def log_zeta_moments(s: float) -> tuple[float, float, float]:
    """``Z_k(s) = sum_{n>=1} (ln n)**k n**(-s)`` for k = 0, 1, 2, with s > 1.

    Terms n < 1000 are summed directly and the rest by ``_log_zeta_tail``.
    ``Z_1 = -zeta'(s)``.
    """
    if not s > 1:
        raise DomainError(f"log-zeta moments need s > 1, got {s}")
    w = np.exp(-s * _LN)
    head = (math.fsum(w), math.fsum(_LN * w), math.fsum(_LN * _LN * w))
    tail = _log_zeta_tail(s, float(_ZM_CUT))
    return head[0] + tail[0], head[1] + tail[1], head[2] + tail[2]


# -- per-family log-pmf and score -------------------------------------------


def log_pmf(family: str, theta: float, x: int) -> float:
    """Log-pmf of the zero-based family at ``x`` under the named parameterization."""
    _check_theta(theta)
    key = _key(family)
    if key == "geometric0-m":
        return math.log(theta) - (x + 1) * math.log1p(theta)
    if key == "geometric0-inv":
        return x * math.log(theta) - (x + 1) * math.log1p(theta)
    if key == "zeta-tail0":
        return math.log1p(theta) + log_hurwitz_zeta(x + 2.0, theta + 2.0)
    if key == "zeta0":
        return -(theta + 1.0) * math.log(x + 1.0) - math.log(riemann_zeta(theta + 1.0))
    return math.log(theta) - math.log(x + theta) - math.log(x + theta + 1.0)


def score(family: str, theta: float, x: int) -> float:
    """d/dtheta of the log-pmf at ``x``."""
    _check_theta(theta)
    key = _key(family)
    if key == "geometric0-m":
        return 1.0 / theta - (x + 1) / (1.0 + theta)
    if key == "geometric0-inv":
        return x / theta - (x + 1) / (1.0 + theta)
    if key == "zeta-tail0":
        t = theta + 2.0
        # d/dt zeta(s, t) = -s zeta(s + 1, t), taken as a ratio in log space
        ratio = math.exp(log_hurwitz_zeta(x + 3.0, t) - log_hurwitz_zeta(x + 2.0, t))
        return 1.0 / (theta + 1.0) - (x + 2.0) * ratio
    if key == "zeta0":
        z0, z1, _ = log_zeta_moments(theta + 1.0)
        return z1 / z0 - math.log(x + 1.0)
    return 1.0 / theta - 1.0 / (x + theta) - 1.0 / (x + theta + 1.0)


def score_sum(
    family: str,
    theta: float,
    tail_mass: float = _TAIL_MASS,
    max_terms: int = _MAX_TERMS,
) -> ScoreSum:
    """Sum pmf, pmf*score and pmf*score**2 over x = 0, 1, ... until the
    remaining mass drops below ``tail_mass`` or ``max_terms`` is reached.

    Zeta 0 and Quadratic 0 have algebraic tails that 10**6 terms cannot
    exhaust.  When the cap binds for them, the remainder past the cap is added
    in closed form and ``capped`` is set.
    """
    key = _key(family)
    _check_theta(theta)
    if key == "zeta0":
        return _zeta0_score_sum(theta, tail_mass, max_terms)
    if key == "quadratic0":
        return _quadratic0_score_sum(theta, tail_mass, max_terms)
    mass, s1, s2 = [], [], []
    x = 0
    total = 0.0
    while True:
        p = math.exp(log_pmf(key, theta, x))
        u = score(key, theta, x)
        mass.append(p)
        s1.append(p * u)
        s2.append(p * u * u)
        total += p
        x += 1
        if 1.0 - total < tail_mass or x >= max_terms:
            break
    return ScoreSum(math.fsum(mass), math.fsum(s1), math.fsum(s2), x, x >= max_terms)


def _zeta0_score_sum(b: float, tail_mass: float, max_terms: int) -> ScoreSum:
    s = b + 1.0
    z0, z1, _ = log_zeta_moments(s)
    c = z1 / z0
    x = np.arange(max_terms, dtype=float)
    lx = np.log1p(x)
    p = np.exp(-s * lx) / z0
    cum = np.cumsum(p)
    stop = min(int(np.searchsorted(-(1.0 - cum), -tail_mass)) + 1, max_terms)
    sc_ = c - lx[:stop]
    pk = p[:stop]
    mass, m1, m2 = [pk], [pk * sc_], [pk * sc_ * sc_]
    capped = stop >= max_terms
    if capped:
        # remainder over x >= stop, i.e. n = x + 1 >= stop + 1
        t0, t1, t2 = _log_zeta_tail(s, stop + 1.0)
        mass.append(np.array([t0 / z0]))
        m1.append(np.array([(c * t0 - t1) / z0]))
        m2.append(np.array([(c * c * t0 - 2.0 * c * t1 + t2) / z0]))
    return ScoreSum(
        math.fsum(np.concatenate(mass)), math.fsum(np.concatenate(m1)),
        math.fsum(np.concatenate(m2)), stop, capped,
    )


def _quadratic0_score_sum(c: float, tail_mass: float, max_terms: int) -> ScoreSum:
    # mass beyond x = n - 1 is exactly c / (n + c)
    need = math.ceil(c / tail_mass - c)
    stop = int(min(max(need, 1), max_terms))
    u = np.arange(stop, dtype=float) + c
    v = u + 1.0
    p = c / (u * v)
    sc_ = 1.0 / c - 1.0 / u - 1.0 / v
    mass, m1, m2 = [p], [p * sc_], [p * sc_ * sc_]
    capped = stop < need
    if capped:
        # with u = x + c, v = u + 1 and t = stop + c, the sums over x >= stop
        # telescope except for zeta(2, t) + zeta(2, t + 1)
        t = stop + c
        mass.append(np.array([c / t]))
        m1.append(np.array([stop / (t * t)]))
        sq = hurwitz_zeta(2.0, t) + hurwitz_zeta(2.0, t + 1.0) - 2.0 / t
        m2.append(np.array([1.0 / (c * t) - 2.0 / (t * t) + c * (1.0 / t**3 + sq)]))
    return ScoreSum(
        math.fsum(np.concatenate(mass)), math.fsum(np.concatenate(m1)),
        math.fsum(np.concatenate(m2)), stop, capped,
    )


def fisher_information(family: str, theta: float) -> float:
    """Expected squared score of one observation at parameter ``theta``.

    Geometric 0 (both parameterizations) and Quadratic 0 use closed forms;
    Zeta 0 uses Var[ln(X+1)] from log-zeta moments; Zeta Tail 0 sums the
    score series.
    """
    _check_theta(theta)
    key = _key(family)
    if key == "geometric0-m":
        return 1.0 / (theta * theta * (theta + 1.0))
    if key == "geometric0-inv":
        return 1.0 / (theta * (theta + 1.0))
    if key == "quadratic0":
        return _quadratic0_fisher(theta)
    if key == "zeta0":
        z0, z1, z2 = log_zeta_moments(theta + 1.0)
        m = z1 / z0
        return max(z2 / z0 - m * m, 0.0)
    return score_sum(key, theta).fisher


def _quadratic0_fisher(c: float) -> float:
    # I(c) = 2 c zeta(2, c) - 1/c - 2; for large c the leading terms cancel,
    # so use the Bernoulli expansion 2 sum_k B_2k c**(-2k)
    if c > 20.0:
        w = 1.0 / (c * c)
        return 2.0 * w * (1 / 6 - w * (1 / 30 - w * (1 / 42 - w * (1 / 30 - w * 5 / 66))))
    return 2.0 * c * hurwitz_zeta(2.0, c) - 1.0 / c - 2.0


# -- prior expectation --------------------------------------------------------


@lru_cache(maxsize=8)
def _nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    y, w = hermgauss(n)
    return np.exp(math.sqrt(2.0) * y), w / math.sqrt(math.pi)


def _prior_mean(fn: Callable[[float], float], n: int) -> float:
    theta, w = _nodes(n)
    return math.fsum(wi * fn(float(t)) for wi, t in zip(w, theta))


def versatility_measure(family: str, nodes: int = _DEFAULT_NODES) -> VersatilityReport:
    """Versatility of a family under a standard lognormal prior on its parameter.

    The result at ``nodes`` is accepted only if a run with twice as many
    nodes agrees to 0.1% relative.
    """
    key = _key(family)
    fn = lambda t: fisher_information(key, t)  # noqa: E731
    base = _prior_mean(fn, nodes)
    check = _prior_mean(fn, max(2 * nodes, _GUARD_NODES))
    if not abs(check - base) <= _GUARD_REL * abs(check):
        raise ConvergenceError(
            f"Gauss-Hermite quadrature unstable for {key}: {base} ({nodes} nodes) vs {check}"
        )
    label, param = PARAMETERIZATIONS[key]
    return VersatilityReport(label, param, base, math.sqrt(base), nodes)


def table4(nodes: int = _DEFAULT_NODES) -> list[VersatilityReport]:
    """The five measures, then the average of the two Geometric 0 values."""
    reports = [versatility_measure(k, nodes) for k in PARAMETERIZATIONS]
    avg = 0.5 * (reports[0].v + reports[1].v)
    reports.append(VersatilityReport("Geometric 0", "average", avg * avg, avg, nodes))
    return reports
