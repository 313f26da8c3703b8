"""Distribution catalog: Zeta Tail and the comparator count families.

Each family is a frozen dataclass carrying its parameters; the module-level
functions (``pmf``, ``cdf``, ``hazard``, ...) dispatch on that value.  Tail
quantities (survival, hazard) are computed from forward tail sums or closed
forms, never as ``1 - cdf``, so they stay accurate far into the tail.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, fields
from functools import lru_cache
from typing import ClassVar

import numpy as np
from scipy import special as sc

from .errors import ConvergenceError, DivergentMomentError, DomainError
from .specfun import (
    digamma,
    falling_factorial,
    hurwitz_zeta,
    log_hurwitz_zeta,
    riemann_zeta,
    stirling2,
)

__all__ = [
    "Support",
    "DistributionSpec",
    "ZetaTail",
    "ZetaTail0",
    "Geometric0",
    "ZeroInflatedGeometric0",
    "NegativeBinomial0",
    "Zeta0",
    "Quadratic0",
    "GeneralizedZetaTail",
    "FAMILIES",
    "make_spec",
    "pmf",
    "log_pmf",
    "pmf_array",
    "cdf",
    "survival",
    "hazard",
    "factorial_moment",
    "raw_moment",
    "mean",
    "variance",
    "overdispersion_index",
    "zt0_relative_overdispersion",
    "zt0_zero_ratio",
    "pgf",
    "mgf",
    "cf",
    "mode",
    "quadratic_mixing_pmf",
    "zeta_tail_mixture_pmf",
    "power_grid_sum",
]

_REL_EPS = 2.0**-56
_MAX_RAW_MOMENT = 6
_MAX_FACTORIAL_MOMENT = 20
_SERIES_CAP = 10**6
# parent tail mass at which the Generalized Zeta Tail convolution is truncated
_GZT_TAIL_MASS = 1e-12


class Support(enum.Enum):
    ONE_BASED = 1
    ZERO_BASED = 0


def _as_count(x) -> int:
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise DomainError(f"count argument must be an integer, got {x!r}")


@dataclass(frozen=True)
class DistributionSpec:
    """Base class: a family tag plus its parameter values."""

    name: ClassVar[str] = ""
    label: ClassVar[str] = ""
    support: ClassVar[Support] = Support.ZERO_BASED

    @property
    def origin(self) -> int:
        """Smallest value with positive probability."""
        return self.support.value

    @property
    def n_params(self) -> int:
        return len(fields(self))

    def params(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    # -- mass functions -------------------------------------------------
    def log_pmf(self, x: int) -> float:
        raise NotImplementedError

    def pmf(self, x: int) -> float:
        x = _as_count(x)
        if x < self.origin:
            return 0.0
        return math.exp(self.log_pmf(x))

    def survival(self, x: int) -> float:
        """P(X > x)."""
        x = _as_count(x)
        if x < self.origin:
            return 1.0
        return self._tail_sum(x + 1)

    def log_survival(self, x: int) -> float:
        sv = self.survival(x)
        if sv <= 0.0:
            raise ConvergenceError(f"survival of {self} underflows to 0 at x={x}")
        return math.log(sv)

    def cdf(self, x: int) -> float:
        x = _as_count(x)
        if x < self.origin:
            return 0.0
        sv = self.survival(x)
        if sv < 0.5:
            return 1.0 - sv
        return math.fsum(self.pmf(k) for k in range(self.origin, x + 1))

    def hazard(self, x: int) -> float:
        """pmf(x) / P(X > x), the actuarial convention."""
        x = _as_count(x)
        if x < self.origin:
            raise DomainError(f"x={x} is outside the support of {self}")
        return math.exp(self.log_pmf(x) - self.log_survival(x))

    def _tail_sum(self, start: int) -> float:
        # plain forward summation; families with closed forms override survival
        total = 0.0
        x = start
        for _ in range(_SERIES_CAP):
            f = self.pmf(x)
            total += f
            if f <= _REL_EPS * total or f == 0.0:
                return total
            x += 1
        raise ConvergenceError(f"tail sum of {self} from {start} did not converge")

    # -- moments ----------------------------------------------------------
    def raw_moment(self, kappa: int) -> float:
        raise DivergentMomentError(f"no finite raw moments for {self}")

    def mean(self) -> float:
        return self.raw_moment(1)

    def variance(self) -> float:
        m1 = self.raw_moment(1)
        return self.raw_moment(2) - m1 * m1

    # -- transforms -------------------------------------------------------
    def pgf(self, z: float) -> float:
        raise DomainError(f"no generating function implemented for {self.name}")

    def mgf(self, t: float) -> float:
        raise DomainError(f"no moment-generating function implemented for {self.name}")

    def cf(self, omega: float) -> tuple[float, float]:
        re = []
        im = []
        x = self.origin
        for _ in range(_SERIES_CAP):
            f = self.pmf(x)
            re.append(math.cos(omega * x) * f)
            im.append(math.sin(omega * x) * f)
            if x % 16 == 0 and self.survival(x) <= 1e-15:
                return math.fsum(re), math.fsum(im)
            x += 1
        raise ConvergenceError(f"characteristic function series for {self} did not converge")

    def mode(self) -> int:
        x = self.origin
        f = self.pmf(x)
        while True:
            g = self.pmf(x + 1)
            if g <= f:
                return x
            x, f = x + 1, g


# ---------------------------------------------------------------------------
# Zeta Tail


@dataclass(frozen=True)
class ZetaTail(DistributionSpec):
    """pmf(x) = (a + 1) * zeta(x + 1, a + 2) on x = 1, 2, ..."""

    a: float
    name: ClassVar[str] = "zeta-tail"
    label: ClassVar[str] = "Zeta Tail"
    support: ClassVar[Support] = Support.ONE_BASED

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a >= 0):
            raise DomainError(f"{self.label} requires a >= 0, got a={self.a}")

    # ZetaTail0 reuses every formula through this shift
    _shift: ClassVar[int] = 0

    def _zt_log_pmf(self, k: int) -> float:
        return math.log(self.a + 1.0) + log_hurwitz_zeta(k + 1.0, self.a + 2.0)

    def log_pmf(self, x: int) -> float:
        x = _as_count(x)
        if x < self.origin:
            return -math.inf
        return self._zt_log_pmf(x + self._shift)

    def _zt_log_survival(self, k: int) -> float:
        """log P(X > k) for the one-based variable."""
        if k < 1:
            return 0.0
        # pmf ratios are bounded by q = 1/(a+2), so the remainder after the
        # term f_j is at most f_j * q / (1 - q) = f_j / (a + 1)
        base = self._zt_log_pmf(k + 1)
        total = 0.0
        j = k + 1
        for _ in range(_SERIES_CAP):
            rel = math.exp(self._zt_log_pmf(j) - base)
            total += rel
            if rel / (self.a + 1.0) <= _REL_EPS * total:
                return base + math.log(total)
            j += 1
        raise ConvergenceError(f"survival tail of {self} did not converge")

    def log_survival(self, x: int) -> float:
        x = _as_count(x)
        if x < self.origin:
            return 0.0
        return self._zt_log_survival(x + self._shift)

    def survival(self, x: int) -> float:
        return math.exp(self.log_survival(x))

    def factorial_moment(self, nu: int) -> float:
        """E[(X)_nu] = (a + 1) nu! zeta(nu + 1, a + 1)."""
        _check_nu(nu)
        return (self.a + 1.0) * math.factorial(nu) * hurwitz_zeta(nu + 1.0, self.a + 1.0)

    def raw_moment(self, kappa: int) -> float:
        _check_kappa(kappa)
        a1 = self.a + 1.0
        return a1 * math.fsum(
            stirling2(kappa, nu) * math.factorial(nu) * hurwitz_zeta(nu + 1.0, a1)
            for nu in range(1, kappa + 1)
        )

    def mean(self) -> float:
        return (self.a + 1.0) * hurwitz_zeta(2.0, self.a + 1.0)

    def variance(self) -> float:
        a1 = self.a + 1.0
        z2 = hurwitz_zeta(2.0, a1)
        z3 = hurwitz_zeta(3.0, a1)
        return a1 * (z2 + 2.0 * z3 - a1 * z2 * z2)

    def pgf(self, z: float) -> float:
        if not abs(z) < 1:
            raise DomainError(f"pgf requires |z| < 1, got z={z}")
        t = self.a + 2.0
        return (self.a + 1.0) * (digamma(t) - digamma(t - z))

    def mgf(self, t: float) -> float:
        limit = math.log(self.a + 2.0)
        if not t < limit - 1e-12:
            raise DomainError(f"mgf requires t < ln(a + 2) = {limit}, got t={t}")
        a2 = self.a + 2.0
        return (self.a + 1.0) * (digamma(a2) - digamma(a2 - math.exp(t)))

    def mode(self) -> int:
        return self.origin


@dataclass(frozen=True)
class ZetaTail0(ZetaTail):
    """Zeta Tail shifted onto 0, 1, 2, ...: pmf(x) = (a + 1) * zeta(x + 2, a + 2)."""

    name: ClassVar[str] = "zeta-tail0"
    label: ClassVar[str] = "Zeta Tail 0"
    support: ClassVar[Support] = Support.ZERO_BASED
    _shift: ClassVar[int] = 1

    def _parent(self) -> ZetaTail:
        return ZetaTail(self.a)

    def factorial_moment(self, nu: int) -> float:
        # (X - 1)_nu = sum_j C(nu, j) (X)_j (-1)_{nu-j}, with (-1)_n = (-1)^n n!
        _check_nu(nu)
        parent = self._parent()
        terms = []
        for j in range(nu + 1):
            fm = 1.0 if j == 0 else parent.factorial_moment(j)
            terms.append(math.comb(nu, j) * (-1) ** (nu - j) * math.factorial(nu - j) * fm)
        return math.fsum(terms)

    def raw_moment(self, kappa: int) -> float:
        _check_kappa(kappa)
        parent = self._parent()
        terms = [(-1.0) ** kappa]
        for j in range(1, kappa + 1):
            terms.append(math.comb(kappa, j) * (-1) ** (kappa - j) * parent.raw_moment(j))
        return math.fsum(terms)

    def mean(self) -> float:
        return self._parent().mean() - 1.0

    def variance(self) -> float:
        return self._parent().variance()

    def pgf(self, z: float) -> float:
        if not abs(z) < 1:
            raise DomainError(f"pgf requires |z| < 1, got z={z}")
        if abs(z) < 1e-3:
            # removable point at z = 0: sum z^x pmf(x) directly
            return math.fsum(z**x * self.pmf(x) for x in range(12))
        return self._parent().pgf(z) / z

    def mgf(self, t: float) -> float:
        return self._parent().mgf(t) * math.exp(-t)

    def cf(self, omega: float) -> tuple[float, float]:
        re, im = self._parent().cf(omega)
        c, s = math.cos(omega), math.sin(omega)
        # multiply by exp(-i omega)
        return re * c + im * s, im * c - re * s


def _check_nu(nu: int) -> None:
    if not (1 <= nu <= _MAX_FACTORIAL_MOMENT):
        raise DomainError(f"factorial moment order must be in 1..{_MAX_FACTORIAL_MOMENT}, got {nu}")


def _check_kappa(kappa: int) -> None:
    if not (1 <= kappa <= _MAX_RAW_MOMENT):
        raise DomainError(f"raw moment order must be in 1..{_MAX_RAW_MOMENT}, got {kappa}")


# ---------------------------------------------------------------------------
# Geometric family


def _check_prob(value: float, what: str, family: str) -> None:
    if not (0.0 < value < 1.0):
        raise DomainError(f"{family} requires 0 < {what} < 1, got {what}={value}")


def _geometric_raw_moment(kappa: int, p: float) -> float:
    ratio = (1.0 - p) / p
    return math.fsum(
        stirling2(kappa, nu) * math.factorial(nu) * ratio**nu for nu in range(1, kappa + 1)
    )


@dataclass(frozen=True)
class Geometric0(DistributionSpec):
    """pmf(x) = p (1 - p)^x on x = 0, 1, ..."""

    p: float
    name: ClassVar[str] = "geometric0"
    label: ClassVar[str] = "Geometric 0"

    def __post_init__(self):
        _check_prob(self.p, "p", "Geometric 0")

    def log_pmf(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return -math.inf
        return math.log(self.p) + x * math.log1p(-self.p)

    def log_survival(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return 0.0
        return (x + 1) * math.log1p(-self.p)

    def survival(self, x: int) -> float:
        return math.exp(self.log_survival(x))

    def raw_moment(self, kappa: int) -> float:
        _check_kappa(kappa)
        return _geometric_raw_moment(kappa, self.p)

    def mean(self) -> float:
        return (1.0 - self.p) / self.p

    def variance(self) -> float:
        return (1.0 - self.p) / (self.p * self.p)

    def hazard(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            raise DomainError(f"x={x} is outside the support of {self}")
        return self.p / (1.0 - self.p)

    def pgf(self, z: float) -> float:
        if not abs(z) < 1:
            raise DomainError(f"pgf requires |z| < 1, got z={z}")
        return self.p / (1.0 - (1.0 - self.p) * z)

    def mgf(self, t: float) -> float:
        if not t < -math.log1p(-self.p):
            raise DomainError(f"mgf requires t < -ln(1 - p), got t={t}")
        return self.p / (1.0 - (1.0 - self.p) * math.exp(t))

    def cf(self, omega: float) -> tuple[float, float]:
        v = self.p / (1.0 - (1.0 - self.p) * cmath.exp(1j * omega))
        return v.real, v.imag

    def mode(self) -> int:
        return 0


@dataclass(frozen=True)
class ZeroInflatedGeometric0(DistributionSpec):
    """Geometric 0 with an extra point mass pi0 at zero."""

    p: float
    pi0: float
    name: ClassVar[str] = "zig0"
    label: ClassVar[str] = "Zero-Inflated Geometric 0"

    def __post_init__(self):
        _check_prob(self.p, "p", "Zero-Inflated Geometric 0")
        _check_prob(self.pi0, "pi0", "Zero-Inflated Geometric 0")

    def log_pmf(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return -math.inf
        if x == 0:
            return math.log(self.pi0 + (1.0 - self.pi0) * self.p)
        return math.log1p(-self.pi0) + math.log(self.p) + x * math.log1p(-self.p)

    def log_survival(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return 0.0
        return math.log1p(-self.pi0) + (x + 1) * math.log1p(-self.p)

    def survival(self, x: int) -> float:
        return math.exp(self.log_survival(x))

    def raw_moment(self, kappa: int) -> float:
        _check_kappa(kappa)
        return (1.0 - self.pi0) * _geometric_raw_moment(kappa, self.p)

    def mean(self) -> float:
        return (1.0 - self.pi0) * (1.0 - self.p) / self.p

    def pgf(self, z: float) -> float:
        if not abs(z) < 1:
            raise DomainError(f"pgf requires |z| < 1, got z={z}")
        return self.pi0 + (1.0 - self.pi0) * self.p / (1.0 - (1.0 - self.p) * z)

    def mode(self) -> int:
        return 0


@dataclass(frozen=True)
class NegativeBinomial0(DistributionSpec):
    """pmf(x) = Gamma(x + r) / (Gamma(r) x!) p^r (1 - p)^x on x = 0, 1, ..."""

    r: float
    p: float
    name: ClassVar[str] = "negbin0"
    label: ClassVar[str] = "Negative Binomial 0"

    def __post_init__(self):
        if not (math.isfinite(self.r) and self.r > 0):
            raise DomainError(f"Negative Binomial 0 requires r > 0, got r={self.r}")
        _check_prob(self.p, "p", "Negative Binomial 0")

    def log_pmf(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return -math.inf
        r = self.r
        return float(
            sc.gammaln(x + r) - sc.gammaln(r) - sc.gammaln(x + 1.0)
            + r * math.log(self.p) + x * math.log1p(-self.p)
        )

    def survival(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return 1.0
        # P(X > x) = I_{1-p}(x + 1, r)
        return float(sc.betainc(x + 1.0, self.r, 1.0 - self.p))

    def raw_moment(self, kappa: int) -> float:
        _check_kappa(kappa)
        ratio = (1.0 - self.p) / self.p
        return math.fsum(
            stirling2(kappa, nu) * falling_factorial(self.r + nu - 1.0, nu) * ratio**nu
            for nu in range(1, kappa + 1)
        )

    def mean(self) -> float:
        return self.r * (1.0 - self.p) / self.p

    def variance(self) -> float:
        return self.r * (1.0 - self.p) / (self.p * self.p)

    def pgf(self, z: float) -> float:
        if not abs(z) < 1:
            raise DomainError(f"pgf requires |z| < 1, got z={z}")
        return (self.p / (1.0 - (1.0 - self.p) * z)) ** self.r


@dataclass(frozen=True)
class Zeta0(DistributionSpec):
    """pmf(x) = (x + 1)^-(b + 1) / zeta(b + 1) on x = 0, 1, ..."""

    b: float
    name: ClassVar[str] = "zeta0"
    label: ClassVar[str] = "Zeta 0"

    def __post_init__(self):
        if not (math.isfinite(self.b) and self.b > 0):
            raise DomainError(f"Zeta 0 requires b > 0, got b={self.b}")

    def log_pmf(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return -math.inf
        s = self.b + 1.0
        return -s * math.log(x + 1.0) - math.log(riemann_zeta(s))

    def log_survival(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return 0.0
        s = self.b + 1.0
        return log_hurwitz_zeta(s, x + 2.0) - math.log(riemann_zeta(s))

    def survival(self, x: int) -> float:
        return math.exp(self.log_survival(x))

    def raw_moment(self, kappa: int) -> float:
        _check_kappa(kappa)
        s = self.b + 1.0
        if not s - kappa > 1.0:
            raise DivergentMomentError(
                f"Zeta 0 moment of order {kappa} diverges unless b > {kappa} (b={self.b})"
            )
        # X = Y - 1 with E[Y^j] = zeta(s - j) / zeta(s)
        zs = riemann_zeta(s)
        terms = [(-1.0) ** kappa]
        for j in range(1, kappa + 1):
            terms.append(math.comb(kappa, j) * (-1) ** (kappa - j) * riemann_zeta(s - j) / zs)
        return math.fsum(terms)

    def mode(self) -> int:
        return 0


@dataclass(frozen=True)
class Quadratic0(DistributionSpec):
    """pmf(x) = c / ((x + c)(x + c + 1)) on x = 0, 1, ..."""

    c: float
    name: ClassVar[str] = "quadratic0"
    label: ClassVar[str] = "Quadratic 0"

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c > 0):
            raise DomainError(f"Quadratic 0 requires c > 0, got c={self.c}")

    def log_pmf(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return -math.inf
        c = self.c
        return math.log(c) - math.log(x + c) - math.log(x + c + 1.0)

    def survival(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return 1.0
        return self.c / (x + 1.0 + self.c)

    def cdf(self, x: int) -> float:
        x = _as_count(x)
        if x < 0:
            return 0.0
        return (x + 1.0) / (x + 1.0 + self.c)

    def raw_moment(self, kappa: int) -> float:
        _check_kappa(kappa)
        raise DivergentMomentError("Quadratic 0 has no finite moments (tail ~ c / x^2)")

    def mode(self) -> int:
        return 0


@dataclass(frozen=True)
class GeneralizedZetaTail(DistributionSpec):
    """Sum of ``r_count`` IID Zeta Tail(a) variables; support starts at ``r_count``."""

    r_count: int
    a: float
    name: ClassVar[str] = "gzt"
    label: ClassVar[str] = "Generalized Zeta Tail"
    support: ClassVar[Support] = Support.ONE_BASED

    def __post_init__(self):
        if isinstance(self.r_count, bool) or not isinstance(self.r_count, (int, np.integer)):
            raise DomainError(f"Generalized Zeta Tail requires integer r_count, got {self.r_count!r}")
        if self.r_count < 1:
            raise DomainError(f"Generalized Zeta Tail requires r_count >= 1, got {self.r_count}")
        if not (math.isfinite(self.a) and self.a >= 0):
            raise DomainError(f"Generalized Zeta Tail requires a >= 0, got a={self.a}")

    @property
    def origin(self) -> int:
        return int(self.r_count)

    def _parent(self) -> ZetaTail:
        return ZetaTail(self.a)

    def _table(self, y_max: int) -> np.ndarray:
        return _gzt_table(int(self.r_count), float(self.a), _round_up(y_max))

    def pmf(self, x: int) -> float:
        x = _as_count(x)
        if x < self.origin:
            return 0.0
        return float(self._table(x)[x])

    def log_pmf(self, x: int) -> float:
        f = self.pmf(x)
        return math.log(f) if f > 0 else -math.inf

    def survival(self, x: int) -> float:
        x = _as_count(x)
        if x < self.origin:
            return 1.0
        # the tail decays geometrically (ratio -> 1/(a+2) <= 1/2), so 200
        # further terms exhaust double precision
        table = self._table(x + 200)
        return math.fsum(table[x + 1 : x + 201])

    def raw_moment(self, kappa: int) -> float:
        _check_kappa(kappa)
        parent = self._parent()
        single = [1.0] + [parent.raw_moment(j) for j in range(1, kappa + 1)]
        acc = single[:]
        for _ in range(int(self.r_count) - 1):
            # moments of a sum of independent variables
            acc = [
                math.fsum(math.comb(n, j) * acc[j] * single[n - j] for j in range(n + 1))
                for n in range(kappa + 1)
            ]
        return acc[kappa]

    def mean(self) -> float:
        return self.r_count * self._parent().mean()

    def variance(self) -> float:
        return self.r_count * self._parent().variance()

    def pgf(self, z: float) -> float:
        return self._parent().pgf(z) ** self.r_count

    def mgf(self, t: float) -> float:
        return self._parent().mgf(t) ** self.r_count

    def cf(self, omega: float) -> tuple[float, float]:
        re, im = self._parent().cf(omega)
        v = complex(re, im) ** int(self.r_count)
        return v.real, v.imag


def _round_up(n: int) -> int:
    size = 64
    while size < n + 1:
        size *= 2
    return size


@lru_cache(maxsize=64)
def _gzt_table(r_count: int, a: float, size: int) -> np.ndarray:
    """pmf of the r-fold Zeta Tail sum on 0..size-1 (exact up to float rounding)."""
    parent = ZetaTail(a)
    k_tail = 1
    while parent.survival(k_tail) >= _GZT_TAIL_MASS:
        k_tail += 1
    k_max = max(k_tail, size)
    base = np.zeros(k_max + 1)
    for k in range(1, k_max + 1):
        base[k] = parent.pmf(k)
    out = base
    for _ in range(r_count - 1):
        out = np.convolve(out, base)[: k_max + 1]
    table = np.zeros(size)
    n = min(size, out.size)
    table[:n] = out[:n]
    return table


FAMILIES: dict[str, type[DistributionSpec]] = {
    cls.name: cls
    for cls in (
        ZetaTail,
        ZetaTail0,
        Geometric0,
        ZeroInflatedGeometric0,
        NegativeBinomial0,
        Zeta0,
        Quadratic0,
        GeneralizedZetaTail,
    )
}


def make_spec(family: str, **params) -> DistributionSpec:
    """Build a spec from a family name (``"zeta-tail0"``, ``"negbin0"``, ...)."""
    try:
        cls = FAMILIES[family]
    except KeyError:
        raise DomainError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    names = [f.name for f in fields(cls)]
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise DomainError(f"{family} needs parameter(s): {', '.join(missing)}")
    return cls(**{n: params[n] for n in names})


# ---------------------------------------------------------------------------
# module-level operations


def pmf(spec: DistributionSpec, x: int) -> float:
    return spec.pmf(x)


def log_pmf(spec: DistributionSpec, x: int) -> float:
    return spec.log_pmf(x)


def pmf_array(spec: DistributionSpec, x_max: int) -> np.ndarray:
    """pmf on 0..x_max as an array (zeros below the support origin)."""
    return np.array([spec.pmf(x) for x in range(x_max + 1)])


def cdf(spec: DistributionSpec, x: int) -> float:
    return spec.cdf(x)


def survival(spec: DistributionSpec, x: int) -> float:
    return spec.survival(x)


def hazard(spec: DistributionSpec, x: int) -> float:
    return spec.hazard(x)


def factorial_moment(spec: DistributionSpec, nu: int) -> float:
    if not isinstance(spec, ZetaTail):
        raise DomainError("factorial_moment is defined for Zeta Tail and Zeta Tail 0 only")
    return spec.factorial_moment(nu)


def raw_moment(spec: DistributionSpec, kappa: int) -> float:
    return spec.raw_moment(kappa)


def mean(spec: DistributionSpec) -> float:
    return spec.mean()


def variance(spec: DistributionSpec) -> float:
    return spec.variance()


def overdispersion_index(spec: DistributionSpec) -> float:
    """Var / E - 1."""
    m = spec.mean()
    if not (m > 0 and math.isfinite(m)):
        raise DomainError(f"overdispersion index needs a finite positive mean, got {m}")
    return spec.variance() / m - 1.0


def zt0_relative_overdispersion(a: float) -> float:
    """Overdispersion index of Zeta Tail 0(a) divided by its mean."""
    if not a >= 0:
        raise DomainError(f"a must be >= 0, got {a}")
    a1 = a + 1.0
    z2 = hurwitz_zeta(2.0, a1)
    z3 = hurwitz_zeta(3.0, a1)
    num = 2.0 * a1 * z3 - a1 * a1 * z2 * z2 + 1.0
    den = (a1 * z2 - 1.0) ** 2
    return num / den


def zt0_zero_ratio(a: float) -> float:
    """P(X=0) under Zeta Tail 0(a) over Geometric 0((a+1)/(a+2))."""
    if not a >= 0:
        raise DomainError(f"a must be >= 0, got {a}")
    return (a + 2.0) * hurwitz_zeta(2.0, a + 2.0)


def pgf(spec: DistributionSpec, z: float) -> float:
    return spec.pgf(z)


def mgf(spec: DistributionSpec, t: float) -> float:
    return spec.mgf(t)


def cf(spec: DistributionSpec, omega: float) -> tuple[float, float]:
    """(real, imaginary) parts of E[exp(i omega X)]."""
    return spec.cf(omega)


def mode(spec: DistributionSpec) -> int:
    return spec.mode()


# ---------------------------------------------------------------------------
# mixture representation and the power-grid identity


def quadratic_mixing_pmf(a: float, m):
    """Quadratic(c = a + 1) mixing weights (a + 1) / ((m + a)(m + a + 1)), m >= 1."""
    m = np.asarray(m, dtype=float)
    return (a + 1.0) / ((m + a) * (m + a + 1.0))


def zeta_tail_mixture_pmf(a: float, x: int, m_max: int) -> float:
    """Zeta Tail(a) pmf at ``x`` from the Geometric mixture truncated at ``m_max``.

    Each component is Geometric(p = (m + a)/(m + a + 1)) on 1, 2, ...
    """
    m = np.arange(1, m_max + 1, dtype=float)
    p = (m + a) / (m + a + 1.0)
    geo = p * (1.0 - p) ** (x - 1)
    return math.fsum(geo * quadratic_mixing_pmf(a, m))


def power_grid_sum(m_max: int, n_max: int) -> tuple[float, float]:
    """Partial double sum of m^-n over 2 <= m <= m_max, 2 <= n <= n_max.

    Returns ``(partial, missing)`` where ``missing`` is the exact analytic mass
    left out of the full sum (which equals 1).
    """
    n = np.arange(2, n_max + 1, dtype=float)
    rows = []
    for lo in range(2, m_max + 1, 256):
        m = np.arange(lo, min(lo + 256, m_max + 1), dtype=float)
        rows.extend(np.exp(-np.outer(np.log(m), n)).sum(axis=1))
    partial = math.fsum(rows)
    ms = np.arange(2, m_max + 1, dtype=float)
    # rows beyond m_max sum to 1/m_max; columns beyond n_max in each row are geometric
    missing = 1.0 / m_max + math.fsum(np.exp(-n_max * np.log(ms)) / (ms - 1.0))
    return partial, missing
