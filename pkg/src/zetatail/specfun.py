"""Real-argument special functions: Hurwitz/Riemann zeta, digamma, Stirling numbers.

Everything here is plain-float scalar code.  The zeta routines sum the defining
series directly while the integral remainder bound says the tail still matters,
then close the tail with an Euler-Maclaurin expansion.  Values are computed in
a scaled form, ``zeta(s, t) * t**s``, so the logarithm stays accurate long after
``zeta(s, t)`` itself underflows (needed for log-likelihoods deep in the tail).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConvergenceError, DomainError

__all__ = [
    "EULER_GAMMA",
    "SeriesPolicy",
    "DEFAULT_POLICY",
    "hurwitz_zeta",
    "log_hurwitz_zeta",
    "riemann_zeta",
    "hurwitz_zeta_dt",
    "digamma",
    "stirling2",
    "falling_factorial",
]

EULER_GAMMA = 0.57721566490153286061

# relative size below which a remainder term no longer changes a double
_REL_EPS = 2.0**-56
_STIRLING_MAX = 30


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation control for the infinite series.

    ``abs_tol`` bounds the absolute error of a returned value; ``max_terms``
    caps the number of explicitly summed terms before giving up.
    """

    abs_tol: float = 1e-13
    max_terms: int = 10**7

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be > 0, got {self.abs_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_POLICY = SeriesPolicy()


@lru_cache(maxsize=1)
def _bernoulli_over_factorial(n: int = 14) -> tuple[float, ...]:
    """B_{2k} / (2k)! for k = 1..n, from the exact Bernoulli recurrence."""
    b = [Fraction(1)]
    for m in range(1, 2 * n + 1):
        b.append(-sum(math.comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return tuple(float(b[2 * k] / math.factorial(2 * k)) for k in range(1, n + 1))


def _check_zeta_args(s: float, t: float) -> None:
    if not s > 1:
        raise DomainError(f"zeta requires s > 1, got s={s}")
    if not t > 0:
        raise DomainError(f"zeta requires t > 0, got t={t}")


def _scaled_hurwitz(s: float, t: float, policy: SeriesPolicy) -> float:
    """Return ``t**s * zeta(s, t)``; the leading term of this sum is exactly 1."""
    bernoulli = _bernoulli_over_factorial()
    u_switch = max(12.0, s)
    total = 0.0
    i = 0
    while True:
        u = i + t
        r = t / u
        term = r**s
        # scaled integral remainder: t**s * (u**(1-s)) / (s-1)
        tail = t * r ** (s - 1) / (s - 1)
        if tail <= _REL_EPS * total:
            return total + tail
        if u >= u_switch:
            em = tail + 0.5 * term
            rising = s
            inv_pow = 1.0 / u
            for k, coef in enumerate(bernoulli, start=1):
                corr = coef * rising * term * inv_pow
                em += corr
                if abs(corr) <= _REL_EPS * (total + em):
                    return total + em
                rising *= (s + 2 * k - 1) * (s + 2 * k)
                inv_pow /= u * u
            # expansion not yet asymptotic at this u: sum further out and retry
            u_switch *= 2.0
        total += term
        i += 1
        if i >= policy.max_terms:
            raise ConvergenceError(
                f"hurwitz_zeta(s={s}, t={t}) did not converge within {policy.max_terms} terms"
            )


def log_hurwitz_zeta(s: float, t: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Natural log of the Hurwitz zeta function, accurate even where zeta underflows."""
    _check_zeta_args(s, t)
    return -s * math.log(t) + math.log(_scaled_hurwitz(s, t, policy))


def hurwitz_zeta(s: float, t: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Hurwitz zeta ``sum_{i>=0} (i + t)**(-s)`` for real ``s > 1``, ``t > 0``.

    >>> round(hurwitz_zeta(2.0, 1.0), 12)
    1.644934066848
    """
    _check_zeta_args(s, t)
    scaled = _scaled_hurwitz(s, t, policy)
    if t == 1.0:
        return scaled
    log_value = -s * math.log(t) + math.log(scaled)
    if log_value > 709.0:
        return math.inf
    return math.exp(log_value)


def riemann_zeta(s: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Riemann zeta for real ``s > 1`` (the Hurwitz function at ``t = 1``)."""
    return hurwitz_zeta(s, 1.0, policy)


def hurwitz_zeta_dt(s: float, t: float, policy: SeriesPolicy = DEFAULT_POLICY) -> float:
    """Partial derivative of ``zeta(s, t)`` in ``t``, i.e. ``-s * zeta(s + 1, t)``."""
    _check_zeta_args(s, t)
    return -s * hurwitz_zeta(s + 1.0, t, policy)


def digamma(z: float) -> float:
    """Digamma function for real ``z > 0``.

    Lifts the argument to ``z >= 10`` with ``psi(z + 1) = psi(z) + 1/z`` and
    finishes with the asymptotic series through the ``z**-12`` term.
    """
    if not z > 0:
        raise DomainError(f"digamma requires z > 0, got {z}")
    acc = 0.0
    while z < 10.0:
        acc -= 1.0 / z
        z += 1.0
    w = 1.0 / (z * z)
    poly = w * (
        1 / 12
        - w * (1 / 120 - w * (1 / 252 - w * (1 / 240 - w * (1 / 132 - w * 691 / 32760))))
    )
    return acc + math.log(z) - 0.5 / z - poly


def stirling2(kappa: int, nu: int) -> int:
    """Stirling number of the second kind, exact, for ``0 <= nu <= kappa <= 30``."""
    if not (0 <= nu <= kappa <= _STIRLING_MAX):
        raise DomainError(
            f"stirling2 supports 0 <= nu <= kappa <= {_STIRLING_MAX}, got ({kappa}, {nu})"
        )
    total = sum((-1) ** j * math.comb(nu, j) * (nu - j) ** kappa for j in range(nu + 1))
    return total // math.factorial(nu)


def falling_factorial(x: float, n: int) -> float:
    """``x (x-1) ... (x-n+1)``; equals 1 for ``n = 0``."""
    out = 1
    for j in range(n):
        out *= x - j
    return out
