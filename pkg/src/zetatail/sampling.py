"""Random variates for every catalog family.

Zeta Tail draws use the Geometric-mixture construction: pick the mixing index
``m`` from Quadratic(c = a + 1) by inverse CDF, then a Geometric variate with
success probability ``(m + a)/(m + a + 1)``.  Every sampler has a fixed
uniform budget per variate, so the vectorized ``sample`` returns exactly the
same stream as repeated ``sample_family`` calls on an identically seeded
source.

Uniform budget per variate::

    Geometric0, Quadratic0, NegativeBinomial0, Zeta0    1
    ZetaTail, ZetaTail0, ZeroInflatedGeometric0         2
    GeneralizedZetaTail(r_count, a)                     2 * r_count
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy import special as sc

from .dist import (
    DistributionSpec,
    GeneralizedZetaTail,
    Geometric0,
    NegativeBinomial0,
    Quadratic0,
    Support,
    ZeroInflatedGeometric0,
    ZetaTail,
    ZetaTail0,
    Zeta0,
)
from .errors import DomainError
from .specfun import riemann_zeta

__all__ = [
    "UniformSource",
    "sample_quadratic_mixing",
    "sample_geometric",
    "sample_zeta_tail",
    "sample_family",
    "sample",
]

_TWO_M53 = 2.0**-53


class UniformSource:
    """Seeded stream of uniforms strictly inside (0, 1).

    Backed by numpy's PCG64 bit generator (PCG-XSL-RR 128/64) seeded through
    ``SeedSequence(seed)``.  Each 64-bit output ``w`` becomes
    ``((w >> 11) + 0.5) * 2**-53``, so 0 and 1 are never produced.
    """

    def __init__(self, seed: int):
        if not (0 <= int(seed) < 2**64):
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self._bits = np.random.PCG64(self.seed)

    def next_uniform(self) -> float:
        w = int(self._bits.random_raw())
        return ((w >> 11) + 0.5) * _TWO_M53

    def uniforms(self, n: int) -> np.ndarray:
        """The next ``n`` uniforms of the stream, as an array."""
        if n == 0:
            return np.empty(0)
        w = self._bits.random_raw(n)
        return ((w >> np.uint64(11)).astype(np.float64) + 0.5) * _TWO_M53

    def __repr__(self):
        return f"UniformSource(seed={self.seed})"


def _check_unit(u) -> None:
    if not np.all((np.asarray(u) > 0) & (np.asarray(u) < 1)):
        raise DomainError("uniform variates must lie strictly inside (0, 1)")


def sample_quadratic_mixing(a: float, u):
    """Inverse-CDF draw from Quadratic(c = a + 1) on m = 1, 2, ...

    The CDF telescopes to ``1 - (a + 1)/(m + a + 1)``; the draw is the
    smallest ``m`` with ``CDF(m) >= u``.  Accepts a scalar (returns int) or an
    array (returns float array, since ``m`` can exceed the int64 range).
    """
    _check_unit(u)
    m = np.maximum(1.0, np.ceil(u * (a + 1.0) / (1.0 - u)))
    if np.ndim(m) == 0:
        return int(m)
    return m


def sample_geometric(p: float, u, origin: Support = Support.ONE_BASED):
    """Inverse-transform Geometric(p) draw; ``origin`` picks 1- or 0-based support."""
    if not 0 < p < 1:
        raise DomainError(f"sample_geometric requires 0 < p < 1, got p={p}")
    _check_unit(u)
    x = np.maximum(1.0, np.ceil(np.log1p(-np.asarray(u)) / math.log1p(-p)))
    x = x - (1 if origin is Support.ZERO_BASED else 0)
    if np.ndim(x) == 0:
        return int(x)
    return x.astype(np.int64)


def _zeta_tail_from_uniforms(a: float, u1, u2) -> np.ndarray:
    m = np.maximum(1.0, np.ceil(u1 * (a + 1.0) / (1.0 - u1)))
    # Geometric(p = (m+a)/(m+a+1)): log(1 - p) = -log(m + a + 1)
    x = np.ceil(np.log1p(-u2) / -np.log(m + a + 1.0))
    return np.maximum(1.0, x).astype(np.int64)


def sample_zeta_tail(a: float, src: UniformSource, origin: Support = Support.ONE_BASED) -> int:
    """One Zeta Tail(a) draw from two uniforms (mixing index, then Geometric)."""
    if not a >= 0:
        raise DomainError(f"Zeta Tail requires a >= 0, got a={a}")
    u1 = src.next_uniform()
    u2 = src.next_uniform()
    x = int(_zeta_tail_from_uniforms(a, np.array([u1]), np.array([u2]))[0])
    return x - 1 if origin is Support.ZERO_BASED else x


# -- inverse CDF by survival lookup (Negative Binomial 0, Zeta 0) ------------


def _log_pmf_grid(spec: DistributionSpec, x: np.ndarray) -> np.ndarray:
    if isinstance(spec, NegativeBinomial0):
        r, p = spec.r, spec.p
        return (
            sc.gammaln(x + r) - sc.gammaln(r) - sc.gammaln(x + 1.0)
            + r * math.log(p) + x * math.log1p(-p)
        )
    if isinstance(spec, Zeta0):
        s = spec.b + 1.0
        return -s * np.log(x + 1.0) - math.log(riemann_zeta(s))
    raise DomainError(f"no survival table for {spec.name}")


@lru_cache(maxsize=32)
def _survival_table(spec: DistributionSpec) -> np.ndarray:
    """P(X > x) for x = 0..K-1, built downward from an exact anchor at K."""
    size = 1024
    floor = 1e-17 if isinstance(spec, NegativeBinomial0) else 1e-7
    while True:
        anchor = spec.survival(size - 1)
        if anchor <= floor or size >= 2**20:
            break
        size *= 4
    pm = np.exp(_log_pmf_grid(spec, np.arange(1, size, dtype=float)))
    # sv[x] = anchor + sum_{k=x+1}^{size-1} pmf(k)
    tail = np.cumsum(pm[::-1])[::-1]
    sv = np.empty(size)
    sv[:-1] = anchor + tail
    sv[-1] = anchor
    return sv


def _inverse_survival(spec: DistributionSpec, v: float) -> int:
    """Smallest x with P(X > x) <= v (v = 1 - u)."""
    table = _survival_table(spec)
    idx = int(np.searchsorted(-table, -v, side="left"))
    if idx < table.size:
        return idx
    lo = table.size - 1
    hi = 2 * lo + 1
    while spec.survival(hi) > v:
        lo, hi = hi, 2 * hi + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if spec.survival(mid) > v:
            lo = mid
        else:
            hi = mid
    return hi


def _inverse_survival_many(spec: DistributionSpec, u: np.ndarray) -> np.ndarray:
    table = _survival_table(spec)
    v = 1.0 - u
    idx = np.searchsorted(-table, -v, side="left")
    beyond = np.nonzero(idx >= table.size)[0]
    for i in beyond:
        idx[i] = _inverse_survival(spec, float(v[i]))
    return idx.astype(np.int64)


def _quadratic0_from_uniforms(c: float, u) -> np.ndarray:
    # CDF(x) = (x + 1)/(x + 1 + c) >= u  <=>  x >= u c / (1 - u) - 1
    return np.maximum(0.0, np.ceil(u * c / (1.0 - u) - 1.0))


# -- dispatch ----------------------------------------------------------------


def sample(spec: DistributionSpec, n: int, src: UniformSource) -> np.ndarray:
    """``n`` variates from ``spec`` as an int64 array (float for Quadratic 0 overflow)."""
    if n < 0:
        raise DomainError(f"sample size must be >= 0, got {n}")
    if isinstance(spec, (ZetaTail0, ZetaTail)):
        u = src.uniforms(2 * n).reshape(n, 2)
        x = _zeta_tail_from_uniforms(spec.a, u[:, 0], u[:, 1])
        return x - 1 if isinstance(spec, ZetaTail0) else x
    if isinstance(spec, Geometric0):
        return sample_geometric(spec.p, src.uniforms(n), Support.ZERO_BASED)
    if isinstance(spec, ZeroInflatedGeometric0):
        u = src.uniforms(2 * n).reshape(n, 2)
        x = sample_geometric(spec.p, u[:, 1], Support.ZERO_BASED)
        return np.where(u[:, 0] < spec.pi0, 0, x)
    if isinstance(spec, (NegativeBinomial0, Zeta0)):
        return _inverse_survival_many(spec, src.uniforms(n))
    if isinstance(spec, Quadratic0):
        x = _quadratic0_from_uniforms(spec.c, src.uniforms(n))
        return x.astype(np.int64) if x.size == 0 or x.max() < 2**62 else x
    if isinstance(spec, GeneralizedZetaTail):
        r = int(spec.r_count)
        u = src.uniforms(2 * r * n).reshape(n, r, 2)
        x = _zeta_tail_from_uniforms(spec.a, u[:, :, 0], u[:, :, 1])
        return x.sum(axis=1)
    raise DomainError(f"no sampler for {type(spec).__name__}")


def sample_family(spec: DistributionSpec, src: UniformSource) -> int:
    """A single variate from ``spec``; consumes the documented uniform budget."""
    if isinstance(spec, ZetaTail):
        return sample_zeta_tail(spec.a, src, spec.support)
    if isinstance(spec, Geometric0):
        return sample_geometric(spec.p, src.next_uniform(), Support.ZERO_BASED)
    if isinstance(spec, ZeroInflatedGeometric0):
        gate = src.next_uniform()
        x = sample_geometric(spec.p, src.next_uniform(), Support.ZERO_BASED)
        return 0 if gate < spec.pi0 else x
    if isinstance(spec, (NegativeBinomial0, Zeta0)):
        return _inverse_survival(spec, 1.0 - src.next_uniform())
    if isinstance(spec, Quadratic0):
        return int(_quadratic0_from_uniforms(spec.c, src.next_uniform()))
    if isinstance(spec, GeneralizedZetaTail):
        return sum(sample_zeta_tail(spec.a, src) for _ in range(int(spec.r_count)))
    raise DomainError(f"no sampler for {type(spec).__name__}")
