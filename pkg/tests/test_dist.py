import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetatail import dist
from zetatail.dist import (
    GeneralizedZetaTail,
    Geometric0,
    NegativeBinomial0,
    Quadratic0,
    Support,
    ZeroInflatedGeometric0,
    Zeta0,
    ZetaTail,
    ZetaTail0,
    make_spec,
)
from zetatail.errors import DivergentMomentError, DomainError
from zetatail.specfun import digamma, hurwitz_zeta, riemann_zeta

Z2 = math.pi**2 / 6
Z3 = riemann_zeta(3.0)

A_GRID = [0.0, 0.25, 1.0, 4.0, 10.0]

shape_a = st.floats(min_value=0.0, max_value=50.0, allow_nan=False)
prob = st.floats(min_value=0.01, max_value=0.99)


def brute_moment(spec, kappa, x_max=3000):
    return math.fsum(x**kappa * spec.pmf(x) for x in range(spec.origin, x_max))


# -- pmf and friends -----------------------------------------------------------


def test_pmf_examples():
    assert ZetaTail(0).pmf(1) == pytest.approx(Z2 - 1, abs=1e-14)
    assert Geometric0(6 / 7).pmf(0) == pytest.approx(6 / 7, abs=1e-15)
    assert ZetaTail0(1).pmf(0) == pytest.approx(2 * (Z2 - 1.25), abs=1e-14)
    assert ZetaTail(2).pmf(0) == 0.0
    assert ZetaTail0(2).pmf(-1) == 0.0


def test_log_pmf_examples():
    p = 0.3
    for x in range(6):
        assert Geometric0(p).log_pmf(x) == pytest.approx(math.log(p) + x * math.log(1 - p), abs=1e-14)
    assert ZetaTail(0).log_pmf(1) == pytest.approx(math.log(Z2 - 1), abs=1e-14)
    assert ZeroInflatedGeometric0(0.5, 0.5).log_pmf(0) == pytest.approx(math.log(0.75), abs=1e-15)


def test_log_pmf_deep_tail_no_underflow():
    spec = ZetaTail(4.0)
    lp = spec.log_pmf(500)
    assert math.isfinite(lp)
    assert lp == pytest.approx(math.log(5.0) - 501 * math.log(6.0), rel=1e-12)


def test_zero_parameter_pmf_is_zeta_minus_one():
    # a = 0 gives f(x) = zeta(x + 1) - 1
    for x in range(1, 12):
        assert ZetaTail(0).pmf(x) == pytest.approx(riemann_zeta(x + 1.0) - 1.0, rel=1e-13)


def test_cdf_examples():
    assert Quadratic0(1.0).cdf(0) == pytest.approx(0.5)
    for x in range(5):
        assert Geometric0(0.4).cdf(x) == pytest.approx(1 - 0.6 ** (x + 1), abs=1e-15)
    assert ZetaTail(1.0).cdf(200) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("a", A_GRID)
def test_cdf_matches_hurwitz_partial_sum(a):
    spec = ZetaTail(a)
    for x in (1, 2, 5, 9):
        ref = (a + 1) * math.fsum(hurwitz_zeta(k + 1.0, a + 2.0) for k in range(1, x + 1))
        assert spec.cdf(x) == pytest.approx(ref, abs=1e-14)


@pytest.mark.parametrize(
    "spec",
    [ZetaTail(0.5), ZetaTail0(3.0), Geometric0(0.2), ZeroInflatedGeometric0(0.4, 0.3),
     NegativeBinomial0(2.5, 0.35), Zeta0(1.7), Quadratic0(2.0), GeneralizedZetaTail(3, 1.0)],
    ids=lambda s: s.name,
)
def test_survival_is_complement(spec):
    for x in range(spec.origin, spec.origin + 25):
        assert spec.cdf(x) + spec.survival(x) == pytest.approx(1.0, abs=1e-13)
        assert spec.survival(x - 1) - spec.survival(x) == pytest.approx(spec.pmf(x), abs=1e-13)


def test_survival_tail_accuracy():
    # tail sum, not 1 - cdf: relative accuracy where the survival is tiny
    spec = Geometric0(0.5)
    assert spec.survival(60) == pytest.approx(0.5**61, rel=1e-13)
    zt = ZetaTail(1.0)
    brute = math.fsum(zt.pmf(x) for x in range(41, 400))
    assert zt.survival(40) == pytest.approx(brute, rel=1e-12)


def test_hazard_examples():
    for x in (0, 3, 17):
        assert Geometric0(0.3).hazard(x) == pytest.approx(0.3 / 0.7, rel=1e-14)
    assert ZetaTail(0).hazard(1) == pytest.approx((Z2 - 1) / (1 - (Z2 - 1)), rel=1e-13)
    with pytest.raises(DomainError):
        ZetaTail(0).hazard(0)


@pytest.mark.parametrize("a", [0.25, 1.0, 4.0])
def test_hazard_decreases_to_a_plus_1(a):
    spec = ZetaTail(a)
    h = [spec.hazard(x) for x in range(1, 82)]
    assert all(h[i + 1] < h[i] for i in range(60))
    assert abs(spec.hazard(80) - (a + 1)) <= 1e-4


# -- parameter validation --------------------------------------------------------


@pytest.mark.parametrize(
    "family,params",
    [
        ("zeta-tail", {"a": -0.1}),
        ("geometric0", {"p": 0.0}),
        ("geometric0", {"p": 1.0}),
        ("zig0", {"p": 0.5, "pi0": 1.0}),
        ("negbin0", {"r": 0.0, "p": 0.5}),
        ("zeta0", {"b": 0.0}),
        ("quadratic0", {"c": -1.0}),
        ("gzt", {"r_count": 0, "a": 1.0}),
        ("gzt", {"r_count": 1.5, "a": 1.0}),
    ],
)
def test_invalid_parameters_raise(family, params):
    with pytest.raises(DomainError):
        make_spec(family, **params)


def test_make_spec_errors():
    with pytest.raises(DomainError, match="unknown family"):
        make_spec("poisson", lam=1.0)
    with pytest.raises(DomainError, match="needs parameter"):
        make_spec("zig0", p=0.5)


def test_support_tags():
    assert ZetaTail(1).support is Support.ONE_BASED
    for spec in (ZetaTail0(1), Geometric0(0.5), Zeta0(2), Quadratic0(1), NegativeBinomial0(1, 0.5)):
        assert spec.support is Support.ZERO_BASED
    assert GeneralizedZetaTail(3, 0.0).origin == 3


# -- normalization and shape -----------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(shape_a)
def test_zeta_tail_normalized(a):
    spec = ZetaTail(a)
    total = math.fsum(spec.pmf(x) for x in range(1, 80)) + spec.survival(79)
    assert total == pytest.approx(1.0, abs=1e-12)
    # direct sum alone, truncated where the tail bound is negligible
    assert math.fsum(spec.pmf(x) for x in range(1, 200)) == pytest.approx(1.0, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(shape_a, st.integers(min_value=1, max_value=100))
def test_zeta_tail_strictly_decreasing(a, x):
    spec = ZetaTail(a)
    assert spec.pmf(x + 1) < spec.pmf(x)


@pytest.mark.parametrize("a", A_GRID)
def test_tail_ratio_geometric(a):
    # f(x+1)/f(x) = (1/t)(1 - q**(x+1) (1 - q) + ...), t = a + 2, q = t/(t + 1);
    # the correction is below 1e-6 at x = 60 for a <= 1, later for larger a
    t = a + 2.0
    q = t / (t + 1.0)
    x = max(60, math.ceil(math.log(1e-7) / math.log(q)))
    spec = ZetaTail(a)
    ratio = math.exp(spec.log_pmf(x + 1) - spec.log_pmf(x))
    assert ratio == pytest.approx(1 / t, abs=1e-6)
    assert ratio * t - 1 == pytest.approx(-(q ** (x + 1)) * (1 - q), rel=1e-2, abs=1e-12)
    c1 = math.exp(spec.log_pmf(x) + x * math.log(t))
    c2 = math.exp(spec.log_pmf(x + 20) + (x + 20) * math.log(t))
    assert c2 == pytest.approx(c1, rel=1e-6)


@settings(max_examples=30, deadline=None)
@given(prob, st.floats(min_value=0.01, max_value=0.99))
def test_zig_normalized(p, pi0):
    spec = ZeroInflatedGeometric0(p, pi0)
    n = int(40 / -math.log1p(-p)) + 10
    assert math.fsum(spec.pmf(x) for x in range(n)) == pytest.approx(1.0, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.05, max_value=20.0), st.floats(min_value=0.05, max_value=0.95))
def test_negbin_normalized(r, p):
    spec = NegativeBinomial0(r, p)
    x_max = 50
    while spec.survival(x_max) > 1e-13:
        x_max *= 2
    assert math.fsum(spec.pmf(x) for x in range(x_max + 1)) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("b", [0.3, 1.0, 2.5])
def test_zeta0_normalized_with_tail(b):
    spec = Zeta0(b)
    k = 5000
    head = math.fsum(np.exp(-(b + 1) * np.log(np.arange(1, k + 2))) / riemann_zeta(b + 1))
    assert head + spec.survival(k) == pytest.approx(1.0, abs=1e-12)
    assert spec.pmf(0) == pytest.approx(1 / riemann_zeta(b + 1), rel=1e-14)


@pytest.mark.parametrize("c", [0.2, 1.0, 7.0])
def test_quadratic0_closed_forms(c):
    spec = Quadratic0(c)
    for x in range(20):
        assert spec.pmf(x) == pytest.approx(c / ((x + c) * (x + c + 1)), rel=1e-14)
        assert spec.cdf(x) == pytest.approx((x + 1) / (x + 1 + c), rel=1e-14)
    partial = math.fsum(spec.pmf(x) for x in range(1000))
    assert partial + spec.survival(999) == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(DivergentMomentError):
        spec.mean()


def test_gzt_is_a_convolution():
    a = 0.7
    parent = ZetaTail(a)
    spec = GeneralizedZetaTail(2, a)
    for y in range(2, 12):
        conv = math.fsum(parent.pmf(k) * parent.pmf(y - k) for k in range(1, y))
        assert spec.pmf(y) == pytest.approx(conv, rel=1e-12)
    assert math.fsum(spec.pmf(y) for y in range(2, 150)) == pytest.approx(1.0, abs=1e-9)
    assert GeneralizedZetaTail(1, a).pmf(5) == pytest.approx(parent.pmf(5), rel=1e-13)


# -- moments -------------------------------------------------------------------


@pytest.mark.parametrize("a", A_GRID)
@pytest.mark.parametrize("kappa", [1, 2, 3, 4])
def test_raw_moment_vs_sum(a, kappa):
    spec = ZetaTail(a)
    assert spec.raw_moment(kappa) == pytest.approx(brute_moment(spec, kappa), rel=1e-8)
    shifted = ZetaTail0(a)
    assert shifted.raw_moment(kappa) == pytest.approx(brute_moment(shifted, kappa), rel=1e-8)


def test_raw_moment_examples():
    for a in (0.0, 2.0):
        z = lambda s: hurwitz_zeta(s, a + 1)  # noqa: E731
        assert ZetaTail(a).raw_moment(2) == pytest.approx((a + 1) * (z(2) + 2 * z(3)), rel=1e-13)
        assert ZetaTail(a).raw_moment(3) == pytest.approx(
            (a + 1) * (z(2) + 6 * z(3) + 6 * z(4)), rel=1e-13
        )
    for p in (0.2, 0.7):
        assert NegativeBinomial0(1.0, p).raw_moment(1) == pytest.approx((1 - p) / p, rel=1e-13)


@pytest.mark.parametrize("r,p", [(0.5, 0.3), (2.0, 0.6), (7.5, 0.8)])
@pytest.mark.parametrize("kappa", [1, 2, 3, 4])
def test_negbin_moments_vs_sum(r, p, kappa):
    spec = NegativeBinomial0(r, p)
    assert spec.raw_moment(kappa) == pytest.approx(brute_moment(spec, kappa, 4000), rel=1e-8)


def test_factorial_moment_examples():
    assert ZetaTail(0).factorial_moment(1) == pytest.approx(Z2, rel=1e-14)
    assert ZetaTail(1).factorial_moment(2) == pytest.approx(4 * (Z3 - 1), rel=1e-13)
    with pytest.raises(DomainError):
        ZetaTail(1).factorial_moment(21)
    with pytest.raises(DomainError):
        dist.factorial_moment(Geometric0(0.5), 1)


@pytest.mark.parametrize("a", [0.0, 0.6, 3.0])
@pytest.mark.parametrize("nu", [1, 2, 3, 4])
def test_factorial_moment_vs_sum(a, nu):
    for spec in (ZetaTail(a), ZetaTail0(a)):
        brute = math.fsum(
            math.perm(x, nu) * spec.pmf(x) for x in range(spec.origin, 3000)
        )
        assert spec.factorial_moment(nu) == pytest.approx(brute, rel=1e-8)


def test_mean_variance_examples():
    beta = 2.5
    g = Geometric0(beta / (beta + 1))
    assert g.mean() == pytest.approx(1 / beta)
    assert g.variance() == pytest.approx((beta + 1) / beta**2)
    assert dist.overdispersion_index(g) == pytest.approx(1 / beta)
    assert ZetaTail(0).mean() == pytest.approx(Z2, rel=1e-14)
    for a in A_GRID:
        assert ZetaTail0(a).variance() == pytest.approx(ZetaTail(a).variance(), rel=1e-13)
        assert ZetaTail0(a).mean() == pytest.approx(ZetaTail(a).mean() - 1, rel=1e-13)


def test_zeta0_divergence_guard():
    with pytest.raises(DivergentMomentError):
        Zeta0(1.0).mean()
    with pytest.raises(DivergentMomentError):
        Zeta0(2.0).variance()
    spec = Zeta0(3.5)
    assert spec.mean() == pytest.approx(brute_moment(spec, 1, 200000), rel=1e-6)


def test_relative_overdispersion_brute_force():
    spec = ZetaTail0(0.0)
    m = brute_moment(spec, 1)
    v = brute_moment(spec, 2) - m * m
    assert dist.zt0_relative_overdispersion(0.0) == pytest.approx((v / m - 1) / m, rel=1e-9)
    exact = (2 * Z3 + 1 - Z2**2) / (Z2 - 1) ** 2
    assert dist.zt0_relative_overdispersion(0.0) == pytest.approx(exact, rel=1e-13)


def test_zero_ratio():
    assert dist.zt0_zero_ratio(0.0) == pytest.approx(2 * (Z2 - 1), rel=1e-14)
    for a in (0.3, 2.0, 9.0):
        direct = ZetaTail0(a).pmf(0) / Geometric0((a + 1) / (a + 2)).pmf(0)
        assert dist.zt0_zero_ratio(a) == pytest.approx(direct, rel=1e-13)
    assert dist.zt0_zero_ratio(1e6) == pytest.approx(1.0, abs=1e-5)


# -- generating functions ------------------------------------------------------


@pytest.mark.parametrize("a", [0.0, 1.0, 4.0])
@pytest.mark.parametrize("z", [0.25, 0.5, 0.9, -0.6])
def test_pgf_vs_series(a, z):
    for spec in (ZetaTail(a), ZetaTail0(a)):
        series = math.fsum(z**x * spec.pmf(x) for x in range(spec.origin, 2000))
        assert spec.pgf(z) == pytest.approx(series, rel=1e-8, abs=1e-15)


def test_pgf_examples():
    assert ZetaTail(1.0).pgf(0.0) == 0.0
    assert ZetaTail(0.0).pgf(1 - 1e-8) == pytest.approx(1.0, abs=1e-6)
    assert ZetaTail(0.0).pgf(0.5) == pytest.approx(digamma(2.0) - digamma(1.5), rel=1e-14)
    assert ZetaTail0(1.0).pgf(0.0) == pytest.approx(ZetaTail0(1.0).pmf(0), rel=1e-13)
    assert ZetaTail0(1.0).pgf(1e-5) == pytest.approx(ZetaTail0(1.0).pmf(0), rel=1e-4)
    with pytest.raises(DomainError):
        ZetaTail(1.0).pgf(1.0)


def test_gzt_generating_functions_are_powers():
    spec = GeneralizedZetaTail(3, 0.5)
    parent = ZetaTail(0.5)
    assert spec.pgf(0.4) == pytest.approx(parent.pgf(0.4) ** 3, rel=1e-14)
    series = math.fsum(0.4**y * spec.pmf(y) for y in range(3, 200))
    assert spec.pgf(0.4) == pytest.approx(series, rel=1e-8)
    assert spec.mgf(0.2) == pytest.approx(parent.mgf(0.2) ** 3, rel=1e-14)


@pytest.mark.parametrize("a", [0.0, 1.0, 4.0])
@pytest.mark.parametrize("t", [-1.0, 0.1])
def test_mgf_vs_series(a, t):
    for spec in (ZetaTail(a), ZetaTail0(a)):
        series = math.fsum(math.exp(t * x) * spec.pmf(x) for x in range(spec.origin, 2000))
        assert spec.mgf(t) == pytest.approx(series, rel=1e-8)


def test_mgf_examples_and_domain():
    assert ZetaTail(2.0).mgf(0.0) == pytest.approx(1.0, abs=1e-14)
    assert ZetaTail(2.0).mgf(-60.0) < 1e-25
    with pytest.raises(DomainError):
        ZetaTail(0.0).mgf(math.log(2.0))
    # Laplace transform is mgf(-s)
    s = 0.7
    series = math.fsum(math.exp(-s * x) * ZetaTail(1.0).pmf(x) for x in range(1, 500))
    assert ZetaTail(1.0).mgf(-s) == pytest.approx(series, rel=1e-10)


@pytest.mark.parametrize("omega", [0.0, 0.3, 1.0, math.pi, 5.0])
def test_cf_properties(omega):
    spec = ZetaTail(0.0)
    re, im = spec.cf(omega)
    assert abs(complex(re, im)) <= 1.0 + 1e-14
    series = math.fsum(cmath.exp(1j * omega * x).real * spec.pmf(x) for x in range(1, 400))
    assert re == pytest.approx(series, abs=1e-8)
    if omega == 0.0:
        assert (re, im) == pytest.approx((1.0, 0.0), abs=1e-12)


def test_cf_shift_and_geometric():
    re0, im0 = ZetaTail0(1.0).cf(0.8)
    re1, im1 = ZetaTail(1.0).cf(0.8)
    assert complex(re0, im0) == pytest.approx(complex(re1, im1) * cmath.exp(-0.8j), abs=1e-13)
    p, w = 0.3, 1.1
    re, im = Geometric0(p).cf(w)
    assert complex(re, im) == pytest.approx(p / (1 - (1 - p) * cmath.exp(1j * w)), abs=1e-13)


def test_mode():
    assert dist.mode(ZetaTail(0.0)) == 1
    assert dist.mode(ZetaTail0(4.0)) == 0
    spec = ZetaTail(3.0)
    assert spec.pmf(spec.mode()) > spec.pmf(spec.mode() + 1)
    assert dist.mode(NegativeBinomial0(5.0, 0.3)) == int(math.floor((5 - 1) * 0.7 / 0.3))


# -- mixture representation and the power grid ---------------------------------


def test_quadratic_mixing_normalized():
    for a in (0.0, 1.5):
        m = np.arange(1, 10**6 + 1)
        assert math.fsum(dist.quadratic_mixing_pmf(a, m)) == pytest.approx(
            1 - (a + 1) / (10**6 + a + 1), abs=1e-12
        )


@pytest.mark.parametrize("a", [0.0, 0.5, 1.0, 4.0])
def test_mixture_matches_pmf_beyond_first_point(a):
    # at x = 1 the dropped mixing mass (a+1)/(M+a+1) enters almost undamped;
    # from x = 2 on it is suppressed by a further factor ~1/M
    m_max = 10**5
    for x in range(2, 12):
        assert dist.zeta_tail_mixture_pmf(a, x, m_max) == pytest.approx(ZetaTail(a).pmf(x), abs=1e-8)
    gap = ZetaTail(a).pmf(1) - dist.zeta_tail_mixture_pmf(a, 1, m_max)
    assert gap == pytest.approx((a + 1) / (m_max + a + 1), rel=1e-3)


def test_power_grid_sum():
    partial, missing = dist.power_grid_sum(2000, 2000)
    assert partial + missing == pytest.approx(1.0, abs=1e-12)
    assert 0 < missing < 1e-3
