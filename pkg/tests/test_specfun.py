"""Polynomial recurrences against explicit expansions, Rodrigues forms,
classical orthogonality, and the quadrature normalizer."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import simpson
from scipy.special import roots_genlaguerre

from pdmag.errors import DomainError, NormalizationError
from pdmag.grids import RadialFunction, RadialGrid
from pdmag.specfun import PolynomialSpec, jacobi, laguerre, normalize

params_gt_minus_one = st.floats(min_value=-0.9, max_value=4.0)
xs = st.floats(min_value=-25.0, max_value=25.0)


# ---------------------------------------------------------------------------
# Laguerre
# ---------------------------------------------------------------------------


@given(a=params_gt_minus_one, x=xs)
def test_laguerre_degree_zero_and_one(a, x):
    assert laguerre(0, a, x) == 1.0
    assert laguerre(1, a, x) == pytest.approx(1.0 + a - x, rel=1e-13, abs=1e-13)


def test_laguerre_2_1_at_2():
    # brute-force oracle: the explicit quadratic (a+1)(a+2)/2 - (a+2)x + x^2/2
    a, x = 1.0, 2.0
    explicit = (a + 1) * (a + 2) / 2 - (a + 2) * x + x * x / 2
    assert explicit == -1.0
    assert laguerre(2, a, x) == pytest.approx(-1.0, abs=1e-14)


@given(a=params_gt_minus_one, x=xs)
def test_laguerre_explicit_low_degrees(a, x):
    l2 = (a + 1) * (a + 2) / 2 - (a + 2) * x + x * x / 2
    l3 = (
        (a + 1) * (a + 2) * (a + 3) / 6
        - (a + 2) * (a + 3) * x / 2
        + (a + 3) * x * x / 2
        - x**3 / 6
    )
    scale = max(1.0, abs(l2))
    assert abs(laguerre(2, a, x) - l2) <= 1e-13 * scale
    scale = max(1.0, abs(l3))
    assert abs(laguerre(3, a, x) - l3) <= 1e-13 * scale


@pytest.mark.parametrize("a", [0.0, 0.5, 2.0])
def test_laguerre_orthogonality(a):
    # Gauss-Laguerre quadrature with weight x^a e^-x is exact here
    nodes, weights = roots_genlaguerre(12, a)
    for m in range(6):
        norm_m = math.gamma(m + a + 1) / math.factorial(m)
        for n in range(m + 1, 6):
            inner = np.sum(weights * laguerre(m, a, nodes) * laguerre(n, a, nodes))
            assert abs(inner) <= 1e-10 * norm_m


@given(
    n=st.integers(0, 12),
    a=params_gt_minus_one,
    x=st.floats(min_value=0.0, max_value=40.0),
)
def test_laguerre_matches_scipy(n, a, x):
    from scipy.special import eval_genlaguerre

    ours = laguerre(n, a, x)
    ref = eval_genlaguerre(n, a, x)
    assert ours == pytest.approx(ref, rel=1e-10, abs=1e-10)


def test_laguerre_rejects_bad_degree():
    for bad in (-1, 1.5, True):
        with pytest.raises(DomainError):
            laguerre(bad, 0.0, 1.0)


# ---------------------------------------------------------------------------
# Jacobi
# ---------------------------------------------------------------------------


@given(kappa=params_gt_minus_one, upsilon=params_gt_minus_one)
def test_jacobi_endpoint_value(kappa, upsilon):
    assert jacobi(0, kappa, upsilon, 0.3) == 1.0
    assert jacobi(1, kappa, upsilon, 1.0) == pytest.approx(kappa + 1.0, rel=1e-13, abs=1e-13)


def test_jacobi_symmetry():
    rng = np.random.default_rng(7)
    x = rng.uniform(-1.0, 1.0, size=50)
    for n in range(11):
        for kappa, upsilon in [(0.0, 0.0), (0.5, 1.25), (2.0, 0.3)]:
            left = jacobi(n, kappa, upsilon, x)
            right = (-1.0) ** n * jacobi(n, upsilon, kappa, -x)
            np.testing.assert_allclose(left, right, rtol=1e-12, atol=1e-12)


def _iterated_diff(n, a, b, x, h):
    pts = x - n * h / 2 + h * np.arange(n + 1)
    g = (1 - pts) ** (a + n) * (1 + pts) ** (b + n)
    d = np.diff(g, n=n) / h**n if n else g
    return (
        (-1) ** n
        / (2**n * math.factorial(n))
        * (1 - x) ** (-a)
        * (1 + x) ** (-b)
        * d[0]
    )


def _rodrigues_fd(n, a, b, x, h=1e-2):
    """n-th derivative of (1-x)^(a+n) (1+x)^(b+n) by iterated differencing.

    The centered n-fold difference is second order in h; one halving step
    of Richardson extrapolation removes that term, which is needed to stay
    ahead of rounding at degree 4.
    """
    d1 = _iterated_diff(n, a, b, x, h)
    d2 = _iterated_diff(n, a, b, x, h / 2)
    return (4 * d2 - d1) / 3


@pytest.mark.parametrize("kappa, upsilon", [(0.0, 0.5), (0.5, 1.25), (1.0, 2.0)])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_jacobi_matches_rodrigues_form(n, kappa, upsilon):
    for x in (-0.4, 0.1, 0.55):
        ref = _rodrigues_fd(n, kappa, upsilon, x)
        assert jacobi(n, kappa, upsilon, x) == pytest.approx(ref, rel=1e-4, abs=1e-4)


@given(
    n=st.integers(1, 8),
    kappa=st.floats(min_value=-0.5, max_value=3.0),
    upsilon=st.floats(min_value=-0.5, max_value=3.0),
)
def test_jacobi_zero_count(n, kappa, upsilon):
    x = np.linspace(-1.0 + 1e-9, 1.0 - 1e-9, 4001)
    values = jacobi(n, kappa, upsilon, x)
    signs = np.sign(values[np.abs(values) > 1e-13 * np.max(np.abs(values))])
    changes = int(np.count_nonzero(signs[1:] != signs[:-1]))
    assert changes == n


def test_jacobi_rejects_out_of_range():
    with pytest.raises(DomainError, match="> -1"):
        jacobi(2, -1.0, 0.0, 0.5)
    with pytest.raises(DomainError, match=r"\[-1, 1\]"):
        jacobi(2, 0.0, 0.0, 1.5)


def test_polynomial_spec_dispatch():
    assert PolynomialSpec("laguerre", 2, (1.0,)).evaluate(2.0) == pytest.approx(-1.0)
    assert PolynomialSpec("jacobi", 1, (0.5, 0.5)).evaluate(1.0) == pytest.approx(1.5)
    with pytest.raises(DomainError):
        PolynomialSpec("hermite", 1, (0.0,))
    with pytest.raises(DomainError):
        PolynomialSpec("jacobi", 1, (0.5,))
    with pytest.raises(DomainError):
        PolynomialSpec("laguerre", 1, (-1.0,))


# ---------------------------------------------------------------------------
# normalize
# ---------------------------------------------------------------------------


def _sampled(fn, rho_max=40.0, n=20001):
    grid = RadialGrid(1e-8, rho_max, n)
    return RadialFunction(grid, fn(grid.nodes))


def test_normalize_exponential():
    f = _sampled(lambda r: np.exp(-r))
    assert normalize(f) == pytest.approx(math.sqrt(2.0), rel=1e-7)


def test_normalize_round_trip():
    f = _sampled(lambda r: np.exp(-r) * (1 + r) ** 2)
    scale = normalize(f)
    check = simpson((scale * f.values) ** 2, x=f.grid.nodes)
    assert check == pytest.approx(1.0, rel=1e-9)


def test_normalize_stable_under_domain_doubling():
    # 40 is already 20 decay lengths of e^-2rho; doubling must not move N
    n40 = normalize(_sampled(lambda r: np.exp(-r), rho_max=40.0))
    n80 = normalize(_sampled(lambda r: np.exp(-r), rho_max=80.0, n=40001))
    assert abs(n40 - n80) <= 1e-8 * n40


def test_normalize_rejects_divergent_tail():
    f = _sampled(lambda r: np.exp(0.1 * r))
    with pytest.raises(NormalizationError, match="divergent"):
        normalize(f)


def test_normalize_rejects_coarse_grid():
    f = _sampled(lambda r: np.exp(-r), n=101)
    with pytest.raises(NormalizationError, match="finer grid"):
        normalize(f)
