"""Tests for the tube volume kernel: chord geometry, the radial and
shell-average representations, the two-dimensional closed form, and the
Monte Carlo cross-check."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from orthovol import (
    DEFAULT_CONFIG,
    NonConvergenceError,
    QuadratureConfig,
    chord_length,
    chord_length_nd,
    large_length_coefficient,
    small_length_constant,
    surface_kernel,
    surface_kernel_integral,
    volume_kernel,
    volume_kernel_alt,
    volume_kernel_montecarlo,
    volume_kernel_radial,
)

PURE_REL = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-300)


def chord_arclength(x, y, a):
    # Independent length of the geodesic piece between the circles of
    # radius 1 and a: the half-circle over the diameter (x, y) carries
    # the length element d(phi)/sin(phi).
    m = 0.5 * (x + y)
    r = 0.5 * (y - x)

    def phi_at(rho):
        c = (rho * rho - m * m - r * r) / (2.0 * m * r)
        return math.acos(max(-1.0, min(1.0, c)))

    val, _ = quad(lambda p: 1.0 / math.sin(p), phi_at(a), phi_at(1.0))
    return val


@pytest.fixture(scope="module")
def kernel_grid():
    # One shared sweep per dimension; several tests below reuse it.
    grid = {}
    for n in range(3, 7):
        ls = [0.05 * k for k in range(1, 101)]
        grid[n] = (ls, [volume_kernel(n, l, DEFAULT_CONFIG).value for l in ls])
    return grid


def test_chord_length_validation():
    with pytest.raises(ValueError):
        chord_length(0.5, 0.7, 2.0)  # y inside the dead band
    with pytest.raises(ValueError):
        chord_length(1.5, 3.0, 2.0)  # x outside the unit disc
    with pytest.raises(ValueError):
        chord_length(0.5, 3.0, 1.0)  # a must exceed 1


def test_chord_length_symmetry():
    # Swapping which endpoint sits inside changes nothing.
    assert chord_length(0.5, 3.0, 2.0) == chord_length(3.0, 0.5, 2.0)
    assert chord_length(-0.3, 4.0, 2.0) == chord_length(4.0, -0.3, 2.0)


def test_chord_length_frozen_value():
    # x = 1/2, y = 3, a = 2 gives exactly (1/2) log 8
    got = chord_length(0.5, 3.0, 2.0)
    assert got == pytest.approx(0.5 * math.log(8.0), rel=1e-14)


def test_chord_length_far_endpoint_limit():
    # x = 0 with y pushed to infinity degenerates to the radial segment
    # between the two circles, of length log(a).
    got = chord_length(0.0, 1e6, 2.0)
    assert got == pytest.approx(math.log(2.0), rel=1e-5)


@pytest.mark.parametrize(
    "x,y,a",
    [(0.5, 3.0, 2.0), (-0.4, 2.5, 2.0), (0.0, 10.0, 3.0), (0.9, 1.6, 1.5)],
)
def test_chord_length_matches_arclength(x, y, a):
    assert chord_length(x, y, a) == pytest.approx(
        chord_arclength(x, y, a), rel=1e-8
    )


def test_chord_length_nd_validation():
    with pytest.raises(ValueError):
        chord_length_nd(3, (0.2,), (2.5, 1.0), 2.0)  # wrong shape
    with pytest.raises(ValueError):
        chord_length_nd(3, (0.8, 0.8), (2.5, 1.0), 2.0)  # |x| >= 1
    with pytest.raises(ValueError):
        chord_length_nd(3, (0.2, 0.1), (1.2, 0.9), 2.0)  # |y| in dead band


def test_chord_length_nd_collinear_reduces():
    got = chord_length_nd(3, (0.5, 0.0), (3.0, 0.0), 2.0)
    assert got == pytest.approx(chord_length(0.5, 3.0, 2.0), rel=1e-12)


def test_chord_length_nd_frozen_value():
    got = chord_length_nd(3, (0.2, 0.1), (2.5, 1.0), 2.0)
    assert got == pytest.approx(1.0394676703536228, rel=1e-12)


def test_chord_length_nd_planar_oracle():
    # Reduce the planar pair to the axis form by hand: project y onto
    # the through-origin line of the 2-plane spanned with x, then check
    # against the direct evaluation.
    x = np.array([0.2, 0.1])
    y = np.array([2.5, 1.0])
    a = 2.0
    got = chord_length_nd(3, x, y, a)
    # independent reduction: distance geometry in the plane
    dist = float(np.linalg.norm(y - x))
    ex = (y - x) / dist
    s = float(np.dot(x, ex))
    perp2 = float(np.dot(x, x)) - s * s
    r1 = math.sqrt(1.0 - perp2)
    want = chord_length(
        s / r1, (s + dist) / r1, math.sqrt(a * a - perp2) / r1
    )
    assert got == pytest.approx(want, rel=1e-8)


def test_chord_length_nd_rotation_invariant():
    rng = np.random.default_rng(991)
    x2 = np.array([0.2, 0.1])
    y2 = np.array([2.5, 1.0])
    base2 = chord_length_nd(3, x2, y2, 2.0)
    for _ in range(10):
        t = rng.uniform(0.0, 2.0 * math.pi)
        rot = np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
        assert chord_length_nd(3, rot @ x2, rot @ y2, 2.0) == pytest.approx(
            base2, rel=1e-12
        )
    x3 = np.array([0.3, -0.2, 0.1])
    y3 = np.array([1.5, 2.0, -0.5])
    base3 = chord_length_nd(4, x3, y3, 2.0)
    for _ in range(10):
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        assert chord_length_nd(4, q @ x3, q @ y3, 2.0) == pytest.approx(
            base3, rel=1e-12
        )


@pytest.mark.parametrize("n,l", [(3, 1.0), (4, 1.0), (6, 0.5)])
def test_representations_agree(n, l):
    a = volume_kernel_radial(n, l, PURE_REL)
    b = volume_kernel_alt(n, l, PURE_REL)
    assert a.value == pytest.approx(b.value, rel=1e-8)


def test_surface_kernel_small_length_limit():
    assert surface_kernel(1e-4) == pytest.approx(2.0 * math.pi / 3.0, rel=1e-3)


def test_surface_kernel_special_point():
    # At l = 2 arccosh(sqrt 2) the closed form collapses to pi/3.
    lstar = 2.0 * math.acosh(math.sqrt(2.0))
    assert surface_kernel(lstar) == pytest.approx(math.pi / 3.0, abs=1e-12)


@pytest.mark.parametrize("l,tol", [(0.1, 1e-5), (1.0, 1e-6), (3.0, 1e-8)])
def test_surface_kernel_matches_integral(l, tol):
    got = surface_kernel_integral(l, QuadratureConfig(rel_tol=1e-9, abs_tol=1e-300))
    assert got.value == pytest.approx(surface_kernel(l), rel=tol)


def test_surface_kernel_strictly_decreasing():
    vals = [surface_kernel(0.05 * k) for k in range(1, 101)]
    assert all(v > 0.0 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_small_length_constants():
    assert small_length_constant(3) == pytest.approx(math.pi / 2.0, rel=1e-14)
    assert small_length_constant(4) == pytest.approx(1.0, rel=1e-14)


def test_large_length_coefficients():
    assert large_length_coefficient(3) == pytest.approx(math.pi, rel=1e-14)
    assert large_length_coefficient(4) == pytest.approx(32.0 / 9.0, rel=1e-14)


def test_small_length_law_dimension_three():
    kv = volume_kernel(3, 1e-4, DEFAULT_CONFIG)
    assert 1e-4 * kv.value == pytest.approx(math.pi / 2.0, rel=5e-3)


def test_small_length_band_dimension_three():
    # length times the dimension-3 kernel stays within 5% of pi/2 for l <= 0.05
    for l in (0.005, 0.01, 0.025, 0.05):
        ratio = l * volume_kernel(3, l, DEFAULT_CONFIG).value / (math.pi / 2.0)
        assert 0.95 <= ratio <= 1.05


def test_dispatcher_routes():
    # Dimension 2 uses the closed form (no quadrature error); dimension
    # 3 must agree with the radial representation it delegates to.
    kv2 = volume_kernel(2, 1.0, DEFAULT_CONFIG)
    assert kv2.value == surface_kernel(1.0)
    assert kv2.err_estimate == 0.0
    assert volume_kernel(3, 1.0, DEFAULT_CONFIG) == volume_kernel_radial(
        3, 1.0, DEFAULT_CONFIG
    )


def test_dispatcher_validation():
    with pytest.raises(ValueError):
        volume_kernel(1, 1.0, DEFAULT_CONFIG)
    with pytest.raises(ValueError):
        volume_kernel(3, 0.0, DEFAULT_CONFIG)
    with pytest.raises(ValueError):
        volume_kernel(3, -1.0, DEFAULT_CONFIG)


def test_err_estimate_within_tolerance():
    # The reported error must respect the configured tolerances even
    # where the kernel value is tiny and internal prefactors are large.
    for n, l in ((3, 0.1), (5, 1.0), (8, 4.0)):
        kv = volume_kernel(n, l, DEFAULT_CONFIG)
        allowed = max(
            DEFAULT_CONFIG.abs_tol, DEFAULT_CONFIG.rel_tol * abs(kv.value)
        )
        assert kv.err_estimate <= allowed


def test_kernel_positive(kernel_grid):
    for n, (_, vals) in kernel_grid.items():
        assert all(v > 0.0 for v in vals)


def test_decay_envelope_fit_at_smallest_length(kernel_grid):
    """Deliberately failing: the envelope constant cannot be fit at l = 0.05.

    volume_kernel(n, l) * (e^l - 1)^(n-2) is bounded, but at l = 0.05 it sits
    near its small-length limit (the small-length constant) and climbs to an
    interior maximum before the exponential decay wins: the excess over
    the l = 0.05 value measures 11% in dimension 3, 49% in dimension 4,
    121% in dimension 5 and 249% in dimension 6.  A constant fitted at
    the left edge of the grid therefore undershoots everywhere in the
    mid range.  The existence-form test below fits the constant as the
    observed supremum instead, which is the shape of the actual claim.
    """
    for n, (ls, vals) in kernel_grid.items():
        c = vals[0] * math.expm1(ls[0]) ** (n - 2)
        for l, v in zip(ls[1:], vals[1:]):
            assert v * math.expm1(l) ** (n - 2) <= c


def test_decay_envelope_exists(kernel_grid):
    # Same envelope with the constant taken as the grid supremum plus
    # 2% headroom, checked on a denser interleaved grid.
    for n, (ls, vals) in kernel_grid.items():
        c = 1.02 * max(
            v * math.expm1(l) ** (n - 2) for l, v in zip(ls, vals)
        )
        for k in range(1, 41):
            l = 0.125 * k - 0.0125
            v = volume_kernel(n, l, DEFAULT_CONFIG).value
            assert v * math.expm1(l) ** (n - 2) <= c


def test_montecarlo_validation():
    with pytest.raises(ValueError):
        volume_kernel_montecarlo(5, 1.0)
    with pytest.raises(ValueError):
        volume_kernel_montecarlo(3, 0.2)


def test_montecarlo_raises_when_noisy():
    # 200 samples cannot reach a 1% standard error at l = 1
    with pytest.raises(NonConvergenceError):
        volume_kernel_montecarlo(3, 1.0, samples=200, seed=5)


def test_montecarlo_agrees_dimension_four():
    kv = volume_kernel_montecarlo(4, 1.0, samples=400_000, seed=7)
    ref = volume_kernel(4, 1.0, DEFAULT_CONFIG).value
    assert abs(kv.value - ref) <= 4.0 * kv.err_estimate
    assert kv.err_estimate <= 0.01 * ref
