import math

from bloch_lab.constants import BlochClassParams
from bloch_lab.maps import ExtremalMap, PolyMap
from bloch_lab.services import (
    SamplingConfig,
    ball_points,
    estimate_alpha_seminorm,
    estimate_det_seminorm,
    estimate_hardy_norm,
    estimate_supremum,
    radial_grid,
    random_poly_map,
    sphere_points,
)
from bloch_lab.services.estimators import _record_indices, alpha_weight
from hypothesis import given
from hypothesis import strategies as st
import numpy as np
import pytest


class TestSampling:
    def test_config_validation(self):
        SamplingConfig(refine_steps=0)
        for kwargs in (dict(seed=True), dict(seed=1.5), dict(sphere_samples=0), dict(pair_samples=-1)):
            with pytest.raises(ValueError):
                SamplingConfig(**kwargs)

    def test_prefixes_are_nested(self):
        small = sphere_points(42, "test", 100, 3)
        large = sphere_points(42, "test", 3_000, 3)
        np.testing.assert_array_equal(small, large[:100])

    def test_deterministic_and_stream_dependent(self):
        first = sphere_points(1, "a", 50, 2)
        np.testing.assert_array_equal(first, sphere_points(1, "a", 50, 2))
        assert not np.allclose(first, sphere_points(1, "b", 50, 2))
        assert not np.allclose(first, sphere_points(2, "a", 50, 2))

    def test_sphere_points_are_uniform(self):
        points = sphere_points(3, "uniform", 100_000, 3)
        np.testing.assert_allclose(np.linalg.norm(points, axis=1), 1.0)
        np.testing.assert_allclose(np.mean(np.abs(points) ** 2, axis=0), 1 / 3, atol=5e-3)
        np.testing.assert_allclose(np.mean(points, axis=0), 0, atol=1e-2)

    def test_ball_points_volume_law(self):
        points = ball_points(5, "ball", 100_000, 2, 0.5)
        radii = np.linalg.norm(points, axis=1)
        assert np.all(radii <= 0.5 * (1 + 1e-12))
        # P(|z| <= t) = (t / R)^(2n): (|z| / R)^(2n) равномерно на [0, 1]
        assert np.mean((radii / 0.5) ** 4) == pytest.approx(0.5, abs=5e-3)

    def test_radial_grid(self):
        interior = radial_grid(10)
        assert np.all(np.diff(interior) > 0)
        assert 0 < interior[0] and interior[-1] < 1
        boundary = radial_grid(10, include_boundary=True)
        assert boundary[-1] == 1.0
        with pytest.raises(ValueError):
            radial_grid(0)


class TestSeminorms:
    def test_constant_map(self, small_cfg):
        assert estimate_alpha_seminorm(PolyMap.constant([1, 2j]), 1.0, small_cfg) == 0.0

    def test_identity(self, small_cfg):
        assert estimate_alpha_seminorm(PolyMap.identity(2), 1.0, small_cfg) == pytest.approx(1.0)
        assert estimate_det_seminorm(PolyMap.identity(3), 0.5, small_cfg) == pytest.approx(1.0)

    def test_scaled_identity(self, small_cfg):
        f = PolyMap(1, [[(2 - 1j, (1,))]])
        assert estimate_alpha_seminorm(f, 2.0, small_cfg) == pytest.approx(abs(2 - 1j))

    def test_square_attains_interior_maximum(self):
        f = PolyMap(1, [[(1.0, (2,))]])
        value = estimate_alpha_seminorm(f, 1.0, SamplingConfig(seed=1, sphere_samples=16))
        assert value == pytest.approx(4 / (3 * math.sqrt(3)), abs=1e-4)
        assert value <= 4 / (3 * math.sqrt(3)) + 1e-12

    def test_extremal_det_seminorm_is_one(self):
        f = ExtremalMap(BlochClassParams(1.0, 1, 0.5))
        value = estimate_det_seminorm(f, 1.0, SamplingConfig(seed=2, sphere_samples=64))
        assert 1 - 2e-3 <= value <= 1 + 1e-9

    def test_larger_sample_never_decreases(self):
        f = PolyMap(2, [[(1.0, (1, 0)), (0.7j, (2, 1))], [(1.0, (0, 1)), (-0.4, (0, 3))]])
        small = estimate_alpha_seminorm(f, 1.0, SamplingConfig(seed=9, sphere_samples=64, refine_steps=0))
        large = estimate_alpha_seminorm(f, 1.0, SamplingConfig(seed=9, sphere_samples=512, refine_steps=0))
        assert large >= small * (1 - 1e-12)

    @pytest.mark.parametrize("refine_steps", [30, 200])
    def test_refined_estimate_never_decreases(self, refine_steps):
        f = random_poly_map(2, 5, np.random.default_rng(37))
        previous = -np.inf
        for samples in (8, 16, 32, 64, 128):
            cfg = SamplingConfig(seed=3, sphere_samples=samples, radial_grid=8, refine_steps=refine_steps)
            value = estimate_alpha_seminorm(f, 1.0, cfg)
            assert value >= previous - 1e-12
            previous = value

    @given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=60), st.integers(1, 5), st.data())
    def test_refinement_starts_are_nested(self, values, k, data):
        values = np.array(values)
        cut = data.draw(st.integers(1, values.size))
        prefix_starts = _record_indices(values[:cut], k)
        assert set(prefix_starts) <= set(_record_indices(values, k))
        top = np.argsort(-values[:cut], kind="stable")[:k]
        assert {float(values[i]) for i in top} <= {float(values[i]) for i in prefix_starts}

    def test_refinement_only_increases(self):
        f = PolyMap(1, [[(1.0, (2,))]])
        cfg = SamplingConfig(seed=4, sphere_samples=8, radial_grid=4)
        estimate = estimate_supremum(alpha_weight(1.0), f, cfg)
        assert estimate.value >= estimate.sampled_value
        assert estimate.refinement_delta == pytest.approx(estimate.value - estimate.sampled_value)
        assert len(estimate.location) == 1
        assert abs(estimate.location[0]) < 1

    def test_invalid_alpha(self, small_cfg):
        with pytest.raises(ValueError):
            estimate_alpha_seminorm(PolyMap.identity(1), 0.0, small_cfg)


class TestHardyNorm:
    def test_constant(self, small_cfg):
        estimate = estimate_hardy_norm(PolyMap.constant([3.0, 4.0]), 1.5, small_cfg)
        assert estimate.value == pytest.approx(5.0)
        assert estimate.standard_error == pytest.approx(0.0, abs=1e-12)

    def test_identity_is_one_on_boundary(self, small_cfg):
        estimate = estimate_hardy_norm(PolyMap.identity(2), 2.0, small_cfg)
        assert estimate.value == pytest.approx(1.0)
        assert estimate.radius == 1.0

    @pytest.mark.parametrize("p,expected", [(2.0, 1 / math.sqrt(2)), (1.0, 2 / 3)])
    def test_first_coordinate(self, p, expected):
        f = PolyMap(2, [[(1.0, (1, 0))], [(0.0, (0, 1))]])
        cfg = SamplingConfig(seed=11, sphere_samples=100_000, radial_grid=4)
        estimate = estimate_hardy_norm(f, p, cfg)
        assert estimate.radius == 1.0
        assert abs(estimate.value - expected) <= 4 * estimate.standard_error + 1e-12

    def test_custom_radii(self, small_cfg):
        estimate = estimate_hardy_norm(PolyMap.identity(1), 1.0, small_cfg, radii=np.array([0.25, 0.5]))
        assert estimate.value == pytest.approx(0.5)
        assert estimate.radius == 0.5
