"""Line and lattice walk behaviour."""

import csv
import math

import numpy as np
import pytest

from conftest import loglog_slope
from qwtrain import walk_core as wc


class TestCoinAndUnitarity:
    def test_hadamard_is_involution(self):
        h = wc.hadamard_coin()
        assert np.allclose(h @ h, np.eye(2), atol=1e-15)

    def test_hadamard_splits_basis_state_evenly(self):
        h = wc.hadamard_coin()
        out = h @ np.array([1.0, 0.0])
        assert np.abs(out[0]) ** 2 == pytest.approx(0.5, abs=1e-15)
        assert np.abs(out[1]) ** 2 == pytest.approx(0.5, abs=1e-15)

    def test_check_unitary_accepts_identity_and_hadamard(self):
        assert wc.check_unitary(np.eye(3))
        assert wc.check_unitary(wc.hadamard_coin(), tol=1e-12)

    def test_check_unitary_rejects_shear(self):
        assert not wc.check_unitary(np.array([[1.0, 1.0], [0.0, 1.0]]))

    def test_check_unitary_rejects_non_square(self):
        with pytest.raises(ValueError):
            wc.check_unitary(np.ones((2, 3)))


class TestInitialStates:
    def test_symmetric_initial_1d_amplitudes(self):
        s = wc.symmetric_initial_1d()
        assert s.amplitude(0, 0) == pytest.approx(1 / math.sqrt(2))
        assert s.amplitude(1, 0) == pytest.approx(-1j / math.sqrt(2))
        assert s.amplitude(0, 3) == 0j
        assert s.norm() == pytest.approx(1.0, abs=1e-15)
        assert s.time == 0

    def test_symmetric_initial_2d_is_product_of_coins(self):
        s = wc.symmetric_initial_2d()
        assert s.norm() == pytest.approx(1.0, abs=1e-15)
        assert s.amplitude((0, 0), (0, 0)) == pytest.approx(0.5)
        assert s.amplitude((1, 1), (0, 0)) == pytest.approx(-0.5)
        assert s.amplitude((0, 1), (0, 0)) == pytest.approx(-0.5j)


class TestSingleSteps:
    def test_one_step_splits_half_half(self):
        d = wc.distribution(wc.step_1d(wc.symmetric_initial_1d()))
        assert d.entries[1] == pytest.approx(0.5, abs=1e-15)
        assert d.entries[-1] == pytest.approx(0.5, abs=1e-15)
        assert set(d.entries) == {-1, 1}

    def test_one_2d_step_puts_quarter_on_each_corner(self):
        d = wc.distribution(wc.step_2d(wc.symmetric_initial_2d()))
        assert set(d.entries) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
        for p in d.entries.values():
            assert p == pytest.approx(0.25, abs=1e-15)

    def test_evolve_zero_is_identity(self):
        s = wc.symmetric_initial_1d()
        assert wc.evolve(s, 0) is s

    def test_evolve_matches_repeated_steps(self):
        s = wc.symmetric_initial_1d()
        direct = wc.evolve(s, 7)
        stepped = s
        for _ in range(7):
            stepped = wc.step_1d(stepped)
        for n in range(-7, 8):
            for c in (0, 1):
                assert direct.amplitude(c, n) == stepped.amplitude(c, n)

    def test_evolve_rejects_negative(self):
        with pytest.raises(ValueError):
            wc.evolve(wc.symmetric_initial_1d(), -1)


class TestEvolvedProperties:
    def test_norm_preserved_over_hundred_steps(self):
        s = wc.evolve(wc.symmetric_initial_1d(), 100)
        assert abs(s.norm() - 1.0) < 1e-12

    def test_distribution_symmetric_at_every_sampled_time(self):
        for t in (1, 2, 7, 50, 100):
            d = wc.distribution(wc.evolve(wc.symmetric_initial_1d(), t))
            for n, p in d.entries.items():
                assert p == pytest.approx(d.entries[-n], abs=1e-12)

    def test_support_and_parity_after_100_steps(self):
        s = wc.evolve(wc.symmetric_initial_1d(), 100)
        d = wc.distribution(s)
        assert all(-100 <= n <= 100 and n % 2 == 0 for n in d.entries)

    def test_dominant_peaks_near_t_over_sqrt2(self):
        d = wc.distribution(wc.evolve(wc.symmetric_initial_1d(), 100))
        right = {n: p for n, p in d.entries.items() if n > 0}
        peak = max(right, key=right.get)
        assert 60 <= peak <= 80

    def test_distribution_normalized_and_non_negative(self):
        d = wc.distribution(wc.evolve(wc.symmetric_initial_1d(), 60))
        assert d.total() == pytest.approx(1.0, abs=1e-9)
        assert all(p >= 0.0 for p in d.entries.values())

    def test_initial_distribution_is_point_mass(self):
        assert wc.distribution(wc.symmetric_initial_1d()).entries == {0: 1.0}

    def test_2d_norm_and_symmetry(self):
        s = wc.evolve(wc.symmetric_initial_2d(), 30)
        assert abs(s.norm() - 1.0) < 1e-12
        d = wc.distribution(s)
        for (x, y), p in d.entries.items():
            assert p == pytest.approx(d.entries[(-x, y)], abs=1e-12)
            assert p == pytest.approx(d.entries[(x, -y)], abs=1e-12)

    @pytest.mark.parametrize("t", [1, 5, 20])
    def test_2d_marginal_matches_1d_walk(self, t):
        d2 = wc.marginal_x(wc.distribution(wc.evolve(wc.symmetric_initial_2d(), t)))
        d1 = wc.distribution(wc.evolve(wc.symmetric_initial_1d(), t))
        assert set(d2.entries) == set(d1.entries)
        for n, p in d1.entries.items():
            assert d2.entries[n] == pytest.approx(p, abs=1e-10)


class TestStddevAndScaling:
    def test_point_mass_has_zero_stddev(self):
        assert wc.position_stddev(wc.Distribution(entries={0: 1.0})) == 0.0

    def test_two_point_distribution(self):
        d = wc.Distribution(entries={1: 0.5, -1: 0.5})
        assert wc.position_stddev(d) == pytest.approx(1.0)

    def test_empty_distribution_raises(self):
        with pytest.raises(ValueError):
            wc.position_stddev(wc.Distribution(entries={}))

    def test_quantum_spreading_is_ballistic(self):
        ts = range(50, 501, 90)
        sigmas = [
            wc.position_stddev(wc.distribution(wc.evolve(wc.symmetric_initial_1d(), t)))
            for t in ts
        ]
        assert 0.95 <= loglog_slope(list(ts), sigmas) <= 1.05


class TestClassicalBaseline:
    def test_zero_steps_is_point_mass(self):
        d = wc.classical_walk_baseline(0, 100, seed=1)
        assert d.entries == {0: 1.0}

    def test_single_step_frequencies_are_fair(self):
        d = wc.classical_walk_baseline(1, 200_000, seed=7)
        assert d.entries[1] == pytest.approx(0.5, abs=0.005)
        assert d.entries[-1] == pytest.approx(0.5, abs=0.005)

    def test_deterministic_for_fixed_seed(self):
        a = wc.classical_walk_baseline(10, 1000, seed=3)
        b = wc.classical_walk_baseline(10, 1000, seed=3)
        assert a.entries == b.entries

    def test_zero_trials_raises(self):
        with pytest.raises(ValueError):
            wc.classical_walk_baseline(10, 0, seed=0)

    def test_classical_spreading_is_diffusive(self):
        ts = range(50, 501, 90)
        sigmas = [
            wc.position_stddev(wc.classical_walk_baseline(t, 100_000, seed=42 + t))
            for t in ts
        ]
        assert 0.45 <= loglog_slope(list(ts), sigmas) <= 0.55


class TestCsvSerialization:
    def test_1d_round_trip(self, tmp_path):
        d = wc.distribution(wc.evolve(wc.symmetric_initial_1d(), 8))
        path = tmp_path / "d1.csv"
        wc.write_distribution_csv(d, path)
        with open(path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        parsed = {int(r["position"]): float(r["probability"]) for r in rows}
        assert parsed == d.entries

    def test_2d_round_trip(self, tmp_path):
        d = wc.distribution(wc.evolve(wc.symmetric_initial_2d(), 4))
        path = tmp_path / "d2.csv"
        wc.write_distribution_csv(d, path)
        with open(path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        parsed = {(int(r["x"]), int(r["y"])): float(r["probability"]) for r in rows}
        assert parsed == d.entries

    def test_probabilities_have_full_precision(self, tmp_path):
        path = tmp_path / "d.csv"
        wc.write_distribution_csv(wc.Distribution(entries={1: 1 / 3, -1: 2 / 3}), path)
        text = path.read_text()
        assert "0.33333333333333331" in text
