import cmath
import math

import numpy as np
import pytest

from nfwpt.channel import (DmaConfig, array_to_point_channel, cascade_sum,
                           cascaded_ris_channel, dma_effective_channel,
                           dma_feed_factors, lorentzian_weight,
                           los_coefficient, point_channel_coefficients,
                           ris_link_vectors, superpose)
from nfwpt.errors import SingularGeometryError
from nfwpt.geometry import ElementPattern, fibonacci_sphere, make_planar_array

ISO = ElementPattern.isotropic()
Z = np.array([0.0, 0.0, 1.0])
ORIGIN = np.zeros(3)


class TestLosCoefficient:
    def test_friis_amplitude_at_one_wavelength(self):
        lam = 0.1
        h = los_coefficient(ORIGIN, Z, ISO, (0, 0, lam), 1.0, lam)
        assert abs(h) == pytest.approx(1.0 / (4.0 * math.pi), rel=1e-12)
        assert cmath.phase(h) == pytest.approx(0.0, abs=1e-9)

    def test_phase_periodicity(self):
        lam = 0.25
        h1 = los_coefficient(ORIGIN, Z, ISO, (0, 0, 2.0), 1.0, lam)
        h2 = los_coefficient(ORIGIN, Z, ISO, (0, 0, 2.0 + lam), 1.0, lam)
        assert cmath.phase(h1) == pytest.approx(cmath.phase(h2), abs=1e-9)

    def test_inverse_distance_amplitude(self):
        lam = 0.1
        near = los_coefficient(ORIGIN, Z, ISO, (0, 0, lam), 1.0, lam)
        far = los_coefficient(ORIGIN, Z, ISO, (0, 0, 2 * lam), 1.0, lam)
        assert abs(near) / abs(far) == pytest.approx(2.0, rel=1e-12)

    def test_coincident_positions_rejected(self):
        with pytest.raises(SingularGeometryError):
            los_coefficient(ORIGIN, Z, ISO, ORIGIN, 1.0, 0.1)

    def test_reciprocity_for_isotropic_ends(self):
        lam = 0.0731
        a = np.array([0.3, -0.2, 0.4])
        b = np.array([-1.0, 2.0, 5.0])
        forward = los_coefficient(a, Z, ISO, b, 1.0, lam)
        backward = los_coefficient(b, Z, ISO, a, 1.0, lam)
        assert abs(forward) == pytest.approx(abs(backward), rel=1e-12)


class TestArrayToPointChannel:
    def test_boresight_magnitudes(self):
        lam = 0.0999308
        arr = make_planar_array(10, 10, 1.2243, ORIGIN, Z,
                                ElementPattern.cosine_power_db(13.0))
        h = array_to_point_channel(arr, (0, 0, 8.0), 1.0, lam)
        assert len(h) == 100
        mags = np.abs(h.coefficients)
        # the four central elements sit closest to boresight
        central = np.argsort(np.linalg.norm(arr.positions, axis=1))[:4]
        assert np.min(mags[central]) >= np.max(np.delete(mags, central))

    def test_single_element_matches_los(self):
        lam = 0.1
        arr = make_planar_array(1, 1, 0.0, (0.1, 0.2, 0.0), Z, ISO)
        h = array_to_point_channel(arr, (0, 0, 3.0), 1.0, lam)
        expected = los_coefficient((0.1, 0.2, 0.0), Z, ISO, (0, 0, 3.0), 1.0,
                                   lam)
        assert h.coefficients[0] == pytest.approx(expected, rel=1e-12)

    def test_mirror_symmetric_magnitudes(self):
        lam = 0.05
        arr = make_planar_array(4, 4, 0.6, ORIGIN, Z,
                                ElementPattern.cosine_power_db(7.0))
        h = np.abs(array_to_point_channel(arr, (0, 0, 5.0), 1.0, lam)
                   .coefficients).reshape(4, 4)
        assert np.allclose(h, h[::-1, :], rtol=1e-12)
        assert np.allclose(h, h[:, ::-1], rtol=1e-12)


class TestCascade:
    def test_hand_set_two_element_sum(self):
        f = np.array([1.0, 1.0], dtype=complex)
        g = np.array([1.0, -1.0], dtype=complex)
        h = cascade_sum(f, g, np.array([0.0, math.pi]))
        assert h == pytest.approx(2.0 + 0.0j, abs=1e-12)

    def test_global_phase_invariance(self):
        rng = np.random.default_rng(3)
        f = rng.standard_normal(40) + 1j * rng.standard_normal(40)
        g = rng.standard_normal(40) + 1j * rng.standard_normal(40)
        phases = rng.uniform(0.0, 2 * math.pi, 40)
        base = abs(cascade_sum(f, g, phases))
        for shift in (0.3, 1.7, math.pi):
            assert abs(cascade_sum(f, g, phases + shift)) == pytest.approx(
                base, rel=1e-12, abs=1e-12)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            cascade_sum(np.ones(3), np.ones(3), np.zeros(2))

    def test_geometric_cascade_matches_link_vectors(self):
        lam = 0.0999308
        ris = make_planar_array(6, 6, 0.1, ORIGIN, Z,
                                ElementPattern.cosine_power_db(7.0))
        feeder_pos = np.array([0.0, 0.0, 0.5])
        feeder_pat = ElementPattern.cosine_power_db(3.0)
        point = np.array([0.2, 0.0, 3.0])
        phases = np.linspace(0.0, 4.0, ris.n_elements)
        f, g = ris_link_vectors(feeder_pos, -Z, feeder_pat, ris, point, 1.0,
                                lam)
        direct = cascaded_ris_channel(feeder_pos, -Z, feeder_pat, ris, phases,
                                      point, 1.0, lam)
        assert direct == pytest.approx(cascade_sum(f, g, phases), rel=1e-12)

    def test_phase_count_mismatch(self):
        lam = 0.1
        ris = make_planar_array(2, 2, 0.05, ORIGIN, Z, ISO)
        with pytest.raises(ValueError):
            cascaded_ris_channel((0, 0, 1.0), -Z, ISO, ris, np.zeros(3),
                                 (0, 0, 5.0), 1.0, lam)


class TestLorentzian:
    def test_weight_circle(self):
        phi = np.linspace(0.0, 2 * math.pi, 721)
        q = lorentzian_weight(phi)
        assert np.all(np.abs(q) <= 1.0 + 1e-12)
        assert abs(lorentzian_weight(math.pi / 2)) == pytest.approx(1.0)
        assert abs(lorentzian_weight(-math.pi / 2)) == pytest.approx(0.0)
        # weights live on the circle |q - j/2| = 1/2
        assert np.allclose(np.abs(q - 0.5j), 0.5, atol=1e-12)

    def test_passivity_per_waveguide(self):
        rng = np.random.default_rng(11)
        n_e = 16
        for _ in range(20):
            q = lorentzian_weight(rng.uniform(0, 2 * math.pi, n_e))
            assert np.sum(np.abs(q / math.sqrt(n_e)) ** 2) <= 1.0 + 1e-12


def toy_dma(m=1, n_e=2, lam=0.1):
    pitch = lam / 5.0
    x = np.tile(np.arange(n_e) * pitch, m)
    y = np.repeat(np.arange(m) * lam / 2.0, n_e)
    positions = np.column_stack([x, y, np.zeros(n_e * m)])
    along = np.tile(np.arange(n_e) * pitch, m)
    return DmaConfig(m, n_e, positions, Z, ISO, along, 2 * math.pi / lam)


class TestDmaChannel:
    def test_degenerate_single_element(self):
        # one waveguide, one element, feed factor 1, q(pi/2) = j
        lam = 0.1
        dma = DmaConfig(1, 1, np.zeros((1, 3)), Z, ISO, np.zeros(1),
                        2 * math.pi / lam)
        point = np.array([0.0, 0.0, 2.0])
        h = dma_effective_channel(dma, [math.pi / 2], point, 1.0, lam)
        base = los_coefficient(ORIGIN, Z, ISO, point, 1.0, lam)
        assert h == pytest.approx(1j * base, rel=1e-12)

    def test_two_element_hand_sum(self):
        lam = 0.1
        dma = toy_dma(m=1, n_e=2, lam=lam)
        point = np.array([0.0, 0.3, 1.7])
        phases = np.array([0.4, 2.9])
        h = dma_effective_channel(dma, phases, point, 1.0, lam)
        # independent hand evaluation of the two-term sum
        beta = 2 * math.pi / lam
        expected = 0.0j
        for idx in range(2):
            pos = dma.positions[idx]
            d = np.linalg.norm(point - pos)
            free = lam / (4 * math.pi * d) * cmath.exp(-2j * math.pi * d / lam)
            q = (1j + cmath.exp(1j * phases[idx])) / 2.0
            expected += (1 / math.sqrt(2)) * q * cmath.exp(
                -1j * beta * dma.along_guide[idx]) * free
        assert h == pytest.approx(expected, rel=1e-12)

    def test_feed_normalization(self):
        dma = toy_dma(m=3, n_e=5)
        factors = dma_feed_factors(dma)
        assert np.allclose(np.abs(factors), 1.0 / math.sqrt(15))

    def test_phase_count_mismatch(self):
        dma = toy_dma()
        with pytest.raises(ValueError):
            dma_effective_channel(dma, [0.1], (0, 0, 1.0), 1.0, 0.1)


class TestEnergyConservationSingleElement:
    def test_enclosing_sphere_recovers_power(self):
        # amplitude sqrt(P) on one isotropic element: integral of
        # |e|^2/(4 pi) over any enclosing sphere is exactly P
        lam = 0.13
        power = 2.5
        for radius in (1.0, 7.3):
            pts = radius * fibonacci_sphere(2000)
            e = superpose(pts, np.zeros((1, 3)), Z, ISO,
                          [math.sqrt(power)], lam)
            densities = np.abs(e) ** 2 / (4 * math.pi)
            integral = densities.sum() * 4 * math.pi * radius ** 2 / len(pts)
            assert integral == pytest.approx(power, rel=5e-3)

    def test_superpose_matches_scaled_channel(self):
        # superpose with unit amplitude equals (4 pi / lam) * los coefficient
        lam = 0.21
        pt = np.array([[0.4, -0.8, 3.0]])
        e = superpose(pt, np.zeros((1, 3)), Z, ISO, [1.0], lam)[0]
        h = los_coefficient(ORIGIN, Z, ISO, pt[0], 1.0, lam)
        assert e == pytest.approx(h * 4 * math.pi / lam, rel=1e-12)

    def test_superpose_singular_point(self):
        with pytest.raises(SingularGeometryError):
            superpose(np.zeros((1, 3)), np.zeros((1, 3)), Z, ISO, [1.0], 0.1)


def test_point_channel_rejects_coincident():
    with pytest.raises(SingularGeometryError):
        point_channel_coefficients(np.zeros((2, 3)), Z, ISO, ORIGIN, 1.0, 0.1)
