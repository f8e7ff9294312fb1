"""Near-field line-of-sight channels between radiating elements and points.

Channels are exact per-element spherical waves: no plane-wave approximation
is made, which is what produces point focusing below the Fraunhofer
threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import SingularGeometryError
from .geometry import (SPEED_OF_LIGHT, ArrayGeometry, ElementPattern,
                       as_point, element_gain, element_gain_array, unit)


@dataclass(frozen=True)
class ChannelVector:
    """Complex element-to-point amplitude ratios at one carrier frequency."""

    coefficients: np.ndarray
    frequency_hz: float

    def __post_init__(self):
        if not np.all(np.isfinite(self.coefficients)):
            raise ValueError("channel coefficients must be finite")

    def __len__(self) -> int:
        return self.coefficients.shape[0]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))


def los_coefficient(tx_position, tx_normal, tx_pattern: ElementPattern,
                    rx_position, rx_gain: float, wavelength: float) -> complex:
    """Free-space amplitude sqrt(Gt*Gr) * lambda/(4*pi*d) * exp(-j*2*pi*d/lambda)."""
    tx = as_point(tx_position)
    rx = as_point(rx_position)
    delta = rx - tx
    d = float(np.linalg.norm(delta))
    if d == 0.0:
        raise SingularGeometryError("transmit and receive positions coincide")
    cos_theta = float(delta @ unit(tx_normal)) / d
    g_t = element_gain(tx_pattern, cos_theta)
    amplitude = np.sqrt(g_t * rx_gain) * wavelength / (4.0 * np.pi * d)
    return complex(amplitude * np.exp(-2j * np.pi * d / wavelength))


def point_channel_coefficients(positions, normal, pattern: ElementPattern,
                               point, rx_gain: float,
                               wavelength: float) -> np.ndarray:
    """Vector of los_coefficient values from each element to ``point``."""
    positions = np.asarray(positions, dtype=float)
    pt = as_point(point)
    delta = pt[None, :] - positions
    d = np.linalg.norm(delta, axis=1)
    if np.any(d == 0.0):
        raise SingularGeometryError("point coincides with an element")
    g_t = element_gain_array(pattern, (delta @ unit(normal)) / d)
    return (np.sqrt(g_t * rx_gain) * wavelength / (4.0 * np.pi * d)
            * np.exp(-2j * np.pi * d / wavelength))


def array_to_point_channel(array: ArrayGeometry, point, rx_gain: float,
                           wavelength: float) -> ChannelVector:
    """Element-wise LOS channel from a planar array to one point."""
    coeff = point_channel_coefficients(array.positions, array.normal,
                                       array.pattern, point, rx_gain,
                                       wavelength)
    return ChannelVector(coeff, SPEED_OF_LIGHT / wavelength)


def cascade_sum(feed: np.ndarray, exit_: np.ndarray,
                phases: np.ndarray) -> complex:
    """sum_n feed_n * exp(j*theta_n) * exit_n for a passive reflector."""
    feed = np.asarray(feed, dtype=complex)
    exit_ = np.asarray(exit_, dtype=complex)
    phases = np.asarray(phases, dtype=float)
    if not feed.shape == exit_.shape == phases.shape:
        raise ValueError("feed, exit and phase vectors must share a length")
    return complex(np.sum(feed * np.exp(1j * phases) * exit_))


def ris_feed_vector(feeder_position, feeder_normal,
                    feeder_pattern: ElementPattern, ris: ArrayGeometry,
                    wavelength: float) -> np.ndarray:
    """Feeder-to-surface LOS amplitudes, one per surface element.

    The surface element pattern weighs the incidence angle, so elements hit
    obliquely capture less of the feeder wave.
    """
    feeder = as_point(feeder_position)
    delta = ris.positions - feeder[None, :]
    d = np.linalg.norm(delta, axis=1)
    if np.any(d == 0.0):
        raise SingularGeometryError("feeder coincides with a surface element")
    g_feeder = element_gain_array(feeder_pattern,
                                  (delta @ unit(feeder_normal)) / d)
    g_incidence = element_gain_array(ris.pattern, (-delta @ ris.normal) / d)
    return (np.sqrt(g_feeder * g_incidence) * wavelength / (4.0 * np.pi * d)
            * np.exp(-2j * np.pi * d / wavelength))


def ris_link_vectors(feeder_position, feeder_normal,
                     feeder_pattern: ElementPattern, ris: ArrayGeometry,
                     point, rx_gain: float,
                     wavelength: float) -> tuple[np.ndarray, np.ndarray]:
    """Per-element feeder-to-surface and surface-to-point LOS vectors.

    The surface's element pattern weighs both hops (incidence and
    re-radiation angles are measured against the same element normal).
    """
    f = ris_feed_vector(feeder_position, feeder_normal, feeder_pattern, ris,
                        wavelength)
    g = point_channel_coefficients(ris.positions, ris.normal, ris.pattern,
                                   point, rx_gain, wavelength)
    return f, g


def cascaded_ris_channel(feeder_position, feeder_normal,
                         feeder_pattern: ElementPattern, ris: ArrayGeometry,
                         phases, point, rx_gain: float,
                         wavelength: float) -> complex:
    """Effective feeder -> RIS -> point channel with unit-modulus reflection."""
    phases = np.asarray(phases, dtype=float)
    if phases.shape[0] != ris.n_elements:
        raise ValueError("one phase per RIS element required")
    f, g = ris_link_vectors(feeder_position, feeder_normal, feeder_pattern,
                            ris, point, rx_gain, wavelength)
    return cascade_sum(f, g, phases)


def lorentzian_weight(phase):
    """Constrained metamaterial element weight (j + exp(j*phi)) / 2."""
    return (1j + np.exp(1j * np.asarray(phase, dtype=float))) / 2.0


@dataclass(frozen=True)
class DmaConfig:
    """Waveguide-fed metasurface: geometry plus in-guide propagation.

    ``positions`` is (M*N_e, 3) row-major by waveguide; ``along_guide`` holds
    each element's distance from its waveguide feed; ``guide_wavenumber`` is
    the in-guide phase constant.
    """

    waveguide_count: int
    elements_per_waveguide: int
    positions: np.ndarray
    normal: np.ndarray
    pattern: ElementPattern
    along_guide: np.ndarray
    guide_wavenumber: float

    def __post_init__(self):
        if self.waveguide_count < 1 or self.elements_per_waveguide < 1:
            raise ValueError("waveguide and element counts must be >= 1")
        n = self.waveguide_count * self.elements_per_waveguide
        if self.positions.shape != (n, 3) or self.along_guide.shape != (n,):
            raise ValueError("positions/along_guide shapes do not match counts")

    @property
    def n_elements(self) -> int:
        return self.waveguide_count * self.elements_per_waveguide


def dma_feed_factors(dma: DmaConfig) -> np.ndarray:
    """Per-element feed amplitude before the tunable Lorentzian weight.

    Equal power split over waveguides and elements (1/sqrt(M*N_e)) times the
    in-guide propagation phase, so total radiated power never exceeds the
    RF-chain output for |q| <= 1.
    """
    scale = 1.0 / np.sqrt(dma.waveguide_count * dma.elements_per_waveguide)
    return scale * np.exp(-1j * dma.guide_wavenumber * dma.along_guide)


def dma_link_vector(dma: DmaConfig, point, rx_gain: float,
                    wavelength: float) -> np.ndarray:
    """Feed factor times free-space channel, per element; h_eff = link . q."""
    h = point_channel_coefficients(dma.positions, dma.normal, dma.pattern,
                                   point, rx_gain, wavelength)
    return dma_feed_factors(dma) * h


def dma_effective_channel(dma: DmaConfig, lorentzian_phases, point,
                          rx_gain: float, wavelength: float) -> complex:
    """Effective channel of a waveguide-fed metasurface at one point."""
    phases = np.asarray(lorentzian_phases, dtype=float)
    if phases.shape[0] != dma.n_elements:
        raise ValueError("one Lorentzian phase per metamaterial element required")
    link = dma_link_vector(dma, point, rx_gain, wavelength)
    return complex(np.sum(link * lorentzian_weight(phases)))


def superpose(points, positions, normal, pattern: ElementPattern, amplitudes,
              wavelength: float) -> np.ndarray:
    """Kernel-backed coherent field of weighted elements at many points."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    kind = (kernels.PATTERN_ISOTROPIC if pattern.kind == "isotropic"
            else kernels.PATTERN_COSINE_POWER)
    try:
        return kernels.superpose_field(pts, np.asarray(positions, float),
                                       unit(normal), kind,
                                       pattern.boresight_gain,
                                       pattern.exponent,
                                       np.asarray(amplitudes, complex),
                                       wavelength)
    except ValueError as exc:
        raise SingularGeometryError(str(exc)) from exc
