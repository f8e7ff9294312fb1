"""Transmitter architectures: fully digital, RIS-fed, and waveguide-fed DMA.

Every architecture can report its tunable element count, its effective
channel to a point, and the per-element complex transmit amplitudes that
the field module turns into incident power density.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .channel import (ChannelVector, DmaConfig, cascade_sum, dma_link_vector,
                      dma_feed_factors, lorentzian_weight,
                      point_channel_coefficients, ris_feed_vector,
                      ris_link_vectors)
from .errors import UnreachableTargetError
from .geometry import (ArrayGeometry, ElementPattern, as_point,
                       grid_positions, guarded_floor, unit)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FullyDigitalEt:
    """One RF chain per element, arbitrary unit-norm precoder."""

    array: ArrayGeometry
    precoder: np.ndarray
    transmit_power: float | None = None

    def __post_init__(self):
        w = np.asarray(self.precoder, dtype=complex)
        if w.shape != (self.array.n_elements,):
            raise ValueError("precoder length must match element count")
        if abs(np.linalg.norm(w) - 1.0) > 1e-9:
            raise ValueError("precoder must have unit norm")
        object.__setattr__(self, "precoder", w)

    @property
    def n_elements(self) -> int:
        return self.array.n_elements

    def describe(self) -> str:
        return f"fully_digital(n={self.n_elements})"

    def with_precoder(self, precoder) -> "FullyDigitalEt":
        return dataclasses.replace(self, precoder=np.asarray(precoder, complex))

    def effective_channel(self, point, rx_gain: float,
                          wavelength: float) -> complex:
        coeff = point_channel_coefficients(self.array.positions,
                                           self.array.normal,
                                           self.array.pattern, point, rx_gain,
                                           wavelength)
        return complex(coeff @ self.precoder)

    def radiators(self, transmit_power: float, wavelength: float):
        amps = math.sqrt(transmit_power) * self.precoder
        return (self.array.positions, self.array.normal, self.array.pattern,
                amps)


@dataclass(frozen=True)
class RisBasedEt:
    """Single feeder illuminating a passive surface of phase shifters."""

    feeder_position: np.ndarray
    feeder_normal: np.ndarray
    feeder_pattern: ElementPattern
    ris: ArrayGeometry
    phases: np.ndarray
    phase_bits: int | None = None  # None means continuous resolution
    transmit_power: float | None = None

    def __post_init__(self):
        phases = np.asarray(self.phases, dtype=float) % TWO_PI
        if phases.shape != (self.ris.n_elements,):
            raise ValueError("one phase per RIS element required")
        if self.phase_bits is not None:
            step = TWO_PI / (1 << self.phase_bits)
            if np.any(np.abs(phases / step - np.round(phases / step)) > 1e-9):
                raise ValueError(
                    f"phases must lie on the {self.phase_bits}-bit grid")
        object.__setattr__(self, "phases", phases)
        object.__setattr__(self, "feeder_position",
                           as_point(self.feeder_position))
        object.__setattr__(self, "feeder_normal", unit(self.feeder_normal))

    @property
    def n_elements(self) -> int:
        return self.ris.n_elements

    def describe(self) -> str:
        bits = "inf" if self.phase_bits is None else str(self.phase_bits)
        return f"ris(n={self.n_elements}, bits={bits})"

    def with_phases(self, phases) -> "RisBasedEt":
        return dataclasses.replace(self, phases=np.asarray(phases, float))

    def link_vectors(self, point, rx_gain: float, wavelength: float):
        return ris_link_vectors(self.feeder_position, self.feeder_normal,
                                self.feeder_pattern, self.ris, point, rx_gain,
                                wavelength)

    def effective_channel(self, point, rx_gain: float,
                          wavelength: float) -> complex:
        f, g = self.link_vectors(point, rx_gain, wavelength)
        return cascade_sum(f, g, self.phases)

    def feed_vector(self, wavelength: float) -> np.ndarray:
        return ris_feed_vector(self.feeder_position, self.feeder_normal,
                               self.feeder_pattern, self.ris, wavelength)

    def radiators(self, transmit_power: float, wavelength: float):
        # Element n re-radiates the feeder wave it captured, phase shifted.
        amps = (math.sqrt(transmit_power) * self.feed_vector(wavelength)
                * np.exp(1j * self.phases))
        return self.ris.positions, self.ris.normal, self.ris.pattern, amps


@dataclass(frozen=True)
class DmaBasedEt:
    """Waveguide-fed metasurface with Lorentzian-constrained weights."""

    dma: DmaConfig
    lorentzian_phases: np.ndarray
    transmit_power: float | None = None

    def __post_init__(self):
        phases = np.asarray(self.lorentzian_phases, dtype=float) % TWO_PI
        if phases.shape != (self.dma.n_elements,):
            raise ValueError("one phase per metamaterial element required")
        object.__setattr__(self, "lorentzian_phases", phases)

    @property
    def n_elements(self) -> int:
        return self.dma.n_elements

    def describe(self) -> str:
        return (f"dma(m={self.dma.waveguide_count}, "
                f"ne={self.dma.elements_per_waveguide})")

    def with_phases(self, phases) -> "DmaBasedEt":
        return dataclasses.replace(self,
                                   lorentzian_phases=np.asarray(phases, float))

    def link_vector(self, point, rx_gain: float, wavelength: float):
        return dma_link_vector(self.dma, point, rx_gain, wavelength)

    def effective_channel(self, point, rx_gain: float,
                          wavelength: float) -> complex:
        link = self.link_vector(point, rx_gain, wavelength)
        return complex(np.sum(link * lorentzian_weight(self.lorentzian_phases)))

    def radiators(self, transmit_power: float, wavelength: float):
        amps = (math.sqrt(transmit_power) * dma_feed_factors(self.dma)
                * lorentzian_weight(self.lorentzian_phases))
        return self.dma.positions, self.dma.normal, self.dma.pattern, amps


EtArchitecture = FullyDigitalEt | RisBasedEt | DmaBasedEt


def build_ris_et(edge_length: float, wavelength: float, feeder_gain: float,
                 ris_element_gain: float, center=(0.0, 0.0, 0.0),
                 normal=(0.0, 0.0, 1.0)) -> RisBasedEt:
    """Square RIS of (floor(5L/lambda)+1)^2 elements at lambda/5 pitch.

    The feeder sits on the surface boresight axis at distance 4L/sqrt(pi),
    aimed at the surface center. Phases start at zero.
    """
    if edge_length <= 0 or wavelength <= 0:
        raise ValueError("edge length and wavelength must be positive")
    side = guarded_floor(5.0 * edge_length / wavelength) + 1
    pitch = wavelength / 5.0
    n = unit(normal)
    positions = grid_positions(side, side, pitch, pitch, center, n)
    ris = ArrayGeometry(positions, n,
                        ElementPattern.cosine_power(ris_element_gain),
                        float(edge_length), side, side, pitch)
    feeder_distance = 4.0 * edge_length / math.sqrt(math.pi)
    feeder_position = as_point(center) + feeder_distance * n
    return RisBasedEt(feeder_position, -n,
                      ElementPattern.cosine_power(feeder_gain), ris,
                      np.zeros(side * side))


def build_dma_et(edge_length: float, wavelength: float, element_gain: float,
                 center=(0.0, 0.0, 0.0), normal=(0.0, 0.0, 1.0),
                 effective_index: float = 1.0) -> DmaBasedEt:
    """DMA of floor(2L/lambda)+1 waveguides, floor(5L/lambda)+1 elements each.

    Waveguides span the L x L aperture; elements sit at lambda/5 pitch along
    each guide, fed from one end. The in-guide wavenumber is
    2*pi*effective_index/lambda (lossless guide).
    """
    if edge_length <= 0 or wavelength <= 0:
        raise ValueError("edge length and wavelength must be positive")
    m = guarded_floor(2.0 * edge_length / wavelength) + 1
    n_e = guarded_floor(5.0 * edge_length / wavelength) + 1
    pitch_guide = wavelength / 5.0
    pitch_stack = edge_length / (m - 1) if m > 1 else 0.0
    n = unit(normal)
    positions = grid_positions(m, n_e, pitch_stack, pitch_guide, center, n)
    along = np.tile(np.arange(n_e) * pitch_guide, m)
    dma = DmaConfig(m, n_e, positions, n,
                    ElementPattern.cosine_power(element_gain), along,
                    TWO_PI * effective_index / wavelength)
    return DmaBasedEt(dma, np.zeros(m * n_e))


def mrt_precoder(h: ChannelVector | np.ndarray) -> np.ndarray:
    """Conjugate-matched unit-norm precoder, the single-receiver optimum."""
    coeff = h.coefficients if isinstance(h, ChannelVector) else np.asarray(h)
    norm = np.linalg.norm(coeff)
    if norm == 0.0:
        raise ValueError("cannot beamform over an all-zero channel")
    return np.conj(coeff) / norm


def conjugate_ris_phases(f, g) -> np.ndarray:
    """Phases -(arg f_n + arg g_n) mod 2*pi, aligning every cascade term."""
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    if f.shape != g.shape:
        raise ValueError("feed and exit vectors must share a length")
    return (-(np.angle(f) + np.angle(g))) % TWO_PI


def quantize_phases(phases, bits: int) -> np.ndarray:
    """Snap phases to the 2^bits grid {2*pi*k/2^bits}, ties toward the
    smaller grid value."""
    if bits < 1:
        raise ValueError("need at least one phase bit")
    phases = np.asarray(phases, dtype=float) % TWO_PI
    levels = 1 << bits
    step = TWO_PI / levels
    k = np.ceil(phases / step - 0.5).astype(int) % levels
    return k * step


def delivered_power(h_eff: complex, transmit_power: float) -> float:
    """RF power reaching the receiver: P_t * |h_eff|^2."""
    if transmit_power < 0:
        raise ValueError("transmit power must be non-negative")
    return transmit_power * abs(h_eff) ** 2


def required_transmit_power(h_eff: complex, target: float) -> float:
    """Transmit power needed so the receiver captures ``target`` watts."""
    if target < 0:
        raise ValueError("target power must be non-negative")
    if target == 0:
        return 0.0
    gain = abs(h_eff) ** 2
    if gain == 0.0:
        raise UnreachableTargetError("zero effective channel, target unreachable")
    return target / gain
