"""Incident power density fields around a receiver.

Density at a point is the coherent superposition of all element
contributions, |sum_n x_n sqrt(G_n) exp(-j*2*pi*d_n/lambda) / d_n|^2 / (4*pi),
so that density times the receiver effective aperture G_r*lambda^2/(4*pi)
equals delivered power exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .architectures import EtArchitecture, delivered_power
from .channel import superpose
from .errors import RadiatorInsideSphereError
from .geometry import as_point, fibonacci_sphere

DEFAULT_SPHERE_SAMPLES = 10_000


@dataclass(frozen=True)
class DensityMap:
    """Incident power density samples for one architecture state."""

    points: np.ndarray
    densities: np.ndarray
    architecture: str
    transmit_power: float

    def __post_init__(self):
        if self.points.shape[0] != self.densities.shape[0]:
            raise ValueError("one density per sample point required")
        if self.points.shape[0] == 0:
            raise ValueError("a density map needs at least one sample")
        if np.any(self.densities < 0):
            raise ValueError("densities are non-negative")

    @property
    def max(self) -> float:
        return float(self.densities.max())

    @property
    def mean(self) -> float:
        return float(self.densities.mean())


def density_at_points(arch: EtArchitecture, transmit_power: float, points,
                      wavelength: float) -> np.ndarray:
    """Incident power density (W/m^2) at each point."""
    positions, normal, pattern, amps = arch.radiators(transmit_power,
                                                      wavelength)
    e = superpose(points, positions, normal, pattern, amps, wavelength)
    return np.abs(e) ** 2 / (4.0 * math.pi)


def power_density_at(arch: EtArchitecture, transmit_power: float, point,
                     wavelength: float) -> float:
    """Incident power density at a single point."""
    return float(density_at_points(arch, transmit_power,
                                   as_point(point)[None, :], wavelength)[0])


def sample_sphere(arch: EtArchitecture, transmit_power: float, center,
                  radius: float, n_samples: int,
                  wavelength: float) -> DensityMap:
    """Density over a Fibonacci-lattice sampling of a sphere.

    The sphere must not touch or contain any radiating element.
    """
    if radius <= 0:
        raise ValueError("sphere radius must be positive")
    if n_samples < 100:
        raise ValueError("need at least 100 sphere samples")
    c = as_point(center)
    positions, _, _, _ = arch.radiators(transmit_power, wavelength)
    closest = float(np.min(np.linalg.norm(positions - c[None, :], axis=1)))
    if closest <= radius:
        raise RadiatorInsideSphereError(
            f"radiating element {closest:.4g} m from sphere center, "
            f"radius {radius:.4g} m")
    points = c[None, :] + radius * fibonacci_sphere(n_samples)
    densities = density_at_points(arch, transmit_power, points, wavelength)
    return DensityMap(points, densities, arch.describe(), transmit_power)


def sphere_density_stats(arch: EtArchitecture, transmit_power: float, center,
                         radius: float, n_samples: int,
                         wavelength: float) -> tuple[float, float]:
    """(max, mean) incident density over the radius-r sphere around center."""
    dmap = sample_sphere(arch, transmit_power, center, radius, n_samples,
                         wavelength)
    return dmap.max, dmap.mean


def normalized_density(arch: EtArchitecture, center, radius: float,
                       n_samples: int, wavelength: float,
                       rx_gain: float = 1.0) -> float:
    """Sphere-max density divided by delivered power, in 1/m^2.

    Invariant under transmit-power scaling; multiply by an assumed delivered
    power to get a comparable W/m^2 figure.
    """
    transmit_power = 1.0
    h_eff = arch.effective_channel(as_point(center), rx_gain, wavelength)
    p_r = delivered_power(h_eff, transmit_power)
    if p_r == 0.0:
        raise ValueError("zero delivered power, nothing to normalize by")
    s_max, _ = sphere_density_stats(arch, transmit_power, center, radius,
                                    n_samples, wavelength)
    return s_max / p_r


def normalized_density_stats(arch: EtArchitecture, center, radius: float,
                             n_samples: int, wavelength: float,
                             rx_gain: float = 1.0) -> tuple[float, float]:
    """(max, mean) sphere density per watt delivered, in 1/m^2."""
    transmit_power = 1.0
    h_eff = arch.effective_channel(as_point(center), rx_gain, wavelength)
    p_r = delivered_power(h_eff, transmit_power)
    if p_r == 0.0:
        raise ValueError("zero delivered power, nothing to normalize by")
    s_max, s_mean = sphere_density_stats(arch, transmit_power, center, radius,
                                         n_samples, wavelength)
    return s_max / p_r, s_mean / p_r


def integrate_sphere_power(arch: EtArchitecture, transmit_power: float,
                           center, radius: float, n_samples: int,
                           wavelength: float) -> float:
    """Total power crossing an enclosing sphere, by equal-area quadrature.

    Unlike :func:`sphere_density_stats` the sphere here is meant to enclose
    the radiators (energy-conservation checks), so no containment test.
    """
    c = as_point(center)
    points = c[None, :] + radius * fibonacci_sphere(n_samples)
    densities = density_at_points(arch, transmit_power, points, wavelength)
    return float(densities.sum() * 4.0 * math.pi * radius * radius / n_samples)
