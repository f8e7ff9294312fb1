"""Planar antenna/element arrays and element radiation patterns."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

SPEED_OF_LIGHT = 2.99792458e8
"""Speed of light in m/s."""

# Guard for floor() on counts like 5L/lambda where float round-off can land
# an exact integer a few ulp low.
_FLOOR_GUARD = 1e-9


def wavelength_for_frequency(frequency_hz: float) -> float:
    """Free-space wavelength in meters for a frequency in Hz."""
    if frequency_hz <= 0:
        raise ValueError("frequency must be positive")
    return SPEED_OF_LIGHT / frequency_hz


def db_to_linear(gain_db: float) -> float:
    return 10.0 ** (gain_db / 10.0)


@dataclass(frozen=True)
class Vec3:
    """A point or direction in 3-space, meters."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise ValueError("Vec3 components must be finite")

    def to_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    @staticmethod
    def from_array(a) -> "Vec3":
        a = np.asarray(a, dtype=float)
        return Vec3(float(a[0]), float(a[1]), float(a[2]))


def as_point(p) -> np.ndarray:
    """Coerce a Vec3 or length-3 array-like into a float ndarray."""
    if isinstance(p, Vec3):
        return p.to_array()
    a = np.asarray(p, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("point components must be finite")
    return a


def unit(v) -> np.ndarray:
    """Normalize a 3-vector; rejects the zero vector."""
    a = as_point(v)
    n = float(np.linalg.norm(a))
    if n == 0.0:
        raise ValueError("cannot normalize a zero vector")
    return a / n


@dataclass(frozen=True)
class ElementPattern:
    """Radiation power pattern of a single element.

    ``cosine_power`` patterns follow G(theta) = g0 * cos(theta)^exponent on
    the front hemisphere and 0 behind, with exponent = g0/2 - 1 so the
    pattern integrates to 4*pi over the front hemisphere (the element
    redistributes, never creates, radiated power).
    """

    kind: str  # "isotropic" | "cosine_power"
    boresight_gain: float = 1.0
    exponent: float = field(default=0.0)

    def __post_init__(self):
        if self.kind not in ("isotropic", "cosine_power"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "isotropic" and self.boresight_gain != 1.0:
            raise ValueError("isotropic pattern has boresight_gain 1")
        if self.kind == "cosine_power" and self.boresight_gain < 1.0:
            raise ValueError("cosine_power boresight gain must be >= 1")

    @staticmethod
    def isotropic() -> "ElementPattern":
        return ElementPattern("isotropic", 1.0, 0.0)

    @staticmethod
    def cosine_power(boresight_gain: float) -> "ElementPattern":
        g0 = float(boresight_gain)
        return ElementPattern("cosine_power", g0, g0 / 2.0 - 1.0)

    @staticmethod
    def cosine_power_db(boresight_gain_db: float) -> "ElementPattern":
        return ElementPattern.cosine_power(db_to_linear(boresight_gain_db))


def element_gain(pattern: ElementPattern, direction_cosine: float) -> float:
    """Linear power gain toward a direction at angle theta off boresight.

    ``direction_cosine`` is cos(theta), in [-1, 1].
    """
    c = float(direction_cosine)
    if not -1.0 <= c <= 1.0 + 1e-12:
        raise ValueError("direction cosine must lie in [-1, 1]")
    if pattern.kind == "isotropic":
        return 1.0
    if c <= 0.0:
        return 0.0
    return pattern.boresight_gain * min(c, 1.0) ** pattern.exponent


def element_gain_array(pattern: ElementPattern, direction_cosines) -> np.ndarray:
    """Vectorized :func:`element_gain` over an array of cos(theta) values."""
    c = np.asarray(direction_cosines, dtype=float)
    if pattern.kind == "isotropic":
        return np.ones_like(c)
    out = np.zeros_like(c)
    front = c > 0.0  # hard hemisphere cutoff, even for exponents <= 0
    out[front] = (pattern.boresight_gain
                  * np.minimum(c[front], 1.0) ** pattern.exponent)
    return out


@dataclass(frozen=True)
class ArrayGeometry:
    """A planar grid of identical radiating elements sharing one normal.

    ``positions`` has shape (rows*cols, 3); elements are listed row-major
    on a regular grid centered at ``center``.
    """

    positions: np.ndarray
    normal: np.ndarray
    pattern: ElementPattern
    edge_length: float
    rows: int
    cols: int
    spacing: float

    @property
    def n_elements(self) -> int:
        return self.positions.shape[0]

    @property
    def center(self) -> np.ndarray:
        return self.positions.mean(axis=0)

    @property
    def elements(self):
        """Iterate (position, normal, pattern) per spec'd element list."""
        for p in self.positions:
            yield p, self.normal, self.pattern


def _grid_basis(normal: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Deterministic in-plane axes orthogonal to the array normal; a +z
    # normal yields u = +x, v = +y.
    helper = np.array([0.0, 1.0, 0.0])
    if abs(normal @ helper) > 0.9:
        helper = np.array([0.0, 0.0, 1.0])
    u = np.cross(helper, normal)
    u /= np.linalg.norm(u)
    v = np.cross(normal, u)
    return u, v


def grid_positions(rows: int, cols: int, pitch_row: float, pitch_col: float,
                   center, normal) -> np.ndarray:
    """Row-major positions of a rows x cols grid centered at ``center``."""
    c = as_point(center)
    n = unit(normal)
    u, v = _grid_basis(n)
    i = (np.arange(cols) - (cols - 1) / 2.0) * pitch_col
    j = (np.arange(rows) - (rows - 1) / 2.0) * pitch_row
    jj, ii = np.meshgrid(j, i, indexing="ij")
    return c + ii.ravel()[:, None] * u + jj.ravel()[:, None] * v


def make_planar_array(rows: int, cols: int, edge_length: float, center,
                      normal, pattern: ElementPattern) -> ArrayGeometry:
    """Build a rows x cols planar array spanning ``edge_length`` per axis.

    A non-unit ``normal`` is normalized. ``edge_length`` is ignored for the
    degenerate 1x1 array.
    """
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be >= 1")
    n = unit(normal)
    if rows == 1 and cols == 1:
        pos = as_point(center)[None, :].copy()
        return ArrayGeometry(pos, n, pattern, 0.0, 1, 1, 0.0)
    if edge_length <= 0:
        raise ValueError("edge_length must be positive for multi-element arrays")
    pitch_col = edge_length / (cols - 1) if cols > 1 else 0.0
    pitch_row = edge_length / (rows - 1) if rows > 1 else 0.0
    pos = grid_positions(rows, cols, pitch_row, pitch_col, center, n)
    spacing = pitch_row if rows > 1 else pitch_col
    return ArrayGeometry(pos, n, pattern, float(edge_length), rows, cols, spacing)


def fraunhofer_threshold(edge_length: float, wavelength: float) -> float:
    """Near/far-field boundary distance L^2 / lambda."""
    if wavelength <= 0:
        raise ValueError("wavelength must be positive")
    return edge_length * edge_length / wavelength


def edge_length_for_threshold(d_prime: float, wavelength: float) -> float:
    """Edge length sqrt(d' * lambda) whose Fraunhofer threshold is d'."""
    if wavelength <= 0:
        raise ValueError("wavelength must be positive")
    if d_prime < 0:
        raise ValueError("threshold distance must be non-negative")
    return math.sqrt(d_prime * wavelength)


def guarded_floor(x: float) -> int:
    """floor(x) tolerating float fuzz just below exact integers."""
    return int(math.floor(x + _FLOOR_GUARD))


def fibonacci_sphere(n_samples: int) -> np.ndarray:
    """Deterministic near-uniform unit-sphere sampling, shape (n, 3).

    Every sample carries equal area weight 4*pi/n.
    """
    if n_samples < 1:
        raise ValueError("need at least one sample")
    i = np.arange(n_samples, dtype=float)
    z = 1.0 - (2.0 * i + 1.0) / n_samples
    phi = math.pi * (3.0 - math.sqrt(5.0)) * i
    r = np.sqrt(np.maximum(1.0 - z * z, 0.0))
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
