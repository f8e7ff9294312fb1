"""Pure-numpy kernels; the fallback when the compiled core is unavailable.

Point chunks keep the (points x elements) intermediates bounded so large
apertures (tens of thousands of elements) stay within memory.
"""

from __future__ import annotations

import numpy as np

PATTERN_ISOTROPIC = 0
PATTERN_COSINE_POWER = 1

_CHUNK = 128


def superpose_field(points, positions, normal, pattern_kind, boresight_gain,
                    exponent, amplitudes, wavelength):
    """Coherent scalar field sum(a_n * sqrt(G_n) * exp(-j*2*pi*d/lambda) / d).

    Parameters
    ----------
    points : (P, 3) float array of evaluation points
    positions : (N, 3) float array of element positions
    normal : (3,) shared element boresight direction (unit)
    pattern_kind : PATTERN_ISOTROPIC or PATTERN_COSINE_POWER
    boresight_gain, exponent : cosine-power pattern parameters
    amplitudes : (N,) complex per-element amplitudes
    wavelength : carrier wavelength in meters

    Returns
    -------
    (P,) complex field amplitudes. Raises ValueError on a coincident
    point/element pair.
    """
    points = np.ascontiguousarray(points, dtype=float)
    positions = np.ascontiguousarray(positions, dtype=float)
    amplitudes = np.ascontiguousarray(amplitudes, dtype=complex)
    k = 2.0 * np.pi / wavelength
    pos_dot_n = positions @ normal
    pos_sq = np.einsum("ij,ij->i", positions, positions)
    out = np.empty(points.shape[0], dtype=complex)
    for start in range(0, points.shape[0], _CHUNK):
        pts = points[start:start + _CHUNK]
        d_sq = (np.einsum("ij,ij->i", pts, pts)[:, None] + pos_sq[None, :]
                - 2.0 * (pts @ positions.T))
        d = np.sqrt(np.maximum(d_sq, 0.0))
        if np.any(d == 0.0):
            raise ValueError("evaluation point coincides with an element")
        if pattern_kind == PATTERN_ISOTROPIC:
            root_gain = 1.0
        else:
            cos_theta = ((pts @ normal)[:, None] - pos_dot_n[None, :]) / d
            front = cos_theta > 0.0  # cutoff must precede the power for
            np.clip(cos_theta, 1e-300, 1.0, out=cos_theta)  # exponents <= 0
            root_gain = np.sqrt(boresight_gain * cos_theta ** exponent)
            root_gain[~front] = 0.0
        out[start:start + _CHUNK] = np.sum(
            amplitudes[None, :] * root_gain * np.exp(-1j * k * d) / d, axis=1)
    return out


def coherent_gain(offset, coefficients, phases):
    """|offset + sum_n c_n * exp(j*theta_n)|^2 per row of ``phases``.

    ``phases`` has shape (S, N); returns shape (S,).
    """
    coefficients = np.ascontiguousarray(coefficients, dtype=complex)
    phases = np.ascontiguousarray(phases, dtype=float)
    out = np.empty(phases.shape[0], dtype=float)
    chunk = max(1, int(4e6 // max(phases.shape[1], 1)))
    for start in range(0, phases.shape[0], chunk):
        block = phases[start:start + chunk]
        acc = np.exp(1j * block) @ coefficients
        out[start:start + chunk] = np.abs(offset + acc) ** 2
    return out
