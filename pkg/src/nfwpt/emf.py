"""ICNIRP general-public exposure limits and compliance evaluation.

Limits cover 2-300 GHz. Incident power density limits apply to sliding
time averages (30 min whole body, 6 min local); incident energy density
bounds local bursts shorter than the 6-minute window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

FREQ_MIN_GHZ = 2.0
FREQ_MAX_GHZ = 300.0
LOCAL_WINDOW_S = 360.0
WHOLE_BODY_WINDOW_S = 1800.0
OCCUPATIONAL_FACTOR = 5.0  # occupational limits are five-fold less stringent

ZONES = ("local", "whole_body")


def _check_frequency(f_ghz: float) -> None:
    if not FREQ_MIN_GHZ <= f_ghz <= FREQ_MAX_GHZ:
        raise ValueError(f"frequency {f_ghz} GHz outside the 2-300 GHz table")


def local_power_density_limit(f_ghz: float) -> float:
    """Local-exposure incident power density limit in W/m^2."""
    _check_frequency(f_ghz)
    if f_ghz <= 6.0:
        return 40.0
    return 55.0 / f_ghz ** 0.177


def whole_body_power_density_limit(f_ghz: float) -> float:
    """Whole-body incident power density limit in W/m^2."""
    _check_frequency(f_ghz)
    return 10.0


def local_energy_density_limit(f_ghz: float, t_minutes: float) -> float:
    """Local incident energy density limit in kJ/m^2 for bursts under 6 min."""
    _check_frequency(f_ghz)
    if t_minutes <= 0:
        raise ValueError("burst duration must be positive")
    if t_minutes >= 6.0:
        raise ValueError("durations of 6 min and above are governed by the "
                         "power density limit")
    shape = 0.05 + 0.95 * math.sqrt(t_minutes / 6.0)
    if f_ghz <= 6.0:
        return 14.4 * shape
    return 19.8 * shape / f_ghz ** 0.177


def power_density_limit(f_ghz: float, zone: str,
                        occupational: bool = False) -> float:
    if zone not in ZONES:
        raise ValueError(f"unknown exposure zone {zone!r}")
    limit = (local_power_density_limit(f_ghz) if zone == "local"
             else whole_body_power_density_limit(f_ghz))
    return limit * OCCUPATIONAL_FACTOR if occupational else limit


def averaging_window_s(zone: str) -> float:
    if zone not in ZONES:
        raise ValueError(f"unknown exposure zone {zone!r}")
    return LOCAL_WINDOW_S if zone == "local" else WHOLE_BODY_WINDOW_S


def _as_series(series) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(series, dtype=float)
    if arr.size == 0:
        return np.empty(0), np.empty(0)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("series must be (time_s, density_w_per_m2) pairs")
    t, s = arr[:, 0], arr[:, 1]
    if np.any(np.diff(t) <= 0):
        raise ValueError("series times must be strictly increasing")
    if np.any(s < 0):
        raise ValueError("densities must be non-negative")
    return t, s


def _zoh_cumulative(t: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Integral of the zero-order-hold series up to each sample time, J/m^2."""
    out = np.zeros_like(t)
    if len(t) > 1:
        out[1:] = np.cumsum(s[:-1] * np.diff(t))
    return out


def _zoh_integral_at(t, s, cum, when: float) -> float:
    # Integral from t[0] to `when`, where t[0] <= when <= t[-1].
    i = int(np.searchsorted(t, when, side="right") - 1)
    return float(cum[i] + s[i] * (when - t[i]))


def sliding_window_average(series, window_s: float) -> list[tuple[float, float]]:
    """Time-weighted density means over (T - window, T] at each sample T.

    The series holds its value between samples (zero-order hold); only
    sample times at least ``window_s`` past the series start produce output.
    """
    if window_s <= 0:
        raise ValueError("window must be positive")
    t, s = _as_series(series)
    if t.size == 0:
        return []
    cum = _zoh_cumulative(t, s)
    out = []
    for i, ti in enumerate(t):
        if ti - t[0] < window_s:
            continue
        energy = cum[i] - _zoh_integral_at(t, s, cum, ti - window_s)
        out.append((float(ti), energy / window_s))
    return out


@dataclass(frozen=True)
class ConstraintVerdict:
    """Outcome of one limit row against a measured quantity."""

    name: str
    limit: float
    measured: float
    window_s: float
    compliant: bool

    @property
    def margin(self) -> float:
        """Relative headroom (limit - measured) / limit; negative when over."""
        return (self.limit - self.measured) / self.limit


@dataclass(frozen=True)
class ExposureReport:
    """Verdicts for every applicable limit row."""

    zone: str
    frequency_ghz: float
    constraints: tuple[ConstraintVerdict, ...]

    @property
    def compliant(self) -> bool:
        return all(c.compliant for c in self.constraints)


def _energy_interval_checks(t, cum, f_ghz, scale):
    """Worst-margin cumulative-energy check over sample-anchored intervals.

    Every interval between sample boundaries shorter than the 6-min window
    must stay under the burst energy limit; under zero-order hold these
    anchored intervals are exact worst cases.
    """
    worst = None
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            dt = t[j] - t[i]
            if dt >= LOCAL_WINDOW_S or dt <= 0:
                continue
            energy_kj = (cum[j] - cum[i]) / 1000.0
            limit = local_energy_density_limit(f_ghz, dt / 60.0) * scale
            candidate = ConstraintVerdict(
                f"local_energy_{dt:.0f}s", limit, energy_kj, dt,
                energy_kj <= limit)
            if worst is None or (candidate.margin < worst.margin):
                worst = candidate
    return worst


def check_compliance(series, f_ghz: float, zone: str,
                     occupational: bool = False) -> ExposureReport:
    """Evaluate a density time series against every applicable limit row.

    ``series`` is a sequence of (time_s, density_w_per_m2) samples, held
    constant between samples. Boundary values count as compliant (<=).
    """
    if zone not in ZONES:
        raise ValueError(f"unknown exposure zone {zone!r}")
    _check_frequency(f_ghz)
    scale = OCCUPATIONAL_FACTOR if occupational else 1.0
    t, s = _as_series(series)
    if t.size == 0:
        raise ValueError("cannot assess an empty series")
    window = averaging_window_s(zone)
    limit = power_density_limit(f_ghz, zone, occupational)
    verdicts: list[ConstraintVerdict] = []

    averages = sliding_window_average(np.column_stack([t, s]), window)
    if averages:
        worst_avg = max(v for _, v in averages)
        verdicts.append(ConstraintVerdict(
            f"{zone}_power_density", limit, worst_avg, window,
            worst_avg <= limit))
    else:
        # Series shorter than the averaging window: bound the eventual
        # window average by assuming silence outside the record.
        avg = _zoh_cumulative(t, s)[-1] / window
        verdicts.append(ConstraintVerdict(
            f"{zone}_power_density_short_series", limit, avg, window,
            avg <= limit))

    if zone == "local" and len(t) >= 2:
        cum = _zoh_cumulative(t, s)
        worst_energy = _energy_interval_checks(t, cum, f_ghz, scale)
        if worst_energy is not None:
            verdicts.append(worst_energy)

    return ExposureReport(zone, f_ghz, tuple(verdicts))


def instantaneous_compliant(density_w_per_m2: float, f_ghz: float,
                            zone: str = "local",
                            occupational: bool = False) -> bool:
    """Compliance of an uninterrupted constant exposure at this density.

    For a constant series every window average equals the instantaneous
    value, so this reduces to a straight limit comparison.
    """
    return density_w_per_m2 <= power_density_limit(f_ghz, zone, occupational)


def limits_table(f_ghz: float, t_minutes: float | None = None,
                 occupational: bool = False) -> list[dict]:
    """Rows of limit values at one frequency, for CLI output."""
    scale = OCCUPATIONAL_FACTOR if occupational else 1.0
    rows = [
        {"metric": "power_density", "zone": "whole_body", "f_ghz": f_ghz,
         "averaging_min": WHOLE_BODY_WINDOW_S / 60.0,
         "limit": whole_body_power_density_limit(f_ghz) * scale,
         "unit": "W/m^2"},
        {"metric": "power_density", "zone": "local", "f_ghz": f_ghz,
         "averaging_min": LOCAL_WINDOW_S / 60.0,
         "limit": local_power_density_limit(f_ghz) * scale,
         "unit": "W/m^2"},
    ]
    if t_minutes is not None:
        rows.append(
            {"metric": "energy_density", "zone": "local", "f_ghz": f_ghz,
             "averaging_min": t_minutes,
             "limit": local_energy_density_limit(f_ghz, t_minutes) * scale,
             "unit": "kJ/m^2"})
    return rows
