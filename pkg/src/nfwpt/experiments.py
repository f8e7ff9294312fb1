"""The two reference sweeps and structured result output.

Rows come out in sweep order and all randomness is derived from the
scenario seed, so identical configurations produce byte-identical files.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json

import numpy as np

from . import emf
from .architectures import (FullyDigitalEt, build_dma_et, build_ris_et,
                            delivered_power, mrt_precoder)
from .channel import array_to_point_channel
from .field import sphere_density_stats
from .geometry import (ElementPattern, db_to_linear, edge_length_for_threshold,
                       make_planar_array, wavelength_for_frequency)
from .optimize import PsoParams, optimize_architecture
from .powermodel import ConsumptionProfile, et_consumed_power
from .scenario import ScenarioConfig

FIG2_COLUMNS = ("f_ghz", "d_prime_m", "r_m", "s_max_norm_per_m2",
                "s_mean_norm_per_m2", "s_at_1w_w_per_m2",
                "local_limit_w_per_m2", "compliant")
FIG4_COLUMNS = ("f_ghz", "arch", "bits", "n_elements", "p_tx_w",
                "p_consumed_w", "s_15cm_w_per_m2", "local_limit_w_per_m2",
                "compliant")


def run_fig2(config: ScenarioConfig) -> list[dict]:
    """Density-versus-radius sweep for an MRT-focused fully digital array.

    For each (frequency, near/far threshold) pair the array edge length is
    sized to hit that threshold, the precoder focuses on the receiver, and
    each sphere radius yields normalized max/mean densities plus the local
    compliance verdict at the assumed delivered power.
    """
    rows = []
    pattern = ElementPattern.cosine_power_db(config.element_gain_db)
    rx_gain = db_to_linear(config.rx_gain_db)
    er = np.array([0.0, 0.0, config.er_distance_m])
    for f_ghz in config.frequencies_ghz:
        wavelength = wavelength_for_frequency(f_ghz * 1e9)
        limit = emf.local_power_density_limit(f_ghz)
        for d_prime in config.d_prime_m:
            edge = edge_length_for_threshold(d_prime, wavelength)
            array = make_planar_array(config.array_rows, config.array_cols,
                                      edge, (0.0, 0.0, 0.0), (0.0, 0.0, 1.0),
                                      pattern)
            h = array_to_point_channel(array, er, rx_gain, wavelength)
            arch = FullyDigitalEt(array, mrt_precoder(h))
            p_r = delivered_power(
                arch.effective_channel(er, rx_gain, wavelength), 1.0)
            for radius in config.radii_m:
                s_max, s_mean = sphere_density_stats(
                    arch, 1.0, er, radius, config.sphere_samples, wavelength)
                s_at_target = s_max / p_r * config.target_delivered_w
                rows.append({
                    "f_ghz": f_ghz,
                    "d_prime_m": d_prime,
                    "r_m": radius,
                    "s_max_norm_per_m2": s_max / p_r,
                    "s_mean_norm_per_m2": s_mean / p_r,
                    "s_at_1w_w_per_m2": s_at_target,
                    "local_limit_w_per_m2": limit,
                    "compliant": emf.instantaneous_compliant(
                        s_at_target, f_ghz, "local"),
                })
    return rows


def _cell_seed(base_seed: int, f_index: int, arch_index: int) -> int:
    seq = np.random.SeedSequence(base_seed, spawn_key=(f_index, arch_index))
    return int(seq.generate_state(1, dtype=np.uint64)[0] % (2 ** 63))


def run_fig4(config: ScenarioConfig) -> list[dict]:
    """Consumed power and receiver-adjacent density per architecture.

    Every architecture is built on the same square aperture, its phases are
    optimized for the receiver, and the transmit power is sized in closed
    form to deliver the target. The density column reports the sphere max
    at the first configured radius around the receiver.
    """
    rows = []
    rx_gain = db_to_linear(config.rx_gain_db)
    er = np.array([0.0, 0.0, config.er_distance_m])
    radius = config.radii_m[0]
    ris_profile = ConsumptionProfile(config.hpa_efficiency,
                                     config.control_board_w,
                                     config.per_element_drive_w)
    dma_profile = ConsumptionProfile(
        config.hpa_efficiency,
        config.control_board_w if config.dma_control_board_w is None
        else config.dma_control_board_w,
        config.per_element_drive_w if config.dma_per_element_drive_w is None
        else config.dma_per_element_drive_w)

    for f_index, f_ghz in enumerate(config.frequencies_ghz):
        wavelength = wavelength_for_frequency(f_ghz * 1e9)
        limit = emf.local_power_density_limit(f_ghz)
        for arch_index, (kind, bits) in enumerate(config.architectures):
            if kind == "ris":
                arch = build_ris_et(config.edge_length_m, wavelength,
                                    db_to_linear(config.feeder_gain_db),
                                    db_to_linear(config.ris_element_gain_db))
                if bits is not None:
                    arch = dataclasses.replace(arch, phase_bits=bits)
                profile = ris_profile
            else:
                arch = build_dma_et(config.edge_length_m, wavelength,
                                    db_to_linear(config.dma_element_gain_db))
                profile = dma_profile
            params = PsoParams(swarm_size=config.pso_swarm_size,
                               iterations=config.pso_iterations,
                               inertia=config.pso_inertia,
                               cognitive=config.pso_cognitive,
                               social=config.pso_social,
                               seed=_cell_seed(config.seed, f_index,
                                               arch_index))
            configured, p_tx = optimize_architecture(
                arch, config.target_delivered_w, er, wavelength, params,
                rx_gain=rx_gain)
            consumed = et_consumed_power(p_tx, configured.n_elements, profile)
            s_max, _ = sphere_density_stats(configured, p_tx, er, radius,
                                            config.sphere_samples, wavelength)
            rows.append({
                "f_ghz": f_ghz,
                "arch": kind,
                "bits": "inf" if bits is None else str(bits),
                "n_elements": configured.n_elements,
                "p_tx_w": p_tx,
                "p_consumed_w": consumed,
                "s_15cm_w_per_m2": s_max,
                "local_limit_w_per_m2": limit,
                "compliant": emf.instantaneous_compliant(s_max, f_ghz,
                                                         "local"),
            })
    return rows


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.9e}"
    return str(value)


def render_csv(rows: list[dict], columns=None) -> str:
    if columns is None:
        if not rows:
            raise ValueError("cannot infer a header from an empty table")
        columns = tuple(rows[0].keys())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format_value(row[c]) for c in columns])
    return buf.getvalue()


def render_json(rows: list[dict], columns=None) -> str:
    if columns is None and rows:
        columns = tuple(rows[0].keys())
    out = []
    for row in rows:
        item = {}
        for c in (columns or row.keys()):
            v = row[c]
            if isinstance(v, (float, np.floating)) and not isinstance(v, bool):
                item[c] = float(f"{float(v):.9e}")
            elif isinstance(v, (int, np.integer)) and not isinstance(v, bool):
                item[c] = int(v)
            else:
                item[c] = v
        out.append(item)
    return json.dumps(out, indent=2) + "\n"


def emit_results(rows: list[dict], path: str, fmt: str = "csv",
                 columns=None) -> None:
    """Write rows to ``path`` as CSV or JSON, numbers at nine significant
    digits, in the given (sweep) order."""
    if fmt == "csv":
        text = render_csv(rows, columns)
    elif fmt == "json":
        text = render_json(rows, columns)
    else:
        raise ValueError(f"unknown output format {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
