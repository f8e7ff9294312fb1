"""Flat key-value scenario files describing an experiment sweep.

Format: one ``key = value`` pair per line, ``#`` comments, blank lines
ignored. Lists are comma separated. Unknown keys are rejected with the
offending line number.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from .errors import ScenarioError

EXPERIMENTS = ("fig2", "fig4", "custom")
FORMATS = ("csv", "json")

FIG2_DEFAULT_FREQS = (3.0, 10.0, 30.0)
FIG2_DEFAULT_DPRIME = (2.0, 8.0, 15.0)
FIG2_DEFAULT_RADII = (0.005, 0.01, 0.02, 0.04, 0.08, 0.16, 0.32)
FIG4_DEFAULT_RADII = (0.15,)
FIG4_FREQ_START, FIG4_FREQ_STOP, FIG4_FREQ_STEP = 2.0, 30.0, 0.5


def fig4_default_freqs() -> tuple[float, ...]:
    n = int(round((FIG4_FREQ_STOP - FIG4_FREQ_START) / FIG4_FREQ_STEP)) + 1
    return tuple(FIG4_FREQ_START + i * FIG4_FREQ_STEP for i in range(n))


@dataclass
class ScenarioConfig:
    """A fully resolved experiment description."""

    experiment: str
    frequencies_ghz: tuple[float, ...] = ()
    d_prime_m: tuple[float, ...] = FIG2_DEFAULT_DPRIME
    edge_length_m: float = 0.5
    er_distance_m: float = 0.0  # resolved per experiment
    target_delivered_w: float = 1.0
    radii_m: tuple[float, ...] = ()
    architectures: tuple[tuple[str, int | None], ...] = (
        ("ris", None), ("ris", 2), ("dma", None))
    array_rows: int = 10
    array_cols: int = 10
    element_gain_db: float = 13.0
    feeder_gain_db: float = 3.0
    ris_element_gain_db: float = 7.0
    dma_element_gain_db: float = 13.0
    rx_gain_db: float = 0.0
    hpa_efficiency: float = 0.35
    control_board_w: float = 1.0
    per_element_drive_w: float = 0.005
    dma_control_board_w: float | None = None
    dma_per_element_drive_w: float | None = None
    pso_swarm_size: int = 50
    pso_iterations: int = 200
    pso_inertia: float = 0.7298
    pso_cognitive: float = 1.49618
    pso_social: float = 1.49618
    sphere_samples: int = 10_000
    seed: int = 0
    output: str | None = None
    format: str = "csv"


def _parse_float(key, text, line):
    try:
        return float(text)
    except ValueError:
        raise ScenarioError(f"{key}: not a number: {text!r}", line) from None


def _parse_int(key, text, line):
    try:
        return int(text)
    except ValueError:
        raise ScenarioError(f"{key}: not an integer: {text!r}", line) from None


def _parse_float_list(key, text, line):
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise ScenarioError(f"{key}: empty list", line)
    return tuple(_parse_float(key, t, line) for t in items)


def _parse_architectures(text, line):
    out = []
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        name, _, bits = token.partition(":")
        if name not in ("ris", "dma"):
            raise ScenarioError(f"architectures: unknown kind {name!r}", line)
        if bits in ("", "inf"):
            out.append((name, None))
        else:
            b = _parse_int("architectures", bits, line)
            if b < 1:
                raise ScenarioError("architectures: bits must be >= 1", line)
            out.append((name, b))
    if not out:
        raise ScenarioError("architectures: empty list", line)
    return tuple(out)


_LIST_KEYS = {"frequencies_ghz", "d_prime_m", "radii_m"}
_INT_KEYS = {"array_rows", "array_cols", "pso_swarm_size", "pso_iterations",
             "sphere_samples", "seed"}
_STR_KEYS = {"experiment", "output", "format"}
_OPTIONAL_FLOAT_KEYS = {"dma_control_board_w", "dma_per_element_drive_w"}
_FIELD_NAMES = {f.name for f in fields(ScenarioConfig)}


def parse_scenario(text: str) -> ScenarioConfig:
    """Parse and validate scenario text, filling experiment defaults."""
    raw: dict[str, object] = {}
    lines_seen: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ScenarioError(f"expected 'key = value', got {body!r}", lineno)
        key, _, value = body.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _FIELD_NAMES:
            raise ScenarioError(f"unknown key {key!r}", lineno)
        if key in raw:
            raise ScenarioError(f"duplicate key {key!r}", lineno)
        lines_seen[key] = lineno
        if key == "architectures":
            raw[key] = _parse_architectures(value, lineno)
        elif key in _LIST_KEYS:
            raw[key] = _parse_float_list(key, value, lineno)
        elif key in _INT_KEYS:
            raw[key] = _parse_int(key, value, lineno)
        elif key in _STR_KEYS:
            raw[key] = value
        elif key in _OPTIONAL_FLOAT_KEYS:
            raw[key] = None if value == "default" else _parse_float(key, value,
                                                                    lineno)
        else:
            raw[key] = _parse_float(key, value, lineno)

    if "experiment" not in raw:
        raise ScenarioError("missing experiment")
    experiment = raw["experiment"]
    if experiment not in EXPERIMENTS:
        raise ScenarioError(f"experiment: must be one of {EXPERIMENTS}",
                            lines_seen.get("experiment"))

    defaults = {"er_distance_m": 8.0 if experiment == "fig2" else 3.0,
                "frequencies_ghz": (FIG2_DEFAULT_FREQS if experiment == "fig2"
                                    else fig4_default_freqs()),
                "radii_m": (FIG2_DEFAULT_RADII if experiment == "fig2"
                            else FIG4_DEFAULT_RADII)}
    for key, value in defaults.items():
        raw.setdefault(key, value)

    config = ScenarioConfig(**raw)  # type: ignore[arg-type]
    _validate(config, lines_seen)
    return config


def _require_positive(name, values, line):
    seq = values if isinstance(values, tuple) else (values,)
    if any(v <= 0 for v in seq):
        raise ScenarioError(f"{name}: values must be positive", line)


def _validate(config: ScenarioConfig, lines: dict[str, int]) -> None:
    ln = lines.get
    _require_positive("frequencies_ghz", config.frequencies_ghz,
                      ln("frequencies_ghz"))
    if any(not 2.0 <= f <= 300.0 for f in config.frequencies_ghz):
        raise ScenarioError("frequencies_ghz: compliance checks cover only "
                            "2-300 GHz", ln("frequencies_ghz"))
    _require_positive("d_prime_m", config.d_prime_m, ln("d_prime_m"))
    _require_positive("edge_length_m", config.edge_length_m,
                      ln("edge_length_m"))
    _require_positive("er_distance_m", config.er_distance_m,
                      ln("er_distance_m"))
    _require_positive("target_delivered_w", config.target_delivered_w,
                      ln("target_delivered_w"))
    _require_positive("radii_m", config.radii_m, ln("radii_m"))
    if config.array_rows < 1 or config.array_cols < 1:
        raise ScenarioError("array_rows/array_cols: must be >= 1",
                            ln("array_rows") or ln("array_cols"))
    if config.sphere_samples < 100:
        raise ScenarioError("sphere_samples: need at least 100",
                            ln("sphere_samples"))
    if not 0.0 < config.hpa_efficiency <= 1.0:
        raise ScenarioError("hpa_efficiency: must be in (0, 1]",
                            ln("hpa_efficiency"))
    if config.format not in FORMATS:
        raise ScenarioError(f"format: must be one of {FORMATS}", ln("format"))
    if config.pso_swarm_size < 2 or config.pso_iterations < 1:
        raise ScenarioError("pso_swarm_size >= 2 and pso_iterations >= 1 "
                            "required", ln("pso_swarm_size"))
