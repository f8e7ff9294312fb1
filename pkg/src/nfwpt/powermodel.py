"""Transmitter power consumption: HPA draw plus static control overhead."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ConsumptionProfile:
    """HPA efficiency and static board/per-element driving powers."""

    hpa_efficiency: float
    control_board_w: float
    per_element_drive_w: float

    def __post_init__(self):
        if not 0.0 < self.hpa_efficiency <= 1.0:
            raise ValueError("HPA efficiency must be in (0, 1]")
        if self.control_board_w < 0 or self.per_element_drive_w < 0:
            raise ValueError("static powers must be non-negative")


# Measured against a surface with a 1 W control board and 5 mW per-element
# driving circuits, fed by a 35%-efficient HPA. The DMA profile mirrors it
# by default; override per scenario.
RIS_PROFILE = ConsumptionProfile(0.35, 1.0, 0.005)
DMA_PROFILE = ConsumptionProfile(0.35, 1.0, 0.005)


def et_consumed_power(transmit_power: float, element_count: int,
                      profile: ConsumptionProfile) -> float:
    """Total wall power: P_t / efficiency + board + drive * elements."""
    if transmit_power < 0:
        raise ValueError("transmit power must be non-negative")
    if element_count < 0:
        raise ValueError("element count must be non-negative")
    return (transmit_power / profile.hpa_efficiency + profile.control_board_w
            + profile.per_element_drive_w * element_count)
