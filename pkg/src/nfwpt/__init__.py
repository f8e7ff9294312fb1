"""Near-field RF wireless power transfer simulation.

Energy-beamforming channels for fully digital, RIS-based, and DMA-based
transmitters; incident power density fields around the receiver; ICNIRP
exposure-limit checks; and end-to-end transmitter power consumption.
"""

from .architectures import (DmaBasedEt, FullyDigitalEt, RisBasedEt,
                            build_dma_et, build_ris_et, conjugate_ris_phases,
                            delivered_power, mrt_precoder, quantize_phases,
                            required_transmit_power)
from .channel import (ChannelVector, DmaConfig, array_to_point_channel,
                      cascaded_ris_channel, dma_effective_channel,
                      lorentzian_weight, los_coefficient)
from .emf import (check_compliance, local_energy_density_limit,
                  local_power_density_limit, sliding_window_average,
                  whole_body_power_density_limit)
from .field import (DensityMap, normalized_density, power_density_at,
                    sphere_density_stats)
from .geometry import (SPEED_OF_LIGHT, ArrayGeometry, ElementPattern, Vec3,
                       edge_length_for_threshold, element_gain,
                       fraunhofer_threshold, make_planar_array,
                       wavelength_for_frequency)
from .optimize import (PhaseDomain, PsoParams, brute_force,
                       optimize_architecture, pso_minimize)
from .powermodel import ConsumptionProfile, et_consumed_power
from .scenario import ScenarioConfig, parse_scenario

__version__ = "0.1.0"
