"""Particle swarm search over phase configurations, with an exhaustive
oracle for small discrete instances.

Particles always move in continuous phase space; for finite-resolution
domains the objective sees positions projected onto the 2^bits grid, which
keeps the swarm dynamics identical across resolutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .architectures import (DmaBasedEt, FullyDigitalEt, RisBasedEt,
                            conjugate_ris_phases, mrt_precoder,
                            quantize_phases, required_transmit_power)
from .channel import array_to_point_channel
from .errors import OptimizationError, UnreachableTargetError

TWO_PI = 2.0 * math.pi
VELOCITY_CLAMP = math.pi  # per dimension per iteration


@dataclass(frozen=True)
class PsoParams:
    """Constriction-style global-best PSO settings."""

    swarm_size: int = 50
    iterations: int = 200
    inertia: float = 0.7298
    cognitive: float = 1.49618
    social: float = 1.49618
    seed: int = 0

    def __post_init__(self):
        if self.swarm_size < 2:
            raise ValueError("swarm needs at least two particles")
        if self.iterations < 1:
            raise ValueError("need at least one iteration")
        if min(self.inertia, self.cognitive, self.social) < 0:
            raise ValueError("PSO coefficients must be non-negative")


@dataclass(frozen=True)
class PhaseDomain:
    """Search space: phase vectors, continuous or on a 2^bits grid."""

    dimension: int
    bits: int | None = None  # None = continuous

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if self.bits is not None and self.bits < 1:
            raise ValueError("bit depth must be >= 1 when discrete")

    def project(self, phases: np.ndarray) -> np.ndarray:
        wrapped = np.asarray(phases, dtype=float) % TWO_PI
        if self.bits is None:
            return wrapped
        return quantize_phases(wrapped, self.bits)


def _evaluate(objective, batch_objective, phases_2d: np.ndarray) -> np.ndarray:
    if batch_objective is not None:
        values = np.asarray(batch_objective(phases_2d), dtype=float)
    else:
        values = np.array([objective(p) for p in phases_2d], dtype=float)
    if not np.all(np.isfinite(values)):
        raise OptimizationError("objective returned a non-finite value")
    return values


def pso_minimize(objective, domain: PhaseDomain, params: PsoParams,
                 seeds=None, batch_objective=None):
    """Global-best PSO over a phase domain.

    Parameters
    ----------
    objective : callable (dimension,) -> float, deterministic
    domain : PhaseDomain
    params : PsoParams; identical seeds give identical runs
    seeds : optional phase vectors injected as initial particles
    batch_objective : optional callable (S, dimension) -> (S,) used instead
        of per-particle calls when evaluating a whole swarm

    Returns
    -------
    (best_phases, best_value, trace) where ``trace`` holds the best value
    after initialization and after each iteration (non-increasing).
    """
    rng = np.random.default_rng(params.seed)
    dim = domain.dimension
    pos = rng.uniform(0.0, TWO_PI, size=(params.swarm_size, dim))
    if seeds is not None:
        seeds = np.atleast_2d(np.asarray(seeds, dtype=float))
        take = min(len(seeds), params.swarm_size)
        pos[:take] = seeds[:take] % TWO_PI
    vel = rng.uniform(-VELOCITY_CLAMP, VELOCITY_CLAMP,
                      size=(params.swarm_size, dim))

    values = _evaluate(objective, batch_objective, domain.project(pos))
    pbest = pos.copy()
    pbest_val = values.copy()
    g = int(np.argmin(pbest_val))
    gbest = pbest[g].copy()
    gbest_val = float(pbest_val[g])
    trace = [gbest_val]

    for _ in range(params.iterations):
        r_cog = rng.random((params.swarm_size, dim))
        r_soc = rng.random((params.swarm_size, dim))
        vel = (params.inertia * vel
               + params.cognitive * r_cog * (pbest - pos)
               + params.social * r_soc * (gbest[None, :] - pos))
        np.clip(vel, -VELOCITY_CLAMP, VELOCITY_CLAMP, out=vel)
        # reflect at the box edges rather than wrap: phase objectives are
        # periodic anyway, and reflection leaves no absorbing boundary state
        pos = pos + vel
        low = pos < 0.0
        pos[low] = -pos[low]
        vel[low] = -vel[low]
        high = pos > TWO_PI
        pos[high] = 2.0 * TWO_PI - pos[high]
        vel[high] = -vel[high]
        values = _evaluate(objective, batch_objective, domain.project(pos))
        improved = values < pbest_val
        pbest[improved] = pos[improved]
        pbest_val[improved] = values[improved]
        g = int(np.argmin(pbest_val))
        if pbest_val[g] < gbest_val:
            gbest = pbest[g].copy()
            gbest_val = float(pbest_val[g])
        trace.append(gbest_val)

    return domain.project(gbest), gbest_val, np.asarray(trace)


def brute_force(objective, domain: PhaseDomain, max_configs: int,
                batch_objective=None):
    """Exhaustive optimum over a discrete phase domain.

    Enumerates configurations in lexicographic order of grid indices with
    strict-improvement updates, so ties resolve to the lexicographically
    smallest configuration.
    """
    if domain.bits is None:
        raise ValueError("exhaustive search needs a discrete domain")
    levels = 1 << domain.bits
    n_configs = levels ** domain.dimension
    if n_configs > max_configs:
        raise ValueError(f"{n_configs} configurations exceed the "
                         f"allowed {max_configs}")
    step = TWO_PI / levels
    grid = np.arange(levels) * step

    best_phases = None
    best_value = math.inf
    chunk = 4096
    # Lexicographic enumeration by integer index, chunked for evaluation.
    powers = levels ** np.arange(domain.dimension - 1, -1, -1, dtype=np.int64)
    for start in range(0, n_configs, chunk):
        idx = np.arange(start, min(start + chunk, n_configs), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % levels
        phases = grid[digits]
        values = _evaluate(objective, batch_objective, phases)
        j = int(np.argmin(values))
        if values[j] < best_value:
            best_value = float(values[j])
            best_phases = phases[j].copy()
    return best_phases, best_value


class GainObjective:
    """Negative coherent power gain |offset + sum c_n e^{j theta_n}|^2.

    Minimizing this maximizes the effective channel magnitude; kernel-backed
    batch evaluation makes swarm sweeps over tens of thousands of elements
    practical.
    """

    def __init__(self, coefficients, offset: complex = 0.0):
        self.coefficients = np.ascontiguousarray(coefficients, dtype=complex)
        self.offset = complex(offset)

    def __call__(self, phases) -> float:
        return float(self.batch(np.atleast_2d(phases))[0])

    def batch(self, phases_2d) -> np.ndarray:
        gains = kernels.coherent_gain(self.offset, self.coefficients,
                                      np.ascontiguousarray(phases_2d,
                                                           dtype=float))
        return -gains


def optimize_architecture(arch, target_delivered: float, point,
                          wavelength: float, params: PsoParams,
                          rx_gain: float = 1.0):
    """Configure an architecture's phases for one receiver and size P_t.

    Returns (configured architecture, transmit power delivering the target).
    Infinite-resolution RIS short-circuits to exact conjugate phases; PSO
    runs otherwise, always seeded with the conjugate-derived configuration
    so the result never falls below it.
    """
    if isinstance(arch, FullyDigitalEt):
        h = array_to_point_channel(arch.array, point, rx_gain, wavelength)
        configured = arch.with_precoder(mrt_precoder(h))
    elif isinstance(arch, RisBasedEt):
        f, g = arch.link_vectors(point, rx_gain, wavelength)
        conj = conjugate_ris_phases(f, g)
        if arch.phase_bits is None:
            configured = arch.with_phases(conj)
        else:
            domain = PhaseDomain(arch.n_elements, arch.phase_bits)
            objective = GainObjective(f * g)
            best, _, _ = pso_minimize(objective, domain, params,
                                      seeds=quantize_phases(conj,
                                                            arch.phase_bits),
                                      batch_objective=objective.batch)
            configured = arch.with_phases(best)
    elif isinstance(arch, DmaBasedEt):
        link = arch.link_vector(point, rx_gain, wavelength)
        # h_eff = offset + (1/2) sum link_l e^{j phi_l}; the j/2 part of the
        # Lorentzian weight is phase-rigid and folds into the offset.
        offset = 0.5j * complex(np.sum(link))
        objective = GainObjective(0.5 * link, offset)
        target_phase = np.angle(offset) if abs(offset) > 0 else 0.0
        seed = (target_phase - np.angle(link)) % TWO_PI
        domain = PhaseDomain(arch.n_elements, None)
        best, _, _ = pso_minimize(objective, domain, params, seeds=seed,
                                  batch_objective=objective.batch)
        configured = arch.with_phases(best)
    else:
        raise TypeError(f"no tunable phases on {type(arch).__name__}")

    h_eff = configured.effective_channel(point, rx_gain, wavelength)
    if abs(h_eff) == 0.0:
        raise UnreachableTargetError("every configuration leaves a zero "
                                     "effective channel")
    return configured, required_transmit_power(h_eff, target_delivered)
