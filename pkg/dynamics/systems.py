import logging
from typing import Callable, Dict, Literal, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from config import settings
from topology.embedding import TimeSeries
from utils.errors import DivergedTrajectory

logger = logging.getLogger(__name__)

System = Literal["lorenz", "rossler"]

# Classical chaotic parameter sets (textbook values).
PRESETS: Dict[str, Dict[str, float]] = {
    "lorenz": {"sigma": 10.0, "rho": 28.0, "beta": 8.0 / 3.0},
    "rossler": {"a": 0.2, "b": 0.2, "c": 5.7},
}


def lorenz(state: np.ndarray, p: Dict[str, float]) -> np.ndarray:
    x, y, z = state
    return np.array([p["sigma"] * (y - x), x * (p["rho"] - z) - y, x * y - p["beta"] * z])


def rossler(state: np.ndarray, p: Dict[str, float]) -> np.ndarray:
    x, y, z = state
    return np.array([-y - z, x + p["a"] * y, p["b"] + z * (x - p["c"])])


VECTOR_FIELDS: Dict[str, Callable[[np.ndarray, Dict[str, float]], np.ndarray]] = {
    "lorenz": lorenz,
    "rossler": rossler,
}


class OdeSpec(BaseModel):
    """Fixed-step integration request. `n_steps` counts stored states, x0 included."""

    system: System
    params: Dict[str, float] = {}
    x0: Tuple[float, float, float] = (1.0, 1.0, 1.0)
    dt: float = Field(default=settings.dt, gt=0)
    n_steps: int = settings.n_steps
    burn_in: int = Field(default=settings.burn_in, ge=0)
    divergence_bound: float = Field(default=settings.divergence_bound, gt=0)

    @model_validator(mode="after")
    def _check_steps(self):
        if self.n_steps <= self.burn_in:
            raise ValueError(f"n_steps ({self.n_steps}) must exceed burn_in ({self.burn_in})")
        unknown = set(self.params) - set(PRESETS[self.system])
        if unknown:
            raise ValueError(f"Unknown {self.system} parameters: {sorted(unknown)}")
        return self

    @property
    def coefficients(self) -> Dict[str, float]:
        return {**PRESETS[self.system], **self.params}


def rk4_step(f, state: np.ndarray, p: Dict[str, float], dt: float) -> np.ndarray:
    k1 = f(state, p)
    k2 = f(state + 0.5 * dt * k1, p)
    k3 = f(state + 0.5 * dt * k2, p)
    k4 = f(state + dt * k3, p)
    return state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate(spec: OdeSpec) -> Tuple[TimeSeries, TimeSeries, TimeSeries]:
    """Classical RK4 trajectory with the burn-in discarded; returns the x, y, z series."""

    f = VECTOR_FIELDS[spec.system]
    p = spec.coefficients
    trajectory = np.empty((spec.n_steps, 3))
    state = np.asarray(spec.x0, dtype=np.float64)
    trajectory[0] = state

    for step in range(1, spec.n_steps):
        state = rk4_step(f, state, p, spec.dt)
        peak = float(np.max(np.abs(state)))
        if not np.isfinite(peak) or peak > spec.divergence_bound:
            raise DivergedTrajectory(step, peak)
        trajectory[step] = state

    kept = trajectory[spec.burn_in:]
    logger.debug("Integrated %s for %d steps (dt=%g), kept %d", spec.system, spec.n_steps, spec.dt, len(kept))
    return tuple(TimeSeries(kept[:, i].copy(), name) for i, name in enumerate("xyz"))
