from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, Field

from topology.embedding import TimeSeries

SignalKind = Literal["sine", "noisy_sine", "damped_sine"]


class SignalParams(BaseModel):
    amplitude: float = 1.0
    period: float = Field(default=16.0, gt=0)  # in samples
    phase: float = 0.0
    noise: float = Field(default=0.0, ge=0)
    decay: float = Field(default=0.0, ge=0)  # per sample


def synth_signal(
    kind: SignalKind,
    params: Optional[SignalParams] = None,
    n: int = 256,
    seed: int = 0,
    series_id: str = "x",
) -> TimeSeries:
    """Sampled test signal; deterministic for a fixed seed.

    noisy_sine adds Gaussian noise of standard deviation `noise`, damped_sine
    multiplies by exp(-decay * t). The extra terms vanish when noise or decay is 0.
    """

    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    params = params or SignalParams()

    t = np.arange(n, dtype=np.float64)
    x = params.amplitude * np.sin(2.0 * np.pi * t / params.period + params.phase)

    if kind == "noisy_sine":
        rng = np.random.default_rng(seed)
        x = x + params.noise * rng.standard_normal(n)
    elif kind == "damped_sine":
        x = x * np.exp(-params.decay * t)
    elif kind != "sine":
        raise ValueError(f"Unknown signal kind: {kind}")

    return TimeSeries(x, series_id)
