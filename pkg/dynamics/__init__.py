from .systems import PRESETS, OdeSpec, integrate
from .signals import SignalParams, synth_signal

__all__ = ["PRESETS", "OdeSpec", "integrate", "SignalParams", "synth_signal"]
