"""Waveform containers, framing, windowing and pre-emphasis.

Everything here is immutable after construction and free of shared state,
so all operations can be called concurrently.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DataError, ParameterError, TooShortError


class SignalKind(enum.Enum):
    AUDIO = "audio"
    EGG = "egg"
    GLOTTAL_FLOW = "glottal_flow"


class WindowKind(enum.Enum):
    HAMMING = "hamming"
    RECTANGULAR = "rectangular"


@dataclass(frozen=True)
class Waveform:
    """Uniformly sampled 1-D signal.

    Samples are dimensionless amplitudes, nominally in [-1, 1] after
    ingestion from PCM.
    """

    samples: np.ndarray
    sample_rate_hz: float
    kind: SignalKind = SignalKind.AUDIO

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        if self.sample_rate_hz <= 0:
            raise ParameterError(f"sample rate must be positive, got {self.sample_rate_hz}")
        if samples.ndim != 1:
            raise DataError(f"waveform must be 1-D, got shape {samples.shape}")

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def duration_s(self) -> float:
        return len(self.samples) / self.sample_rate_hz


@dataclass(frozen=True)
class FramePlan:
    """Frame length and shift in seconds (20 ms / 10 ms by default)."""

    frame_len_s: float = 0.020
    shift_s: float = 0.010

    def __post_init__(self):
        if not (0 < self.shift_s <= self.frame_len_s):
            raise ParameterError(
                f"need 0 < shift ({self.shift_s}) <= frame length ({self.frame_len_s})"
            )

    def frame_len_samples(self, sample_rate_hz: float) -> int:
        return int(round(self.frame_len_s * sample_rate_hz))

    def shift_samples(self, sample_rate_hz: float) -> int:
        return int(round(self.shift_s * sample_rate_hz))


@dataclass(frozen=True)
class Frame:
    start_sample: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)


def frame_starts(w: Waveform, plan: FramePlan) -> np.ndarray:
    """Start indices of all full frames; raises if not even one fits."""
    n = len(w.samples)
    frame_len = plan.frame_len_samples(w.sample_rate_hz)
    shift = plan.shift_samples(w.sample_rate_hz)
    if n < frame_len:
        raise TooShortError(
            f"signal of {n} samples is shorter than one {frame_len}-sample frame",
            min_samples=frame_len,
        )
    count = (n - frame_len) // shift + 1
    starts = np.round(np.arange(count) * plan.shift_s * w.sample_rate_hz).astype(np.int64)
    # rounding of non-integer shifts may push the last start past the end
    return starts[starts + frame_len <= n]


def frame_matrix(w: Waveform, plan: FramePlan) -> np.ndarray:
    """All full frames stacked as a (num_frames, frame_len) matrix.

    The trailing partial frame is dropped so every row is comparable.
    """
    starts = frame_starts(w, plan)
    frame_len = plan.frame_len_samples(w.sample_rate_hz)
    idx = starts[:, None] + np.arange(frame_len)[None, :]
    return w.samples[idx]


def frame_signal(w: Waveform, plan: FramePlan) -> list[Frame]:
    """Slice a waveform into overlapping frames (trailing remainder dropped)."""
    starts = frame_starts(w, plan)
    mat = frame_matrix(w, plan)
    return [Frame(int(s), row) for s, row in zip(starts, mat)]


def window_values(kind: WindowKind, length: int) -> np.ndarray:
    if kind is WindowKind.RECTANGULAR:
        return np.ones(length)
    if kind is WindowKind.HAMMING:
        if length == 1:
            return np.ones(1)
        n = np.arange(length)
        return 0.54 - 0.46 * np.cos(2.0 * np.pi * n / (length - 1))
    raise ParameterError(f"unknown window kind {kind!r}")


def apply_window(f: Frame, window: WindowKind) -> Frame:
    """Multiply a frame by the given window; rectangular is the identity."""
    if window is WindowKind.RECTANGULAR:
        return f
    return Frame(f.start_sample, f.values * window_values(window, len(f.values)))


def pre_emphasize(w: Waveform, alpha: float = 0.97) -> Waveform:
    """First-difference high-pass y[n] = x[n] - alpha * x[n-1], y[0] = x[0]."""
    if not (0.0 <= alpha < 1.0):
        raise ParameterError(f"pre-emphasis alpha must be in [0, 1), got {alpha}")
    x = w.samples
    y = np.empty_like(x)
    y[0] = x[0]
    y[1:] = x[1:] - alpha * x[:-1]
    return Waveform(y, w.sample_rate_hz, w.kind)
