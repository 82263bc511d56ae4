"""Utterance-level statistical functionals over per-frame contours.

Twelve statistics map each descriptor contour to one number; applied to a
32-column descriptor matrix they yield the 384-dimensional per-utterance
vector used for the audio and excitation modalities.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DataError, DimensionError, InternalError
from .signal_core import SignalKind

FUNCTIONAL_NAMES = (
    "mean",
    "std",
    "kurtosis",
    "skewness",
    "min",
    "max",
    "relpos_min",
    "relpos_max",
    "range",
    "regr_offset",
    "regr_slope",
    "regr_mse",
)

NUM_FUNCTIONALS = len(FUNCTIONAL_NAMES)


class Modality(enum.Enum):
    SPEECH = "speech"
    EXCITATION = "excitation"
    ARTICULATORY = "articulatory"
    EXCITATION_ESTIMATED = "excitation_estimated"
    ARTICULATORY_ESTIMATED = "articulatory_estimated"


#: Required vector length per single modality.
MODALITY_DIMS = {
    Modality.SPEECH: 384,
    Modality.EXCITATION: 384,
    Modality.EXCITATION_ESTIMATED: 384,
    Modality.ARTICULATORY: 197,
    Modality.ARTICULATORY_ESTIMATED: 197,
}

_KIND_TO_MODALITY = {
    SignalKind.AUDIO: Modality.SPEECH,
    SignalKind.EGG: Modality.EXCITATION,
    SignalKind.GLOTTAL_FLOW: Modality.EXCITATION_ESTIMATED,
}


@dataclass(frozen=True)
class FeatureVector:
    """Fixed-length per-utterance feature vector.

    ``modalities`` is a tuple so that fused (concatenated) vectors can carry
    every source modality; single-modality vectors must match the documented
    dimension table.
    """

    values: np.ndarray
    modalities: tuple[Modality, ...]
    names: tuple[str, ...]
    utterance_id: str | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if values.ndim != 1:
            raise DimensionError(f"feature vector must be 1-D, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise DataError("feature vector contains NaN or Inf")
        if len(self.names) != len(values):
            raise DimensionError(
                f"{len(self.names)} names for {len(values)} values"
            )
        if len(set(self.names)) != len(self.names):
            raise InternalError("duplicate feature names")
        if len(self.modalities) == 1:
            want = MODALITY_DIMS[self.modalities[0]]
            if len(values) != want:
                raise DimensionError(
                    f"{self.modalities[0].value} vector must have dim {want}, got {len(values)}"
                )

    @property
    def dim(self) -> int:
        return len(self.values)


def modality_for_kind(kind: SignalKind) -> Modality:
    return _KIND_TO_MODALITY[kind]


def functionals_matrix(columns: np.ndarray) -> np.ndarray:
    """Apply the 12 functionals to every column of a (T, C) matrix.

    Returns a (C, 12) matrix, rows in column order, statistics in
    FUNCTIONAL_NAMES order. Population moments throughout; skewness and
    kurtosis (excess) of a constant column are 0 by convention; relative
    positions use the first occurrence and are 0 for single-row input.
    """
    cols = np.asarray(columns, dtype=np.float64)
    if cols.ndim != 2:
        raise DimensionError(f"expected 2-D matrix, got shape {cols.shape}")
    T, C = cols.shape
    if T < 1:
        raise DataError("empty contour")

    mean = cols.mean(axis=0)
    centered = cols - mean
    m2 = np.mean(centered**2, axis=0)
    m3 = np.mean(centered**3, axis=0)
    m4 = np.mean(centered**4, axis=0)
    std = np.sqrt(m2)
    nonconst = m2 > 0.0
    skew = np.zeros(C)
    kurt = np.zeros(C)
    np.divide(m3, m2**1.5, out=skew, where=nonconst)
    np.divide(m4, m2**2, out=kurt, where=nonconst)
    kurt[nonconst] -= 3.0

    vmin = cols.min(axis=0)
    vmax = cols.max(axis=0)
    if T == 1:
        relpos_min = np.zeros(C)
        relpos_max = np.zeros(C)
        offset = cols[0].copy()
        slope = np.zeros(C)
        mse = np.zeros(C)
    else:
        relpos_min = np.argmin(cols, axis=0) / (T - 1)
        relpos_max = np.argmax(cols, axis=0) / (T - 1)
        x = np.arange(T, dtype=np.float64)
        xc = x - x.mean()
        sxx = np.sum(xc**2)
        slope = (xc @ centered) / sxx
        offset = mean - slope * x.mean()
        resid = cols - (offset[None, :] + slope[None, :] * x[:, None])
        mse = np.mean(resid**2, axis=0)

    out = np.stack(
        [mean, std, kurt, skew, vmin, vmax, relpos_min, relpos_max,
         vmax - vmin, offset, slope, mse],
        axis=1,
    )
    return out


def apply_functionals(contour: np.ndarray) -> np.ndarray:
    """The 12 functionals of a single contour, in FUNCTIONAL_NAMES order."""
    contour = np.asarray(contour, dtype=np.float64)
    if contour.ndim != 1 or len(contour) == 0:
        raise DataError("contour must be a non-empty 1-D vector")
    return functionals_matrix(contour[:, None])[0]


def is09_vector(m, utterance_id: str | None = None) -> FeatureVector:
    """384-dim utterance vector: 12 functionals per descriptor column.

    Expects the 32-column (base + delta) descriptor matrix; values are laid
    out descriptor-major (all 12 functionals of column 0, then column 1, ...).
    """
    values = m.values
    if values.shape[1] != 32:
        raise DimensionError(
            f"expected 32 descriptor columns (base + delta), got {values.shape[1]}"
        )
    stats = functionals_matrix(values)
    names = tuple(
        f"{desc}_{func}"
        for desc in m.descriptor_names
        for func in FUNCTIONAL_NAMES
    )
    modality = modality_for_kind(m.source_kind)
    return FeatureVector(stats.ravel(), (modality,), names, utterance_id)
