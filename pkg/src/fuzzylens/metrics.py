"""Quality metrics for an (original, enhanced) image pair."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .enhancement import GrayImage

L_MAX = 255.0


@dataclass(frozen=True)
class MetricsReport:
    mean_original: float
    mean_enhanced: float
    mli: float
    mse: float
    psnr_db: float  # math.inf when mse == 0


def mean_intensity(img: GrayImage) -> float:
    # integer sum is exact; one division
    return int(img.data.sum(dtype=np.int64)) / img.size


def _check_same_shape(a: GrayImage, b: GrayImage) -> None:
    if a.shape != b.shape:
        raise ValueError(
            f"image dimensions differ: {a.width}x{a.height} vs {b.width}x{b.height}"
        )


def mse(original: GrayImage, enhanced: GrayImage) -> float:
    _check_same_shape(original, enhanced)
    diff = enhanced.data.astype(np.int64) - original.data.astype(np.int64)
    return int(np.sum(diff * diff)) / original.size


def psnr(mse_value: float, l_max: float = L_MAX) -> float:
    if mse_value < 0:
        raise ValueError(f"mse must be non-negative, got {mse_value!r}")
    if mse_value == 0:
        return math.inf
    return 10.0 * math.log10(l_max * l_max / mse_value)


def mli(original: GrayImage, enhanced: GrayImage) -> float:
    """Ratio of enhanced to original mean intensity."""
    _check_same_shape(original, enhanced)
    base = mean_intensity(original)
    if base <= 0:
        raise ValueError("MLI is undefined for an all-black original (mean intensity 0)")
    return mean_intensity(enhanced) / base


def evaluate(original: GrayImage, enhanced: GrayImage) -> MetricsReport:
    err = mse(original, enhanced)
    return MetricsReport(
        mean_original=mean_intensity(original),
        mean_enhanced=mean_intensity(enhanced),
        mli=mli(original, enhanced),
        mse=err,
        psnr_db=psnr(err),
    )
