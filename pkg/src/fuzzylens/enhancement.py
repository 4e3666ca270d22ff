"""Whole-image transforms: histograms, histogram equalization, LUTs."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .fuzzy import FisEngine, infer


@dataclass(frozen=True, eq=False)
class GrayImage:
    """8-bit grayscale image; ``data`` is a read-only (height, width) uint8 array."""

    width: int
    height: int
    data: np.ndarray

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError(f"image size must be positive, got {self.width}x{self.height}")
        arr = np.asarray(self.data)
        if arr.size != self.width * self.height:
            raise ValueError(
                f"expected {self.width * self.height} pixels for "
                f"{self.width}x{self.height}, got {arr.size}"
            )
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("intensities must lie in [0, 255]")
            if np.issubdtype(arr.dtype, np.floating) and not np.all(arr == np.round(arr)):
                raise ValueError("intensities must be integers")
        arr = arr.astype(np.uint8).reshape(self.height, self.width)
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_array(cls, arr) -> "GrayImage":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
        return cls(arr.shape[1], arr.shape[0], arr)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.height, self.width)

    @property
    def size(self) -> int:
        return self.width * self.height

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height})"


def round_half_away(x):
    """Round to nearest integer, halves away from zero (numpy rounds half to even)."""
    x = np.asarray(x, dtype=float)
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def histogram(img: GrayImage) -> np.ndarray:
    """Pixel count per intensity level, length 256."""
    return np.bincount(img.data.ravel(), minlength=256).astype(np.int64)


def equalization_map(img: GrayImage) -> np.ndarray:
    """Intensity map round(cdf(v) / N * 255), built with exact integer arithmetic."""
    cdf = np.cumsum(histogram(img))
    n = img.size
    # floor((2*cdf*255 + n) / (2n)) == round-half-up of cdf*255/n
    return ((2 * 255 * cdf + n) // (2 * n)).astype(np.uint8)


def equalize(img: GrayImage) -> GrayImage:
    return apply_lut(img, equalization_map(img))


def _check_lut(lut) -> np.ndarray:
    table = np.asarray(lut)
    if table.shape != (256,):
        raise ValueError(f"a LUT has exactly 256 entries, got shape {table.shape}")
    if table.dtype != np.uint8:
        if table.min() < 0 or table.max() > 255:
            raise ValueError("LUT entries must lie in [0, 255]")
        table = table.astype(np.uint8)
    return table


def lut_values(engine: FisEngine) -> np.ndarray:
    """Pre-rounding LUT values v + offset(v) for v = 0..255."""
    return np.array([v + infer(engine, v) for v in range(256)], dtype=float)


def build_lut(engine: FisEngine) -> np.ndarray:
    """Compile the engine into a 256-entry uint8 intensity table."""
    table = np.clip(round_half_away(lut_values(engine)), 0, 255).astype(np.uint8)
    table.setflags(write=False)
    return table


def apply_lut(img: GrayImage, lut, workers: int = 1) -> GrayImage:
    """Map every pixel through ``lut``; ``workers > 1`` splits rows across threads."""
    table = _check_lut(lut)
    if workers <= 1 or img.height < 2:
        return GrayImage(img.width, img.height, table[img.data])
    out = np.empty_like(img.data)
    bounds = np.linspace(0, img.height, min(workers, img.height) + 1).astype(int)

    def work(i: int) -> None:
        lo, hi = bounds[i], bounds[i + 1]
        out[lo:hi] = table[img.data[lo:hi]]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(work, range(len(bounds) - 1)))
    return GrayImage(img.width, img.height, out)


def fuzzy_enhance(img: GrayImage, config, workers: int = 1) -> GrayImage:
    """Enhance ``img`` with a FisEngine or anything exposing ``build_engine()``."""
    engine = config if isinstance(config, FisEngine) else config.build_engine()
    return apply_lut(img, build_lut(engine), workers=workers)
