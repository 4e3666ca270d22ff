"""Synthetic low-contrast test images.

The photographs used to motivate this method are not available, so these
stand-ins reproduce their coarse statistics: a bright-ish mean and a
narrow intensity spread.
"""

from __future__ import annotations

import numpy as np

from .enhancement import GrayImage


def low_contrast_image(
    seed: int, mean: float = 150.0, spread: float = 15.0, size: int = 512
) -> GrayImage:
    """Gaussian noise around ``mean`` plus a gentle sinusoidal gradient."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size] / size
    fx, fy = rng.uniform(1, 3, size=2)
    field = rng.normal(mean, spread, (size, size))
    field += 15 * np.sin(2 * np.pi * (fx * xx + fy * yy))
    return GrayImage.from_array(np.clip(np.rint(field), 0, 255).astype(np.uint8))


# (name, mean, spread) loosely matching the three reference photographs
STAND_INS = (
    ("deer", 156.0, 12.0),
    ("lake", 146.0, 18.0),
    ("ship", 136.0, 25.0),
)


def stand_ins(size: int = 512) -> list[tuple[str, GrayImage]]:
    return [
        (name, low_contrast_image(seed, mean, spread, size))
        for seed, (name, mean, spread) in enumerate(STAND_INS)
    ]
