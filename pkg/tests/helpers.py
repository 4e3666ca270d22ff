import warnings

import numpy as np

from fuzzylens import FisEngine, GrayImage


def make_image(arr) -> GrayImage:
    return GrayImage.from_array(np.asarray(arr, dtype=np.uint8))


def quiet_engine(*args, **kwargs) -> FisEngine:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return FisEngine(*args, **kwargs)


def dense_centroid(input_terms, output_terms, rules, out_universe, x, points=1_000_000):
    """Brute-force Mamdani centroid on a dense grid.

    Terms are given as plain callables so this path shares no code with the
    engine under test.
    """
    ys = np.linspace(out_universe[0], out_universe[1], points)
    mu = np.zeros(points)
    for ant, cons in rules:
        level = input_terms[ant](x)
        if level > 0:
            mu = np.maximum(mu, np.minimum(level, output_terms[cons](ys)))
    if mu.sum() == 0:
        return 0.0
    return float(np.sum(ys * mu) / np.sum(mu))


def tri(a, b, c):
    return lambda x: np.interp(x, [a, b, c], [0.0, 1.0, 0.0])


def gauss(c, s):
    return lambda x: np.exp(-0.5 * ((np.asarray(x, dtype=float) - c) / s) ** 2)
