"""Fuzzy-logic contrast enhancement for 8-bit grayscale images."""

from .config import AppConfig, ConfigError, default_config, load_config
from .enhancement import (
    GrayImage,
    apply_lut,
    build_lut,
    equalize,
    fuzzy_enhance,
    histogram,
)
from .fuzzy import (
    FisEngine,
    Gaussian,
    LinguisticVariable,
    Rule,
    Trapezoid,
    aggregate,
    defuzzify_centroid,
    fire_rules,
    fuzzify,
    infer,
    mf_eval,
)
from .imageio import ImageFormatError, read_image, write_image
from .metrics import MetricsReport, evaluate, mean_intensity, mli, mse, psnr
from .report import ReportRow, emit_report

__version__ = "0.1.0"

__all__ = [
    "AppConfig",
    "ConfigError",
    "FisEngine",
    "Gaussian",
    "GrayImage",
    "ImageFormatError",
    "LinguisticVariable",
    "MetricsReport",
    "ReportRow",
    "Rule",
    "Trapezoid",
    "aggregate",
    "apply_lut",
    "build_lut",
    "default_config",
    "defuzzify_centroid",
    "emit_report",
    "equalize",
    "evaluate",
    "fire_rules",
    "fuzzify",
    "fuzzy_enhance",
    "histogram",
    "infer",
    "load_config",
    "mean_intensity",
    "mf_eval",
    "mli",
    "mse",
    "psnr",
    "read_image",
    "write_image",
]
