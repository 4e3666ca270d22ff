import numpy as np
import pytest
from hypothesis import given
from hypothesis.extra import numpy as hnp

from fuzzylens import (
    Gaussian,
    GrayImage,
    LinguisticVariable,
    Rule,
    Trapezoid,
    apply_lut,
    build_lut,
    equalize,
    fuzzy_enhance,
    histogram,
    infer,
)
from fuzzylens.enhancement import equalization_map, lut_values, round_half_away
from fuzzylens.metrics import mean_intensity, mse
from fuzzylens.synthetic import low_contrast_image

from .helpers import make_image, quiet_engine

IDENTITY = np.arange(256, dtype=np.uint8)

images = hnp.arrays(
    np.uint8,
    hnp.array_shapes(min_dims=2, max_dims=2, min_side=1, max_side=24),
).map(GrayImage.from_array)
luts = hnp.arrays(np.uint8, 256)


def identity_engine():
    """Every consequent is No Change centered at 0."""
    return quiet_engine(
        LinguisticVariable(
            "x", (0, 255), (("lo", Trapezoid(0, 0, 100, 200)), ("hi", Trapezoid(100, 200, 255, 255)))
        ),
        LinguisticVariable("y", (-50, 50), (("No Change", Gaussian(0, 10)),)),
        (Rule("lo", "No Change"), Rule("hi", "No Change")),
    )


# -- GrayImage ---------------------------------------------------------------


def test_image_validation():
    with pytest.raises(ValueError):
        GrayImage(2, 2, np.zeros(3, np.uint8))
    with pytest.raises(ValueError):
        GrayImage(0, 1, np.zeros(0, np.uint8))
    with pytest.raises(ValueError):
        GrayImage(1, 1, np.array([256]))
    with pytest.raises(ValueError):
        GrayImage(1, 1, np.array([-1]))
    img = GrayImage(2, 1, [0, 255])
    assert img.shape == (1, 2)
    assert not img.data.flags.writeable


# -- histogram ---------------------------------------------------------------


def test_histogram_small():
    counts = histogram(GrayImage(2, 2, [0, 0, 255, 128]))
    assert counts[0] == 2 and counts[128] == 1 and counts[255] == 1
    assert counts.sum() == 4 and len(counts) == 256


@pytest.mark.parametrize("v,shape", [(0, (1, 1)), (77, (3, 5)), (255, (10, 2))])
def test_histogram_constant(v, shape):
    counts = histogram(make_image(np.full(shape, v)))
    assert counts[v] == shape[0] * shape[1]
    assert counts.sum() == counts[v]


def test_histogram_random_sum(rng):
    img = make_image(rng.integers(0, 256, (64, 64)))
    counts = histogram(img)
    assert counts.sum() == 4096
    for v in (0, 100, 255):
        assert counts[v] == int(np.count_nonzero(img.data == v))


# -- equalize ----------------------------------------------------------------


@pytest.mark.parametrize("v", [0, 1, 128, 255])
def test_equalize_constant_goes_to_255(v):
    out = equalize(make_image(np.full((3, 4), v)))
    assert (out.data == 255).all()


def test_equalize_four_pixels_half_rounds_up():
    out = equalize(make_image([[10, 10, 200, 200]]))
    assert out.data.tolist() == [[128, 128, 255, 255]]


def test_equalize_full_ramp():
    out = equalize(make_image([np.arange(256)]))
    # round((v + 1) / 256 * 255) by hand, halves upward
    expected = [int((v + 1) * 255 / 256 + 0.5) for v in range(256)]
    assert out.data[0].tolist() == expected
    assert out.data[0, 0] == 1 and out.data[0, 255] == 255


def test_equalize_matches_float_formula(rng):
    img = make_image(rng.integers(40, 90, (17, 23)))
    counts = np.bincount(img.data.ravel(), minlength=256)
    cdf = np.cumsum(counts)
    ref = round_half_away(cdf / img.size * 255).astype(np.uint8)
    assert np.array_equal(equalize(img).data, ref[img.data])


@given(images)
def test_equalize_map_monotone_and_hits_255(img):
    m = equalization_map(img).astype(int)
    assert (np.diff(m) >= 0).all()
    assert m[int(img.data.max())] == 255
    out = equalize(img)
    assert out.shape == img.shape


# -- LUTs --------------------------------------------------------------------


def test_identity_engine_builds_identity_lut():
    assert np.array_equal(build_lut(identity_engine()), IDENTITY)


def test_default_lut_darkens_dark_region(default_engine):
    table = build_lut(default_engine)
    for v in range(30, 60):
        assert infer(default_engine, v) < 0
        assert table[v] < v or table[v] == 0


def test_build_lut_formula(default_engine):
    table = build_lut(default_engine)
    for v in range(256):
        expected = int(min(max(round_half_away(v + infer(default_engine, v)), 0), 255))
        assert table[v] == expected


def test_build_lut_deterministic(default_engine):
    from fuzzylens import default_config

    other = default_config().build_engine()
    assert build_lut(default_engine).tobytes() == build_lut(other).tobytes()


def test_round_half_away():
    assert round_half_away([0.5, 1.5, 2.5, -0.5, -2.5, 2.4999]).tolist() == [1, 2, 3, -1, -3, 2]


def test_apply_identity_lut(rng):
    img = make_image(rng.integers(0, 256, (9, 13)))
    assert apply_lut(img, IDENTITY) == img


def test_apply_zero_lut(rng):
    img = make_image(rng.integers(0, 256, (9, 13)))
    assert not apply_lut(img, np.zeros(256, np.uint8)).data.any()


def test_apply_lut_rejects_bad_tables():
    img = make_image([[1, 2]])
    with pytest.raises(ValueError):
        apply_lut(img, np.arange(255))
    with pytest.raises(ValueError):
        apply_lut(img, np.arange(256) + 1)


@given(images, luts, luts)
def test_apply_lut_composition(img, f, g):
    assert apply_lut(apply_lut(img, f), g) == apply_lut(img, g[f])


@given(images)
def test_identity_lut_preserves_histogram(img):
    assert np.array_equal(histogram(apply_lut(img, IDENTITY)), histogram(img))


@pytest.mark.parametrize("workers", [2, 3, 8, 64])
def test_parallel_apply_lut_bit_identical(rng, workers):
    img = make_image(rng.integers(0, 256, (37, 29)))
    table = rng.integers(0, 256, 256).astype(np.uint8)
    assert apply_lut(img, table, workers=workers) == apply_lut(img, table)


# -- fuzzy_enhance -----------------------------------------------------------


def test_fuzzy_enhance_identity_config(rng):
    img = make_image(rng.integers(0, 256, (8, 8)))
    assert fuzzy_enhance(img, identity_engine()) == img


def test_fuzzy_enhance_accepts_app_config(rng):
    from fuzzylens import default_config

    cfg = default_config()
    img = make_image(rng.integers(0, 256, (8, 8)))
    assert fuzzy_enhance(img, cfg) == fuzzy_enhance(img, cfg.build_engine())


def test_fuzzy_enhance_darkens_bright_dominant_image(default_engine):
    img = low_contrast_image(7, mean=160, spread=15, size=128)
    in_band = np.mean((img.data >= 120) & (img.data <= 200))
    assert in_band > 0.95
    out = fuzzy_enhance(img, default_engine)
    assert mean_intensity(out) < mean_intensity(img)
    assert mse(img, out) < mse(img, equalize(img))


def test_fuzzy_enhance_conserves_mass(default_engine, rng):
    img = make_image(rng.integers(0, 256, (31, 7)))
    assert histogram(fuzzy_enhance(img, default_engine)).sum() == img.size


def test_fuzzy_enhance_matches_per_pixel_inference(default_engine, rng):
    for _ in range(10):
        img = make_image(rng.integers(0, 256, (4, 4)))
        direct = [
            int(np.clip(round_half_away(v + infer(default_engine, int(v))), 0, 255))
            for v in img.data.ravel()
        ]
        assert fuzzy_enhance(img, default_engine).data.ravel().tolist() == direct


def test_lut_values_are_pre_rounding(default_engine):
    vals = lut_values(default_engine)
    assert vals.shape == (256,)
    assert vals[42] == pytest.approx(42 + infer(default_engine, 42))
