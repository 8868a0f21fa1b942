import numpy as np
import pytest

from tsff.data_io import synthesize_trials
from tsff.errors import ScaleSupportError
from tsff.timefreq import (
    CwtSpec,
    available_backends,
    cwt_scalogram,
    morlet_wavelet,
    render_spectrogram,
    resize_image,
    scalogram_batch,
    spectrogram_batch,
    stitch_channels,
)
from tsff.timefreq._colormap import COLORMAP

from oracles import bilinear_reference, cwt_direct, relative_error

BACKENDS = available_backends()


# ------------------------------------------------------------------ wavelet

def test_morlet_point_values():
    assert morlet_wavelet(0.0) == pytest.approx(1.0)
    assert morlet_wavelet(0.5, beta=2.0) == pytest.approx(0.0, abs=1e-15)
    t = np.linspace(-4, 4, 101)
    assert np.allclose(morlet_wavelet(t, 1.3), morlet_wavelet(-t, 1.3))


def test_morlet_rejects_bad_beta():
    with pytest.raises(ValueError):
        morlet_wavelet(0.0, beta=0.0)


# ---------------------------------------------------------------- scalogram

def test_zero_signal_zero_power():
    power = cwt_scalogram(np.zeros(300), 250.0, CwtSpec.linear(10, 38, 8))
    assert power.shape == (8, 300)
    assert np.all(power == 0.0)


def test_sinusoid_peaks_where_the_integral_oracle_peaks():
    # the L2-normalized transform biases the ridge slightly below the tone,
    # so the expected argmax rows come from the direct-integration oracle
    fs = 250.0
    t = np.arange(700) / fs
    signal = np.sin(2 * np.pi * 10.0 * t)
    spec = CwtSpec.linear(6, 38, 33)
    power = cwt_scalogram(signal, fs, spec)
    oracle = cwt_direct(signal, fs, spec.freqs, spec.beta)
    mid = slice(300, 400)
    ours = np.argmax(power[:, mid], axis=0)
    expected = np.argmax(oracle[:, mid], axis=0)
    # FFT roundoff may break exact ties between adjacent rows
    assert np.max(np.abs(ours - expected)) <= 1
    assert np.median(ours) == np.median(expected)
    ridge = np.median(spec.freqs[ours])
    assert abs(ridge - 10.0) <= 1.0


@pytest.mark.parametrize("backend", BACKENDS)
def test_convolution_matches_direct_integration(backend):
    rng = np.random.default_rng(5)
    signal = rng.standard_normal(256)
    spec = CwtSpec.linear(10, 38, 12)
    power = cwt_scalogram(signal, 250.0, spec, backend=backend)
    oracle = cwt_direct(signal, 250.0, spec.freqs, spec.beta)
    assert np.max(np.abs(power - oracle)) / np.max(np.abs(oracle)) < 1e-6


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernel not built")
    rng = np.random.default_rng(6)
    signals = rng.standard_normal((4, 500))
    spec = CwtSpec.linear(6, 38, 20)
    results = [scalogram_batch(signals, 250.0, spec, backend=b) for b in BACKENDS]
    assert relative_error(results[0], results[1]) < 1e-10


def test_scale_support_error():
    with pytest.raises(ScaleSupportError):
        cwt_scalogram(np.zeros(100), 250.0, CwtSpec.linear(4, 38, 5))


def test_power_scales_quadratically():
    rng = np.random.default_rng(7)
    signal = rng.standard_normal(400)
    spec = CwtSpec.linear(8, 38, 10)
    base = cwt_scalogram(signal, 250.0, spec)
    scaled = cwt_scalogram(3.0 * signal, 250.0, spec)
    assert np.allclose(scaled, 9.0 * base, rtol=1e-10)


def test_spec_validation():
    with pytest.raises(ValueError):
        CwtSpec(freqs=np.array([10.0, 9.0]))
    with pytest.raises(ValueError):
        CwtSpec(freqs=np.array([2.0, 10.0]))  # below the passband
    with pytest.raises(ValueError):
        CwtSpec(beta=-1.0)


# ------------------------------------------------------------------- render

def test_render_constant_power_is_flat():
    image = render_spectrogram(np.ones((10, 20)))
    assert image.shape == (3, 600, 800)
    origin = COLORMAP[0]
    assert np.allclose(image, origin[:, None, None])


def test_render_dims_and_range():
    rng = np.random.default_rng(8)
    image = render_spectrogram(rng.random((69, 1000)))
    assert image.shape == (3, 600, 800)
    assert image.min() >= 0.0 and image.max() <= 1.0


def test_render_maps_extremes_to_ramp_ends():
    power = np.zeros((4, 6))
    power[-1, 0] = 5.0   # max power in the highest-frequency row
    image = render_spectrogram(power, out_h=4, out_w=6)
    # frequency increases upward, so that row renders at the image top
    assert np.allclose(image[:, 0, 0], COLORMAP[-1], atol=1e-12)
    assert np.allclose(image[:, -1, -1], COLORMAP[0], atol=1e-12)


def test_render_rejects_negative_power():
    with pytest.raises(ValueError):
        render_spectrogram(np.array([[-1.0, 0.0]]))


# ------------------------------------------------------------------- stitch

def test_stitch_shapes():
    images = [np.full((3, 600, 800), v) for v in (0.1, 0.2, 0.3)]
    assert stitch_channels(images, "widthwise").shape == (3, 600, 2400)
    assert stitch_channels(images, "lengthwise").shape == (3, 1800, 800)
    assert stitch_channels(images, "depthwise").shape == (9, 600, 800)


def test_stitch_order_and_inverse():
    rng = np.random.default_rng(9)
    images = [rng.random((3, 5, 7)) for _ in range(3)]
    wide = stitch_channels(images, "widthwise")
    for i, original in enumerate(images):
        assert np.array_equal(wide[:, :, 7 * i:7 * (i + 1)], original)


def test_stitch_rejects_mismatched_shapes():
    with pytest.raises(ValueError):
        stitch_channels([np.zeros((3, 4, 4)), np.zeros((3, 4, 5)),
                         np.zeros((3, 4, 4))], "widthwise")
    with pytest.raises(ValueError):
        stitch_channels([np.zeros((3, 4, 4))] * 3, "diagonal")


# ------------------------------------------------------------------- resize

def test_resize_identity():
    rng = np.random.default_rng(10)
    image = rng.random((3, 12, 12))
    assert relative_error(resize_image(image, 12), image) < 1e-12


def test_resize_preserves_constants():
    image = np.full((3, 10, 20), 0.37)
    assert np.allclose(resize_image(image, 7), 0.37)


def test_resize_checkerboard_average():
    checker = np.array([[[0.0, 1.0], [1.0, 0.0]]])
    assert resize_image(checker, 1)[0, 0, 0] == pytest.approx(0.5)


def test_resize_matches_loop_reference():
    rng = np.random.default_rng(11)
    image = rng.random((2, 9, 13))
    ours = resize_image(image, 5)
    reference = bilinear_reference(image, 5, 5)
    assert relative_error(ours, reference) < 1e-12


# ------------------------------------------------------------------ batches

def test_spectrogram_batch_deterministic():
    trials = synthesize_trials(2, 2, n_samples=500, seed=3)
    spec = CwtSpec.linear(8, 38, 16)
    a = spectrogram_batch(trials, spec, size=64)
    b = spectrogram_batch(trials, spec, size=64)
    assert a.dtype == np.float32
    assert a.shape == (4, 3, 64, 64)
    assert np.array_equal(a, b)


def test_spectrogram_batch_depthwise_channels():
    trials = synthesize_trials(1, 2, n_samples=500, seed=4)
    spec = CwtSpec.linear(8, 38, 16)
    images = spectrogram_batch(trials, spec, stitch="depthwise", size=32)
    assert images.shape == (2, 9, 32, 32)
