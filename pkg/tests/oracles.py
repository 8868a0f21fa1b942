"""Independent reference implementations used to check the package's kernels.

Everything here is deliberately written the slow, literal way (explicit
loops, direct sums) and never calls into the code paths it verifies.
"""

import math

import numpy as np


def dft_response(taps, freqs_hz, fs):
    """H(f) = sum_n taps[n] * exp(-2*pi*i*f*n/fs), one explicit sum per frequency."""
    out = np.empty(len(freqs_hz), dtype=complex)
    for i, f in enumerate(freqs_hz):
        acc = 0.0 + 0.0j
        for n, h in enumerate(taps):
            acc += h * complex(math.cos(2 * math.pi * f * n / fs),
                               -math.sin(2 * math.pi * f * n / fs))
        out[i] = acc
    return out


def windowed_sinc_bandpass(order, f_lo, f_hi, fs):
    """Textbook Blackman-windowed difference-of-sincs bandpass, scaled to
    unity response at the passband center frequency."""
    n_taps = order + 1
    taps = np.empty(n_taps)
    for n in range(n_taps):
        m = n - order / 2
        if m == 0:
            ideal = 2 * (f_hi - f_lo) / fs
        else:
            ideal = (math.sin(2 * math.pi * f_hi * m / fs)
                     - math.sin(2 * math.pi * f_lo * m / fs)) / (math.pi * m)
        x = 2 * math.pi * n / (n_taps - 1)
        window = 0.42 - 0.5 * math.cos(x) + 0.08 * math.cos(2 * x)
        taps[n] = ideal * window
    fc = (f_lo + f_hi) / 2
    gain = sum(taps[n] * math.cos(2 * math.pi * fc * (n - order / 2) / fs)
               for n in range(n_taps))
    return taps / gain


def cwt_direct(signal, fs, freqs, beta, center_freq=0.5):
    """Per-(scale, shift) numerical integration of the CWT over the whole
    signal support; returns squared coefficients."""
    n = len(signal)
    t = np.arange(n, dtype=float)
    power = np.empty((len(freqs), n))
    for k, f in enumerate(freqs):
        a = center_freq * fs / f
        for b in range(n):
            u = (t - b) / a
            psi = np.exp(-0.5 * (beta * u) ** 2) * np.cos(np.pi * u)
            coef = float(signal @ psi) / math.sqrt(a)
            power[k, b] = coef * coef
    return power


def channel_attention_loops(x, attention):
    """Quadruple-loop contraction out[n,h,c,t] = sum_d x[n,d,c,t]*att[h,d,c]."""
    n_batch, d_in, n_ch, n_t = x.shape
    d_out = attention.shape[0]
    out = np.zeros((n_batch, d_out, n_ch, n_t))
    for n in range(n_batch):
        for h in range(d_out):
            for c in range(n_ch):
                for t in range(n_t):
                    for d in range(d_in):
                        out[n, h, c, t] += x[n, d, c, t] * attention[h, d, c]
    return out


def mmd_double_loop(s, f, multipliers):
    """Biased multi-kernel Gaussian MMD^2 with explicit kernel-matrix loops.

    Bandwidths = median of squared distances over all distinct pairs of the
    stacked sample, times each multiplier.
    """
    s = np.asarray(s, dtype=float)
    f = np.asarray(f, dtype=float)
    n = len(s)
    joint = np.concatenate([s, f], axis=0)
    dists = []
    for i in range(2 * n):
        for j in range(2 * n):
            if i != j:
                dists.append(float(np.sum((joint[i] - joint[j]) ** 2)))
    median = float(np.median(dists)) or 1.0

    def kernel(x, y):
        d2 = float(np.sum((x - y) ** 2))
        return sum(math.exp(-d2 / (median * m)) for m in multipliers) / len(multipliers)

    k_ss = sum(kernel(s[i], s[j]) for i in range(n) for j in range(n)) / n ** 2
    k_ff = sum(kernel(f[i], f[j]) for i in range(n) for j in range(n)) / n ** 2
    k_sf = sum(kernel(s[i], f[j]) for i in range(n) for j in range(n)) / n ** 2
    return k_ss + k_ff - 2 * k_sf


def cross_entropy_direct(logits, labels):
    """Probability-space evaluation: softmax each row, take -log p[true]."""
    total = 0.0
    for row, label in zip(np.asarray(logits, dtype=float), labels):
        shifted = np.exp(row - row.max())
        probs = shifted / shifted.sum()
        total += -math.log(probs[label])
    return total / len(labels)


def wilcoxon_enumeration(a, b):
    """Exact two-sided p by brute force over every sign assignment.

    Zero differences dropped, midranks for ties; p = 2*min(P(W<=w), P(W>=w)).
    """
    d = np.asarray(a, dtype=float) - np.asarray(b, dtype=float)
    d = d[d != 0.0]
    n = len(d)
    absd = np.abs(d)
    order = np.argsort(absd)
    ranks = np.empty(n)
    i = 0
    sorted_abs = absd[order]
    while i < n:
        j = i
        while j + 1 < n and sorted_abs[j + 1] == sorted_abs[i]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2 + 1
        i = j + 1
    w_obs = ranks[d > 0].sum()
    count_le = count_ge = 0
    for mask in range(2 ** n):
        w = sum(ranks[k] for k in range(n) if (mask >> k) & 1)
        if w <= w_obs + 1e-12:
            count_le += 1
        if w >= w_obs - 1e-12:
            count_ge += 1
    total = 2.0 ** n
    return min(1.0, 2.0 * min(count_le / total, count_ge / total))


def bilinear_reference(image, out_h, out_w):
    """Loop-coded half-pixel-centered bilinear resampling of (C, H, W)."""
    c, in_h, in_w = image.shape
    out = np.empty((c, out_h, out_w))
    for ch in range(c):
        for oy in range(out_h):
            y = min(max((oy + 0.5) * in_h / out_h - 0.5, 0.0), in_h - 1.0)
            y0 = int(math.floor(y))
            y1 = min(y0 + 1, in_h - 1)
            wy = y - y0
            for ox in range(out_w):
                x = min(max((ox + 0.5) * in_w / out_w - 0.5, 0.0), in_w - 1.0)
                x0 = int(math.floor(x))
                x1 = min(x0 + 1, in_w - 1)
                wx = x - x0
                top = image[ch, y0, x0] * (1 - wx) + image[ch, y0, x1] * wx
                bot = image[ch, y1, x0] * (1 - wx) + image[ch, y1, x1] * wx
                out[ch, oy, ox] = top * (1 - wy) + bot * wy
    return out


def finite_difference_gradients(loss_fn, tensors, coords, h=1e-6):
    """Central differences of loss_fn() w.r.t. selected coordinates.

    tensors: torch parameters/inputs the loss reads (float64, modified in
    place under no_grad); coords: list of (tensor_index, flat_index).
    Returns the FD gradient per coordinate.
    """
    import torch

    grads = []
    with torch.no_grad():
        for t_idx, flat in coords:
            flat_view = tensors[t_idx].reshape(-1)
            original = flat_view[flat].item()
            flat_view[flat] = original + h
            up = float(loss_fn())
            flat_view[flat] = original - h
            down = float(loss_fn())
            flat_view[flat] = original
            grads.append((up - down) / (2 * h))
    return np.array(grads)


def relative_error(actual, expected, floor=1e-8):
    """|a - e| / max(|e|, floor), elementwise max over arrays."""
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    return float(np.max(np.abs(actual - expected)
                        / np.maximum(np.abs(expected), floor)))
