"""Benchmark the compiled kernels against their numpy fallbacks.

Covers the two per-trial hot loops (bilinear resampling of rendered images
and the CWT correlation) plus the end-to-end spectrogram pipeline. Run:

    python benchmarks/bench_kernels.py [--trials 20] [--repeat 3]
"""

import argparse
import time

import numpy as np

from tsff.data_io import synthesize_trials
from tsff.timefreq import CwtSpec, scalogram_batch, spectrogram_batch
from tsff.timefreq._backend import RESIZE_KERNELS
from tsff.timefreq.image import _axis_coords


def best_of(fn, repeat):
    fn()  # warm up
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_cwt(args):
    rng = np.random.default_rng(0)
    signals = rng.standard_normal((args.trials * 3, args.samples))
    spec = CwtSpec.linear(4.0, 38.0, args.n_freqs)
    print(f"cwt correlation: {signals.shape[0]} rows x {args.samples} samples, "
          f"{args.n_freqs} frequencies")
    timings = {}
    for backend in ("numpy", "compiled"):
        try:
            timings[backend] = best_of(
                lambda: scalogram_batch(signals, args.fs, spec, backend=backend),
                args.repeat)
            print(f"  {backend:>9}: {timings[backend] * 1e3:9.1f} ms")
        except ValueError:
            print(f"  {backend:>9}: not available")
    return timings


def bench_resize(args):
    rng = np.random.default_rng(1)
    image = rng.random((3, args.n_freqs, args.samples))
    out_h, out_w = 600, 800
    y = _axis_coords(out_h, image.shape[1])
    x = _axis_coords(out_w, image.shape[2])
    print(f"bilinear resample: (3, {args.n_freqs}, {args.samples}) -> "
          f"(3, {out_h}, {out_w}), x{args.trials} repeats per run")
    timings = {}
    for backend, kernel in sorted(RESIZE_KERNELS.items()):
        def run():
            for _ in range(args.trials):
                kernel(image, *y, *x)
        timings[backend] = best_of(run, args.repeat)
        print(f"  {backend:>9}: {timings[backend] * 1e3:9.1f} ms")
    return timings


def bench_pipeline(args):
    trials = synthesize_trials(args.trials // 2 or 1, 2, n_samples=args.samples,
                               seed=2)
    spec = CwtSpec.linear(4.0, 38.0, args.n_freqs)
    print(f"end-to-end spectrogram batch: {trials.n_trials} trials -> 224x224")
    elapsed = best_of(lambda: spectrogram_batch(trials, spec, size=224), 1)
    print(f"  {elapsed * 1e3:9.1f} ms "
          f"({elapsed / trials.n_trials * 1e3:.1f} ms/trial)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--n-freqs", type=int, default=69)
    parser.add_argument("--fs", type=float, default=250.0)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    cwt = bench_cwt(args)
    resize = bench_resize(args)
    bench_pipeline(args)
    for stage, timings in (("cwt", cwt), ("resize", resize)):
        if {"compiled", "numpy"} <= set(timings):
            ratio = timings["numpy"] / timings["compiled"]
            print(f"{stage}: compiled runs at {ratio:.2f}x the numpy speed")


if __name__ == "__main__":
    main()
