"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel is warmed up once (numba compiles on first call) and then timed
on inputs sized like a desk-scale run. Results from both backends are
checked for equality before timing.
"""
import argparse
import timeit

import numpy as np

from detgan.kernels import NUMBA_KERNELS, NUMPY_KERNELS


def _boxes(rng, n, size=256):
    xy = rng.uniform(0, size - 40, (n, 2))
    wh = rng.uniform(4, 40, (n, 2))
    return np.hstack([xy, wh])


def cases(rng):
    boxes = _boxes(rng, 2000)
    scores = rng.random(2000)
    n_img = 300
    counts = rng.integers(0, 4, n_img)
    offsets = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
    gts = _boxes(rng, int(counts.sum()))
    det_img = np.sort(rng.integers(0, n_img, 6000)).astype(np.int64)
    dets = _boxes(rng, 6000)
    mask = (rng.random((64, 96)) > 0.9).astype(np.uint8)
    occupancy = (rng.random((256, 256)) > 0.8).astype(np.uint8)
    canvas = rng.integers(0, 256, (256, 256)).astype(np.uint8)
    crop = rng.integers(0, 256, (40, 60)).astype(np.uint8)
    return {
        "iou_matrix": (boxes[:500], boxes[500:1000]),
        "greedy_nms": (boxes, scores, 0.5),
        "greedy_match": (det_img, dets, offsets, gts, 0.5),
        "dilate3x3": (mask, 2),
        "window_sums": (occupancy, 20, 40),
        "paste_merge": (canvas, crop, mask[:40, :60], 30, 50, True),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    print(f"{'kernel':<14}{'numpy ms':>11}{'numba ms':>11}{'speedup':>9}")
    for name, call_args in cases(rng).items():
        a = NUMPY_KERNELS[name](*call_args)
        b = NUMBA_KERNELS[name](*call_args)  # compile
        assert np.array_equal(np.asarray(a), np.asarray(b)), name
        t_np = min(timeit.repeat(lambda: NUMPY_KERNELS[name](*call_args), number=1, repeat=args.repeat))
        t_nb = min(timeit.repeat(lambda: NUMBA_KERNELS[name](*call_args), number=1, repeat=args.repeat))
        print(f"{name:<14}{1e3 * t_np:>11.3f}{1e3 * t_nb:>11.3f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
