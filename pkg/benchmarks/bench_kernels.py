"""Compare the compiled and pure-numpy kernel backends.

    python benchmarks/bench_kernels.py [--batch 100] [--repeats 20] [--epoch DATA_DIR]

With --epoch, also times one CNN training epoch on a 6,000-sample subset of
the MNIST files in DATA_DIR under each backend.
"""
import argparse
import timeit
from pathlib import Path

import numpy as np

from metacnn import dataset, hybrid, kernels


def kernel_cases(batch, rng):
    x1 = rng.random((batch, 28, 28))
    k1 = rng.normal(size=(6, 5, 5))
    g1 = rng.normal(size=(batch, 6, 24, 24))
    x2 = rng.random((batch, 6, 12, 12))
    k2 = rng.normal(size=(12, 6, 5, 5))
    g2 = rng.normal(size=(batch, 12, 8, 8))
    return {
        "conv1 forward": lambda: kernels.corr_forward(x1[:, None], k1[:, None]),
        "conv1 grad kernel": lambda: kernels.corr_grad_kernel(x1[:, None], g1, 5),
        "conv2 forward": lambda: kernels.corr_forward(x2, k2),
        "conv2 grad kernel": lambda: kernels.corr_grad_kernel(x2, g2, 5),
        "conv2 grad input": lambda: kernels.corr_grad_input(g2, k2),
        "block sum 2x2": lambda: kernels.block_sum2(g1),
    }


def time_ms(fn, repeats):
    fn()
    return 1e3 * min(timeit.repeat(fn, number=1, repeat=repeats))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--batch", type=int, default=100)
    ap.add_argument("--repeats", type=int, default=20)
    ap.add_argument("--epoch", metavar="DATA_DIR")
    args = ap.parse_args(argv)

    names = sorted(kernels.BACKENDS)
    if len(names) < 2:
        print("compiled backend not built; showing python only")
    previous = kernels.BACKEND
    results = {}
    for name in names:
        kernels.set_backend(name)
        cases = kernel_cases(args.batch, np.random.default_rng(0))
        results[name] = {label: time_ms(fn, args.repeats) for label, fn in cases.items()}

    if args.epoch:
        d = Path(args.epoch)
        train = dataset.subset(dataset.load_mnist(d / "train-images-idx3-ubyte", d / "train-labels-idx1-ubyte"), 6000, 0)
        test = dataset.subset(dataset.load_mnist(d / "t10k-images-idx3-ubyte", d / "t10k-labels-idx1-ubyte"), 1000, 1)
        for name in names:
            kernels.set_backend(name)
            run = hybrid.train(hybrid.HybridConfig(method="CNN", seed=0), train, test)
            results[name]["CNN epoch (6k)"] = 1e3 * run.final.time_s
    kernels.set_backend(previous)

    labels = list(results[names[0]])
    print(f"{'kernel':<20}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label in labels:
        row = [results[n][label] for n in names]
        line = f"{label:<20}" + "".join(f"{v:>10.2f}ms" for v in row)
        if len(names) > 1:
            line += f"{results['python'][label] / results['cython'][label]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
