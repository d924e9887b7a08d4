#!/usr/bin/env python3
"""Benchmark the compiled word kernels against the pure-Python twins.

Workloads cover the two levels the package runs at: raw kernel calls
(reduce / substitute on long words) and whole verification passes whose
runtime is dominated by those kernels.  The backend is switched
in-process via braidact._kernels.set_backend, so both implementations
see identical inputs.

Usage:  python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from braidact import BraidWord, GenusContext, artin_action
from braidact import _kernels, monoid, sp4


def bench(func, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - t0)
    return best


def raw_reduce():
    rng = random.Random(7)
    raw = tuple(rng.choice([1, -1]) * rng.randrange(1, 7) for _ in range(200_000))
    return lambda: _kernels.reduce_letters(raw)


def raw_substitute():
    # images of a pseudo-Anosov braid power: ~1e5-letter outputs
    action = artin_action(BraidWord(3, (1, -2)) ** 12)
    pos = tuple(w.letters for w in action.images)
    neg = tuple(w.letters for w in action.backward.images)
    word = tuple([1, 2, 3] * 40)
    return lambda: _kernels.substitute(pos, neg, word, 10**8)


def gamma_sweep():
    return sp4.verify_gamma_identities


def section_sweep():
    return lambda: monoid.verify_section(GenusContext(2), 4)


WORKLOADS = (
    ("reduce 200k raw letters", raw_reduce),
    ("substitute long images", raw_substitute),
    ("lifted-relator identity sweep", gamma_sweep),
    ("section sweep (genus 2, length 4)", section_sweep),
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()

    backends = _kernels.available_backends()
    if backends == ("pure",):
        print("compiled backend unavailable; timing the pure backend only")

    original = _kernels.backend_name()
    results = {}
    try:
        for name, make in WORKLOADS:
            prepared = make()
            for backend in backends:
                _kernels.set_backend(backend)
                prepared()  # warm caches before timing
                results[name, backend] = bench(prepared, args.repeat)
    finally:
        _kernels.set_backend(original)

    width = max(len(name) for name, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, _ in WORKLOADS:
        row = f"{name:<{width}}  "
        for backend in backends:
            row += f"{results[name, backend] * 1e3:>10.2f}ms"
        if len(backends) == 2:
            row += f"{results[name, 'pure'] / results[name, 'compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
