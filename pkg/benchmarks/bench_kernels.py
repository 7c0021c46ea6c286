"""Compare the pure-Python and compiled kernels.

Run with ``python3 benchmarks/bench_kernels.py``.  Both backends are imported
directly, so the ``QBLOCKS_PURE`` switch does not matter here.
"""
from __future__ import annotations

import argparse
import statistics
import time
from typing import Callable

from qblocks import _pykernels
from qblocks.characters import d_series, weyl_numerator
from qblocks.quivers import block_quiver
from qblocks.weights import Weight, block_class

try:
    from qblocks import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _timed(fn: Callable[[], object], repeat: int) -> tuple[float, object]:
    samples = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def convolve_case(depth: int):
    series = d_series(3, depth)
    num = weyl_numerator(Weight.of(4, 0, -4))
    f = {k: (v.even, v.odd) for k, v in series.terms.items()}
    g = {k: (v.even, v.odd) for k, v in num.terms.items()}
    return f, g, series.floor


def close_case(algebra: str, cutoff: int, cap: int):
    quiver, relations = block_quiver(block_class(Weight.zero(3), algebra), cutoff)
    return (len(quiver.vertices), [a.source for a in quiver.arrows],
            [a.target for a in quiver.arrows], sorted(relations.zero_words),
            list(relations.binomials), cap + relations.max_length_gap)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--depth", type=int, default=30)
    parser.add_argument("--cutoff", type=int, default=16)
    parser.add_argument("--cap", type=int, default=16)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled extension missing; timing the Python kernels only")

    cases = [(f"convolve depth={args.depth}", "convolve", convolve_case(args.depth))]
    for alg in ("sq", "q"):
        cases.append((f"close_paths {alg} principal cutoff={args.cutoff} cap={args.cap}",
                      "close_paths", close_case(alg, args.cutoff, args.cap)))

    print(f"{'case':<48} {'backend':<8} {'median s':>10} {'speedup':>8}")
    for label, name, case_args in cases:
        baseline = None
        reference = None
        for backend, module in backends:
            elapsed, result = _timed(lambda: getattr(module, name)(*case_args), args.repeat)
            if baseline is None:
                baseline, reference = elapsed, result
                speedup = 1.0
            else:
                if result != reference:
                    raise SystemExit(f"{backend} disagrees with python on {label}")
                speedup = baseline / elapsed
            print(f"{label:<48} {backend:<8} {elapsed:>10.4f} {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
