#!/usr/bin/env python3
"""Benchmark the compiled edit-distance kernels against the pure-Python
fallback.

The phrase-shift search dominates scoring time on real test sets (every
round evaluates an edit-distance DP for each candidate span move), so
this is the loop the extension exists for.

Usage: python3 benchmarks/bench_kernels.py [--pairs N] [--tokens N]
"""

import argparse
import random
import time

from loreseval._kernels import _pure

try:
    from loreseval._kernels import _speedups
except ImportError:
    _speedups = None


def synthetic_pairs(rng, n_pairs, n_tokens, vocab=50, noise=0.3):
    """Hypothesis/reference id pairs with realistic partial overlap."""
    pairs = []
    for _ in range(n_pairs):
        ref = [rng.randrange(vocab) for _ in range(n_tokens)]
        hyp = list(ref)
        for i in range(len(hyp)):
            if rng.random() < noise:
                hyp[i] = rng.randrange(vocab)
        if rng.random() < 0.5 and len(hyp) > 4:
            # displace a phrase so the shift search has work to do
            cut = rng.randrange(1, len(hyp) - 2)
            hyp = hyp[cut:] + hyp[:cut]
        pairs.append((hyp, ref))
    return pairs


def time_backend(module, func_name, pairs):
    func = getattr(module, func_name)
    t0 = time.perf_counter()
    results = [func(hyp, ref) for hyp, ref in pairs]
    return time.perf_counter() - t0, results


def run(label, func_name, pairs):
    pure_s, pure_out = time_backend(_pure, func_name, pairs)
    print(f"{label:<24} pure-python {pure_s * 1000:9.1f} ms", end="")
    if _speedups is None:
        print("   (extension not built)")
        return
    fast_s, fast_out = time_backend(_speedups, func_name, pairs)
    assert fast_out == pure_out, "backends disagree"
    print(f"   compiled {fast_s * 1000:9.1f} ms   speedup {pure_s / fast_s:6.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=50, help="sentence pairs per case")
    parser.add_argument("--tokens", type=int, default=20, help="tokens per sentence")
    args = parser.parse_args()

    rng = random.Random(7)
    pairs = synthetic_pairs(rng, args.pairs, args.tokens)
    print(f"{args.pairs} pairs x {args.tokens} tokens, identical inputs per backend\n")
    run("edit_distance", "edit_distance", pairs)
    run("shifted_edit_search", "shifted_edit_search", pairs)


if __name__ == "__main__":
    main()
