"""Compare the two scanner kernels on a realistic source tree.

Runs the pure-Python and the compiled scanner over the same input and
reports throughput.  Usage:

    python benchmarks/bench_tokenize.py [repeats]
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

from prodoc.reader import _scan_py
from prodoc.reader.tokenizer import TOKENIZER_BACKEND, tokenize

try:
    from prodoc.reader import _scan_c
except ImportError:
    _scan_c = None


def sample_text() -> str:
    corpus = Path(__file__).resolve().parent.parent / "tests" / "data" / "corpus"
    chunks = [p.read_text() for p in sorted(corpus.glob("*.pl"))]
    return "\n".join(chunks * 40)


def run(name: str, fn, text: str, repeats: int) -> float:
    best = float("inf")
    count = 0
    for _ in range(repeats):
        start = time.perf_counter()
        count = len(fn(text))
        best = min(best, time.perf_counter() - start)
    mb = len(text.encode()) / 1e6
    print(f"{name:22s} {best * 1e3:8.2f} ms   "
          f"{mb / best:6.1f} MB/s   {count} tokens")
    return best


def main() -> None:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    text = sample_text()
    print(f"input: {len(text)} chars, active backend: {TOKENIZER_BACKEND}")
    print("scanner kernel alone:")
    pure_scan = run("  pure", _scan_py.scan, text, repeats)
    if _scan_c is not None:
        compiled_scan = run("  compiled", _scan_c.scan, text, repeats)
        print(f"  kernel speedup: {pure_scan / compiled_scan:.1f}x")
    print("full tokenize (kernel + Token objects):")
    pure = run("  pure", lambda t: tokenize(t, scan=_scan_py.scan),
               text, repeats)
    if _scan_c is not None:
        compiled = run("  compiled",
                       lambda t: tokenize(t, scan=_scan_c.scan),
                       text, repeats)
        print(f"  end-to-end speedup: {pure / compiled:.1f}x")
    else:
        print("compiled kernel not built; run pip install -e . first")


if __name__ == "__main__":
    main()
