"""Compare the numba kernels against the pure-numpy fallback.

The backend is chosen at import time from CODEBOUNDS_NO_NUMBA, so this
script re-executes itself once per backend and merges the results into one
table.  JIT compilation is warmed up before timing; the numbers are medians
of --repeat runs of each workload.

Usage:  python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import json
import os
import statistics
import subprocess
import sys
import time


def workloads(full: bool):
    from codebounds.cyclic import build_code
    from codebounds.distance import exact_A_search, min_distance

    jobs = []
    pairs = ((6, 2), (8, 2), (8, 3)) if full else ((6, 2), (8, 2))
    for m, c in pairs:
        spec = build_code(m, c)
        jobs.append((f"weight scan ({m},{c}): 2^{spec.k} words of n={spec.n}",
                     lambda s=spec: min_distance(s)))
    jobs.append(("max clique A(7,3) = 16",
                 lambda: exact_A_search(7, 3)))
    jobs.append(("max clique A(8,4) = 16",
                 lambda: exact_A_search(8, 4)))
    return jobs


def run_single(repeat: int, full: bool) -> dict:
    from codebounds import backend_name

    results = {"backend": backend_name(), "times": {}, "values": {}}
    for label, job in workloads(full):
        job()                      # warmup: JIT compile, populate caches
        samples = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            value = job()
            samples.append(time.perf_counter() - t0)
        results["times"][label] = statistics.median(samples)
        results["values"][label] = value
    return results


def fmt(seconds: float) -> str:
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f}us"
    if seconds < 1.0:
        return f"{seconds * 1e3:8.2f}ms"
    return f"{seconds:8.2f}s "


def run_both(repeat: int, full: bool) -> None:
    runs = {}
    for backend, flag in (("numba", ""), ("numpy", "1")):
        env = dict(os.environ, CODEBOUNDS_NO_NUMBA=flag)
        cmd = [sys.executable, os.path.abspath(__file__), "--single",
               "--repeat", str(repeat)]
        if full:
            cmd.append("--full")
        out = subprocess.run(cmd, capture_output=True, text=True, env=env,
                             check=True)
        runs[backend] = json.loads(out.stdout)
    if runs["numba"]["backend"] != "numba":
        print("note: numba unavailable; both columns ran the numpy fallback")
    assert runs["numba"]["values"] == runs["numpy"]["values"], \
        "backends disagree on results"

    width = max(len(k) for k in runs["numba"]["times"])
    print(f"{'workload':<{width}}  {'numba':>10}  {'numpy':>10}  "
          f"{'speedup':>8}")
    for label in runs["numba"]["times"]:
        tn = runs["numba"]["times"][label]
        tp = runs["numpy"]["times"][label]
        print(f"{label:<{width}}  {fmt(tn)}  {fmt(tp)}  {tp / tn:>7.1f}x")
    print(f"\n(medians of {repeat} runs, JIT warmup excluded; "
          f"identical results verified across backends)")


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--full", action="store_true",
                    help="include the 2^24-word (8,3) scan")
    ap.add_argument("--single", action="store_true",
                    help="run current backend only, emit JSON (internal)")
    args = ap.parse_args()
    if args.single:
        print(json.dumps(run_single(args.repeat, args.full)))
    else:
        run_both(args.repeat, args.full)
    return 0


if __name__ == "__main__":
    sys.exit(main())
