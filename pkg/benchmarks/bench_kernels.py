"""Compiled core vs pure-Python fallback on the hot kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]

Also times the naive permutation sums against the subset DP.
"""
import argparse
import json

from ncomm import bench, kernels


def _fmt(v):
    return "-" if v is None else f"{v:10.2f}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    krows = bench.suite_kernels(repeat=args.repeat)
    prows = bench.suite_perm(repeat=args.repeat)
    drows = bench.suite_dp(repeat=args.repeat)
    if args.json:
        print(json.dumps({"backend": kernels.BACKEND, "kernels": krows, "perm": prows, "dp": drows}, indent=2))
        return

    print(f"default backend: {kernels.BACKEND}\n")
    print(f"{'kernel':<14}{'case':<20}{'python ms':>11}{'compiled ms':>13}{'speedup':>9}  agree")
    for r in krows:
        py, c = r.get("python_ms"), r.get("compiled_ms")
        sp = f"{py / c:8.1f}x" if py and c else "        -"
        print(f"{r['kernel']:<14}{r['case']:<20}{_fmt(py):>11}{_fmt(c):>13}{sp:>9}  {r['agree']}")
    print(f"\n{'p':<4}{'perm naive ms':>15}{'perm-dp ms':>12}  agree")
    for r in prows:
        print(f"{r['p']:<4}{r['naive_ms']:>15.2f}{r['dp_ms']:>12.2f}  {r['agree']}")
    print(f"\n{'N':<4}{'s_N naive ms':>14}{'dp ms':>10}{'kernel ms':>11}  agree")
    for r in drows:
        print(f"{r['N']:<4}{r['naive_ms']:>14.2f}{r['dp_ms']:>10.2f}{r['kernel_ms']:>11.2f}  {r['agree']}")


if __name__ == "__main__":
    main()
