"""Compare the compiled and pure-Python integer polynomial kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both backends directly on the same inputs and check
that they agree.  The end-to-end row times ``sign`` over a batch of
operators at rho = sqrt2 in two fresh interpreters, one with
MULTVAL_PURE_PYTHON=1.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from multval import _pykernels as py

try:
    from multval import _ckernels as cy
except ImportError:
    cy = None


def rand_poly(rng, deg, bits=64):
    p = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(deg + 1)]
    if p[-1] == 0:
        p[-1] = 1
    return p


def workloads(rng):
    a, b = rand_poly(rng, 60), rand_poly(rng, 45)
    f = [-2, 0, 1]
    # a near-zero operator at sqrt2 forces many bisection steps
    near = py.add(py.mul(f, rand_poly(rng, 6, 16)), [1])
    g1, g2 = py.mul(rand_poly(rng, 8, 20), [1, 3, 1]), py.mul(rand_poly(rng, 7, 20), [1, 3, 1])
    return {
        "mul (deg 60 x 45)": ("mul", (a, b)),
        "pseudo_rem (deg 60 mod 45)": ("pseudo_rem", (a, b)),
        "gcd (deg 10, common factor)": ("gcd", (g1, g2)),
        "interval_sign (deg 60)": ("interval_sign", (a, 1 << 40, (1 << 40) + 1, 1 << 40)),
        "sign_at_root (near sqrt2)": ("sign_at_root", (near, f, 1, 2, 1)),
    }


END_TO_END = """
import random, time
from multval import LinOp, AlgebraicReal, sign, kernels
rho = AlgebraicReal((-2, 0, 1), 1, 2)
rng = random.Random(1)
ops = [LinOp([(rng.randint(0, 8), rng.randint(-10**6, 10**6)) for _ in range(6)]) for _ in range(400)]
t = time.perf_counter()
for l in ops:
    sign(l, rho)
print(kernels.IMPLEMENTATION, time.perf_counter() - t)
"""


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["MULTVAL_PURE_PYTHON"] = "1"
    else:
        env.pop("MULTVAL_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    rng = random.Random(0)
    print(f"{'kernel':32s} {'python (us)':>12s} {'cython (us)':>12s} {'speedup':>8s}")
    for label, (name, argv) in workloads(rng).items():
        tp = timeit.timeit(lambda: getattr(py, name)(*argv), number=args.repeat) / args.repeat
        if cy is None:
            print(f"{label:32s} {tp * 1e6:12.1f} {'n/a':>12s} {'':>8s}")
            continue
        if getattr(py, name)(*argv) != getattr(cy, name)(*argv):
            raise SystemExit(f"backends disagree on {name}")
        tc = timeit.timeit(lambda: getattr(cy, name)(*argv), number=args.repeat) / args.repeat
        print(f"{label:32s} {tp * 1e6:12.1f} {tc * 1e6:12.1f} {tp / tc:7.2f}x")
    impl_p, tp = end_to_end(pure=True)
    impl_c, tc = end_to_end(pure=False)
    print(f"{'sign x400 at sqrt2 (end to end)':32s} {tp * 1e3:9.1f} ms {tc * 1e3:9.1f} ms"
          f" {tp / tc:7.2f}x   [{impl_p} vs {impl_c}]")


if __name__ == "__main__":
    main()
