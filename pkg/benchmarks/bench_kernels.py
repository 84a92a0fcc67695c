"""Time the numba kernels against the numpy fallback and check they agree.

    python benchmarks/bench_kernels.py [--sizes 16,64,128] [--prime 10007] [--repeat 5]
"""

import argparse
import sys
import time

import numpy as np

from cotwist import _accel


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench(n, p, repeat, rng):
    a = rng.integers(0, p, size=(n, n), dtype=np.int64)
    b = rng.integers(0, p, size=(n, n), dtype=np.int64)
    ai = rng.integers(-50, 51, size=(n, n), dtype=np.int64)
    bi = rng.integers(-50, 51, size=(n, n), dtype=np.int64)
    # rank-deficient so elimination has real work to skip
    r = (a[:, : n // 2] @ (b[: n // 2] % 7)) % p

    cases = [
        ("matmul_mod", lambda: _accel.matmul_mod_np(a, b, p), lambda: _accel.matmul_mod_nb(a, b, p)),
        ("matmul_i64", lambda: _accel.matmul_i64_np(ai, bi), lambda: _accel.matmul_i64_nb(ai, bi)),
        ("rref_mod", lambda: _accel.rref_mod_np(r, p, n), lambda: _accel.rref_mod_nb(r, p, n)),
    ]
    rows = []
    for name, np_fn, nb_fn in cases:
        nb_fn()  # compile outside the timing
        t_np, out_np = best_of(np_fn, repeat)
        t_nb, out_nb = best_of(nb_fn, repeat)
        if isinstance(out_np, tuple):
            same = np.array_equal(out_np[0], out_nb[0]) and list(out_np[1]) == list(out_nb[1])
        else:
            same = np.array_equal(out_np, out_nb)
        rows.append((name, n, t_np, t_nb, same))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="16,64,128")
    ap.add_argument("--prime", type=int, default=10007)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if not _accel.HAVE_NUMBA:
        print("numba is not installed; nothing to compare")
        return 0
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<12}{'n':>6}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}  equal")
    ok = True
    for n in (int(s) for s in args.sizes.split(",")):
        for name, size, t_np, t_nb, same in bench(n, args.prime, args.repeat, rng):
            ok &= same
            print(f"{name:<12}{size:>6}{t_np * 1e3:>12.3f}{t_nb * 1e3:>12.3f}"
                  f"{t_np / max(t_nb, 1e-9):>9.1f}x  {'yes' if same else 'NO'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
