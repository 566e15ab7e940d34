"""Time the irreducible-word enumeration on both backends.

    python3 benchmarks/bench_pbw.py [--max-degree 10] [--repeat 3]
"""

import argparse
import time

from ncrewrite import kernels
from ncrewrite.algebras import builtin


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--algebra", default="sl2_z2")
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    p = builtin(args.algebra)
    system = p.require_system()
    mat, lengths = kernels.pack_patterns([r.lhs for r in system.rules])
    k = len(system.alphabet)
    mark = p.alphabet.index(p.group_generator) if p.group_generator else -1

    numba_fn = kernels.count_irreducible_numba
    if numba_fn is not None:
        numba_fn(k, 2, mat, lengths, mark)  # compile outside the timed region
    print(f"{args.algebra}: {k} letters, {len(lengths)} forbidden words")
    print(f"{'degree':>6} {'words':>10} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for d in range(1, args.max_degree + 1):
        t_np, h_np = best_of(lambda: kernels.count_irreducible_numpy(k, d, mat, lengths, mark), args.repeat)
        if numba_fn is None:
            print(f"{d:>6} {k ** d:>10} {t_np:>10.4f} {'n/a':>10} {'':>8}")
            continue
        t_nb, h_nb = best_of(lambda: numba_fn(k, d, mat, lengths, mark), args.repeat)
        if h_np.tolist() != h_nb.tolist():
            raise SystemExit(f"backends disagree at degree {d}: {h_np} vs {h_nb}")
        print(f"{d:>6} {k ** d:>10} {t_np:>10.4f} {t_nb:>10.4f} {t_np / max(t_nb, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
