"""Compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the axiom check and an isomorphism search against a random
relabelling, on carriers of order 8 to 64, once per importable backend.
"""
import argparse
import timeit

import numpy as np

from multlie import builtins, kernels
from multlie.algebra import check_axioms
from multlie.analysis import find_isomorphism
from multlie.constructions import excision
from multlie.group import validate_group

CASES = [
    ("e1-excision", lambda: builtins.algebra("e1-excision")),
    ("e2-idealization", lambda: builtins.algebra("e2-idealization")),
    ("heis (+) Z", lambda: excision(builtins.algebra("heis"), builtins.group("z2^3").full())),
    ("e1 (+) all", lambda: excision(builtins.algebra("e1-excision"),
                                    builtins.algebra("e1-excision").group.full())),
]


def shuffled(M, seed=1):
    rng = np.random.default_rng(seed)
    n = M.order
    perm = [0] + [int(v) for v in rng.permutation(np.arange(1, n))]
    back = [0] * n
    for old, new in enumerate(perm):
        back[new] = old
    mul = [[perm[M.group.m[back[a]][back[b]]] for b in range(n)] for a in range(n)]
    star = [[perm[M.s[back[a]][back[b]]] for b in range(n)] for a in range(n)]
    return check_axioms(validate_group(mul), star)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    algs = [(name, make()) for name, make in CASES]
    twins = {name: shuffled(M) for name, M in algs}
    print(f"{'case':18} {'order':>5} {'backend':8} {'axioms ms':>10} {'iso ms':>10}")
    for name, M in algs:
        for bk in kernels.backends():
            kernels.backend = bk
            ax = min(timeit.repeat(lambda: bk.axiom_violation(M.group.mul, M.group.inv, M.star,
                                                               M.identity),
                                   number=1, repeat=args.repeat))
            iso = min(timeit.repeat(lambda: find_isomorphism(M, twins[name]),
                                    number=1, repeat=args.repeat))
            print(f"{name:18} {M.order:5} {bk.NAME:8} {ax * 1e3:10.2f} {iso * 1e3:10.2f}")


if __name__ == "__main__":
    main()
