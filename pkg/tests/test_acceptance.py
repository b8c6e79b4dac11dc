"""The nine acceptance criteria, each with its runtime limit.

Every criterion appends one PASS/FAIL line to ``RESULTS``; ``conftest.py``
prints them in the terminal summary.  Running this file directly prints the
same lines without pytest.
"""
import contextlib
import io
import json
import time

import numpy as np

from multlie import builtins
from multlie.algebra import (axiom_violation, commutator_star, double_center, ideal_violation,
                             is_ideal, lie_center, mult_lie_center, restrict, star_closure)
from multlie.analysis import find_isomorphism
from multlie.cli import main as cli_main
from multlie.constructions import (direct_product_mla, excision, idealization,
                                   iterated_excision_left, iterated_excision_right,
                                   iterated_iso_pair, t2_isomorphisms)
from multlie.enumeration import classify, enumerate_structures
from multlie.group import all_subgroups, center, commutator_subgroup
from multlie.io import load_bundle_raw
from multlie.verify import CHECKS, builtin_instances

RESULTS: list[str] = []

SUITE_IDS = ["L1", "T1", "l1", "PI", "P3", "P4", "DIAG", "ITERA", "T2", "NILP", "R14"]


@contextlib.contextmanager
def criterion(number, title, limit):
    t0 = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
    except BaseException as exc:
        RESULTS.append(f"FAIL  {number}. {title} ({exc})")
        raise
    RESULTS.append(f"PASS  {number}. {title} [{elapsed:.2f}s < {limit}s]")


def pairs(A, keep):
    return A.group.subset(x for x, c in enumerate(A.label.coords) if keep(*c))


def test_1_axiom_suite():
    with criterion(1, "axiom suite on v4-a, d4-x and commutator D4/Q8", 4):
        for name in ("v4-a", "d4-x"):
            t0 = time.perf_counter()
            G, star, _ = load_bundle_raw(name)
            assert axiom_violation(G, star) is None
            assert time.perf_counter() - t0 < 1
        for g in ("d4", "q8"):
            t0 = time.perf_counter()
            G = builtins.group(g)
            assert axiom_violation(G, commutator_star(G)) is None
            assert time.perf_counter() - t0 < 1


def test_2_example_e1():
    with criterion(2, "V4 (+) {1,a} against V4 x I and V4 x| I", 5):
        M = builtins.algebra("v4-a")
        I = M.group.subset([0, M.group.index_of("a")])
        E, P = excision(M, I), idealization(M, I)
        D = direct_product_mla(M, restrict(M, I))
        C = star_closure(E)
        assert len(C) == 4
        assert all(E.group.element_orders[x] <= 2 for x in C)
        assert len(star_closure(D)) == 2
        assert find_isomorphism(E, D) is None
        f = find_isomorphism(E, P)
        assert f is not None and f.kind == "mla-iso"


def test_3_example_e2():
    with criterion(3, "diagonal of V4 (+) V4 versus V4 x| V4", 60):
        M = builtins.algebra("v4-a")
        E, P = excision(M, M.group.full()), idealization(M, M.group.full())
        NE = pairs(E, lambda g, a: g == a)
        NP = pairs(P, lambda g, a: g == a)
        assert is_ideal(E, NE)
        assert not is_ideal(P, NP) and ideal_violation(P, NP)[0] == "star"
        ab, aa = P.group.index_of("(a,b)"), P.group.index_of("(a,a)")
        w = P.s[ab][aa]
        assert P.label_of(w) == "(1,a)" and w not in NP
        assert find_isomorphism(E, P) is None


def test_4_theorem_suite():
    with criterion(4, "verify all --instances builtin: zero refutations", 120):
        assert set(SUITE_IDS) <= set(CHECKS)
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(["verify", "all", "--instances", "builtin", "--json"])
        out = json.loads(buf.getvalue())
        assert code == 0
        seen = {r["theorem"] for r in out["reports"]}
        assert set(SUITE_IDS) <= seen
        assert all(r["verdict"] in ("verified", "inapplicable") for r in out["reports"])
        assert out["summary"]["refuted"] == 0
        assert len(out["reports"]) == len(CHECKS) * len(builtins.INSTANCES)


def test_5_excision_centre_formulas():
    with criterion(5, "five subset formulas on every builtin excision instance", 60):
        done = 0
        for name in builtins.ALGEBRA_FACTORIES:
            M = builtins.algebra(name)
            G = M.group
            Z = center(G)
            for I in all_subgroups(G):
                if not I <= Z or ideal_violation(M, I) is not None or M.order * len(I) > 64:
                    continue
                E = excision(M, I)
                LZ, MZ, ZZ = lie_center(M), mult_lie_center(M), double_center(M)
                CG = commutator_subgroup(G)
                assert commutator_subgroup(E.group) == pairs(E, lambda g, a: g in CG and a == 0)
                assert center(E.group) == pairs(E, lambda g, a: g in Z and a in I)
                assert lie_center(E) == pairs(E, lambda g, a: g in LZ and a in LZ & I)
                assert double_center(E) == pairs(E, lambda g, a: g in ZZ and a in ZZ & I)
                assert mult_lie_center(E) == pairs(E, lambda g, a: g in MZ and a in MZ & I)
                done += 1
        # every builtin instance with a central ideal is among them
        assert done >= sum(1 for i in builtin_instances()
                           if i.ideal <= center(i.algebra.group)
                           and i.algebra.order * len(i.ideal) <= 64)


def test_6_fiber_products():
    with criterion(6, "three fiber products of V4 (+) {1,a} with f1, f2, f3", 30):
        M = builtins.algebra("v4-a")
        I = M.group.subset([0, M.group.index_of("a")])
        E = excision(M, I)
        maps = t2_isomorphisms(M, I)
        assert len(maps) == 3
        for f in maps:
            assert f.kind == "mla-iso" and f.target.same_tables(E)
            assert len(set(f.map)) == len(f.map) == E.order
            assert len(f.kernel()) == 1


def test_7_iterated_isomorphisms():
    with criterion(7, "phi/psi inverse isomorphisms for n = 2, 3", 30):
        M = builtins.algebra("v4-a")
        G = M.group
        m, inv = G.m, G.i
        I = G.subset([0, G.index_of("a")])
        for n, order in ((2, 16), (3, 32)):
            L, R = iterated_excision_left(M, I, n), iterated_excision_right(M, I, n)
            assert L.order == R.order == order
            phi, psi = iterated_iso_pair(M, I, n)
            assert phi.kind == psi.kind == "mla-iso"
            assert phi.then(psi).map == tuple(range(order))
            assert psi.then(phi).map == tuple(range(order))
            # psi is the map (g, a1, .., an) -> (g, a1, a2 a1^-1, .., an a(n-1)^-1)
            where = {c: x for x, c in enumerate(L.label.coords)}
            for x, c in enumerate(R.label.coords):
                want = (c[0], c[1]) + tuple(m[c[k]][inv[c[k - 1]]] for k in range(2, n + 1))
                assert psi.map[x] == where[want]


def test_8_enumeration():
    with criterion(8, "enumeration on Z2 and V4, reproducible", 10):
        assert len(enumerate_structures(builtins.group("z2")).tables) == 1
        t0 = time.perf_counter()
        G = builtins.group("v4")
        cat = classify(enumerate_structures(G))
        assert time.perf_counter() - t0 < 10
        tables = set(cat.tables)
        assert tuple(map(tuple, [[0] * 4] * 4)) in tables
        assert tuple(map(tuple, builtins.algebra("v4-a").s)) in tables
        a = json.dumps(cat.to_dict()).encode()
        b = json.dumps(classify(enumerate_structures(G)).to_dict()).encode()
        assert a == b


def test_9_property_suites():
    import catalog
    import test_properties as tp

    with criterion(9, "five randomised invariants, 1000 probes each", 300):
        rng = np.random.default_rng(20240601)
        P = catalog.pool()

        def central_pair(among=None):
            k = int(rng.choice(among)) if among else int(rng.integers(len(P)))
            M = P[k]
            fits = [I for I in catalog.central_ideals(k) if M.order * len(I) <= 64]
            return M, fits[int(rng.integers(len(fits)))]

        def seed():
            return int(rng.integers(2 ** 32))

        counts = dict.fromkeys(["antisymmetry", "L1", "ideals", "revalidate", "nilpotency"], 0)
        for _ in range(1000):
            M = P[int(rng.integers(len(P)))]
            tp.test_reverse_product_cancels.hypothesis.inner_test(
                (M, int(rng.integers(M.order)), int(rng.integers(M.order))))
            counts["antisymmetry"] += 1

            M, I = central_pair()
            G = M.group
            g, h = int(rng.integers(M.order)), int(rng.integers(M.order))
            b = I[int(rng.integers(len(I)))]
            v = M.s[g][b]
            assert G.conj(h, v) == v and M.s[G.conj(h, g)][b] == v
            S = G.subset(I)
            assert lie_center(M) & S == mult_lie_center(M) & S
            counts["L1"] += 1

            tp.test_closure_and_centres_are_ideals.hypothesis.inner_test(
                int(rng.integers(len(P))), seed())
            counts["ideals"] += 1

            tp.test_constructions_revalidate.hypothesis.inner_test(
                central_pair(), (excision, idealization)[int(rng.integers(2))], seed())
            counts["revalidate"] += 1

            tp.test_idealization_keeps_nilpotency_bound.hypothesis.inner_test(
                central_pair(tp.NILPOTENT), seed())
            counts["nilpotency"] += 1
        assert set(counts.values()) == {1000}


if __name__ == "__main__":
    import os
    import sys

    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except BaseException:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
