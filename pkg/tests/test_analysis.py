from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multlie import builtins
from multlie.algebra import check_axioms
from multlie.analysis import (find_isomorphism, fingerprint, is_isomorphic, left_normed_values,
                              star_derived_series, star_nilpotency_class, star_solvable)
from multlie.enumeration import enumerate_structures
from multlie.group import validate_group
from multlie.search import search_maps
from oracles import isomorphic_bruteforce

SMALL = [n for n in builtins.ALGEBRA_FACTORIES if builtins.algebra(n).order <= 8]


def left_normed_bruteforce(M, k):
    s = M.s
    out = set()
    for xs in product(range(M.order), repeat=k):
        v = xs[0]
        for x in xs[1:]:
            v = s[v][x]
        out.add(v)
    return out


def nilpotency_bruteforce(M, max_len=6):
    for n in range(0, max_len):
        if left_normed_bruteforce(M, n + 1) == {M.identity}:
            return n
    return None


def relabelled(M, seed):
    rng = np.random.default_rng(seed)
    n = M.order
    perm = [0] + [int(v) for v in rng.permutation(np.arange(1, n))]
    back = [0] * n
    for old, new in enumerate(perm):
        back[new] = old
    mul = [[perm[M.group.m[back[a]][back[b]]] for b in range(n)] for a in range(n)]
    star = [[perm[M.s[back[a]][back[b]]] for b in range(n)] for a in range(n)]
    return check_axioms(validate_group(mul), star)


@pytest.mark.parametrize("name", SMALL)
def test_left_normed_values_match_bruteforce(name):
    M = builtins.algebra(name)
    for k in (1, 2, 3, 4):
        assert left_normed_values(M, k) == left_normed_bruteforce(M, k)


@pytest.mark.parametrize("name", SMALL)
def test_nilpotency_class_matches_bruteforce(name):
    M = builtins.algebra(name)
    assert star_nilpotency_class(M) == nilpotency_bruteforce(M)


def test_known_classes():
    assert star_nilpotency_class(builtins.algebra("trivial")) == 0
    assert star_nilpotency_class(builtins.algebra("z4")) == 1
    assert star_nilpotency_class(builtins.algebra("heis")) == 2
    assert star_nilpotency_class(builtins.algebra("v4-a")) is None


def test_derived_series():
    M = builtins.algebra("v4-a")
    series = star_derived_series(M)
    assert [len(D) for D in series] == [4, 2, 1]
    assert star_solvable(M) == 2
    assert star_solvable(builtins.algebra("trivial")) == 0


@pytest.mark.parametrize("name", list(builtins.ALGEBRA_FACTORIES))
def test_iso_to_random_relabelling(name):
    M = builtins.algebra(name)
    for seed in range(3):
        N = relabelled(M, seed)
        assert fingerprint(N) == fingerprint(M)
        f = find_isomorphism(M, N)
        assert f is not None and f.kind == "mla-iso"


@pytest.mark.parametrize("group", ["v4", "s3", "d4", "q8"])
def test_iso_decisions_match_bruteforce(group):
    cat = enumerate_structures(builtins.group(group))
    algs = cat.algebras()
    m = algs[0].group.m
    for A in algs:
        for B in algs:
            assert is_isomorphic(A, B) == isomorphic_bruteforce(m, A.s, m, B.s)


@pytest.mark.parametrize("name", ["v4-a", "d4-x", "d4-comm", "heis"])
def test_algebra_automorphisms_match_bruteforce(name):
    from itertools import permutations

    M = builtins.algebra(name)
    m, s, n = M.group.m, M.s, M.order
    brute = sorted(p for p in permutations(range(n))
                   if all(p[m[x][y]] == m[p[x]][p[y]] and p[s[x][y]] == s[p[x]][p[y]]
                          for x in range(n) for y in range(n)))
    assert sorted(search_maps(M, M, find_all=True)) == brute


def test_different_orders_never_isomorphic():
    assert find_isomorphism(builtins.algebra("z2"), builtins.algebra("z3")) is None


@settings(max_examples=40)
@given(st.sampled_from(SMALL), st.integers(0, 10 ** 6))
def test_fingerprint_is_invariant(name, seed):
    M = builtins.algebra(name)
    assert fingerprint(relabelled(M, seed)) == fingerprint(M)
