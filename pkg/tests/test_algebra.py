import numpy as np
import pytest

from multlie import builtins
from multlie.algebra import (all_ideals, axiom_violation, check_axioms, commutator_star,
                             double_center, ideal_generated, ideal_violation, is_ideal,
                             is_subalgebra, lie_center, mult_lie_center, quotient_mla, restrict,
                             star_closure, trivial_star)
from multlie.errors import AxiomViolation, NotAnIdeal
from multlie.group import center, commutator_subgroup
from oracles import axioms_hold

ALGEBRAS = list(builtins.ALGEBRA_FACTORIES)


@pytest.mark.parametrize("name", ALGEBRAS)
def test_builtin_algebras_satisfy_axioms_by_oracle(name):
    M = builtins.algebra(name)
    if M.order <= 16:
        assert axioms_hold(M.group.m, M.s)
    assert axiom_violation(M.group, M.star) is None


@pytest.mark.parametrize("name", ALGEBRAS)
def test_reverse_product_is_inverse(name):
    # holds in every algebra, abelian or not
    M = builtins.algebra(name)
    inv, s = M.group.i, M.s
    assert all(s[y][x] == inv[s[x][y]] for x in range(M.order) for y in range(M.order))


def test_v4a_table():
    M = builtins.algebra("v4-a")
    assert M.s == [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1], [0, 1, 1, 0]]
    G = M.group
    assert M.s[G.index_of("a")][G.index_of("b")] == G.index_of("a")


def test_commutator_and_trivial_structures():
    for g in ["s3", "d4", "q8"]:
        G = builtins.group(g)
        check_axioms(G, commutator_star(G))
        check_axioms(G, trivial_star(G))


def test_check_axioms_raises_with_witness():
    G = builtins.group("z2")
    with pytest.raises(AxiomViolation) as info:
        check_axioms(G, [[0, 1], [1, 0]])
    assert info.value.axiom == 2
    assert str(info.value).startswith("axiom 2 violated at x=")


def test_d4x_centres_and_closure():
    M = builtins.algebra("d4-x")
    G = M.group
    assert star_closure(M) == G.subset(G.index_of(n) for n in ["1", "x", "x2", "x3"])
    assert lie_center(M) == G.subset([0])
    assert is_ideal(M, star_closure(M))


@pytest.mark.parametrize("name", ["d4-comm", "q8-comm"])
def test_commutator_structure_centres(name):
    M = builtins.algebra(name)
    G = M.group
    assert lie_center(M) == center(G)
    assert mult_lie_center(M) == G.full()
    assert star_closure(M) == commutator_subgroup(G)
    assert double_center(M) == center(G)


def test_ideal_violation_kinds():
    M = builtins.algebra("d4-x")
    G = M.group
    assert ideal_violation(M, G.subset([0, G.index_of("x")]))[0] == "subgroup"
    assert ideal_violation(M, G.subset([0, G.index_of("y")]))[0] == "normal"
    M2 = builtins.algebra("v4-a")
    b = M2.group.index_of("b")
    kind, (g, s, v) = ideal_violation(M2, M2.group.subset([0, b]))
    assert kind == "star" and M2.s[g][s] == v and v not in M2.group.subset([0, b])


@pytest.mark.parametrize("name", ["v4-a", "d4-x", "d4-comm", "q8-comm", "heis"])
def test_all_ideals_bruteforce(name):
    from itertools import combinations

    M = builtins.algebra(name)
    found = set()
    for k in range(1, M.order + 1):
        for c in combinations(range(M.order), k):
            if is_ideal(M, M.group.subset(c)):
                found.add(frozenset(c))
    assert {frozenset(I) for I in all_ideals(M)} == found


def test_ideal_generated_is_smallest():
    M = builtins.algebra("v4-a")
    G = M.group
    b = G.index_of("b")
    J = ideal_generated(M, [b])
    assert J == G.full()
    assert all(J <= I for I in all_ideals(M) if b in I)


def test_quotient_and_restriction():
    M = builtins.algebra("d4-x")
    G = M.group
    X = G.subset(G.index_of(n) for n in ["1", "x", "x2", "x3"])
    Q, pi = quotient_mla(M, X)
    assert Q.order == 2 and pi.kind == "mla-hom"
    assert pi.kernel() == X
    R = restrict(M, X)
    assert R.order == 4 and R.validated
    assert is_subalgebra(M, X)
    with pytest.raises(NotAnIdeal):
        quotient_mla(M, G.subset([0, G.index_of("y")]))


def test_digest_is_table_determined():
    a, b = builtins.algebra("v4-a"), builtins.algebra("v4-trivial")
    assert a.digest() != b.digest()
    assert a.digest() == check_axioms(a.group, np.array(a.s)).digest()
