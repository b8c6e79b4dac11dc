"""Bundled groups, algebras and verification instances."""
from __future__ import annotations

from functools import lru_cache

from .algebra import MultLieAlg, check_axioms, commutator_star, trivial_star
from .group import FiniteGroup, validate_group


def cyclic(n: int) -> FiniteGroup:
    names = ["1", "x"] + [f"x{k}" for k in range(2, n)]
    return validate_group([[(a + b) % n for b in range(n)] for a in range(n)], names[:n], f"z{n}")


def trivial_group() -> FiniteGroup:
    return validate_group([[0]], ["1"], "trivial")


def elementary_abelian_2(k: int) -> FiniteGroup:
    """``(Z2)^k`` with index bits as coordinates; for k=2 this is V4 = {1,a,b,ab}."""
    letters = "abcdef"
    names = ["".join(letters[i] for i in range(k) if x >> i & 1) or "1" for x in range(2 ** k)]
    n = 2 ** k
    return validate_group([[a ^ b for b in range(n)] for a in range(n)], names,
                          "v4" if k == 2 else f"z2^{k}")


def _xy_name(i: int, j: int) -> str:
    xs = "" if i == 0 else ("x" if i == 1 else f"x{i}")
    s = xs + ("y" if j else "")
    return s or "1"


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, ``<x, y | x^n = y^2 = 1, xy = yx^-1>``;
    ``x^i y^j`` has index ``i + n j``."""
    els = [(i, j) for j in range(2) for i in range(n)]

    def mul(a, b):
        (i, j), (k, l) = a, b
        return ((i + (k if j == 0 else -k)) % n, (j + l) % 2)

    table = [[els.index(mul(a, b)) for b in els] for a in els]
    return validate_group(table, [_xy_name(i, j) for i, j in els], f"d{n}")


def quaternion() -> FiniteGroup:
    """``Q8 = <x, y | x^4 = 1, y^2 = x^2, yxy^-1 = x^-1>``, index ``i + 4j``."""
    els = [(i, j) for j in range(2) for i in range(4)]

    def mul(a, b):
        (i, j), (k, l) = a, b
        e = i + (k if j == 0 else -k) + (2 if j and l else 0)
        return (e % 4, (j + l) % 2)

    table = [[els.index(mul(a, b)) for b in els] for a in els]
    return validate_group(table, [_xy_name(i, j) for i, j in els], "q8")


GROUP_FACTORIES = {
    "trivial": trivial_group,
    "z2": lambda: cyclic(2),
    "z3": lambda: cyclic(3),
    "z4": lambda: cyclic(4),
    "z6": lambda: cyclic(6),
    "v4": lambda: elementary_abelian_2(2),
    "z2^3": lambda: elementary_abelian_2(3),
    "s3": lambda: dihedral(3),
    "d4": lambda: dihedral(4),
    "q8": quaternion,
}


@lru_cache(maxsize=None)
def group(name: str) -> FiniteGroup:
    try:
        return GROUP_FACTORIES[name]()
    except KeyError:
        raise KeyError(f"unknown builtin group {name!r}; known: {', '.join(GROUP_FACTORIES)}") from None


def _named(G: FiniteGroup, assignments: dict[tuple[str, str], str], name: str) -> MultLieAlg:
    from .enumeration import star_from_generators

    idx = G.index_of
    return star_from_generators(G, {(idx(a), idx(b)): idx(v) for (a, b), v in assignments.items()}, name)


def _trivial(gname: str, name: str) -> MultLieAlg:
    G = group(gname)
    return check_axioms(G, trivial_star(G), name=name)


def _commutator(gname: str, name: str) -> MultLieAlg:
    G = group(gname)
    return check_axioms(G, commutator_star(G), name=name)


def _e1(kind: str) -> MultLieAlg:
    from . import constructions as c
    from .algebra import restrict

    M = algebra("v4-a")
    I = M.group.subset([0, 1])
    if kind == "direct":
        return c.direct_product_mla(M, restrict(M, I))
    return getattr(c, kind)(M, I)


def _e2(kind: str) -> MultLieAlg:
    from . import constructions as c

    M = algebra("v4-a")
    return getattr(c, kind)(M, M.group.full())


ALGEBRA_FACTORIES = {
    "trivial": lambda: _trivial("trivial", "trivial"),
    "z2": lambda: _trivial("z2", "z2"),
    "z3": lambda: _trivial("z3", "z3"),
    "z4": lambda: _trivial("z4", "z4"),
    "v4-trivial": lambda: _trivial("v4", "v4-trivial"),
    "v4-a": lambda: _named(group("v4"), {("a", "b"): "a"}, "v4-a"),
    "d4-comm": lambda: _commutator("d4", "d4-comm"),
    "d4-x": lambda: _named(group("d4"), {("x", "y"): "x"}, "d4-x"),
    "q8-comm": lambda: _commutator("q8", "q8-comm"),
    "heis": lambda: _named(group("z2^3"), {("a", "b"): "c", ("a", "c"): "1", ("b", "c"): "1"}, "heis"),
    "e1-excision": lambda: _e1("excision"),
    "e1-idealization": lambda: _e1("idealization"),
    "e1-direct": lambda: _e1("direct"),
    "e2-excision": lambda: _e2("excision"),
    "e2-idealization": lambda: _e2("idealization"),
}


@lru_cache(maxsize=None)
def algebra(name: str) -> MultLieAlg:
    try:
        factory = ALGEBRA_FACTORIES[name]
    except KeyError:
        raise KeyError(f"unknown builtin algebra {name!r}; known: {', '.join(ALGEBRA_FACTORIES)}") from None
    M = factory()
    M.name = name
    return M


# (instance name, algebra, ideal spec) pairs run by ``verify --instances builtin``
INSTANCES = [
    ("trivial", "trivial", "all"),
    ("z2/all", "z2", "all"),
    ("z4/x2", "z4", "1,x2"),
    ("v4-trivial/all", "v4-trivial", "all"),
    ("v4-a/1", "v4-a", "1"),
    ("v4-a/1,a", "v4-a", "1,a"),
    ("v4-a/all", "v4-a", "all"),
    ("d4-comm/center", "d4-comm", "center"),
    ("d4-x/x2", "d4-x", "1,x2"),
    ("d4-x/<x>", "d4-x", "1,x,x2,x3"),
    ("q8-comm/center", "q8-comm", "center"),
    ("heis/c", "heis", "1,c"),
    ("heis/all", "heis", "all"),
    ("e1-excision/J", "e1-excision", "(1,1),(1,a)"),
    ("e1-direct/J", "e1-direct", "(1,1),(1,a)"),
    ("e2-idealization/trivial", "e2-idealization", "trivial"),
]
