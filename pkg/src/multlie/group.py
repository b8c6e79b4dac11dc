"""Finite groups given by Cayley tables over element indices ``0..n-1``."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (NoIdentity, NoInverse, NotAHomomorphism, NotASubgroup,
                     NotAssociative, NotNormal, OrderTooLarge)
from .subset import MAX_ORDER, Subset


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class FiniteGroup:
    """A validated finite group. Build instances with :func:`validate_group`."""

    def __init__(self, mul, identity: int, inv, element_names=None, name: str = ""):
        self.mul = _frozen(mul)
        self.order = int(self.mul.shape[0])
        self.identity = int(identity)
        self.inv = _frozen(inv)
        self.element_names = tuple(element_names) if element_names is not None else None
        self.name = name

    # python-level tables are much faster than numpy scalar indexing in loops
    @cached_property
    def m(self) -> list[list[int]]:
        return self.mul.tolist()

    @cached_property
    def i(self) -> list[int]:
        return self.inv.tolist()

    def op(self, x: int, y: int) -> int:
        return self.m[x][y]

    def conj(self, x: int, y: int) -> int:
        """``x y x^-1``."""
        return self.m[self.m[x][y]][self.i[x]]

    def commutator(self, x: int, y: int) -> int:
        """``x y x^-1 y^-1``."""
        m, i = self.m, self.i
        return m[m[m[x][y]][i[x]]][i[y]]

    def power(self, x: int, k: int) -> int:
        r = self.identity
        for _ in range(k):
            r = self.m[r][x]
        return r

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for x in range(self.order):
            k, y = 1, x
            while y != self.identity:
                y = self.m[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def label(self, x: int) -> str:
        return self.element_names[x] if self.element_names else str(x)

    def index_of(self, name: str) -> int:
        if self.element_names and name in self.element_names:
            return self.element_names.index(name)
        if name.isdigit() and int(name) < self.order:
            return int(name)
        raise KeyError(f"no element named {name!r}")

    def full(self) -> Subset:
        return Subset.full(self.order)

    def trivial(self) -> Subset:
        return Subset.of(self.order, [self.identity])

    def subset(self, elements: Iterable[int]) -> Subset:
        return Subset.of(self.order, elements)

    def same_tables(self, other: "FiniteGroup") -> bool:
        return self.order == other.order and bool((self.mul == other.mul).all())

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def validate_group(mul: Sequence[Sequence[int]], element_names=None, name: str = "") -> FiniteGroup:
    """Check the group axioms on a Cayley table and return a FiniteGroup.

    Raises NotAssociative, NoIdentity or NoInverse carrying the first
    witness in row-major order.
    """
    M = np.asarray(mul, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise ValueError("Cayley table must be a non-empty square table")
    n = M.shape[0]
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds the cap of {MAX_ORDER}")
    if M.min() < 0 or M.max() >= n:
        raise ValueError("table entries must lie in 0..n-1")
    if element_names is not None:
        element_names = [str(s) for s in element_names]
        if len(element_names) != n or len(set(element_names)) != n:
            raise ValueError("element names must be n pairwise distinct strings")

    r = np.arange(n)
    bad = M[M[r[:, None, None], r[None, :, None]], r[None, None, :]] != M[r[:, None, None], M[r[None, :, None], r[None, None, :]]]
    if bad.any():
        x, y, z = np.unravel_index(int(np.argmax(bad)), bad.shape)
        raise NotAssociative(int(x), int(y), int(z))

    left = [e for e in range(n) if (M[e] == r).all()]
    if len(left) != 1 or not (M[:, left[0]] == r).all():
        raise NoIdentity()
    e = left[0]

    inv = []
    for x in range(n):
        cands = np.nonzero((M[x] == e) & (M[:, x] == e))[0]
        if len(cands) == 0:
            raise NoInverse(x)
        inv.append(int(cands[0]))
    return FiniteGroup(M, e, inv, element_names, name)


def normalized(G: FiniteGroup) -> tuple[FiniteGroup, list[int]]:
    """Relabel so the identity has index 0; returns the group and ``perm`` with
    ``new_index = perm[old_index]``."""
    e = G.identity
    perm = list(range(G.order))
    perm[0], perm[e] = perm[e], perm[0]
    if e == 0:
        return G, perm
    return relabel(G, perm), perm


def relabel(G: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    n = G.order
    back = [0] * n
    for old, new in enumerate(perm):
        back[new] = old
    mul = [[perm[G.m[back[a]][back[b]]] for b in range(n)] for a in range(n)]
    inv = [perm[G.i[back[a]]] for a in range(n)]
    names = [G.element_names[back[a]] for a in range(n)] if G.element_names else None
    return FiniteGroup(mul, perm[G.identity], inv, names, G.name)


# ---------------------------------------------------------------- subgroups

def subgroup_generated(G: FiniteGroup, seed: Iterable[int] | Subset) -> Subset:
    gens = [g for g in seed]
    bits = 1 << G.identity
    frontier = [G.identity]
    m = G.m
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = m[x][g]
                if not bits >> y & 1:
                    bits |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return Subset(bits, G.order)


def is_subgroup(G: FiniteGroup, H: Subset) -> bool:
    if G.identity not in H:
        return False
    els = H.elements()
    m = G.m
    return all(m[x][y] in H for x in els for y in els)


def is_normal(G: FiniteGroup, H: Subset) -> bool:
    if not is_subgroup(G, H):
        raise NotASubgroup(f"{H} is not a subgroup")
    return all(G.conj(g, h) in H for g in range(G.order) for h in H)


def center(G: FiniteGroup) -> Subset:
    m = G.m
    return G.subset(x for x in range(G.order) if all(m[x][y] == m[y][x] for y in range(G.order)))


def commutator_subgroup(G: FiniteGroup) -> Subset:
    n = G.order
    comms = {G.commutator(x, y) for x in range(n) for y in range(n)}
    return subgroup_generated(G, sorted(comms))


def cosets(G: FiniteGroup, N: Subset) -> list[tuple[int, ...]]:
    """Left cosets ``gN`` sorted by their minimum element."""
    seen = 0
    out = []
    for g in range(G.order):
        if seen >> g & 1:
            continue
        c = tuple(sorted({G.m[g][h] for h in N}))
        for x in c:
            seen |= 1 << x
        out.append(c)
    out.sort(key=lambda c: c[0])
    return out


def quotient_group(G: FiniteGroup, N: Subset) -> tuple[FiniteGroup, "Morphism"]:
    if not is_normal(G, N):
        raise NotNormal(f"{N} is not normal in {G}")
    cs = cosets(G, N)
    which = [0] * G.order
    for k, c in enumerate(cs):
        for x in c:
            which[x] = k
    reps = [c[0] for c in cs]
    mul = [[which[G.m[a][b]] for b in reps] for a in reps]
    names = [f"{G.label(r)}N" for r in reps]
    Q = validate_group(mul, names, name=f"{G.name}/N" if G.name else "")
    return Q, Morphism.build(G, Q, which)


def direct_product_group(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    n1, n2 = G1.order, G2.order
    if n1 * n2 > MAX_ORDER:
        raise OrderTooLarge(f"product order {n1 * n2} exceeds the cap of {MAX_ORDER}")
    m1, m2 = G1.m, G2.m
    mul = [[m1[a // n2][b // n2] * n2 + m2[a % n2][b % n2] for b in range(n1 * n2)]
           for a in range(n1 * n2)]
    inv = [G1.i[a // n2] * n2 + G2.i[a % n2] for a in range(n1 * n2)]
    names = [f"({G1.label(a)},{G2.label(b)})" for a in range(n1) for b in range(n2)]
    name = f"{G1.name}x{G2.name}" if G1.name and G2.name else ""
    return FiniteGroup(mul, G1.identity * n2 + G2.identity, inv, names, name)


def all_subgroups(G: FiniteGroup) -> list[Subset]:
    """Every subgroup, found by joining cyclic subgroups until no new ones appear."""
    cyclic = {subgroup_generated(G, [x]) for x in range(G.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for H in frontier:
            for C in cyclic:
                if C <= H:
                    continue
                K = subgroup_generated(G, (H | C).elements())
                if K not in found:
                    new.add(K)
        found |= new
        frontier = new
    return sorted(found, key=lambda s: (len(s), s.bits))


def generating_set(G: FiniteGroup, key=None) -> list[int]:
    """Small generating set chosen greedily: each step takes the element that
    enlarges the generated subgroup most (ties broken by ``key``, then index)."""
    key = key or (lambda x: 0)
    gens: list[int] = []
    H = G.trivial()
    while len(H) < G.order:
        best = None
        for x in range(G.order):
            if x in H:
                continue
            size = len(subgroup_generated(G, gens + [x]))
            cand = (-size, key(x), x)
            if best is None or cand < best:
                best = cand
        gens.append(best[2])
        H = subgroup_generated(G, gens)
    return gens


def minimal_generating_set(G: FiniteGroup) -> list[int]:
    """Lexicographically first generating set of minimum size (brute force)."""
    if G.order == 1:
        return []
    others = [x for x in range(G.order) if x != G.identity]
    for k in range(1, len(others) + 1):
        for combo in combinations(others, k):
            if len(subgroup_generated(G, combo)) == G.order:
                return list(combo)
    raise AssertionError("unreachable")


# ---------------------------------------------------------------- morphisms

def _group_of(obj) -> FiniteGroup:
    return obj.group if hasattr(obj, "star") else obj


def hom_violation(source, target, mapping: Sequence[int]):
    """First ``(op, x, y)`` where ``mapping`` fails to respect ``op``
    (``"mul"`` then ``"star"`` when both ends carry a star), else None."""
    Gs, Gt = _group_of(source), _group_of(target)
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (Gs.order,) or f.min() < 0 or f.max() >= Gt.order:
        raise ValueError("map table has the wrong shape or range")
    bad = f[Gs.mul] != Gt.mul[f[:, None], f[None, :]]
    if bad.any():
        x, y = np.unravel_index(int(np.argmax(bad)), bad.shape)
        return ("mul", int(x), int(y))
    if hasattr(source, "star") and hasattr(target, "star"):
        bad = f[source.star] != target.star[f[:, None], f[None, :]]
        if bad.any():
            x, y = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return ("star", int(x), int(y))
    return None


@dataclass(frozen=True)
class Morphism:
    """An index map between two carriers, tagged with the strongest kind it
    satisfies: ``group-hom``, ``mla-hom``, ``group-iso`` or ``mla-iso``."""

    source: object = field(repr=False, compare=False)
    target: object = field(repr=False, compare=False)
    map: tuple[int, ...]
    kind: str

    @classmethod
    def build(cls, source, target, mapping: Sequence[int]) -> "Morphism":
        mapping = tuple(int(v) for v in mapping)
        bad = hom_violation(source, target, mapping)
        if bad is not None and bad[0] == "mul":
            raise NotAHomomorphism(f"not a group homomorphism at {bad[1:]}", bad)
        mla = hasattr(source, "star") and hasattr(target, "star") and bad is None
        bij = len(set(mapping)) == len(mapping) == _group_of(target).order
        kind = ("mla" if mla else "group") + ("-iso" if bij else "-hom")
        return cls(source, target, mapping, kind)

    @property
    def is_mla_hom(self) -> bool:
        return self.kind.startswith("mla")

    @property
    def is_iso(self) -> bool:
        return self.kind.endswith("iso")

    def kernel(self) -> Subset:
        e = _group_of(self.target).identity
        return Subset.of(len(self.map), [x for x, y in enumerate(self.map) if y == e])

    def image(self) -> Subset:
        return Subset.of(_group_of(self.target).order, set(self.map))

    def then(self, other: "Morphism") -> "Morphism":
        """``other`` after ``self``."""
        return Morphism.build(self.source, other.target, [other.map[v] for v in self.map])

    def inverse(self) -> "Morphism":
        if not self.is_iso:
            raise ValueError("only isomorphisms can be inverted")
        back = [0] * len(self.map)
        for x, y in enumerate(self.map):
            back[y] = x
        return Morphism.build(self.target, self.source, back)


def automorphisms(G: FiniteGroup) -> list[Morphism]:
    """All automorphisms, ordered lexicographically by map table."""
    from .search import search_maps

    maps = search_maps(G, G, find_all=True)
    return [Morphism(G, G, m, "group-iso") for m in sorted(maps)]
