"""Multiplicative Lie algebra structures on finite groups.

A structure is a second binary operation ``star`` on a group satisfying,
for all x, y, z (with ``^x y = x y x^-1``):

1. ``x * x = 1``
2. ``x * (yz) = (x * y) ^y(x * z)``
3. ``(xy) * z = ^x(y * z) (x * z)``
4. ``((x * y) * ^y z) ((y * z) * ^z x) ((z * x) * ^x y) = 1``
5. ``^z(x * y) = ^z x * ^z y``
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .errors import AxiomViolation, NotAnIdeal, NotASubalgebra, StarNotWellDefined
from .group import (FiniteGroup, Morphism, center, is_subgroup, normalized,
                    quotient_group, subgroup_generated)
from .subset import Subset


@dataclass(frozen=True)
class ConstructionLabel:
    """Where a constructed algebra came from.

    ``coords[k]`` describes element ``k`` in terms of the inputs, e.g. the
    pair ``(g, a)`` of an excision.
    """

    kind: str
    inputs: tuple[str, ...] = ()
    params: dict = field(default_factory=dict, compare=False)
    coords: Optional[tuple] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "inputs": list(self.inputs), "params": dict(self.params)}


class MultLieAlg:
    """A group together with a validated star table.

    Only :func:`check_axioms` sets ``validated``.
    """

    def __init__(self, group: FiniteGroup, star, label: Optional[ConstructionLabel] = None,
                 name: str = ""):
        self.group = group
        self.star = np.array(star, dtype=np.int64)
        self.star.setflags(write=False)
        self.label = label
        self.name = name or group.name
        self.validated = False

    @cached_property
    def s(self) -> list[list[int]]:
        return self.star.tolist()

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def identity(self) -> int:
        return self.group.identity

    def label_of(self, x: int) -> str:
        return self.group.label(x)

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(self.group.mul.astype("<i8").tobytes())
        h.update(self.star.astype("<i8").tobytes())
        return h.hexdigest()[:16]

    def same_tables(self, other: "MultLieAlg") -> bool:
        return self.group.same_tables(other.group) and bool((self.star == other.star).all())

    def __repr__(self) -> str:
        return f"MultLieAlg({self.name or '?'}, order={self.order})"


def axiom_violation(group: FiniteGroup, star) -> Optional[AxiomViolation]:
    S = np.asarray(star, dtype=np.int64)
    n = group.order
    if S.shape != (n, n):
        raise ValueError(f"star table must be {n}x{n}")
    if S.min() < 0 or S.max() >= n:
        raise ValueError("star entries must lie in 0..n-1")
    hit = kernels.backend.axiom_violation(group.mul, group.inv, S, group.identity)
    if hit is None:
        return None
    axiom, *w = hit
    w = tuple(int(v) for v in w if v >= 0)
    if axiom == 1:
        w = (w[0], w[0])
    return AxiomViolation(int(axiom), w, group.element_names)


def check_axioms(group: FiniteGroup, star, label=None, name: str = "") -> MultLieAlg:
    """Validate all five identities by brute force over every triple."""
    bad = axiom_violation(group, star)
    if bad is not None:
        raise bad
    M = MultLieAlg(group, star, label, name)
    M.validated = True
    return M


def trivial_star(G: FiniteGroup) -> np.ndarray:
    return np.full((G.order, G.order), G.identity, dtype=np.int64)


def commutator_star(G: FiniteGroup) -> np.ndarray:
    n = G.order
    return np.array([[G.commutator(x, y) for y in range(n)] for x in range(n)], dtype=np.int64)


def normalized_mla(M: MultLieAlg) -> MultLieAlg:
    """Relabel so the identity sits at index 0."""
    G2, perm = normalized(M.group)
    if G2 is M.group:
        return M
    n = M.order
    back = [0] * n
    for old, new in enumerate(perm):
        back[new] = old
    star = [[perm[M.s[back[a]][back[b]]] for b in range(n)] for a in range(n)]
    label = M.label
    if label is not None and label.coords is not None:
        label = ConstructionLabel(label.kind, label.inputs, label.params,
                                  tuple(label.coords[back[a]] for a in range(n)))
    return check_axioms(G2, star, label, M.name)


# ------------------------------------------------------------------ subsets

def lie_center(M: MultLieAlg) -> Subset:
    e = M.identity
    return M.group.subset(x for x in range(M.order) if all(v == e for v in M.s[x]))


def mult_lie_center(M: MultLieAlg) -> Subset:
    G = M.group
    n = M.order
    return G.subset(x for x in range(n) if all(M.s[x][y] == G.commutator(x, y) for y in range(n)))


def double_center(M: MultLieAlg) -> Subset:
    """Group center intersected with the Lie center."""
    return center(M.group) & lie_center(M)


def star_values(M: MultLieAlg, left: Iterable[int], right: Iterable[int]) -> set[int]:
    right = list(right)
    return {M.s[x][y] for x in left for y in right}


def star_closure(M: MultLieAlg) -> Subset:
    """Subgroup generated by all star values; it is automatically an ideal."""
    r = range(M.order)
    return subgroup_generated(M.group, sorted(star_values(M, r, r)))


def is_subalgebra(M: MultLieAlg, S: Subset) -> bool:
    if not is_subgroup(M.group, S):
        return False
    els = S.elements()
    return all(M.s[x][y] in S for x in els for y in els)


def ideal_violation(M: MultLieAlg, S: Subset):
    """Why ``S`` is not an ideal, as ``(reason, witness)``; None if it is.

    Reasons: ``"subgroup"``, ``"normal"`` with ``(g, s, g s g^-1)``, or
    ``"star"`` with ``(g, s, g * s)``.
    """
    G = M.group
    if not is_subgroup(G, S):
        return ("subgroup", ())
    for g in range(M.order):
        for s in S:
            c = G.conj(g, s)
            if c not in S:
                return ("normal", (g, s, c))
    for g in range(M.order):
        for s in S:
            v = M.s[g][s]
            if v not in S:
                return ("star", (g, s, v))
    return None


def is_ideal(M: MultLieAlg, S: Subset) -> bool:
    return ideal_violation(M, S) is None


def ideal_generated(M: MultLieAlg, seed: Iterable[int] | Subset) -> Subset:
    """Least ideal containing ``seed``."""
    G = M.group
    S = subgroup_generated(G, list(seed))
    while True:
        els = S.elements()
        extra = {G.conj(g, s) for g in range(M.order) for s in els}
        extra |= {M.s[g][s] for g in range(M.order) for s in els}
        T = subgroup_generated(G, sorted(extra | set(els)))
        if T == S:
            return S
        S = T


def all_ideals(M: MultLieAlg) -> list[Subset]:
    from .group import all_subgroups

    return [H for H in all_subgroups(M.group) if is_ideal(M, H)]


# ------------------------------------------------------------- derived algebras

def restrict(M: MultLieAlg, S: Subset, kind: str = "restrict") -> MultLieAlg:
    """The subalgebra on ``S`` with indices renumbered in ascending order."""
    if not is_subalgebra(M, S):
        raise NotASubalgebra(f"{S} is not a subalgebra")
    els = S.elements()
    pos = {x: k for k, x in enumerate(els)}
    G = M.group
    mul = [[pos[G.m[a][b]] for b in els] for a in els]
    star = [[pos[M.s[a][b]] for b in els] for a in els]
    inv = [pos[G.i[a]] for a in els]
    names = [G.label(a) for a in els] if G.element_names else None
    H = FiniteGroup(mul, pos[G.identity], inv, names)
    label = ConstructionLabel(kind, (M.digest(),), {}, tuple(els))
    return normalized_mla(check_axioms(H, star, label))


def quotient_mla(M: MultLieAlg, I: Subset) -> tuple[MultLieAlg, Morphism]:
    """``M / I`` with star computed on minimal coset representatives."""
    bad = ideal_violation(M, I)
    if bad is not None:
        raise NotAnIdeal(f"{I} is not an ideal: {bad[0]} {bad[1]}")
    Q, proj = quotient_group(M.group, I)
    which = proj.map
    reps = sorted({min(x for x in range(M.order) if which[x] == c) for c in range(Q.order)})
    star = [[which[M.s[a][b]] for b in reps] for a in reps]
    for x in range(M.order):
        for y in range(M.order):
            if which[M.s[x][y]] != star[which[x]][which[y]]:
                raise StarNotWellDefined(f"star does not descend at ({x}, {y})")
    label = ConstructionLabel("quotient", (M.digest(),), {"ideal": list(I)}, tuple(reps))
    MQ = check_axioms(Q, star, label)
    return MQ, Morphism.build(M, MQ, which)
