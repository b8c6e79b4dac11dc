"""Exhaustive search for every star structure on a small group.

Axioms 2 and 3 express ``x * (yz)`` and ``(xy) * z`` through values on
shorter words, so a structure is fixed by its values on pairs of
generators; with axiom 1 and the derived rule ``y * x = (x * y)^-1`` only
the pairs ``gi * gj`` with ``i < j`` are free.  The search walks those,
expands each candidate through axioms 2/3 (rejecting on the first clash)
and then brute-checks all five axioms on the full table.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Optional, Sequence

from .algebra import MultLieAlg, axiom_violation, check_axioms
from .analysis import find_isomorphism, fingerprint
from .errors import OrderTooLarge
from .group import FiniteGroup, automorphisms, minimal_generating_set

HARD_MAX_ORDER = 12


def expand_star(G: FiniteGroup, gens: Sequence[int], values) -> Optional[list[list[int]]]:
    """Extend ``values[(i, j)] = gens[i] * gens[j]`` to a full table.

    Uses ``g * (z h) = (g * z) ^z(g * h)`` for the generator rows and
    ``(w g) * z = ^w(g * z) (w * z)`` for the rest. Returns None when two
    derivations of one entry disagree; a returned table still has to pass
    :func:`check_axioms`.
    """
    n, e, m = G.order, G.identity, G.m
    k = len(gens)
    rows = []
    for a in range(k):
        row = [-1] * n
        row[e] = e
        frontier = [e]
        while frontier:
            nxt = []
            for z in frontier:
                for b in range(k):
                    w = m[z][gens[b]]
                    v = m[row[z]][G.conj(z, values[(a, b)])]
                    if row[w] == -1:
                        row[w] = v
                        nxt.append(w)
                    elif row[w] != v:
                        return None
            frontier = nxt
        if -1 in row:
            return None
        rows.append(row)

    table: list = [None] * n
    table[e] = [e] * n
    frontier = [e]
    while frontier:
        nxt = []
        for w0 in frontier:
            base = table[w0]
            for a in range(k):
                w = m[w0][gens[a]]
                row = [m[G.conj(w0, rows[a][z])][base[z]] for z in range(n)]
                if table[w] is None:
                    table[w] = row
                    nxt.append(w)
                elif table[w] != row:
                    return None
        frontier = nxt
    if any(r is None for r in table):
        return None
    return table


def star_from_generators(G: FiniteGroup, assignments: dict[tuple[int, int], int], name: str = "") -> MultLieAlg:
    """Validated algebra from values on generator pairs ``{(g, h): g * h}``.

    Only one orientation per pair is needed: ``g * g = 1`` and
    ``h * g = (g * h)^-1`` fill in the rest.
    """
    gens = sorted({g for pair in assignments for g in pair})
    vals = {}
    for a, g in enumerate(gens):
        for b, h in enumerate(gens):
            if g == h:
                vals[(a, b)] = G.identity
            elif (g, h) in assignments:
                vals[(a, b)] = assignments[(g, h)]
            elif (h, g) in assignments:
                vals[(a, b)] = G.i[assignments[(h, g)]]
            else:
                raise ValueError(f"no value for generator pair ({g}, {h})")
    from .group import subgroup_generated

    if len(subgroup_generated(G, gens)) != G.order:
        raise ValueError("assignment keys must generate the group")
    table = expand_star(G, gens, vals)
    if table is None:
        raise ValueError("generator values are inconsistent with axioms 2 and 3")
    return check_axioms(G, table, name=name)


@dataclass(frozen=True)
class StructureCatalog:
    group: FiniteGroup
    tables: tuple  # each a tuple of row tuples, ascending
    automorphism_classes: Optional[tuple] = None
    isomorphism_classes: Optional[tuple] = None
    class_fingerprints: Optional[tuple] = field(default=None)
    complete: bool = True

    def algebras(self) -> list[MultLieAlg]:
        return [check_axioms(self.group, t) for t in self.tables]

    def group_hash(self) -> str:
        return hashlib.sha256(self.group.mul.astype("<i8").tobytes()).hexdigest()[:16]

    def to_dict(self) -> dict:
        from .io import group_to_dict

        out = {
            "group": group_to_dict(self.group),
            "group_hash": self.group_hash(),
            "count": len(self.tables),
            "tables": [[list(r) for r in t] for t in self.tables],
        }
        if self.automorphism_classes is not None:
            out["partitions"] = {
                "automorphism": [list(c) for c in self.automorphism_classes],
                "isomorphism": [list(c) for c in self.isomorphism_classes],
            }
            out["class_fingerprints"] = [fp.to_dict() for fp in self.class_fingerprints]
        return out


def enumerate_structures(G: FiniteGroup, limit: Optional[int] = None,
                         max_order: int = HARD_MAX_ORDER) -> StructureCatalog:
    """All star tables on ``G`` satisfying the five axioms, ascending."""
    if max_order > HARD_MAX_ORDER:
        raise ValueError(f"max_order can be lowered, not raised above {HARD_MAX_ORDER}")
    if G.order > max_order:
        raise OrderTooLarge(f"enumeration is capped at order {max_order}, got {G.order}")
    n, e = G.order, G.identity
    gens = minimal_generating_set(G)
    k = len(gens)
    free = [(a, b) for a in range(k) for b in range(a + 1, k)]
    found = set()
    for choice in product(range(n), repeat=len(free)):
        vals = {(a, a): e for a in range(k)}
        for (a, b), v in zip(free, choice):
            vals[(a, b)] = v
            vals[(b, a)] = G.i[v]
        table = expand_star(G, gens, vals)
        if table is None:
            continue
        if axiom_violation(G, table) is None:
            found.add(tuple(tuple(r) for r in table))
    tables = tuple(sorted(found))
    complete = limit is None or limit >= len(tables)
    return StructureCatalog(G, tables[:limit] if limit is not None else tables, complete=complete)


def transport(table, sigma: Sequence[int]) -> tuple:
    """``(sigma . star)(x, y) = sigma(star(sigma^-1 x, sigma^-1 y))``."""
    n = len(sigma)
    back = [0] * n
    for x, y in enumerate(sigma):
        back[y] = x
    return tuple(tuple(sigma[table[back[x]][back[y]]] for y in range(n)) for x in range(n))


def _canonical(classes: list[list[int]]) -> tuple:
    return tuple(sorted(tuple(sorted(c)) for c in classes))


def classify(catalog: StructureCatalog) -> StructureCatalog:
    """Attach both partitions of the catalog.

    ``automorphism_classes`` are orbits under transport by ``Aut(G)``;
    ``isomorphism_classes`` come from fingerprint buckets confirmed by
    isomorphism search. Class representatives (first index) are the
    lexicographically least tables.
    """
    tables = catalog.tables
    index = {t: i for i, t in enumerate(tables)}
    auts = automorphisms(catalog.group)
    seen = [False] * len(tables)
    aut_classes = []
    for i, t in enumerate(tables):
        if seen[i]:
            continue
        orbit = set()
        for sigma in auts:
            j = index.get(transport(t, sigma.map))
            if j is None:
                if catalog.complete:
                    raise AssertionError("catalog is not closed under automorphisms")
                continue
            orbit.add(j)
        for j in orbit:
            seen[j] = True
        aut_classes.append(sorted(orbit))

    algs = catalog.algebras()
    fps = [fingerprint(A) for A in algs]
    iso_classes: list[list[int]] = []
    for i, A in enumerate(algs):
        for cls in iso_classes:
            r = cls[0]
            if fps[r] == fps[i] and find_isomorphism(algs[r], A) is not None:
                cls.append(i)
                break
        else:
            iso_classes.append([i])

    iso = _canonical(iso_classes)
    return replace(catalog, automorphism_classes=_canonical(aut_classes),
                   isomorphism_classes=iso,
                   class_fingerprints=tuple(fps[c[0]] for c in iso))
