"""Backtracking search for structure-preserving bijections.

Images are chosen for a small generating set only; every choice is closed
under the products of the carrier (and the star, for algebras) by the
``extend_map`` kernel, which rejects non-injective or colour-breaking
extensions immediately. The search is exhaustive, so an empty result is a
proof that no map exists.
"""
from __future__ import annotations

from collections import Counter

from . import kernels
from .group import generating_set


def _parts(obj):
    if hasattr(obj, "star"):
        return obj.group, obj.star
    return obj, None


def _initial_colors(obj) -> list[tuple]:
    G, S = _parts(obj)
    n = G.order
    conj_size = [len({G.conj(g, x) for g in range(n)}) for x in range(n)]
    base = [(G.element_orders[x], conj_size[x]) for x in range(n)]
    if S is None:
        return base
    s = S.tolist()
    e = G.identity
    out = []
    for x in range(n):
        row = s[x]
        lie = all(v == e for v in row)
        mult = all(row[y] == G.commutator(x, y) for y in range(n))
        hist = tuple(sorted(Counter(G.element_orders[v] for v in row).items()))
        out.append(base[x] + (lie, mult, hist))
    return out


def refine_colors(objs: list) -> list[list[int]]:
    """Joint colour refinement of several carriers.

    Equal colours across carriers are comparable, and any structure
    preserving bijection maps each element to one of the same colour.
    """
    parts = [_parts(o) for o in objs]
    raw = [_initial_colors(o) for o in objs]

    def relabel(keys_per_obj):
        table = {k: i for i, k in enumerate(sorted({k for ks in keys_per_obj for k in ks}))}
        return [[table[k] for k in ks] for ks in keys_per_obj]

    cols = relabel(raw)
    nclasses = len({c for cs in cols for c in cs})
    n_max = max(G.order for G, _ in parts)
    for _ in range(n_max):
        keys = []
        for (G, S), c in zip(parts, cols):
            m = G.m
            s = S.tolist() if S is not None else None
            ks = []
            for x in range(G.order):
                if s is None:
                    sig = sorted((c[y], c[m[x][y]], c[m[y][x]]) for y in range(G.order))
                else:
                    sig = sorted((c[y], c[m[x][y]], c[m[y][x]], c[s[x][y]], c[s[y][x]])
                                 for y in range(G.order))
                ks.append((c[x], tuple(sig)))
            keys.append(ks)
        new = relabel(keys)
        k = len({c for cs in new for c in cs})
        cols = new
        if k == nclasses:
            break
        nclasses = k
    return cols


def search_maps(src, tgt, find_all: bool = False, colors=None) -> list[tuple[int, ...]]:
    """Bijections ``src -> tgt`` preserving multiplication (and star when both
    are algebras). Returns the first one found, or all with ``find_all``."""
    Gs, Ss = _parts(src)
    Gt, St = _parts(tgt)
    if Gs.order != Gt.order:
        return []
    use_star = Ss is not None and St is not None
    if not use_star:
        Ss = St = None
    cs, ct = colors if colors is not None else refine_colors(
        [Gs if Ss is None else src, Gt if St is None else tgt])
    if sorted(cs) != sorted(ct):
        return []

    n = Gs.order
    bk = kernels.backend
    mul1, mul2 = bk.as_table(Gs.mul), bk.as_table(Gt.mul)
    star1 = bk.as_table(Ss if use_star else Gs.mul)
    star2 = bk.as_table(St if use_star else Gt.mul)
    col1, col2 = bk.as_table(cs), bk.as_table(ct)
    mapping, inverse, dom = bk.buffer(n, -1), bk.buffer(n, -1), bk.buffer(n, 0)

    freq = Counter(cs)
    gens = generating_set(Gs, key=lambda x: (freq[cs[x]], x))
    by_color: dict[int, list[int]] = {}
    for y in range(n):
        by_color.setdefault(int(ct[y]), []).append(y)

    found: list[tuple[int, ...]] = []

    def rollback(lo, hi):
        for k in range(lo, hi):
            p = int(dom[k])
            inverse[int(mapping[p])] = -1
            mapping[p] = -1

    def assign(x, y, ndom):
        mapping[x] = y
        inverse[y] = x
        dom[ndom] = x
        r = bk.extend_map(mapping, inverse, dom, ndom + 1, ndom, mul1, star1, mul2, star2,
                          col1, col2, use_star)
        if r < 0:
            rollback(ndom, -r - 1)
            return -1
        return r

    ndom = assign(Gs.identity, Gt.identity, 0)
    if ndom < 0:
        return []

    def rec(level, ndom):
        if level == len(gens):
            if ndom == n:
                found.append(tuple(int(v) for v in mapping))
                return not find_all
            return False
        g = gens[level]
        if mapping[g] != -1:
            return rec(level + 1, ndom)
        for y in by_color.get(int(cs[g]), ()):
            if inverse[y] != -1:
                continue
            r = assign(g, y, ndom)
            if r < 0:
                continue
            if rec(level + 1, r):
                return True
            rollback(ndom, r)
        return False

    rec(0, ndom)
    return found
