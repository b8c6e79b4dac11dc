"""Algebra-producing constructions.

Pair carriers are laid out row-major: the element ``(g, a)`` of ``G x I``
gets index ``g * |I| + pos(a)`` where ``pos`` ranks ``I`` ascending.  All
outputs are re-validated against the five axioms before being returned.
"""
from __future__ import annotations

from itertools import product

from .algebra import (ConstructionLabel, MultLieAlg, check_axioms, ideal_violation,
                      normalized_mla, quotient_mla)
from .errors import (CentralityLost, NotAHomomorphism, NotAnIdeal, NotCentral,
                     OrderTooLarge, VerificationFailed)
from .group import FiniteGroup, Morphism, center, hom_violation
from .subset import MAX_ORDER, Subset


def _cap(n: int) -> None:
    if n > MAX_ORDER:
        raise OrderTooLarge(f"constructed order {n} exceeds the cap of {MAX_ORDER}")


def _pair_name(*parts: str) -> str:
    return "(" + ",".join(parts) + ")"


def direct_product_mla(M1: MultLieAlg, M2: MultLieAlg) -> MultLieAlg:
    from .group import direct_product_group

    M1, M2 = normalized_mla(M1), normalized_mla(M2)
    G = direct_product_group(M1.group, M2.group)
    n2 = M2.order
    s1, s2 = M1.s, M2.s
    N = G.order
    star = [[s1[a // n2][b // n2] * n2 + s2[a % n2][b % n2] for b in range(N)] for a in range(N)]
    coords = tuple((a // n2, a % n2) for a in range(N))
    label = ConstructionLabel("direct_product", (M1.digest(), M2.digest()), {}, coords)
    return check_axioms(G, star, label)


def _check_central_ideal(M: MultLieAlg, I: Subset) -> None:
    bad = ideal_violation(M, I)
    if bad is not None:
        raise NotAnIdeal(f"{list(I)} is not an ideal ({bad[0]} at {bad[1]})")
    Z = center(M.group)
    for a in I:
        if a not in Z:
            raise NotCentral(a)


def _extension(M: MultLieAlg, I: Subset, kind: str) -> MultLieAlg:
    M = normalized_mla(M)
    _check_central_ideal(M, I)
    G = M.group
    m, s, inv = G.m, M.s, G.i
    els = I.elements()
    k = len(els)
    pos = {a: i for i, a in enumerate(els)}
    n = G.order * k
    _cap(n)
    pairs = [(g, a) for g in range(G.order) for a in els]
    keep_ab = kind == "excision"

    def second(g, a, h, b):
        v = m[s[g][b]][s[a][h]]
        if keep_ab:
            v = m[v][s[a][b]]
        return pos[v]

    mul = [[m[g][h] * k + pos[m[a][b]] for (h, b) in pairs] for (g, a) in pairs]
    star = [[s[g][h] * k + second(g, a, h, b) for (h, b) in pairs] for (g, a) in pairs]
    ginv = [inv[g] * k + pos[inv[a]] for (g, a) in pairs]
    names = [_pair_name(G.label(g), G.label(a)) for (g, a) in pairs]
    H = FiniteGroup(mul, G.identity * k + pos[G.identity], ginv, names)
    label = ConstructionLabel(kind, (M.digest(),), {"ideal": list(els)}, tuple(pairs))
    return check_axioms(H, star, label)


def excision(M: MultLieAlg, I: Subset) -> MultLieAlg:
    """``G (+) I`` with ``(g,a)*'(h,b) = (g*h, (g*b)(a*h)(a*b))``.

    Requires ``I`` to be an ideal inside the group center.
    """
    return _extension(M, I, "excision")


def idealization(M: MultLieAlg, I: Subset) -> MultLieAlg:
    """``G x| I`` with ``(g,a)*''(h,b) = (g*h, (g*b)(a*h))``."""
    return _extension(M, I, "idealization")


def fiber_ideal(M: MultLieAlg, E: MultLieAlg) -> Subset:
    """``{(1, a)}`` inside an excision or idealization ``E`` of ``M``."""
    e = M.identity
    return E.group.subset(x for x, (g, _a) in enumerate(E.label.coords) if g == e)


def excision_maps(M: MultLieAlg, I: Subset) -> tuple[Morphism, Morphism]:
    """Projection ``p(g,a) = g`` and inclusion ``i(g) = (g,1)``; checks ``p o i = id``."""
    M = normalized_mla(M)
    E = excision(M, I)
    coords = E.label.coords
    p = Morphism.build(E, M, [g for (g, _a) in coords])
    where = {c: x for x, c in enumerate(coords)}
    i = Morphism.build(M, E, [where[(g, M.identity)] for g in range(M.order)])
    comp = i.then(p)
    if comp.map != tuple(range(M.order)):
        raise VerificationFailed("p o i is not the identity", comp.map)
    if not (p.is_mla_hom and i.is_mla_hom):
        raise VerificationFailed("p or i does not preserve the star")
    return p, i


# ------------------------------------------------------------ iterations

def iterated_excision_left(M: MultLieAlg, I: Subset, n: int) -> MultLieAlg:
    """``G (+)_n I``: excise again by the newest copy ``{1} (+) J`` of the ideal.

    Element ``k`` has ``label.coords[k] == (g, a1, ..., an)``; indices are
    row-major in those coordinates.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    M = normalized_mla(M)
    E = excision(M, I)
    flat = list(E.label.coords)
    J = fiber_ideal(M, E)
    for _ in range(n - 1):
        try:
            nxt = excision(E, J)
        except NotCentral as exc:
            raise CentralityLost(str(exc)) from exc
        flat = [flat[x] + (flat[j][-1],) for (x, j) in nxt.label.coords]
        J = nxt.group.subset(y for y, (x, _j) in enumerate(nxt.label.coords) if x == E.identity)
        E = nxt
    label = ConstructionLabel(f"iterated_left({n})", (M.digest(),), {"ideal": list(I), "n": n},
                              tuple(flat))
    E.label = label
    return E


def iterated_excision_right(M: MultLieAlg, I: Subset, n: int) -> MultLieAlg:
    """``G (+)^n I``: the excision formula applied slot by slot on ``G x I^n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    M = normalized_mla(M)
    _check_central_ideal(M, I)
    G = M.group
    m, s = G.m, M.s
    els = I.elements()
    k = len(els)
    _cap(G.order * k ** n)
    tuples = [(g,) + rest for g in range(G.order) for rest in product(els, repeat=n)]
    index = {t: x for x, t in enumerate(tuples)}

    def slot(g, a, h, b):
        return m[m[s[g][b]][s[a][h]]][s[a][b]]

    mul = [[index[tuple(m[u][v] for u, v in zip(t1, t2))] for t2 in tuples] for t1 in tuples]
    star = [[index[(s[t1[0]][t2[0]],) + tuple(slot(t1[0], a, t2[0], b)
                                              for a, b in zip(t1[1:], t2[1:]))]
             for t2 in tuples] for t1 in tuples]
    inv = [index[tuple(G.i[u] for u in t)] for t in tuples]
    names = [_pair_name(G.label(t[0]), _pair_name(*(G.label(a) for a in t[1:]))) for t in tuples]
    H = FiniteGroup(mul, index[(G.identity,) * (n + 1)], inv, names)
    label = ConstructionLabel(f"iterated_right({n})", (M.digest(),), {"ideal": list(els), "n": n},
                              tuple(tuples))
    return check_axioms(H, star, label)


def _coord_map(src: MultLieAlg, tgt: MultLieAlg, f) -> list[int]:
    where = {c: x for x, c in enumerate(tgt.label.coords)}
    return [where[f(c)] for c in src.label.coords]


def iterated_iso_pair(M: MultLieAlg, I: Subset, n: int) -> tuple[Morphism, Morphism]:
    """Explicit ``phi: G(+)_n I -> G(+)^n I`` and its inverse ``psi``.

    ``phi`` sends nested coordinates to running products
    ``(g, a1, a1 a2, ..., a1...an)``; ``psi`` takes consecutive quotients
    ``(g, c1, c2 c1^-1, ..., cn c(n-1)^-1)``.  Both are verified as
    star-preserving bijections and as mutually inverse.
    """
    M = normalized_mla(M)
    G = M.group
    m, inv = G.m, G.i
    L = iterated_excision_left(M, I, n)
    R = iterated_excision_right(M, I, n)

    def running(c):
        out, acc = [c[0]], G.identity
        for a in c[1:]:
            acc = m[acc][a]
            out.append(acc)
        return tuple(out)

    def quotients(c):
        out, prev = [c[0]], G.identity
        for a in c[1:]:
            out.append(m[a][inv[prev]])
            prev = a
        return tuple(out)

    phi = Morphism.build(L, R, _coord_map(L, R, running))
    psi = Morphism.build(R, L, _coord_map(R, L, quotients))
    for f, nm in ((phi, "phi"), (psi, "psi")):
        if f.kind != "mla-iso":
            raise VerificationFailed(f"{nm} is not an isomorphism of algebras",
                                     hom_violation(f.source, f.target, f.map))
    if phi.then(psi).map != tuple(range(L.order)):
        raise VerificationFailed("psi o phi is not the identity")
    return phi, psi


def canonical_iterated_iso(M: MultLieAlg, I: Subset, n: int) -> Morphism:
    """A verified isomorphism ``G(+)_n I -> G(+)^n I``.

    For ``n`` in 1..3 the explicit coordinate map is used; otherwise one is
    found by exhaustive search.
    """
    if n <= 3:
        return iterated_iso_pair(M, I, n)[0]
    from .analysis import find_isomorphism

    L = iterated_excision_left(M, I, n)
    R = iterated_excision_right(M, I, n)
    f = find_isomorphism(L, R)
    if f is None:
        raise VerificationFailed(f"no isomorphism found for n={n}")
    return f


# ------------------------------------------------------------ fiber products

def _require_hom(phi: Morphism, src: MultLieAlg, H: MultLieAlg, which: str) -> None:
    if len(phi.map) != src.order:
        raise NotAHomomorphism(f"{which}: map has the wrong length")
    bad = hom_violation(src, H, phi.map)
    if bad is not None:
        raise NotAHomomorphism(f"{which}: not an algebra homomorphism at {bad}", (which,) + bad)


def fiber_product(M1: MultLieAlg, M2: MultLieAlg, H: MultLieAlg,
                  phi1: Morphism, phi2: Morphism) -> MultLieAlg:
    """``{(x, y) : phi1(x) = phi2(y)}`` as a subalgebra of ``M1 x M2``.

    The carrier is listed by ascending pair index ``x * |M2| + y``; the
    product itself is never materialised, so it may exceed the order cap.
    """
    _require_hom(phi1, M1, H, "phi1")
    _require_hom(phi2, M2, H, "phi2")
    f1, f2 = phi1.map, phi2.map
    pairs = [(x, y) for x in range(M1.order) for y in range(M2.order) if f1[x] == f2[y]]
    _cap(len(pairs))
    index = {p: k for k, p in enumerate(pairs)}
    m1, m2, s1, s2 = M1.group.m, M2.group.m, M1.s, M2.s
    mul = [[index[(m1[x][u], m2[y][v])] for (u, v) in pairs] for (x, y) in pairs]
    star = [[index[(s1[x][u], s2[y][v])] for (u, v) in pairs] for (x, y) in pairs]
    inv = [index[(M1.group.i[x], M2.group.i[y])] for (x, y) in pairs]
    names = [_pair_name(M1.label_of(x), M2.label_of(y)) for (x, y) in pairs]
    G = FiniteGroup(mul, index[(M1.identity, M2.identity)], inv, names)
    label = ConstructionLabel("fiber_product", (M1.digest(), M2.digest(), H.digest()), {},
                              tuple(pairs))
    return normalized_mla(check_axioms(G, star, label))


def t2_isomorphisms(M: MultLieAlg, I: Subset) -> tuple[Morphism, Morphism, Morphism]:
    """The three fiber-product presentations of ``G (+) I`` with their maps.

    1. ``G x_{G/I} G``, ``(g, ga) -> (g, a)``
    2. ``(G x G) x_{G x G/I} G``, ``((g, gb), g) -> (g, b)``
    3. ``(G x G) x_{G/I x G/I} G/I``, ``((g, gc), gI) -> (g, c)``

    Each returned morphism goes from the fiber product onto the excision and
    is verified to be an isomorphism of algebras.
    """
    M = normalized_mla(M)
    G = M.group
    m, inv = G.m, G.i
    E = excision(M, I)
    exc_index = {c: x for x, c in enumerate(E.label.coords)}
    Q, pi = quotient_mla(M, I)
    p = pi.map

    F1 = fiber_product(M, M, Q, pi, pi)
    f1 = [exc_index[(g, m[inv[g]][g2])] for (g, g2) in F1.label.coords]

    GG = direct_product_mla(M, M)
    GQ = direct_product_mla(M, Q)
    nq = Q.order
    n = G.order
    psi = Morphism.build(GG, GQ, [(x // n) * nq + p[x % n] for x in range(GG.order)])
    phi = Morphism.build(M, GQ, [g * nq + p[g] for g in range(n)])
    F2 = fiber_product(GG, M, GQ, psi, phi)
    f2 = [exc_index[(x // n, m[inv[x // n]][x % n])] for (x, _g) in F2.label.coords]

    QQ = direct_product_mla(Q, Q)
    nu = Morphism.build(GG, QQ, [p[x // n] * nq + p[x % n] for x in range(GG.order)])
    mu = Morphism.build(Q, QQ, [c * nq + c for c in range(nq)])
    F3 = fiber_product(GG, Q, QQ, nu, mu)
    f3 = [exc_index[(x // n, m[inv[x // n]][x % n])] for (x, _c) in F3.label.coords]

    out = []
    for F, f, nm in ((F1, f1, "f1"), (F2, f2, "f2"), (F3, f3, "f3")):
        mor = Morphism.build(F, E, f)
        if mor.kind != "mla-iso":
            raise VerificationFailed(f"{nm} is not an isomorphism onto the excision",
                                     hom_violation(F, E, f))
        out.append(mor)
    return tuple(out)
