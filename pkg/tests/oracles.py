"""Slow, independent reference implementations used to cross-check the library.

Nothing here imports the search or enumeration code; only plain tables go in.
"""
from itertools import permutations


def inverse_table(mul):
    n = len(mul)
    e = next(i for i in range(n) if all(mul[i][j] == j for j in range(n)))
    return e, [next(j for j in range(n) if mul[i][j] == e) for i in range(n)]


def axioms_hold(mul, star):
    """All five identities, checked with plain loops."""
    n = len(mul)
    e, inv = inverse_table(mul)

    def m(*xs):
        out = e
        for x in xs:
            out = mul[out][x]
        return out

    def conj(x, y):
        return m(x, y, inv[x])

    r = range(n)
    if any(star[x][x] != e for x in r):
        return False
    for x in r:
        for y in r:
            for z in r:
                if star[x][m(y, z)] != m(star[x][y], conj(y, star[x][z])):
                    return False
                if star[m(x, y)][z] != m(conj(x, star[y][z]), star[x][z]):
                    return False
                t = m(star[star[x][y]][conj(y, z)], star[star[y][z]][conj(z, x)],
                      star[star[z][x]][conj(x, y)])
                if t != e:
                    return False
                if conj(z, star[x][y]) != star[conj(z, x)][conj(z, y)]:
                    return False
    return True


def enumerate_cellwise(mul):
    """Every valid star table, found by row-major cell backtracking.

    Only the diagonal is forced.  Axioms 2, 3 and 5 prune as soon as the cells
    they read are filled; the full check runs on complete tables.
    """
    n = len(mul)
    e, inv = inverse_table(mul)

    def conj(x, y):
        return mul[mul[x][y]][inv[x]]

    cells = [(x, y) for x in range(n) for y in range(n) if x != y]
    pos = {c: k for k, c in enumerate(cells)}
    for x in range(n):
        pos[(x, x)] = -1
    checks = [[] for _ in cells]

    def add(reads, pred):
        last = max(pos[c] for c in reads)
        if last >= 0:
            checks[last].append(pred)

    for x in range(n):
        for y in range(n):
            for z in range(n):
                add([(x, mul[y][z]), (x, y), (x, z)],
                    lambda S, x=x, y=y, z=z: S[x][mul[y][z]] == mul[S[x][y]][conj(y, S[x][z])])
                add([(mul[x][y], z), (y, z), (x, z)],
                    lambda S, x=x, y=y, z=z: S[mul[x][y]][z] == mul[conj(x, S[y][z])][S[x][z]])
                add([(x, y), (conj(z, x), conj(z, y))],
                    lambda S, x=x, y=y, z=z: conj(z, S[x][y]) == S[conj(z, x)][conj(z, y)])

    S = [[e if i == j else None for j in range(n)] for i in range(n)]
    found = []

    def go(k):
        if k == len(cells):
            if axioms_hold(mul, S):
                found.append(tuple(tuple(r) for r in S))
            return
        x, y = cells[k]
        for v in range(n):
            S[x][y] = v
            if all(p(S) for p in checks[k]):
                go(k + 1)
        S[x][y] = None

    go(0)
    return sorted(found)


def isomorphic_bruteforce(mul1, star1, mul2, star2):
    """Try every bijection; only for very small orders."""
    n = len(mul1)
    if n != len(mul2):
        return False
    for p in permutations(range(n)):
        if all(p[mul1[x][y]] == mul2[p[x]][p[y]] and p[star1[x][y]] == star2[p[x]][p[y]]
               for x in range(n) for y in range(n)):
            return True
    return False


def iso_classes_bruteforce(mul, tables):
    reps = []
    for t in tables:
        if not any(isomorphic_bruteforce(mul, t, mul, r) for r in reps):
            reps.append(t)
    return len(reps)


def orbit_count(mul, tables):
    """Number of orbits of the star tables under group automorphisms found by
    testing every permutation that fixes the identity."""
    n = len(mul)
    e, _ = inverse_table(mul)
    rest = [x for x in range(n) if x != e]
    auts = []
    for p in permutations(rest):
        f = [0] * n
        f[e] = e
        for x, y in zip(rest, p):
            f[x] = y
        if all(f[mul[x][y]] == mul[f[x]][f[y]] for x in range(n) for y in range(n)):
            auts.append(f)
    seen, orbits = set(), 0
    for t in tables:
        if t in seen:
            continue
        orbits += 1
        for f in auts:
            img = [[None] * n for _ in range(n)]
            for x in range(n):
                for y in range(n):
                    img[f[x]][f[y]] = f[t[x][y]]
            seen.add(tuple(tuple(r) for r in img))
    return orbits
