"""Pure-Python fallback for the hot kernels.

Must stay behaviourally identical to ``_ckernels.pyx``; the test suite runs
both through the same cases.
"""
import numpy as np

NAME = "python"


def as_table(a):
    return np.asarray(a, dtype=np.int64).tolist()


def buffer(n, fill):
    return [fill] * n


def _first(mask, axiom):
    if not mask.any():
        return None
    idx = np.unravel_index(int(np.argmax(mask)), mask.shape)
    w = [int(i) for i in idx] + [-1] * (3 - len(idx))
    return (axiom, w[0], w[1], w[2])


def axiom_violation(mul, inv, star, e):
    """First violated identity as ``(axiom, x, y, z)``; unused slots are -1.

    Axioms are tried in order 1..5 and each is scanned in row-major
    ``(x, y, z)`` order, so the witness is the lexicographic minimum.
    """
    M = np.asarray(mul, dtype=np.int64)
    S = np.asarray(star, dtype=np.int64)
    V = np.asarray(inv, dtype=np.int64)
    n = M.shape[0]
    r = np.arange(n)
    # conj[a, b] = a b a^-1
    C = M[M, V[:, None]]

    bad = np.diagonal(S) != e
    if bad.any():
        x = int(np.argmax(bad))
        return (1, x, -1, -1)

    x = r[:, None, None]
    y = r[None, :, None]
    z = r[None, None, :]

    lhs = S[x, M[y, z]]
    rhs = M[S[x, y], C[y, S[x, z]]]
    hit = _first(lhs != rhs, 2)
    if hit:
        return hit

    lhs = S[M[x, y], z]
    rhs = M[C[x, S[y, z]], S[x, z]]
    hit = _first(lhs != rhs, 3)
    if hit:
        return hit

    t1 = S[S[x, y], C[y, z]]
    t2 = S[S[y, z], C[z, x]]
    t3 = S[S[z, x], C[x, y]]
    hit = _first(M[M[t1, t2], t3] != e, 4)
    if hit:
        return hit

    lhs = C[z, S[x, y]]
    rhs = S[C[z, x], C[z, y]]
    return _first(lhs != rhs, 5)


def extend_map(mapping, inverse, dom, ndom, start, mul1, star1, mul2, star2,
               col1, col2, use_star):
    """Close a partial injective map under the products of both algebras.

    ``dom[:ndom]`` lists mapped elements; entries from ``start`` on are not
    yet combined with their predecessors.  Returns the new domain size, or
    ``-(size) - 1`` on conflict (the caller rolls back ``dom[old:size]``).
    """
    i = start
    while i < ndom:
        x = dom[i]
        fx = mapping[x]
        for j in range(i + 1):
            y = dom[j]
            fy = mapping[y]
            if use_star:
                pairs = ((mul1[x][y], mul2[fx][fy]), (mul1[y][x], mul2[fy][fx]),
                         (star1[x][y], star2[fx][fy]), (star1[y][x], star2[fy][fx]))
            else:
                pairs = ((mul1[x][y], mul2[fx][fy]), (mul1[y][x], mul2[fy][fx]))
            for p, q in pairs:
                cur = mapping[p]
                if cur == -1:
                    if inverse[q] != -1 or col1[p] != col2[q]:
                        return -ndom - 1
                    mapping[p] = q
                    inverse[q] = p
                    dom[ndom] = p
                    ndom += 1
                elif cur != q:
                    return -ndom - 1
        i += 1
    return ndom
