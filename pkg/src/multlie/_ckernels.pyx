# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t idx_t

NAME = "cython"


def as_table(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def buffer(Py_ssize_t n, idx_t fill):
    return np.full(n, fill, dtype=np.int64)


def axiom_violation(mul, inv, star, idx_t e):
    cdef const idx_t[:, ::1] M = np.ascontiguousarray(mul, dtype=np.int64)
    cdef const idx_t[:, ::1] S = np.ascontiguousarray(star, dtype=np.int64)
    cdef const idx_t[::1] V = np.ascontiguousarray(inv, dtype=np.int64)
    cdef Py_ssize_t n = M.shape[0]
    cdef Py_ssize_t x, y, z
    cdef idx_t t1, t2, t3
    C_arr = np.empty((n, n), dtype=np.int64)
    cdef idx_t[:, ::1] C = C_arr
    for x in range(n):
        for y in range(n):
            C[x, y] = M[M[x, y], V[x]]

    for x in range(n):
        if S[x, x] != e:
            return (1, x, -1, -1)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if S[x, M[y, z]] != M[S[x, y], C[y, S[x, z]]]:
                    return (2, x, y, z)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if S[M[x, y], z] != M[C[x, S[y, z]], S[x, z]]:
                    return (3, x, y, z)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                t1 = S[S[x, y], C[y, z]]
                t2 = S[S[y, z], C[z, x]]
                t3 = S[S[z, x], C[x, y]]
                if M[M[t1, t2], t3] != e:
                    return (4, x, y, z)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if C[z, S[x, y]] != S[C[z, x], C[z, y]]:
                    return (5, x, y, z)
    return None


def extend_map(idx_t[::1] mapping, idx_t[::1] inverse, idx_t[::1] dom,
               Py_ssize_t ndom, Py_ssize_t start,
               const idx_t[:, ::1] mul1, const idx_t[:, ::1] star1,
               const idx_t[:, ::1] mul2, const idx_t[:, ::1] star2,
               const idx_t[::1] col1, const idx_t[::1] col2, bint use_star):
    cdef Py_ssize_t i = start, j, k, npairs
    cdef idx_t x, y, fx, fy, p, q, cur
    cdef idx_t ps[4]
    cdef idx_t qs[4]
    npairs = 4 if use_star else 2
    while i < ndom:
        x = dom[i]
        fx = mapping[x]
        for j in range(i + 1):
            y = dom[j]
            fy = mapping[y]
            ps[0] = mul1[x, y]; qs[0] = mul2[fx, fy]
            ps[1] = mul1[y, x]; qs[1] = mul2[fy, fx]
            if use_star:
                ps[2] = star1[x, y]; qs[2] = star2[fx, fy]
                ps[3] = star1[y, x]; qs[3] = star2[fy, fx]
            for k in range(npairs):
                p = ps[k]
                q = qs[k]
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
