# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot inner loops.

Semantically identical to ``_kernels_py``; coefficients stay Python ints so
all arithmetic remains exact.  Only the loop bookkeeping is compiled.
"""


def poly_conv(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def poly_reduce(list c, tuple rows, Py_ssize_t deg):
    cdef Py_ssize_t n = len(c), i, j
    cdef list out = list(c[:deg])
    while len(out) < deg:
        out.append(0)
    cdef object ci, rj
    cdef tuple row
    for i in range(deg, n):
        ci = c[i]
        if ci == 0:
            continue
        row = rows[i - deg]
        for j in range(deg):
            rj = row[j]
            if rj != 0:
                out[j] = out[j] + ci * rj
    return out


def ring_conv(list items_a, list items_b, tuple mods):
    cdef dict out = {}
    cdef Py_ssize_t r = len(mods), i
    cdef tuple ca, cb, key
    cdef object va, vb, prod
    cdef list key_buf
    for ca, va in items_a:
        for cb, vb in items_b:
            key_buf = [0] * r
            for i in range(r):
                key_buf[i] = (ca[i] + cb[i]) % mods[i]
            key = tuple(key_buf)
            prod = va * vb
            if key in out:
                out[key] = out[key] + prod
            else:
                out[key] = prod
    return out
