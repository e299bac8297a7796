# cython: language_level=3
"""Compiled hot kernels for field arithmetic.

Mirror of quiverbelt._kernels_py with the inner loops compiled.  The
coefficients stay arbitrary-precision Python ints; the win is loop and
indexing overhead, which dominates at the small degrees (<= 16) the
package works with.
"""

from math import gcd


cpdef list poly_mul(list a, list b):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j
    cdef list out = [0] * (la + lb - 1)
    cdef object ai, bj
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


cpdef list reduce_tail(list prod, tuple pow_table, Py_ssize_t deg):
    cdef Py_ssize_t i, j
    cdef Py_ssize_t tail = len(prod) - deg
    cdef list out = list(prod[:deg])
    cdef object cj, ri
    cdef tuple row
    while len(out) < deg:
        out.append(0)
    for j in range(tail):
        cj = prod[deg + j]
        if cj:
            row = pow_table[j]
            for i in range(deg):
                ri = row[i]
                if ri:
                    out[i] = out[i] + cj * ri
    return out


cpdef list mul_reduce(list a, list b, tuple pow_table, Py_ssize_t deg):
    return reduce_tail(poly_mul(a, b), pow_table, deg)


cpdef object content(values, object extra):
    cdef object g = extra if extra >= 0 else -extra
    cdef object v
    for v in values:
        if v:
            g = gcd(g, v if v >= 0 else -v)
            if g == 1:
                return 1
    return g
