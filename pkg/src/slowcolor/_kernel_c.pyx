# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled solver kernel: same contract as _kernel_py.value_table."""

import time

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

KERNEL_NAME = "cython"


cdef struct Buf:
    unsigned int *data
    size_t size
    size_t cap


cdef int _push(Buf *b, unsigned int x) except -1:
    cdef unsigned int *grown
    if b.size == b.cap:
        b.cap = b.cap * 2 if b.cap else 1024
        grown = <unsigned int *> malloc(b.cap * sizeof(unsigned int))
        if grown == NULL:
            raise MemoryError()
        if b.data != NULL:
            for i in range(b.size):
                grown[i] = b.data[i]
            free(b.data)
        b.data = grown
    b.data[b.size] = x
    b.size += 1
    return 0


cdef void _bk(unsigned long long r, unsigned long long p, unsigned long long x,
              unsigned long long *cadj, Buf *out) except *:
    # Bron-Kerbosch on the complement graph: maximal independent sets
    cdef unsigned long long p_iter, low, keep
    cdef int v
    if p == 0 and x == 0:
        _push(out, <unsigned int> r)
        return
    p_iter = p
    while p_iter:
        low = p_iter & (~p_iter + 1)
        v = __builtin_popcountll(low - 1)
        keep = cadj[v]
        _bk(r | low, p & keep, x & keep, cadj, out)
        p = p & ~low
        x = x | low
        p_iter = p_iter ^ low


def value_table(int n, adj, deadline=None):
    """Exact subgame values for every remaining-set mask; see _kernel_py."""
    cdef size_t size = (<size_t> 1) << n
    cdef unsigned long long full = size - 1
    cdef unsigned long long *cadj = NULL
    cdef long long *offsets = NULL
    cdef int *val = NULL
    cdef Buf buf
    cdef unsigned long long m_mask, r, d
    cdef int best, sm, worst, bound, cont
    cdef long long lo, hi, i, j
    cdef unsigned int tmp
    cdef long long nodes = 0
    cdef int tri[65]
    cdef double dl = -1.0

    if deadline is not None:
        dl = <double> deadline
    buf.data = NULL
    buf.size = 0
    buf.cap = 0

    cadj = <unsigned long long *> malloc(n * sizeof(unsigned long long))
    offsets = <long long *> malloc((size + 1) * sizeof(long long))
    val = <int *> malloc(size * sizeof(int))
    try:
        if cadj == NULL or offsets == NULL or val == NULL:
            raise MemoryError()
        for v in range(n):
            cadj[v] = (~(<unsigned long long> adj[v])) & full & ~((<unsigned long long> 1) << v)
        for v in range(n + 1):
            tri[v] = v * (v + 1) // 2

        # maximal independent subsets for every induced mask, flattened;
        # each segment sorted by descending size then ascending mask
        offsets[0] = 0
        offsets[1] = 0
        for m_mask in range(1, size):
            _bk(0, m_mask, 0, cadj, &buf)
            offsets[m_mask + 1] = <long long> buf.size
        for m_mask in range(1, size):
            lo = offsets[m_mask]
            hi = offsets[m_mask + 1]
            for i in range(lo + 1, hi):
                tmp = buf.data[i]
                j = i - 1
                while j >= lo and (
                    __builtin_popcountll(buf.data[j]) < __builtin_popcountll(tmp)
                    or (__builtin_popcountll(buf.data[j]) == __builtin_popcountll(tmp)
                        and buf.data[j] > tmp)
                ):
                    buf.data[j + 1] = buf.data[j]
                    j -= 1
                buf.data[j + 1] = tmp

        val[0] = 0
        for r in range(1, size):
            if dl >= 0.0 and (r & 1023) == 0 and time.monotonic() > dl:
                raise TimeoutError("solver deadline exceeded")
            best = 0
            m_mask = r
            while m_mask:
                sm = __builtin_popcountll(m_mask)
                if sm + tri[__builtin_popcountll(r) - 1] > best:
                    nodes += 1
                    lo = offsets[m_mask]
                    hi = offsets[m_mask + 1]
                    bound = best - sm
                    worst = 1 << 30
                    for i in range(lo, hi):
                        d = buf.data[i]
                        cont = val[r & ~d]
                        if cont < worst:
                            worst = cont
                            if worst <= bound:
                                break
                    if sm + worst > best:
                        best = sm + worst
                m_mask = (m_mask - 1) & r
            val[r] = best

        return [val[r] for r in range(size)], nodes
    finally:
        free(cadj)
        free(offsets)
        free(val)
        if buf.data != NULL:
            free(buf.data)
