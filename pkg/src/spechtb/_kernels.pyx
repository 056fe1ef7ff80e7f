# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sign-sequence kernels; mirrors ``_kernels_py`` for n <= 62."""

ctypedef unsigned long long u64

cdef enum:
    MAXN = 62


cdef bint _dominant(u64 mask, int n) nogil:
    cdef int bal = 0
    cdef int k
    cdef bint ok = True
    for k in range(n):
        if (mask >> k) & 1:
            bal -= 1
        else:
            bal += 1
        if bal < 0:
            ok = False
            break
    if ok:
        return True
    bal = 0
    for k in range(n - 1, -1, -1):
        if (mask >> k) & 1:
            bal += 1
        else:
            bal -= 1
        if bal < 0:
            return False
    return True


cdef bint _pairs_cover(u64 s, u64 d, int n) nogil:
    cdef int stack[MAXN]
    cdef int top = 0
    cdef int k, j
    for k in range(n):
        if (s >> k) & 1:
            if top > 0:
                top -= 1
                j = stack[top]
                if ((d >> j) & 1) != ((d >> k) & 1):
                    return False
            elif (d >> k) & 1:
                return False
        else:
            stack[top] = k
            top += 1
    for k in range(top):
        if (d >> stack[k]) & 1:
            return False
    return True


cdef inline int _popcount(u64 x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def is_dominant(mask, int n):
    if n > MAXN:
        raise OverflowError(n)
    return _dominant(<u64>mask, n)


def iota(mask, int n):
    if n > MAXN:
        raise OverflowError(n)
    cdef u64 m = <u64>mask
    cdef int stack[MAXN]
    cdef int top = 0
    cdef int k, j
    image = list(range(n))
    for k in range(n):
        if (m >> k) & 1:
            if top > 0:
                top -= 1
                j = stack[top]
                image[j] = k
                image[k] = j
        else:
            stack[top] = k
            top += 1
    return image


cdef long _scan(u64 t, int n, list out) except -1:
    cdef int w = _popcount(t)
    cdef u64 x, c, r, limit
    cdef long total = 0
    if w == 0:
        if _dominant(0, n) and _pairs_cover(0, t, n):
            if out is not None:
                out.append((0, t))
            return 1
        return 0
    limit = (<u64>1) << n
    x = ((<u64>1) << w) - 1
    while x < limit:
        if _dominant(x, n) and _pairs_cover(x, x ^ t, n):
            total += 1
            if out is not None:
                out.append((x, x ^ t))
        c = x & (~x + 1)
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
    return total


def suitable(tmask, int n):
    if n > MAXN:
        raise OverflowError(n)
    out = []
    _scan(<u64>tmask, n, out)
    return out


def count_suitable(tmask, int n):
    if n > MAXN:
        raise OverflowError(n)
    return _scan(<u64>tmask, n, None)
