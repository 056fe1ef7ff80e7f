"""Pure-Python sign-sequence kernels.

A sign sequence of length n is a bitmask: bit k set means position k (0-based)
carries '+'.  The compiled module ``_kernels`` exposes the same functions.
"""


def is_dominant(mask, n):
    bal = 0
    prefix_ok = True
    for k in range(n):
        bal += -1 if (mask >> k) & 1 else 1
        if bal < 0:
            prefix_ok = False
            break
    if prefix_ok:
        return True
    bal = 0
    for k in range(n - 1, -1, -1):
        bal += 1 if (mask >> k) & 1 else -1
        if bal < 0:
            return False
    return True


def iota(mask, n):
    """Stack matching: each '+' pairs with the nearest unmatched '-' to its left."""
    image = list(range(n))
    stack = []
    for k in range(n):
        if (mask >> k) & 1:
            if stack:
                j = stack.pop()
                image[j] = k
                image[k] = j
        else:
            stack.append(k)
    return image


def _pairs_cover(s, d, n):
    # d must be a union of (-,+) pairs of iota_s
    stack = []
    for k in range(n):
        if (s >> k) & 1:
            if stack:
                j = stack.pop()
                if ((d >> j) & 1) != ((d >> k) & 1):
                    return False
            elif (d >> k) & 1:
                return False
        else:
            stack.append(k)
    for j in stack:
        if (d >> j) & 1:
            return False
    return True


def _same_weight(n, k):
    # all n-bit masks with k bits set, ascending
    if k == 0:
        yield 0
        return
    if k > n:
        return
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def suitable(tmask, n):
    """All (s, s ^ t) with s dominant and t = s permuted by a compatible involution."""
    out = []
    for s in _same_weight(n, bin(tmask).count("1")):
        if is_dominant(s, n) and _pairs_cover(s, s ^ tmask, n):
            out.append((s, s ^ tmask))
    return out


def count_suitable(tmask, n):
    total = 0
    for s in _same_weight(n, bin(tmask).count("1")):
        if is_dominant(s, n) and _pairs_cover(s, s ^ tmask, n):
            total += 1
    return total
