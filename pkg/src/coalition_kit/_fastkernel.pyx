# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled canonical-labeling and enumeration kernel.

Mirrors ``kernel.py`` exactly: same refinement, same branching, same code
layout, byte-identical output. See that module for the algorithm notes.
"""

from libc.string cimport memcmp

IS_COMPILED = True

DEF MAXN = 16
DEF TRI_BYTES = 15  # ceil(16*15/2 / 8)

cdef unsigned char POP16[65536]

cdef void _init_pop16():
    cdef int i
    POP16[0] = 0
    for i in range(1, 65536):
        POP16[i] = POP16[i >> 1] + (i & 1)

_init_pop16()


cdef int _refine_c(unsigned int* rows, int n, int* cv, int* cb, int nc):
    """In-place refinement; returns the new cell count."""
    cdef unsigned int masks[MAXN]
    cdef unsigned char keys[MAXN][MAXN]
    cdef int newcv[MAXN]
    cdef int newcb[MAXN + 1]
    cdef int k, kk, i, j, v, lo, hi, pos, newnc, subcells
    cdef bint changed
    cdef unsigned int m

    while True:
        for k in range(nc):
            m = 0
            for i in range(cb[k], cb[k + 1]):
                m |= 1u << cv[i]
            masks[k] = m
        changed = False
        pos = 0
        newnc = 0
        newcb[0] = 0
        for k in range(nc):
            lo = cb[k]
            hi = cb[k + 1]
            if hi - lo == 1:
                newcv[pos] = cv[lo]
                pos += 1
                newnc += 1
                newcb[newnc] = pos
                continue
            for i in range(lo, hi):
                v = cv[i]
                for kk in range(nc):
                    keys[v][kk] = POP16[rows[v] & masks[kk]]
            # stable insertion sort of the cell slice by key vector
            for i in range(lo + 1, hi):
                v = cv[i]
                j = i - 1
                while j >= lo and memcmp(keys[cv[j]], keys[v], nc) > 0:
                    cv[j + 1] = cv[j]
                    j -= 1
                cv[j + 1] = v
            subcells = 0
            for i in range(lo, hi):
                newcv[pos] = cv[i]
                pos += 1
                if i + 1 == hi or memcmp(keys[cv[i + 1]], keys[cv[i]], nc) != 0:
                    newnc += 1
                    newcb[newnc] = pos
                    subcells += 1
            if subcells > 1:
                changed = True
        for i in range(pos):
            cv[i] = newcv[i]
        for k in range(newnc + 1):
            cb[k] = newcb[k]
        nc = newnc
        if not changed:
            return nc


cdef void _pack_c(unsigned int* rows, int n, int* order, unsigned char* out):
    cdef int i, j, k
    cdef unsigned int ri
    for i in range((n * (n - 1) // 2 + 7) >> 3):
        out[i] = 0
    k = 0
    for i in range(n):
        ri = rows[order[i]]
        for j in range(i + 1, n):
            if (ri >> order[j]) & 1u:
                out[k >> 3] |= 0x80 >> (k & 7)
            k += 1


cdef void _search_c(unsigned int* rows, int n, int* cv, int* cb, int nc,
                    unsigned char* best, bint* has_best, int codelen):
    cdef int idx, i, j, v, u, pos, k
    cdef int cands[MAXN]
    cdef int ncands
    cdef int cv2[MAXN]
    cdef int cb2[MAXN + 1]
    cdef unsigned char tmp[TRI_BYTES]
    cdef unsigned int mask_uv
    cdef bint dup

    idx = -1
    for i in range(nc):
        if cb[i + 1] - cb[i] > 1:
            idx = i
            break
    if idx < 0:
        _pack_c(rows, n, cv, tmp)
        if not has_best[0] or memcmp(tmp, best, codelen) < 0:
            for i in range(codelen):
                best[i] = tmp[i]
            has_best[0] = True
        return

    # interchangeable-twin dedup: keep one of each pair whose rows agree
    # outside the pair
    ncands = 0
    for i in range(cb[idx], cb[idx + 1]):
        v = cv[i]
        dup = False
        for j in range(ncands):
            u = cands[j]
            mask_uv = ~((1u << u) | (1u << v))
            if (rows[u] & mask_uv) == (rows[v] & mask_uv):
                dup = True
                break
        if not dup:
            cands[ncands] = v
            ncands += 1

    for j in range(ncands):
        v = cands[j]
        pos = 0
        for i in range(cb[idx]):
            cv2[pos] = cv[i]
            pos += 1
        for k in range(idx):
            cb2[k] = cb[k]
        cb2[idx] = cb[idx]
        cv2[pos] = v
        pos += 1
        cb2[idx + 1] = pos
        for i in range(cb[idx], cb[idx + 1]):
            if cv[i] != v:
                cv2[pos] = cv[i]
                pos += 1
        cb2[idx + 2] = pos
        for i in range(cb[idx + 1], cb[nc]):
            cv2[pos] = cv[i]
            pos += 1
        for k in range(idx + 1, nc):
            cb2[k + 2] = cb[k + 1]
        _search_c(rows, n, cv2, cb2,
                  _refine_c(rows, n, cv2, cb2, nc + 1),
                  best, has_best, codelen)


cdef bytes _canon_bytes(int n, unsigned int* rows):
    cdef int cv[MAXN]
    cdef int cb[MAXN + 1]
    cdef unsigned char best[TRI_BYTES]
    cdef unsigned char full[TRI_BYTES + 1]
    cdef bint has_best = False
    cdef int i, nc, codelen
    if n == 1:
        return bytes(bytearray([1]))
    codelen = (n * (n - 1) // 2 + 7) >> 3
    for i in range(n):
        cv[i] = i
    cb[0] = 0
    cb[1] = n
    nc = _refine_c(rows, n, cv, cb, 1)
    _search_c(rows, n, cv, cb, nc, best, &has_best, codelen)
    full[0] = <unsigned char> n
    for i in range(codelen):
        full[i + 1] = best[i]
    return bytes(bytearray(full[: codelen + 1]))


def canonical_code(int n, rows):
    """Canonical code of the graph given as adjacency bitmask rows."""
    cdef unsigned int crows[MAXN]
    cdef int i
    if n < 1 or n > MAXN:
        raise ValueError(f"canonical labeling supports order 1..{MAXN}, got {n}")
    for i in range(n):
        crows[i] = rows[i]
    return _canon_bytes(n, crows)


def sweep_codes(int n):
    """All canonical codes of order n via the 2^C(n,2) adjacency-mask sweep."""
    cdef unsigned int crows[MAXN]
    cdef int pi[MAXN * MAXN]
    cdef int pj[MAXN * MAXN]
    cdef int npairs, i, j, idx
    cdef unsigned long mask, top, m
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return [bytes(bytearray([1]))]
    if n > 8:
        raise ValueError("the mask sweep is sized for order <= 8")
    npairs = 0
    for j in range(1, n):
        for i in range(j):
            pi[npairs] = i
            pj[npairs] = j
            npairs += 1
    seen = set()
    top = (<unsigned long> 1) << npairs
    mask = 0
    while mask < top:
        for i in range(n):
            crows[i] = 0
        m = mask
        idx = 0
        while m:
            if m & 1:
                crows[pi[idx]] |= 1u << pj[idx]
                crows[pj[idx]] |= 1u << pi[idx]
            m >>= 1
            idx += 1
        seen.add(_canon_bytes(n, crows))
        mask += 1
    return sorted(seen)
