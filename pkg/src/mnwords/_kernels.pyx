# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

OK = 0
OUT_OF_RANGE = 1
MN1 = 2
MN2 = 3


def scan_word(long m, letters):
    cdef long top = m + 1
    cdef long cap = m
    cdef long c
    cdef Py_ssize_t i = 0
    for obj in letters:
        c = obj
        if c < 0 or c > top:
            return OUT_OF_RANGE, i + 1
        if c == top:
            if i == 0:
                return MN1, 1
        elif c > cap:
            return MN2, i + 1
        else:
            cap = c
        i += 1
    return OK, 0


def split_word(long m, letters):
    cdef long top = m + 1
    cdef long c
    cdef list topless = []
    cdef list gaps = []
    cdef long run = 0
    for obj in letters:
        c = obj
        if c == top:
            run += 1
        else:
            if topless:
                gaps.append(run)
            topless.append(c)
            run = 0
    if topless:
        gaps.append(run)
    return tuple(topless), tuple(gaps)


def join_word(long m, topless, gaps):
    cdef long top = m + 1
    cdef list out = []
    cdef long g, j
    for c, gobj in zip(topless, gaps):
        out.append(c)
        g = gobj
        for j in range(g):
            out.append(top)
    return tuple(out)


def word_to_tiles(long m, letters):
    cdef long top = m + 1
    cdef long prev = m
    cdef long c, j
    cdef list out = []
    cdef long blue = 0
    for obj in letters:
        c = obj
        if c == top:
            blue += 1
        else:
            if blue:
                out.append(blue)
            for j in range(prev - c):
                out.append(0)
            blue = 1
            prev = c
    if blue:
        out.append(blue)
    for j in range(prev):
        out.append(0)
    return tuple(out)


def tiles_to_word(long m, tiles):
    cdef long top = m + 1
    cdef long cur = m
    cdef long t, j
    cdef list out = []
    for obj in tiles:
        t = obj
        if t == 0:
            cur -= 1
        else:
            out.append(cur)
            for j in range(t - 1):
                out.append(top)
    return tuple(out)


def blue_profile(tiles):
    cdef list blues = []
    cdef list gaps = []
    cdef long run = 0
    cdef long t
    for obj in tiles:
        t = obj
        if t == 0:
            run += 1
        else:
            blues.append(t)
            gaps.append(run)
            run = 0
    gaps.append(run)
    return tuple(blues), tuple(gaps)


cdef tuple _pack(long *buf, Py_ssize_t size):
    cdef list tmp = [None] * size
    cdef Py_ssize_t j
    for j in range(size):
        tmp[j] = buf[j]
    return tuple(tmp)


def iter_words(long m, long n):
    """Yield every (m, n)-word in lexicographic order."""
    if n == 0:
        yield ()
        return
    cdef long top = m + 1
    cdef long *word = <long *> malloc(n * sizeof(long))
    cdef long *caps = <long *> malloc((n + 1) * sizeof(long))
    cdef long i, c, cap, limit
    if word == NULL or caps == NULL:
        free(word)
        free(caps)
        raise MemoryError()
    try:
        for i in range(n + 1):
            caps[i] = m
        i = 0
        word[0] = -1
        while i >= 0:
            c = word[i] + 1
            limit = top if i > 0 else m
            if c > limit:
                i -= 1
                continue
            cap = caps[i]
            if c > cap and c != top:
                c = top
                if c > limit:
                    i -= 1
                    continue
            word[i] = c
            caps[i + 1] = cap if c == top else c
            if i == n - 1:
                yield _pack(word, n)
            else:
                i += 1
                word[i] = -1
    finally:
        free(word)
        free(caps)


def iter_tiles(long m, long n):
    """Yield every two-toned tiling code sequence in ascending tuple order."""
    if m == 0 and n == 0:
        yield ()
        return
    cdef long size = m + n
    cdef long *seq = <long *> malloc(size * sizeof(long))
    cdef long *reds = <long *> malloc((size + 1) * sizeof(long))
    cdef long *blue = <long *> malloc((size + 1) * sizeof(long))
    cdef long d, t, r, b
    if seq == NULL or reds == NULL or blue == NULL:
        free(seq)
        free(reds)
        free(blue)
        raise MemoryError()
    try:
        reds[0] = 0
        blue[0] = 0
        d = 0
        seq[0] = -1
        while d >= 0:
            t = seq[d] + 1
            if t == 0 and reds[d] == m:
                t = 1
            if t > n - blue[d]:
                d -= 1
                continue
            seq[d] = t
            r = reds[d] + (1 if t == 0 else 0)
            b = blue[d] + t
            if r == m and b == n:
                yield _pack(seq, d + 1)
                continue
            d += 1
            reds[d] = r
            blue[d] = b
            seq[d] = -1
    finally:
        free(seq)
        free(reds)
        free(blue)
