"""Pure-Python kernels.

Mirror of ``_kernels.pyx``; every function here has the same name, signature
and return values as its compiled counterpart.  Words are tuples of ints.
Tilings are tuples of tile codes: ``0`` is a red square and ``L > 0`` is a
blue strip of length ``L``, so the canonical tile order is plain int order.
"""

# scan_word status codes
OK = 0
OUT_OF_RANGE = 1
MN1 = 2
MN2 = 3


def scan_word(m, letters):
    """Return ``(status, position)`` for the first defect of ``letters``.

    Positions are 1-based; ``(OK, 0)`` means the word is an (m, n)-word.
    """
    top = m + 1
    cap = m
    for i, c in enumerate(letters):
        if c < 0 or c > top:
            return OUT_OF_RANGE, i + 1
        if c == top:
            if i == 0:
                return MN1, 1
        elif c > cap:
            return MN2, i + 1
        else:
            cap = c
    return OK, 0


def split_word(m, letters):
    top = m + 1
    topless = []
    gaps = []
    for c in letters:
        if c == top:
            gaps[-1] += 1
        else:
            topless.append(c)
            gaps.append(0)
    return tuple(topless), tuple(gaps)


def join_word(m, topless, gaps):
    top = m + 1
    out = []
    for c, g in zip(topless, gaps):
        out.append(c)
        out.extend([top] * g)
    return tuple(out)


def word_to_tiles(m, letters):
    top = m + 1
    out = []
    prev = m
    for c in letters:
        if c == top:
            out[-1] += 1
        else:
            out.extend([0] * (prev - c))
            out.append(1)
            prev = c
    out.extend([0] * prev)
    return tuple(out)


def tiles_to_word(m, tiles):
    top = m + 1
    out = []
    cur = m
    for t in tiles:
        if t == 0:
            cur -= 1
        else:
            out.append(cur)
            out.extend([top] * (t - 1))
    return tuple(out)


def blue_profile(tiles):
    blues = []
    gaps = [0]
    for t in tiles:
        if t == 0:
            gaps[-1] += 1
        else:
            blues.append(t)
            gaps.append(0)
    return tuple(blues), tuple(gaps)


def iter_words(m, n):
    """Yield every (m, n)-word in lexicographic order."""
    if n == 0:
        yield ()
        return
    top = m + 1
    word = [0] * n
    # caps[i]: largest topless letter allowed at position i
    caps = [m] * (n + 1)
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
            yield tuple(word)
        else:
            i += 1
            word[i] = -1


def iter_tiles(m, n):
    """Yield every two-toned tiling code sequence in ascending tuple order."""
    if m == 0 and n == 0:
        yield ()
        return
    size = m + n
    seq = [0] * size
    # reds[d], blue[d]: red squares and blue cells placed before depth d
    reds = [0] * (size + 1)
    blue = [0] * (size + 1)
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
        r = reds[d] + (t == 0)
        b = blue[d] + t
        if r == m and b == n:
            yield tuple(seq[: d + 1])
            continue
        d += 1
        reds[d] = r
        blue[d] = b
        seq[d] = -1
