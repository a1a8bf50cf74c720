"""Brute-force reference implementations.

Deliberately naive and written straight from the definitions; none of them
calls into the package.
"""

import itertools


def is_mn_word(m, word):
    if word and word[0] == m + 1:
        return False
    for i, s in enumerate(word):
        if not 0 <= s <= m + 1:
            return False
        if 1 <= s <= m and any(word[j] < s for j in range(i)):
            return False
    return True


def naive_words(m, n):
    """All (m, n)-words, filtered from all (m+2)^n strings, in lex order."""
    return [w for w in itertools.product(range(m + 2), repeat=n) if is_mn_word(m, w)]


def compositions(total):
    """All compositions of ``total`` (tuples of positive parts)."""
    if total == 0:
        return [()]
    out = []
    for cuts in itertools.product((False, True), repeat=total - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def naive_tilings(m, n):
    """Colour every composition of m+n; keep m red unit parts, blue the rest.

    Tiles are encoded 0 for a red square and the length for a blue strip.
    """
    found = set()
    for parts in compositions(m + n):
        units = [i for i, p in enumerate(parts) if p == 1]
        for red in itertools.combinations(units, m):
            red = set(red)
            found.add(tuple(0 if i in red else p for i, p in enumerate(parts)))
    return sorted(found)


def pascal_row(a):
    row = [1]
    for _ in range(a):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def pascal_binomial(a, b):
    if b < 0 or b > a:
        return 0
    return pascal_row(a)[b]


def naive_series_coeff(num, den_inv_scale, power, n):
    """[x^n] (num(x) / (1 - scale x))^power by explicit polynomial products.

    Expands 1/(1 - scale x) to degree n, multiplies ``power`` times, no
    truncation tricks.
    """
    geo = [den_inv_scale**j for j in range(n + 1)]
    base = [0] * (n + 1)
    for i, a in enumerate(num):
        for j, b in enumerate(geo):
            if i + j <= n:
                base[i + j] += a * b
    acc = [1] + [0] * n
    for _ in range(power):
        nxt = [0] * (2 * n + 1)
        for i, a in enumerate(acc):
            for j, b in enumerate(base):
                nxt[i + j] += a * b
        acc = nxt[: n + 1]
    return acc[n]
