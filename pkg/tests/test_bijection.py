import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mnwords.bijection import xi, xi_inverse
from mnwords.tilings import TwoTonedTiling, blue_profile, enumerate_tilings, validate_tiling
from mnwords.words import WordDecomposition, decompose, enumerate_words, recompose, validate_word


def codes(text):
    return tuple(0 if tok == "R" else int(tok[1:]) for tok in text.split())


def test_xi_paper_example():
    w = validate_word(8, (7, 7, 9, 3, 2, 9, 9, 1, 9, 9, 0, 0))
    t = xi(w)
    assert t.codes == codes("R B1 B2 R R R R B1 R B3 R B3 R B1 B1")
    assert (t.m, t.n) == (8, 12)
    assert blue_profile(t)[0] == (1, 2, 1, 3, 3, 1, 1)


def test_xi_empty_word():
    assert xi(validate_word(3, [])).codes == (0, 0, 0)


def test_xi_first_paper_pair():
    assert xi(validate_word(2, [0, 0, 0])).codes == codes("R R B1 B1 B1")


def test_xi_small():
    # w_1 = 2 is followed by one 3, so B_1 has length 2; drops 2-1 and 1-0 give one red each
    assert xi(validate_word(2, [2, 3, 1])).codes == codes("B2 R B1 R")
    assert xi(validate_word(2, [2, 1, 3])).codes == codes("B1 R B2 R")


def test_xi_inverse_paper_example():
    t = validate_tiling(6, "R B2 B2 R R B1 R B3 R B3 R".split())
    assert xi_inverse(t).letters == (5, 7, 5, 7, 3, 2, 7, 7, 1, 7, 7)


def test_xi_inverse_all_red():
    assert xi_inverse(TwoTonedTiling(4, (0, 0, 0, 0))).letters == ()


def test_xi_inverse_small():
    assert xi_inverse(validate_tiling(2, ["B1", "R", "B2", "R"])).letters == (2, 1, 3)
    assert xi_inverse(validate_tiling(2, ["B2", "R", "B1", "R"])).letters == (2, 3, 1)


GRID = [(m, n) for m in range(6) for n in range(8)]


@pytest.mark.parametrize("m, n", GRID)
def test_roundtrip_words(m, n):
    tilings = set()
    for w in enumerate_words(m, n):
        t = xi(w)
        TwoTonedTiling(t.m, t.codes)
        assert (t.m, t.n) == (m, n)
        assert xi_inverse(t) == w
        tilings.add(t)
    assert tilings == set(enumerate_tilings(m, n))


@pytest.mark.parametrize("m, n", GRID)
def test_roundtrip_tilings(m, n):
    for t in enumerate_tilings(m, n):
        w = xi_inverse(t)
        assert validate_word(w.m, w.letters) == w and w.n == n
        assert xi(w) == t


@pytest.mark.parametrize("m, n", GRID)
def test_structure_correspondence(m, n):
    for w in enumerate_words(m, n):
        d = decompose(w)
        blues, gaps = blue_profile(xi(w))
        assert len(blues) == d.k
        assert blues == tuple(g + 1 for g in d.gaps)
        # red runs are the drops between consecutive topless letters
        levels = (m,) + d.topless + (0,)
        assert gaps == tuple(a - b for a, b in zip(levels, levels[1:]))


@pytest.mark.parametrize("m, n", [(m, n) for m in range(7) for n in range(9)])
def test_xi_preserves_enumeration_order(m, n):
    # Observed on this grid; both enumerations are lexicographic.
    assert [xi(w) for w in enumerate_words(m, n)] == list(enumerate_tilings(m, n))


@st.composite
def words(draw):
    m = draw(st.integers(0, 20))
    k = draw(st.integers(0, 15))
    topless = sorted(draw(st.lists(st.integers(0, m), min_size=k, max_size=k)), reverse=True)
    gaps = draw(st.lists(st.integers(0, 5), min_size=k, max_size=k))
    return recompose(WordDecomposition(m, topless, gaps))


@st.composite
def tilings(draw):
    m = draw(st.integers(0, 20))
    blues = draw(st.lists(st.integers(1, 6), max_size=15))
    cuts = sorted(draw(st.lists(st.integers(0, len(blues)), min_size=m, max_size=m)))
    seq = []
    for i, b in enumerate(blues):
        seq += [0] * cuts.count(i)
        seq.append(b)
    seq += [0] * cuts.count(len(blues))
    return TwoTonedTiling(m, tuple(seq))


@settings(max_examples=300)
@given(words())
def test_roundtrip_random_words(w):
    t = xi(w)
    assert TwoTonedTiling(t.m, t.codes).n == w.n
    assert t.codes.count(0) == w.m
    assert xi_inverse(t) == w


@settings(max_examples=300)
@given(tilings())
def test_roundtrip_random_tilings(t):
    w = xi_inverse(t)
    assert validate_word(w.m, w.letters).n == t.n
    topless = decompose(w).topless
    assert all(a >= b for a, b in zip(topless, topless[1:]))
    assert xi(w) == t
