from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from gqg.words import (FreeElement, WordError, enumerate_standard, is_standard, lyndon_factorization,
                       parse_word, shirshov_factorize, sort_key, super_letter, word_compare,
                       words_of_degree)
from conftest import z3_table

word = st.lists(st.integers(1, 3), max_size=6).map(tuple)


def brute_greater(u, v):
    """u > v: smaller letter at the first difference, or u a proper prefix of v."""
    for a, b in zip(u, v):
        if a != b:
            return a < b
    return len(u) < len(v)


def test_compare_examples():
    assert word_compare("1", "2") == 1
    assert word_compare("1", "12") == 1
    assert word_compare("12", "21") == 1
    assert word_compare((), "1") == 1
    assert word_compare("112", "112") == 0


@settings(max_examples=200, deadline=None)
@given(word, word, word)
def test_total_order(u, v, w):
    c = word_compare(u, v)
    assert c == -word_compare(v, u)
    assert (c == 0) == (u == v)
    assert (c == 1) == brute_greater(u, v)
    if word_compare(u, v) >= 0 and word_compare(v, w) >= 0:
        assert word_compare(u, w) >= 0


def test_standard_examples():
    assert is_standard(parse_word("1"))
    assert is_standard(parse_word("12"))
    assert not is_standard(parse_word("11"))
    assert is_standard(parse_word("112"))
    assert not is_standard(parse_word("21"))


def test_shirshov_examples():
    assert shirshov_factorize(parse_word("12")) == ((1,), (2,))
    assert shirshov_factorize(parse_word("112")) == ((1,), (1, 2))
    assert shirshov_factorize(parse_word("122")) == ((1, 2), (2,))
    with pytest.raises(WordError):
        shirshov_factorize(parse_word("21"))
    with pytest.raises(WordError):
        shirshov_factorize(parse_word("1"))


def all_words(l, n):
    return [w for k in range(1, n + 1) for w in product(range(1, l + 1), repeat=k)]


def test_shirshov_factors_property():
    for u in all_words(3, 6):
        if len(u) >= 2 and is_standard(u):
            a, b = shirshov_factorize(u)
            assert a + b == u
            assert is_standard(a) and is_standard(b)
            assert sort_key(a) > sort_key(b)
            # shortest standard prefix with a standard complement
            for k in range(1, len(a)):
                assert not (is_standard(u[:k]) and is_standard(u[k:]))


def test_enumerate_standard():
    assert enumerate_standard((3,)) == [(1,)]
    assert set(enumerate_standard((1, 1))) == {(1,), (1, 2), (2,)}
    assert enumerate_standard((0, 0)) == []
    got = enumerate_standard((2, 2))
    brute = [w for w in all_words(2, 4) if is_standard(w) and w.count(1) <= 2 and w.count(2) <= 2]
    assert sorted(got) == sorted(brute)
    assert got == sorted(got, key=sort_key, reverse=True)


def test_lyndon_factorization_counts():
    # every word factors uniquely into standard words u1 <= u2 <= ...;
    # so products of standard words in that order count all words of a degree
    for deg in [(2, 1), (2, 2), (3, 2), (1, 1, 1)]:
        ws = words_of_degree(deg)
        n = sum(deg)
        assert len(ws) == factorial(n) // __import__("math").prod(factorial(d) for d in deg)
        facts = set()
        for w in ws:
            f = lyndon_factorization(w)
            assert sum(f, ()) == w
            assert all(is_standard(u) for u in f)
            assert all(sort_key(f[k]) <= sort_key(f[k + 1]) for k in range(len(f) - 1))
            facts.add(tuple(f))
        assert len(facts) == len(ws)


def test_super_letter_examples():
    t = z3_table()
    F = t.field
    assert super_letter("1", t) == FreeElement.word("1", F.one)
    s12 = super_letter("12", t)
    assert s12.terms == {(1, 2): F.one, (2, 1): -t.q[1][0].inverse()}
    s112 = super_letter("112", t)
    assert len(s112) == 3 or len(s112) == 4
    assert s112.degrees(2) == {(2, 1)}
    prod = s12 * FreeElement.word("1", F.one)
    assert len(prod) == 2 and prod.degrees(2) == {(2, 1)}


def test_super_letter_leading_word():
    t = z3_table()
    for u in enumerate_standard((3, 3)):
        s = super_letter(u, t)
        assert s.leading_word() == u
        assert s.terms[u] == 1
        assert len(s.degrees(2)) == 1


def test_free_algebra_basics():
    F = z3_table().field
    x1, x2 = FreeElement.word("1", F.one), FreeElement.word("2", F.one)
    assert (x1 * x2).terms == {(1, 2): F.one}
    assert ((x1 - x2) * x1).terms == {(1, 1): F.one, (2, 1): -F.one}
    assert ((x1 * x2) * x1) == (x1 * (x2 * x1))
