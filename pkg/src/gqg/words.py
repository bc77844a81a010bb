"""Words over {1..l}: the Kharchenko order, standard words, super-letters.

The order used throughout is the one where a smaller letter index makes a
word *greater*, and a proper prefix is greater than its extensions.  So
``"1" > "112" > "12" > "2"``.  Words are tuples of 1-based letter indices.
"""
from __future__ import annotations

from functools import lru_cache

from .weights import Weight, BicharTable


class WordError(ValueError):
    pass


def parse_word(text) -> tuple:
    if isinstance(text, tuple):
        return text
    return tuple(int(ch) for ch in str(text))


def word_str(w: tuple) -> str:
    return "".join(str(i) for i in w)


def degree(w: tuple, l: int) -> Weight:
    d = [0] * l
    for i in w:
        d[i - 1] += 1
    return tuple(d)


def sort_key(w: tuple) -> tuple:
    """Key whose natural tuple order is the word order."""
    return tuple(-i for i in w) + (0,)


def word_compare(u, v) -> int:
    """-1, 0 or 1 as u <, =, > v."""
    ku, kv = sort_key(parse_word(u)), sort_key(parse_word(v))
    return (ku > kv) - (ku < kv)


@lru_cache(maxsize=None)
def is_standard(u: tuple) -> bool:
    u = parse_word(u)
    if len(u) <= 1:
        return True
    ku = sort_key(u)
    return all(ku > sort_key(u[k:] + u[:k]) for k in range(1, len(u)))


@lru_cache(maxsize=None)
def shirshov_factorize(u: tuple) -> tuple:
    """Split a standard word as u = u_dot u_ddot.

    u_dot is the common prefix of every standard left factor v in a split
    u = v w with v, w standard; it is itself such a factor.
    """
    u = parse_word(u)
    if len(u) < 2 or not is_standard(u):
        raise WordError(f"shirshov_factorize needs a standard word of length >= 2, got {word_str(u)!r}")
    splits = [k for k in range(1, len(u)) if is_standard(u[:k]) and is_standard(u[k:])]
    k = splits[0]
    if any(u[:m][:k] != u[:k] for m in splits):
        raise WordError(f"no common standard prefix for {word_str(u)!r}")
    return u[:k], u[k:]


def enumerate_standard(bound: Weight) -> list:
    """All standard words of degree <= bound, greatest first."""
    l = len(bound)
    out = []

    def grow(word, deg):
        if word and is_standard(word):
            out.append(word)
        for i in range(1, l + 1):
            if deg[i - 1] < bound[i - 1]:
                deg[i - 1] += 1
                grow(word + (i,), deg)
                deg[i - 1] -= 1

    grow((), [0] * l)
    return sorted(out, key=sort_key, reverse=True)


def words_of_degree(deg: Weight) -> list:
    """Every word with the given letter multiplicities, greatest first."""
    out = []
    l = len(deg)

    def grow(word, rem):
        if not any(rem):
            out.append(word)
            return
        for i in range(1, l + 1):
            if rem[i - 1]:
                rem[i - 1] -= 1
                grow(word + (i,), rem)
                rem[i - 1] += 1

    grow((), list(deg))
    return sorted(out, key=sort_key, reverse=True)


def lyndon_factorization(w: tuple) -> list:
    """Unique factorization into standard words u1 <= u2 <= ... <= uk.

    With this word order standard words are exactly classical Lyndon words,
    and the order is the reverse of classical lexicographic order, so the
    Chen-Fox-Lyndon factors come out nondecreasing here.
    """
    w = parse_word(w)
    factors = [(i,) for i in w]
    merged = True
    while merged:
        merged = False
        for k in range(len(factors) - 1):
            if sort_key(factors[k]) > sort_key(factors[k + 1]):
                factors[k:k + 2] = [factors[k] + factors[k + 1]]
                merged = True
                break
    return factors


class FreeElement:
    """Finitely supported map word -> scalar in the free algebra K<x_1..x_l>."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, w, coeff) -> "FreeElement":
        return cls({parse_word(w): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return FreeElement(out)

    def __neg__(self):
        return FreeElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "FreeElement":
        return FreeElement({w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return self.scale(other)
        out = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                w = a + b
                c = ca * cb
                out[w] = out[w] + c if w in out else c
        return FreeElement(out)

    def __eq__(self, other):
        return isinstance(other, FreeElement) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def leading_word(self):
        return max(self.terms, key=sort_key) if self.terms else None

    def degrees(self, l: int) -> set:
        return {degree(w, l) for w in self.terms}

    def __repr__(self):
        inner = " + ".join(f"({c})*{word_str(w) or '1'}" for w, c in
                           sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]), reverse=True))
        return f"FreeElement({inner or '0'})"


def free_multiply(a: FreeElement, b: FreeElement) -> FreeElement:
    return a * b


def super_letter(u, t: BicharTable) -> FreeElement:
    """[u] = [u_dot][u_ddot] - chi(deg u_ddot, deg u_dot)^(-1) [u_ddot][u_dot]."""
    u = parse_word(u)
    if not is_standard(u):
        raise WordError(f"super_letter needs a standard word, got {word_str(u)!r}")
    return _super_letter(u, t)


@lru_cache(maxsize=4096)
def _super_letter(u: tuple, t: BicharTable) -> FreeElement:
    if len(u) <= 1:
        return FreeElement.word(u, t.field.one)
    a, b = shirshov_factorize(u)
    l = t.rank
    coeff = t.chi(degree(b, l), degree(a, l)).inverse()
    left, right = _super_letter(a, t), _super_letter(b, t)
    return left * right - (right * left).scale(coeff)
