"""
Compositions of integers, their binary-word encoding, and the cover
relations of the two graded graphs on compositions.

A composition is a tuple of positive parts; () is the unique composition of
0, written e in labels.  A composition of n encodes as an n-letter word
over {0,1}: reading the ribbon diagram cell by cell, a cell gets 1 exactly
when it starts a new part.  Under this encoding:

  * the lifted binary tree covers c by appending a letter to its word
    (last part + 1, or a new part 1 at the end);
  * Binword covers c by inserting one letter anywhere except in front of
    the first, counted without multiplicity.
"""
from __future__ import annotations

from functools import lru_cache

Composition = tuple[int, ...]
BinaryWord = str


class WordEncodingError(ValueError):
    """Raised for strings over {0,1} that encode no composition."""


def validate_composition(c) -> Composition:
    c = tuple(c)
    for part in c:
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"composition parts must be positive integers, got {part!r}")
    return c


@lru_cache(maxsize=None)
def composition_to_word(c: Composition) -> BinaryWord:
    """
    Encode a composition as a {0,1}-word with a 1 in each cell that starts
    a part.

    >>> composition_to_word((3, 2, 1))
    '100101'
    >>> composition_to_word(())
    ''
    >>> composition_to_word((1, 1, 1))
    '111'
    """
    return "".join("1" + "0" * (part - 1) for part in c)


def word_to_composition(w: BinaryWord) -> Composition:
    """
    Decode a {0,1}-word; inverse of :func:`composition_to_word`.

    >>> word_to_composition("100101")
    (3, 2, 1)
    >>> word_to_composition("1010")
    (2, 2)
    """
    if w == "":
        return ()
    if any(ch not in "01" for ch in w):
        raise WordEncodingError(f"invalid letter in word {w!r}")
    if w[0] != "1":
        raise WordEncodingError(f"word {w!r} has a leading 0 and encodes no composition")
    starts = [i for i, ch in enumerate(w) if ch == "1"]
    bounds = starts + [len(w)]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """
    All 2^(n-1) compositions of n, ordered lexicographically by their word
    encoding (the order the graphs are drawn in).

    >>> compositions_of(3)
    ((3,), (2, 1), (1, 2), (1, 1, 1))
    """
    if n < 0:
        raise ValueError("rank must be >= 0")
    if n == 0:
        return ((),)
    out = []
    for i in range(1 << (n - 1)):
        suffix = format(i, f"0{n - 1}b") if n > 1 else ""
        out.append(word_to_composition("1" + suffix))
    return tuple(out)


def increment_last(c: Composition) -> Composition:
    """Last part + 1; on the empty composition this yields (1,)."""
    return (1,) if not c else c[:-1] + (c[-1] + 1,)


@lru_cache(maxsize=None)
def lifted_covers(c: Composition) -> frozenset[Composition]:
    """
    Up-neighbours in the lifted binary tree: last part increased, and a new
    part 1 appended.  The empty composition is covered by (1,) alone.

    >>> sorted(lifted_covers((2, 1)))
    [(2, 1, 1), (2, 2)]
    >>> sorted(lifted_covers(()))
    [(1,)]
    """
    return frozenset({increment_last(c), c + (1,)})


@lru_cache(maxsize=None)
def binword_covers(c: Composition) -> frozenset[Composition]:
    """
    Up-neighbours in Binword: all compositions whose word is obtained from
    word(c) by inserting a single letter anywhere but the front.  A word
    reachable through several insertions still counts once (simple edges).

    >>> sorted(binword_covers((3,)))
    [(1, 3), (2, 2), (3, 1), (4,)]
    >>> sorted(binword_covers((1, 1)))
    [(1, 1, 1), (1, 2), (2, 1)]
    """
    if not c:
        return frozenset({(1,)})
    w = composition_to_word(c)
    words = {w[:i] + b + w[i:] for i in range(1, len(w) + 1) for b in "01"}
    return frozenset(word_to_composition(v) for v in words)


def binword_deletion_positions(u: BinaryWord, v: BinaryWord) -> frozenset[int]:
    """
    All 1-based positions q >= 2 such that deleting letter q from v gives
    u.  Empty when (u, v) is not a Binword cover.

    >>> sorted(binword_deletion_positions("10100", "101100"))
    [3, 4]
    >>> sorted(binword_deletion_positions("1010", "10100"))
    [4, 5]
    """
    if len(v) != len(u) + 1:
        raise ValueError(f"lengths differ by {len(v) - len(u)}, expected 1")
    return frozenset(q for q in range(2, len(v) + 1) if v[: q - 1] + v[q:] == u)
