"""Exact arithmetic on permutations of {1,...,n} in one-line notation.

A permutation is a tuple of ints (w_1, ..., w_n) with w_k = image of k,
every value of 1..n appearing exactly once.  All public I/O is 1-based.
"""

from __future__ import annotations

import math
from itertools import permutations as _lex_words

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    return tuple(range(1, n + 1))


def as_perm(word) -> Perm:
    """Validate a word as a permutation and return it as a tuple."""
    w = tuple(word)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w}")
    return w


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(k) = p(q(k))."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[v - 1] for v in q)


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for k, v in enumerate(p, start=1):
        inv[v - 1] = k
    return tuple(inv)


def is_even(p: Perm) -> bool:
    """True iff p is a product of an even number of transpositions."""
    seen = [False] * len(p)
    transpositions = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = p[k] - 1
            length += 1
        transpositions += length - 1
    return transpositions % 2 == 0


def parity(p: Perm) -> str:
    return "even" if is_even(p) else "odd"


def relative_parity(word) -> str:
    """Parity of an arrangement of distinct values relative to sorted order."""
    order = sorted(word)
    return parity(tuple(order.index(v) + 1 for v in word))


def lex_rank(p: Perm) -> int:
    """Rank of p among all degree-n permutations in lexicographic word order."""
    n = len(p)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if p[j] < p[i])
        rank += smaller * math.factorial(n - 1 - i)
    return rank


def lex_unrank(k: int, n: int) -> Perm:
    if not 0 <= k < math.factorial(n):
        raise ValueError(f"rank {k} out of range for degree {n}")
    values = list(range(1, n + 1))
    word = []
    for i in range(n, 0, -1):
        f = math.factorial(i - 1)
        idx, k = divmod(k, f)
        word.append(values.pop(idx))
    return tuple(word)


def all_perms(n: int):
    """All degree-n permutations in lexicographic order."""
    return (tuple(w) for w in _lex_words(range(1, n + 1)))


def swap_positions(p: Perm, i: int, j: int) -> Perm:
    """Exchange the contents of positions i and j (1-based)."""
    w = list(p)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def perm_to_str(p: Perm) -> str:
    """Digit string for n <= 9, comma-separated integers beyond."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def perm_from_str(s: str) -> Perm:
    s = s.strip()
    if "," in s:
        word = [int(tok) for tok in s.split(",")]
    else:
        word = [int(ch) for ch in s]
    return as_perm(word)
