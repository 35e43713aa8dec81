"""Compositions, ordered set partitions, words, and shuffle variants.

Conventions shared across the package: a composition is a tuple of positive
ints, a word is a tuple of positive ints (a permutation is a word on
1..n), and the empty object is the empty tuple. Text forms: compositions
join parts with commas ("3,1,2"), words use bare digits when every letter
is at most 9 ("3142") and commas otherwise, and the empty object is "-".
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence

from .lincomb import LinComb

Composition = tuple[int, ...]
Word = tuple[int, ...]


# ---------------------------------------------------------------- compositions

def compositions_of(n: int) -> list[Composition]:
    """All compositions of n, in lexicographic order (2^(n-1) of them for n >= 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out: list[Composition] = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            out.append((first,) + rest)
    return out


def composition_subset(alpha: Composition) -> tuple[int, ...]:
    """Proper partial sums of alpha, a subset of [n-1]."""
    sums = []
    total = 0
    for part in alpha[:-1]:
        total += part
        sums.append(total)
    return tuple(sums)


def composition_from_subset(subset: Sequence[int], n: int) -> Composition:
    """Inverse of composition_subset for subsets of [n-1]."""
    cuts = sorted(subset)
    if cuts and not (0 < cuts[0] and cuts[-1] < n):
        raise ValueError("subset out of range")
    prev = 0
    parts = []
    for c in cuts:
        parts.append(c - prev)
        prev = c
    if n:
        parts.append(n - prev)
    return tuple(parts)


def reversal(alpha: Composition) -> Composition:
    return alpha[::-1]


def coarsenings(alpha: Composition) -> list[Composition]:
    """All compositions obtained by merging adjacent parts of alpha."""
    if not alpha:
        return [()]
    out: list[Composition] = []

    def rec(i: int, acc: tuple[int, ...], pending: int) -> None:
        if i == len(alpha):
            out.append(acc + (pending,))
            return
        rec(i + 1, acc, pending + alpha[i])
        rec(i + 1, acc + (pending,), alpha[i])

    rec(1, (), alpha[0])
    return out


def refinements(alpha: Composition) -> list[Composition]:
    """All compositions that coarsen to alpha (split every part independently)."""
    out: list[Composition] = [()]
    for part in alpha:
        out = [acc + piece for acc in out for piece in compositions_of(part)]
    return out


def ordered_set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ordered set partitions of {1..n} into nonempty blocks (sorted tuples)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    # insert n into every partition of {1..n-1}: into an existing block, or as
    # a new singleton block at any position
    for smaller in ordered_set_partitions(n - 1):
        k = len(smaller)
        for i in range(k):
            yield smaller[:i] + (smaller[i] + (n,),) + smaller[i + 1:]
        for i in range(k + 1):
            yield smaller[:i] + ((n,),) + smaller[i:]


# ----------------------------------------------------------------------- words

def descent_composition(w: Word) -> Composition:
    """Composition cut at the descents of w; adjacent letters must differ."""
    for a, b in zip(w, w[1:]):
        if a == b:
            raise ValueError("equal adjacent letters have no descent pattern")
    subset = tuple(i + 1 for i, (a, b) in enumerate(zip(w, w[1:])) if a > b)
    return composition_from_subset(subset, len(w))


def standardize(w: Word) -> Word:
    """Replace the i-th smallest letter by i; letters must be distinct."""
    if len(set(w)) != len(w):
        raise ValueError("letters must be distinct")
    rank = {x: i + 1 for i, x in enumerate(sorted(w))}
    return tuple(rank[x] for x in w)


def shift(w: Word, m: int) -> Word:
    return tuple(x + m for x in w)


def rotate180(w: Word) -> Word:
    """Reverse w and mirror each letter within w's own letter set."""
    if len(set(w)) != len(w):
        raise ValueError("letters must be distinct")
    letters = sorted(w)
    mirror = {x: y for x, y in zip(letters, reversed(letters))}
    return tuple(mirror[x] for x in reversed(w))


def ascending_run(k: int, l: int) -> Word:
    """The word k, k+1, ..., l (empty when k > l)."""
    return tuple(range(k, l + 1))


def descending_run(l: int, k: int) -> Word:
    """The word l, l-1, ..., k (empty when l < k)."""
    return tuple(range(l, k - 1, -1))


def colayer_lengths(v: Word) -> Composition | None:
    """Layer sizes when v is a stack of increasing consecutive runs, top first.

    v qualifies iff splitting at descents yields runs of consecutive integers
    and each later run sits directly below the previous one. Returns None
    otherwise.
    """
    if not v:
        return ()
    runs: list[list[int]] = [[v[0]]]
    for x in v[1:]:
        if x > runs[-1][-1]:
            runs[-1].append(x)
        else:
            runs.append([x])
    for run in runs:
        for a, b in zip(run, run[1:]):
            if b != a + 1:
                return None
    for prev, nxt in zip(runs, runs[1:]):
        if nxt[-1] != prev[0] - 1:
            return None
    if runs[-1][0] != min(v):
        return None
    return tuple(len(run) for run in runs)


# -------------------------------------------------------------------- shuffles

def shuffles(v: Word, w: Word) -> Iterator[Word]:
    """Yield every interleaving of v and w, with repetition when words collide."""
    if not v:
        yield w
        return
    if not w:
        yield v
        return
    for rest in shuffles(v[1:], w):
        yield (v[0],) + rest
    for rest in shuffles(v, w[1:]):
        yield (w[0],) + rest


def shuffle(v: Word, w: Word) -> LinComb:
    """Shuffle product of two words, counted with multiplicity."""
    return LinComb((x, 1) for x in shuffles(v, w))


def quasishuffles(left: Sequence, right: Sequence) -> list[tuple[tuple, ...]]:
    """All quasishuffle vectors of two sequences of distinct formal variables.

    Each component of a vector is a tuple holding one variable from either
    side or one from each (left variable first). Restricting a vector to
    either side recovers that sequence in order.
    """
    out: list[tuple[tuple, ...]] = []
    lv, lw = len(left), len(right)

    def rec(i: int, j: int, acc: tuple[tuple, ...]) -> None:
        if i == lv and j == lw:
            out.append(acc)
            return
        if i < lv:
            rec(i + 1, j, acc + ((left[i],),))
        if j < lw:
            rec(i, j + 1, acc + ((right[j],),))
        if i < lv and j < lw:
            rec(i + 1, j + 1, acc + ((left[i], right[j]),))

    rec(0, 0, ())
    return out


def multishuffles(v: Word, w: Word, max_len: int) -> list[Word]:
    """Words of length <= max_len that restrict to multiwords of v and of w.

    v and w need disjoint letter sets and distinct letters each. A multiword
    repeats each letter one or more times in place; the shuffle must not put
    equal letters next to each other. Result sorted by (length, word).
    """
    if set(v) & set(w):
        raise ValueError("alphabets must be disjoint")
    if len(set(v)) != len(v) or len(set(w)) != len(w):
        raise ValueError("letters within each word must be distinct")
    lv, lw = len(v), len(w)
    out: list[Word] = []

    def rec(prefix: tuple[int, ...], i: int, j: int) -> None:
        if i == lv and j == lw:
            out.append(prefix)
        if len(prefix) == max_len:
            return
        last = prefix[-1] if prefix else None
        if i < lv:
            rec(prefix + (v[i],), i + 1, j)
        if j < lw:
            rec(prefix + (w[j],), i, j + 1)
        # repeat the most recently started letter of either word
        if i > 0 and v[i - 1] != last:
            rec(prefix + (v[i - 1],), i, j)
        if j > 0 and w[j - 1] != last:
            rec(prefix + (w[j - 1],), i, j)

    rec((), 0, 0)
    return sorted(out, key=lambda x: (len(x), x))


# ------------------------------------------------------------------ text forms

def parse_composition(text: str) -> Composition:
    if text == "-":
        return ()
    parts = tuple(int(p) for p in text.split(","))
    if any(p < 1 for p in parts):
        raise ValueError(f"not a composition: {text!r}")
    return parts


def render_composition(alpha: Composition) -> str:
    return ",".join(str(p) for p in alpha) if alpha else "-"


def parse_word(text: str) -> Word:
    if text == "-":
        return ()
    if "," in text:
        letters = tuple(int(p) for p in text.split(","))
    else:
        letters = tuple(int(ch) for ch in text)
    if any(x < 1 for x in letters):
        raise ValueError(f"not a word: {text!r}")
    return letters


def render_word(w: Word) -> str:
    if not w:
        return "-"
    if all(x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def permutations_of(n: int) -> Iterator[Word]:
    """All permutations of 1..n as tuples."""
    return permutations(range(1, n + 1))
