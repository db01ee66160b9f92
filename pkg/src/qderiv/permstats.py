"""Permutation and word statistics, alternation predicates and bijections.

Words are tuples of distinct positive integers; permutations of order n
are words whose letters are exactly 1..n.  The statistics extend to
arbitrary words of distinct letters: a position i is a descent when
w[i] > w[i+1]; a value v lies in the inverse descent set when v+1 occurs
strictly earlier in the word than v.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

Word = Tuple[int, ...]


@dataclass(frozen=True)
class WordStats:
    inv: int
    ligne: frozenset
    iligne: frozenset
    des: int
    ides: int
    maj: int
    imaj: int


def inv(word: Sequence[int]) -> int:
    count = 0
    for i in range(len(word)):
        wi = word[i]
        for j in range(i + 1, len(word)):
            if wi > word[j]:
                count += 1
    return count


def ligne(word: Sequence[int]) -> frozenset:
    """Descent positions, 1-based."""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def iligne(word: Sequence[int]) -> frozenset:
    """Values v whose successor v+1 occurs earlier in the word."""
    pos = {v: i for i, v in enumerate(word)}
    return frozenset(v for v in word if v + 1 in pos and pos[v + 1] < pos[v])


def statistics(word: Sequence[int]) -> WordStats:
    word = tuple(word)
    lg = ligne(word)
    ilg = iligne(word)
    return WordStats(
        inv=inv(word),
        ligne=lg,
        iligne=ilg,
        des=len(lg),
        ides=len(ilg),
        maj=sum(lg),
        imaj=sum(ilg),
    )


def is_rising_alternating(word: Sequence[int]) -> bool:
    """y1 < y2 > y3 < ...; empty and one-letter words qualify."""
    for i in range(len(word) - 1):
        if i % 2 == 0:
            if word[i] > word[i + 1]:
                return False
        elif word[i] < word[i + 1]:
            return False
    return True


def is_falling_alternating(word: Sequence[int]) -> bool:
    """y1 > y2 < y3 > ...; empty and one-letter words qualify."""
    for i in range(len(word) - 1):
        if i % 2 == 0:
            if word[i] < word[i + 1]:
                return False
        elif word[i] > word[i + 1]:
            return False
    return True


def _check_permutation(word: Sequence[int]) -> Word:
    word = tuple(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError("not a permutation of 1..n: %r" % (word,))
    return word


def inverse(sigma: Sequence[int]) -> Word:
    sigma = _check_permutation(sigma)
    out = [0] * len(sigma)
    for pos, v in enumerate(sigma, start=1):
        out[v - 1] = pos
    return tuple(out)


def mirror_rho(sigma: Sequence[int]) -> Word:
    return tuple(reversed(tuple(sigma)))


def complement_gamma(sigma: Sequence[int]) -> Word:
    sigma = _check_permutation(sigma)
    n = len(sigma)
    return tuple(n + 1 - v for v in sigma)


def foata_phi(word: Sequence[int]) -> Word:
    """Second fundamental transformation.

    Built left to right: after the image v has been formed and the next
    letter a arrives, cut v after every letter <= a when v ends with a
    letter <= a (otherwise after every letter > a), rotate the last
    letter of each factor to its front, then append a.  Sends maj to inv
    and preserves the inverse descent set.
    """
    word = tuple(word)
    if len(word) < 2:
        return word
    image = [word[0]]
    for a in word[1:]:
        small = image[-1] <= a
        rebuilt = []
        block_start = 0
        for i, y in enumerate(image):
            if (y <= a) == small:
                rebuilt.append(image[i])
                rebuilt.extend(image[block_start:i])
                block_start = i + 1
        image = rebuilt
        image.append(a)
    return tuple(image)


def psi(sigma: Sequence[int]) -> Word:
    """Conjugate of the second fundamental transformation by inversion.

    Preserves the descent set and sends the inverse major index to the
    inversion number.
    """
    return inverse(foata_phi(inverse(sigma)))


def iter_permutations(n: int) -> Iterator[Word]:
    """All permutations of 1..n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def iter_rising_alternating(n: int) -> Iterator[Word]:
    return (w for w in iter_permutations(n) if is_rising_alternating(w))


def iter_falling_alternating(n: int) -> Iterator[Word]:
    return (w for w in iter_permutations(n) if is_falling_alternating(w))
