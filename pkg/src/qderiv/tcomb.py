"""t-compositions, t-permutations, their statistics and bijections.

A t-composition of n is a composition (c_0, ..., c_m) of n in which only
the end parts may vanish, with the extra parity conditions: a single part
must be odd; with two or more parts the ends are even and the interior
parts odd.  The empty object n = 0 is represented by the distinguished
pair (0, 0).

A t-permutation of order n is a sequence of words whose concatenation is
a permutation of 1..n, the first word rising alternating, the others
falling alternating, with lengths forming a t-composition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple

from qderiv import permstats
from qderiv.permstats import Word, is_falling_alternating, is_rising_alternating
from qderiv.ring import QPoly

BRUTE_FORCE_BOUND = 8


class BruteForceBoundError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the configured bound."""


def _guard(n: int, bound: Optional[int]) -> None:
    limit = BRUTE_FORCE_BOUND if bound is None else bound
    if n > limit:
        raise BruteForceBoundError(
            "order %d exceeds the brute-force bound %d" % (n, limit)
        )


@dataclass(frozen=True)
class TComposition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not _is_t_composition(parts):
            raise ValueError("not a t-composition: %r" % (parts,))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def mu(self) -> int:
        return len(self.parts) - 1

    def is_s_composition(self) -> bool:
        return self.parts[-1] == 0

    def reduced(self) -> Tuple[int, ...]:
        """Drop the trailing zero part (plain tuple; not a t-composition)."""
        if not self.is_s_composition():
            raise ValueError("only s-compositions have a reduced form")
        return self.parts[:-1]

    def mirror(self) -> Tuple[int, ...]:
        return tuple(reversed(self.parts))

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    @staticmethod
    def from_json(data: dict) -> "TComposition":
        return TComposition(tuple(data["parts"]))


def _is_t_composition(parts: Tuple[int, ...]) -> bool:
    if not parts or any(p < 0 for p in parts):
        return False
    if sum(parts) == 0:
        return parts == (0, 0)
    m = len(parts) - 1
    if m == 0:
        return parts[0] % 2 == 1
    if parts[0] % 2 or parts[-1] % 2:
        return False
    return all(p % 2 == 1 for p in parts[1:-1])


@lru_cache(maxsize=None)
def _odd_compositions(total: int) -> Tuple[Tuple[int, ...], ...]:
    if total == 0:
        return ((),)
    out = []
    for first in range(1, total + 1, 2):
        for rest in _odd_compositions(total - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_t_compositions(n: int) -> Tuple[TComposition, ...]:
    """All t-compositions of n, ordered by (number of parts, parts)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (TComposition((0, 0)),)
    found = []
    if n % 2:
        found.append((n,))
    for c0 in range(0, n + 1, 2):
        for cm in range(0, n - c0 + 1, 2):
            for interior in _odd_compositions(n - c0 - cm):
                found.append((c0,) + interior + (cm,))
    found.sort(key=lambda p: (len(p), p))
    return tuple(TComposition(p) for p in found)


def filter_by_mu(n: int, m: int) -> Tuple[TComposition, ...]:
    return tuple(c for c in enumerate_t_compositions(n) if c.mu == m)


def s_compositions(n: int) -> Tuple[TComposition, ...]:
    return tuple(c for c in enumerate_t_compositions(n) if c.is_s_composition())


@dataclass(frozen=True)
class TPermStats:
    lam: TComposition
    mu: int
    min: Optional[int]
    ides: int
    imaj: int
    inv: int


@dataclass(frozen=True)
class TPermutation:
    components: Tuple[Word, ...]

    def __post_init__(self):
        comps = tuple(tuple(w) for w in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("a t-permutation has at least one component")
        letters = sorted(self.concat())
        if letters != list(range(1, len(letters) + 1)):
            raise ValueError("concatenation is not a permutation: %r" % (comps,))
        m = len(comps) - 1
        if m == 0:
            ok = is_rising_alternating(comps[0]) and len(comps[0]) % 2 == 1
        else:
            ok = (
                is_rising_alternating(comps[0])
                and len(comps[0]) % 2 == 0
                and is_falling_alternating(comps[-1])
                and len(comps[-1]) % 2 == 0
                and all(
                    is_falling_alternating(w) and len(w) % 2 == 1
                    for w in comps[1:-1]
                )
            )
        if not ok:
            raise ValueError("component shapes violate the alternation rules: %r" % (comps,))

    @property
    def n(self) -> int:
        return sum(len(w) for w in self.components)

    @property
    def mu(self) -> int:
        return len(self.components) - 1

    def concat(self) -> Word:
        return tuple(itertools.chain.from_iterable(self.components))

    def lam(self) -> TComposition:
        return TComposition(tuple(len(w) for w in self.components))

    def min_component(self) -> Optional[int]:
        """Index of the component containing the letter 1; None when n = 0."""
        for a, w in enumerate(self.components):
            if 1 in w:
                return a
        return None

    def stats(self) -> TPermStats:
        st = permstats.statistics(self.concat())
        return TPermStats(
            lam=self.lam(),
            mu=self.mu,
            min=self.min_component(),
            ides=st.ides,
            imaj=st.imaj,
            inv=st.inv,
        )

    def is_first_kind(self) -> bool:
        """True when 1 occurs as a one-letter component that can be deleted.

        The single-component word (1) counts as second kind: removing its
        only component would not leave a t-permutation, and the insertion
        bijections classify it as a gluing image.
        """
        return self.mu >= 1 and (1,) in self.components

    def trailing_empty(self) -> bool:
        return self.components[-1] == ()

    def to_json(self) -> dict:
        return {"components": [list(w) for w in self.components]}

    @staticmethod
    def from_json(data: dict) -> "TPermutation":
        return TPermutation(tuple(tuple(w) for w in data["components"]))


# -- enumeration by cutting permutations --------------------------------


def _descent_bits(word: Word) -> Tuple[bool, ...]:
    return tuple(word[i] > word[i + 1] for i in range(len(word) - 1))


def _cut_alternation_ok(desc: Tuple[bool, ...], parts: Tuple[int, ...]) -> bool:
    # Component 0 is rising (descents at odd offsets); the rest are
    # falling (descents at even offsets).  Length parities are already
    # guaranteed by the t-composition.
    p = 0
    for ci, length in enumerate(parts):
        odd_descents = ci == 0
        for t in range(length - 1):
            if desc[p + t] != (t % 2 == (1 if odd_descents else 0)):
                return False
        p += length
    return True


def _cut(word: Word, parts: Tuple[int, ...]) -> Tuple[Word, ...]:
    out = []
    p = 0
    for length in parts:
        out.append(word[p : p + length])
        p += length
    return tuple(out)


def iter_valid_cuts(n: int, bound: Optional[int] = None) -> Iterator[Tuple[Word, TComposition]]:
    """Stream (permutation, composition) pairs whose cut is a t-permutation."""
    _guard(n, bound)
    comps = enumerate_t_compositions(n)
    for sigma in permstats.iter_permutations(n):
        desc = _descent_bits(sigma)
        for comp in comps:
            if _cut_alternation_ok(desc, comp.parts):
                yield sigma, comp


def enumerate_t_permutations(n: int, bound: Optional[int] = None) -> Iterator[TPermutation]:
    """Stream all t-permutations of order n in a deterministic order."""
    for sigma, comp in iter_valid_cuts(n, bound):
        yield TPermutation(_cut(sigma, comp.parts))


def t_permutations_with_lambda(
    n: int, comp: TComposition, bound: Optional[int] = None
) -> Iterator[TPermutation]:
    _guard(n, bound)
    parts = comp.parts
    for sigma in permstats.iter_permutations(n):
        if _cut_alternation_ok(_descent_bits(sigma), parts):
            yield TPermutation(_cut(sigma, parts))


def t_permutations_with_triple(
    n: int, k: int, a: int, b: int, bound: Optional[int] = None
) -> Iterator[TPermutation]:
    """Members with inverse descent count k, letter 1 in component a,
    and a+b components beyond the first."""
    for w in enumerate_t_permutations(n, bound):
        st = w.stats()
        if st.ides == k and st.min == a and w.mu == a + b:
            yield w


def s_permutations(n: int, bound: Optional[int] = None) -> Iterator[TPermutation]:
    """t-permutations whose last component is empty."""
    for w in enumerate_t_permutations(n, bound):
        if w.trailing_empty():
            yield w


def cut_by_lambda(sigma: Word, comp: TComposition) -> TPermutation:
    """Cut a permutation into consecutive blocks with the given lengths."""
    return TPermutation(_cut(tuple(sigma), comp.parts))


# -- the two insertion bijections ---------------------------------------


def _incremented(components: Tuple[Word, ...]) -> list:
    return [tuple(y + 1 for y in w) for w in components]


def delta_star(i: int, w: TPermutation) -> TPermutation:
    """Insert the one-letter word 1 before component i of the shifted word."""
    if not 1 <= i <= w.mu:
        raise ValueError("index %d out of range 1..%d" % (i, w.mu))
    inc = _incremented(w.components)
    return TPermutation(tuple(inc[:i] + [(1,)] + inc[i:]))


def star_delta(i: int, w: TPermutation) -> TPermutation:
    """Glue components i-1 and i of the shifted word around the letter 1."""
    if not 1 <= i <= w.mu:
        raise ValueError("index %d out of range 1..%d" % (i, w.mu))
    inc = _incremented(w.components)
    merged = inc[i - 1] + (1,) + inc[i]
    return TPermutation(tuple(inc[: i - 1] + [merged] + inc[i + 1 :]))


def _decremented(components: Sequence[Word]) -> Tuple[Word, ...]:
    return tuple(tuple(y - 1 for y in w) for w in components)


def delta_star_inv(w: TPermutation) -> Tuple[int, TPermutation]:
    """Inverse of ``delta_star``: delete the one-letter 1 and shift down."""
    comps = w.components
    try:
        a = comps.index((1,))
    except ValueError:
        raise ValueError("not of the first kind: no one-letter component 1")
    rest = comps[:a] + comps[a + 1 :]
    return a, TPermutation(_decremented(rest))


def star_delta_inv(w: TPermutation) -> Tuple[int, TPermutation]:
    """Inverse of ``star_delta``: split the component carrying 1."""
    for a, comp in enumerate(w.components):
        if 1 in comp and (len(comp) > 1 or w.mu == 0):
            j = comp.index(1)
            pieces = (
                w.components[:a] + (comp[:j], comp[j + 1 :]) + w.components[a + 1 :]
            )
            return a + 1, TPermutation(_decremented(pieces))
    raise ValueError("not of the second kind: 1 is not inside a longer component")


def psi_on_t(w: TPermutation) -> TPermutation:
    """Apply the descent-preserving bijection to the concatenation and re-cut."""
    image = permstats.psi(w.concat())
    return cut_by_lambda(image, w.lam())


# -- counting layer ------------------------------------------------------


@lru_cache(maxsize=None)
def alpha(n: int, m: int) -> int:
    """Number of t-compositions of n with m+1 parts."""
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return 1 if m == 1 else 0
    if n == 1:
        return 1 if m in (0, 2) else 0
    return alpha(n - 1, m - 1) + alpha(n - 2, m)


def beta(n: int, m: int) -> int:
    """Number of s-compositions of n with m+2 parts."""
    if n == 0:
        return 1 if m == 0 else 0
    return alpha(n - 1, m)


@lru_cache(maxsize=None)
def fibonacci_poly(n: int) -> QPoly:
    """Generating polynomial of alpha(n, .) in the outer variable."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return QPoly((0, 1))
    if n == 1:
        return QPoly((1, 0, 1))
    return fibonacci_poly(n - 1).shift(1) + fibonacci_poly(n - 2)
