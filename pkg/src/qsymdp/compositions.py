"""Compositions of nonnegative integers and their descent-set calculus."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class Composition(tuple):
    """A finite sequence of positive integers.  The empty composition is ``()``."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be >= 1, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


@dataclass(frozen=True)
class DescentSet:
    """A subset of {1, ..., n-1} together with its ambient size n."""

    n: int
    members: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient size must be nonnegative")
        bad = [u for u in self.members if not (1 <= u <= self.n - 1)]
        if bad:
            raise ValueError(f"descent members {bad} outside {{1,...,{self.n - 1}}}")


def sort_key(alpha: Composition) -> tuple:
    """Deterministic order: by size, then length, then lexicographic on parts."""
    return (sum(alpha), len(alpha), tuple(alpha))


def descent_set(alpha: Composition) -> DescentSet:
    """Proper prefix sums of ``alpha``, with ambient size n = |alpha|."""
    sums = list(itertools.accumulate(alpha))
    return DescentSet(n=sum(alpha), members=frozenset(sums[:-1]))


def comp_of_subset(d: DescentSet) -> Composition:
    """The unique composition of d.n whose descent set is d.

    Successive differences of sorted(members | {0, n}).
    """
    pts = sorted(d.members | {0, d.n})
    return Composition(b - a for a, b in zip(pts, pts[1:]))


def reverse(alpha: Composition) -> Composition:
    return Composition(reversed(alpha))


def conjugate(alpha: Composition) -> Composition:
    """The conjugate composition: its descent set is the complement of D(rev alpha)."""
    n = sum(alpha)
    rev_d = descent_set(reverse(alpha)).members
    complement = frozenset(range(1, n)) - rev_d
    return comp_of_subset(DescentSet(n=n, members=complement))


def compositions_of(n: int) -> Iterator[Composition]:
    """All compositions of n, in the deterministic order of sort_key."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    comps = [
        comp_of_subset(DescentSet(n=n, members=frozenset(s)))
        for k in range(n)
        for s in itertools.combinations(range(1, n), k)
    ]
    if n == 0:
        comps = [Composition()]
    return iter(sorted(comps, key=sort_key))


def format_composition(alpha: Composition) -> str:
    return "(" + ",".join(str(p) for p in alpha) + ")"


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"composition must be parenthesized: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return Composition()
    return Composition(int(p) for p in inner.split(","))
