"""Finite posets given by their elements and a strict order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence


@dataclass(frozen=True)
class Poset:
    """Elements ``0..n-1`` (with display ``labels``) and strict upper sets ``above[i]``.

    ``above[i]`` holds every j with i < j.  Transitivity is the caller's job.
    """

    labels: tuple[Hashable, ...]
    above: tuple[frozenset[int], ...]

    @classmethod
    def from_leq(cls, labels: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool]) -> "Poset":
        labels = tuple(labels)
        above = tuple(
            frozenset(j for j, b in enumerate(labels) if j != i and leq(a, b))
            for i, a in enumerate(labels)
        )
        return cls(labels, above)

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(tuple(range(n)), tuple(frozenset() for _ in range(n)))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(tuple(range(n)), tuple(frozenset(range(i + 1, n)) for i in range(n)))

    def __len__(self) -> int:
        return len(self.labels)

    def less(self, i: int, j: int) -> bool:
        return j in self.above[i]

    def with_top(self) -> "Poset":
        """Adjoin a new maximum element (the result's order complex is a cone)."""
        n = len(self.labels)
        above = tuple(a | {n} for a in self.above) + (frozenset(),)
        return Poset(self.labels + ("top",), above)
