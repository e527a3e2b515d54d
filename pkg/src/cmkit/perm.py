"""Permutations of {0, ..., n-1} stored as image tuples.

Composition is function composition: ``(p * q)(x) = p(q(x))``.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

from .errors import InvalidPermutation


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        if n == 0:
            raise InvalidPermutation("empty image array")
        seen = [False] * n
        for x in imgs:
            if x < 0 or x >= n or seen[x]:
                raise InvalidPermutation(f"image array {imgs!r} is not a bijection")
            seen[x] = True
        object.__setattr__(self, "images", imgs)

    # Permutations are immutable.
    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            m = len(cycle)
            for i in range(m):
                a, b = cycle[i], cycle[(i + 1) % m]
                if not (0 <= a < degree):
                    raise InvalidPermutation(f"point {a} out of range for degree {degree}")
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise InvalidPermutation("degree mismatch in composition")
        mine = self.images
        return Permutation(tuple(mine[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def order(self) -> int:
        # lcm of cycle lengths
        return lcm(*(len(c) for c in self.all_cycles())) if self.images else 1

    def all_cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its minimum."""
        seen = [False] * len(self.images)
        cycles = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            cycles.append(tuple(cycle))
        return cycles

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles only."""
        return [c for c in self.all_cycles() if len(c) > 1]

    def cycle_lengths(self) -> list[int]:
        """All cycle lengths including fixed points."""
        return [len(c) for c in self.all_cycles()]

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cyc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"
