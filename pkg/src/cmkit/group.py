"""Finite permutation groups with eager element enumeration.

Groups are built by closing a generating set; every derived object
(conjugacy classes, subgroup lattice, coset actions) is computed over the
full element list and cached.  All orderings are deterministic: element
lists are sorted by image tuple, classes by (element order, size, minimal
member), subgroups by (order, element indices).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    ElementNotInGroup,
    GroupTooLarge,
    InvalidPermutation,
    NotNormal,
    SubgroupMismatch,
)
from .perm import Permutation

DEFAULT_MAX_ORDER = 100_000
DEFAULT_SUBGROUP_BOUND = 10_000

# Full multiplication tables are only materialized for small groups.
_TABLE_LIMIT = 2048


class FiniteGroup:
    """A finite permutation group on {0, ..., degree-1}."""

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 max_order: int = DEFAULT_MAX_ORDER,
                 _elements: Optional[Sequence[Permutation]] = None):
        self.degree = int(degree)
        gens = tuple(generators)
        for g in gens:
            if g.degree != self.degree:
                raise InvalidPermutation(
                    f"generator degree {g.degree} does not match group degree {self.degree}")
        self.generators = gens
        if _elements is None:
            elements = _close({Permutation.identity(self.degree)}, gens, max_order)
        else:
            elements = list(_elements)
        elements.sort()
        self.elements: Tuple[Permutation, ...] = tuple(elements)
        self._index: Dict[Permutation, int] = {g: i for i, g in enumerate(self.elements)}
        # The identity is the lexicographically smallest bijection.
        assert self.elements[0].is_identity()
        self.identity = self.elements[0]
        self._inv: List[int] = [self._index[g.inverse()] for g in self.elements]
        self._table: Optional[List[List[int]]] = None
        self._classes: Optional[Tuple[ConjugacyClass, ...]] = None
        self._class_of: Optional[Dict[Permutation, int]] = None
        self._subgroups: Optional[Tuple["Subgroup", ...]] = None
        self._exponent: Optional[int] = None
        self._chartable = None  # populated by cmkit.chartable.character_table

    @classmethod
    def from_generators(cls, degree: int, gens: Sequence[Permutation],
                        max_order: int = DEFAULT_MAX_ORDER) -> "FiniteGroup":
        return cls(degree, gens, max_order=max_order)

    @classmethod
    def trivial(cls, degree: int = 1) -> "FiniteGroup":
        return cls(degree, ())

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        """C_n as the group generated by an n-cycle."""
        if n == 1:
            return cls.trivial()
        return cls(n, (Permutation.from_cycles(n, [tuple(range(n))]),))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self._index

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"<FiniteGroup of order {self.order} on {self.degree} points>"

    # -- index arithmetic ------------------------------------------------

    def index_of(self, g: Permutation) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise ElementNotInGroup(f"{g!r} is not in the group") from None

    def _ensure_table(self) -> None:
        if self._table is None and self.order <= _TABLE_LIMIT:
            els = self.elements
            idx = self._index
            self._table = [[idx[a * b] for b in els] for a in els]

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self._index[self.elements[i] * self.elements[j]]

    def inv(self, i: int) -> int:
        return self._inv[i]

    # -- basic predicates ------------------------------------------------

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def element_order(self, g: Permutation) -> int:
        """Order of g, which equals the lcm of its cycle lengths."""
        if g not in self._index:
            raise ElementNotInGroup(f"{g!r} is not in the group")
        return g.order()

    def exponent(self) -> int:
        if self._exponent is None:
            self._exponent = lcm(*(g.order() for g in self.elements))
        return self._exponent

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_classes(self) -> Tuple["ConjugacyClass", ...]:
        if self._classes is not None:
            return self._classes
        self._ensure_table()
        n = self.order
        gen_idx = [self._index[g] for g in self.generators]
        seen = [False] * n
        raw: List[List[int]] = []
        for start in range(n):
            if seen[start]:
                continue
            orbit = {start}
            frontier = [start]
            seen[start] = True
            while frontier:
                nxt = []
                for x in frontier:
                    for gi in gen_idx:
                        y = self.mul(self.mul(gi, x), self._inv[gi])
                        if y not in orbit:
                            orbit.add(y)
                            seen[y] = True
                            nxt.append(y)
                frontier = nxt
            raw.append(sorted(orbit))
        raw.sort(key=lambda members: (self.elements[members[0]].order(),
                                      len(members),
                                      self.elements[members[0]].images))
        classes = []
        class_of: Dict[Permutation, int] = {}
        for ci, members in enumerate(raw):
            perms = tuple(self.elements[i] for i in members)
            classes.append(ConjugacyClass(representative=perms[0], members=perms,
                                          order=perms[0].order()))
            for p in perms:
                class_of[p] = ci
        self._classes = tuple(classes)
        self._class_of = class_of
        return self._classes

    def class_index(self, g: Permutation) -> int:
        self.conjugacy_classes()
        try:
            return self._class_of[g]
        except KeyError:
            raise ElementNotInGroup(f"{g!r} is not in the group") from None

    # -- subgroups ---------------------------------------------------------

    def subgroup(self, elements: Iterable[Permutation]) -> "Subgroup":
        return Subgroup(self, elements)

    def subgroup_generated(self, gens: Sequence[Permutation]) -> "Subgroup":
        for g in gens:
            if g not in self._index:
                raise ElementNotInGroup(f"{g!r} is not in the group")
        els = _close({self.identity}, tuple(gens), self.order)
        # closed by construction
        return Subgroup(self, els, _gens=tuple(gens), _validated=True)

    def generated_order(self, gens: Sequence[Permutation]) -> int:
        """Order of the subgroup generated, without building a Subgroup."""
        self._ensure_table()
        seed = [self.index_of(g) for g in gens]
        els = {0, *seed}
        frontier = list(els)
        while frontier:
            nxt = []
            for x in frontier:
                for s in seed:
                    y = self.mul(x, s)
                    if y not in els:
                        els.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(els)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), _gens=())

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.elements, _gens=self.generators)

    def all_subgroups(self, bound: int = DEFAULT_SUBGROUP_BOUND) -> Tuple["Subgroup", ...]:
        """Every subgroup, found by closing unions with cyclic subgroups."""
        if self.order > bound:
            raise GroupTooLarge(
                f"subgroup enumeration bound {bound} exceeded (order {self.order})")
        if self._subgroups is not None:
            return self._subgroups
        self._ensure_table()

        def close_idx(seed: frozenset) -> frozenset:
            els = set(seed)
            els.add(0)
            frontier = list(els)
            while frontier:
                nxt = []
                for x in frontier:
                    for s in seed:
                        y = self.mul(x, s)
                        if y not in els:
                            els.add(y)
                            nxt.append(y)
                frontier = nxt
            return frozenset(els)

        cyclics = []
        seen_cyc = set()
        for i in range(self.order):
            c = close_idx(frozenset([i]))
            if c not in seen_cyc:
                seen_cyc.add(c)
                cyclics.append((i, c))

        gensets: Dict[frozenset, Tuple[int, ...]] = {frozenset([0]): ()}
        for i, c in cyclics:
            gensets.setdefault(c, (i,))
        queue = list(gensets.keys())
        while queue:
            h = queue.pop()
            h_gens = gensets[h]
            for i, c in cyclics:
                if c <= h:
                    continue
                new_gens = h_gens + (i,)
                k = close_idx(frozenset(new_gens))
                if k not in gensets:
                    gensets[k] = new_gens
                    queue.append(k)

        subs = []
        for idxset, gens in sorted(gensets.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
            subs.append(Subgroup(self, (self.elements[i] for i in idxset),
                                 _gens=tuple(self.elements[i] for i in gens),
                                 _validated=True))
        self._subgroups = tuple(subs)
        return self._subgroups

    def _check_subgroup(self, H: "Subgroup") -> None:
        if H.parent is not self:
            raise SubgroupMismatch("subgroup belongs to a different group")

    def is_normal(self, H: "Subgroup") -> bool:
        self._check_subgroup(H)
        hset = H.element_set
        for g in self.generators:
            gi = g.inverse()
            for h in H.elements:
                if g * h * gi not in hset:
                    return False
        return True

    def normalizer(self, H: "Subgroup") -> "Subgroup":
        self._check_subgroup(H)
        h_idx = frozenset(self._index[h] for h in H.elements)
        members = []
        for i in range(self.order):
            ii = self._inv[i]
            if all(self.mul(self.mul(i, h), ii) in h_idx for h in h_idx):
                members.append(self.elements[i])
        return Subgroup(self, members, _validated=True)

    def centralizer_order(self, g: Permutation) -> int:
        return sum(1 for x in self.elements if x * g == g * x)

    # -- cosets and quotients ----------------------------------------------

    def left_cosets(self, H: "Subgroup") -> List[Tuple[Permutation, ...]]:
        """Left cosets gH, ordered by minimal member; the coset of 1 is first."""
        self._check_subgroup(H)
        h_idx = [self._index[h] for h in H.elements]
        seen = [False] * self.order
        cosets = []
        for i in range(self.order):
            if seen[i]:
                continue
            members = sorted(self.mul(i, h) for h in h_idx)
            for m in members:
                seen[m] = True
            cosets.append(tuple(self.elements[m] for m in members))
        return cosets

    def coset_action(self, H: "Subgroup") -> Dict[Permutation, Permutation]:
        """The homomorphism onto the action on left cosets of H."""
        cosets = self.left_cosets(H)
        coset_of: Dict[Permutation, int] = {}
        for ci, members in enumerate(cosets):
            for m in members:
                coset_of[m] = ci
        reps = [c[0] for c in cosets]
        action = {}
        for g in self.elements:
            action[g] = Permutation(tuple(coset_of[g * r] for r in reps))
        return action

    def quotient_with_map(self, N: "Subgroup") -> Tuple["FiniteGroup", Dict[Permutation, Permutation]]:
        if not self.is_normal(N):
            raise NotNormal("quotient by a non-normal subgroup")
        action = self.coset_action(N)
        images = sorted(set(action.values()))
        quotient = FiniteGroup(images[0].degree,
                               tuple(action[g] for g in self.generators),
                               _elements=images)
        assert quotient.order * N.order == self.order
        return quotient, action

    def quotient_group(self, N: "Subgroup") -> "FiniteGroup":
        """G/N realized as a permutation group via its regular action on cosets."""
        return self.quotient_with_map(N)[0]

    def abelian_invariants(self) -> Tuple[int, ...]:
        """Invariant factors d_1 | d_2 | ... of an abelian group.

        Derived from counts of elements of each prime-power order, which
        determine the partition of every primary component.
        """
        if not self.is_abelian():
            raise ValueError("abelian_invariants requires an abelian group")
        n = self.order
        if n == 1:
            return ()
        primes = _prime_factors(n)
        primary: Dict[int, List[int]] = {}
        for p in primes:
            counts = [1]  # number of x with x^(p^j) = 1
            j = 1
            while True:
                q = p ** j
                c = sum(1 for g in self.elements if q % g.order() == 0)
                counts.append(c)
                if counts[-1] == counts[-2]:
                    counts.pop()
                    break
                j += 1
            # counts[j] = p^(sum_i min(lambda_i, j)); successive ratios give the
            # conjugate partition.
            exps = []
            for j in range(1, len(counts)):
                ratio = counts[j] // counts[j - 1]
                k = 0
                while ratio > 1:
                    ratio //= p
                    k += 1
                exps.append(k)  # number of parts >= j
            parts: List[int] = []
            for j, cnt in enumerate(exps, start=1):
                while len(parts) < cnt:
                    parts.append(0)
                for i in range(cnt):
                    parts[i] = j
            primary[p] = sorted((p ** lam for lam in parts), reverse=True)
        width = max(len(v) for v in primary.values())
        factors = []
        for i in range(width):
            d = 1
            for p in primes:
                comp = primary[p]
                if i < len(comp):
                    d *= comp[i]
            factors.append(d)
        factors.reverse()  # ascending divisibility chain
        assert all(factors[i + 1] % factors[i] == 0 for i in range(len(factors) - 1))
        return tuple(factors)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    members: Tuple[Permutation, ...]
    order: int

    @property
    def size(self) -> int:
        return len(self.members)


class Subgroup:
    """A subgroup given by its full (closed) element set."""

    def __init__(self, parent: FiniteGroup, elements: Iterable[Permutation],
                 _gens: Optional[Tuple[Permutation, ...]] = None,
                 _validated: bool = False):
        self.parent = parent
        els = sorted(set(elements))
        self.elements: Tuple[Permutation, ...] = tuple(els)
        self.element_set = frozenset(els)
        if not _validated:
            for h in els:
                if h not in parent._index:
                    raise SubgroupMismatch(f"{h!r} is not in the parent group")
            for a in els:
                for b in els:
                    if a * b not in self.element_set:
                        raise SubgroupMismatch("element set is not closed")
            if parent.identity not in self.element_set:
                raise SubgroupMismatch("identity missing from subgroup")
        assert parent.order % len(els) == 0  # Lagrange
        self._gens = _gens
        self._as_group: Optional[FiniteGroup] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_set

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.element_set == self.element_set)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.element_set))

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators())
        return f"<Subgroup of order {self.order} = <{gens}>>"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_full(self) -> bool:
        return self.order == self.parent.order

    def is_proper_nontrivial(self) -> bool:
        return 1 < self.order < self.parent.order

    def generators(self) -> Tuple[Permutation, ...]:
        """A small deterministic generating set (greedy over sorted elements)."""
        if self._gens is not None:
            return self._gens
        gens: List[Permutation] = []
        have = {self.parent.identity}
        for g in self.elements:
            if g in have:
                continue
            gens.append(g)
            have = set(_close(have, tuple(gens), self.order))
            if len(have) == self.order:
                break
        self._gens = tuple(gens)
        return self._gens

    def is_abelian(self) -> bool:
        els = self.elements
        return all(a * b == b * a for i, a in enumerate(els) for b in els[i + 1:])

    def is_cyclic(self) -> bool:
        return any(g.order() == self.order for g in self.elements)

    def as_group(self) -> FiniteGroup:
        """The same elements packaged as a standalone FiniteGroup."""
        if self._as_group is None:
            self._as_group = FiniteGroup(self.parent.degree, self.generators(),
                                         _elements=self.elements)
        return self._as_group


def _close(start: set, gens: Tuple[Permutation, ...], max_order: int) -> List[Permutation]:
    els = set(start)
    frontier = list(els)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in els:
                    if len(els) >= max_order:
                        raise GroupTooLarge(f"order bound {max_order} exceeded")
                    els.add(y)
                    nxt.append(y)
        frontier = nxt
    return list(els)


def _prime_factors(n: int) -> List[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
