"""Quasiplatonic surfaces as (group, generating vector) pairs.

A generating vector (g_1, ..., g_r) with product one encodes a Galois cover
of the sphere branched over r points with local orders equal to the element
orders.  Everything downstream is combinatorial: genera come from cycle
counting on coset actions (Riemann-Hurwitz) and, independently, from
fixed-space dimensions of the analytic character, whose irreducible
multiplicities are produced by the classical eigenvalue bookkeeping of the
branch data (Chevalley-Weil).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .chartable import Character, CharacterTable
from .cyclotomic import Cyclotomic
from .errors import (
    GroupMismatch,
    InconsistentRamification,
    NegativeGenus,
    NonIntegerGenus,
    NonIntegralMultiplicity,
    NotNormalInN,
    SubgroupMismatch,
)
from .group import FiniteGroup, Subgroup
from .perm import Permutation


@dataclass(frozen=True)
class Signature:
    """Orbit genus of the base together with the sorted branch orders."""

    orbit_genus: int
    periods: Tuple[int, ...]

    def __post_init__(self):
        if self.orbit_genus < 0:
            raise ValueError("orbit genus must be non-negative")
        if any(m < 2 for m in self.periods):
            raise ValueError("periods must be at least 2")
        object.__setattr__(self, "periods", tuple(sorted(self.periods)))

    def is_hyperbolic(self) -> bool:
        measure = 2 * self.orbit_genus - 2 + sum(1 - Fraction(1, m) for m in self.periods)
        return measure > 0


@dataclass(frozen=True)
class GeneratingVector:
    """Tuple of group elements with product one that generates the group."""

    group: FiniteGroup
    entries: Tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) < 2:
            raise ValueError("a generating vector needs at least two entries")
        prod = self.group.identity
        for g in self.entries:
            self.group.index_of(g)  # membership, raises ElementNotInGroup
            if g.order() < 2:
                raise ValueError("identity entries are not allowed")
            prod = prod * g
        if not prod.is_identity():
            raise ValueError("entries do not multiply to the identity")
        if self.group.generated_order(list(self.entries)) != self.group.order:
            raise ValueError("entries do not generate the group")

    @property
    def periods(self) -> Tuple[int, ...]:
        return tuple(g.order() for g in self.entries)

    def signature(self) -> Signature:
        return Signature(0, self.periods)

    def conjugate_by(self, h: Permutation) -> "GeneratingVector":
        hi = h.inverse()
        return GeneratingVector(self.group, tuple(h * g * hi for g in self.entries))


@dataclass(frozen=True)
class QuasiplatonicSurface:
    vector: GeneratingVector
    genus: int
    signature: Signature

    @classmethod
    def from_vector(cls, v: GeneratingVector) -> "QuasiplatonicSurface":
        return cls(v, genus_from_vector(v), v.signature())

    @property
    def group(self) -> FiniteGroup:
        return self.vector.group


@dataclass(frozen=True)
class QuotientSurface:
    """The quotient X/H of a surface with its branch data over the sphere."""

    surface: QuasiplatonicSurface
    subgroup: Subgroup
    genus: int
    branch_data: Tuple[Tuple[int, Tuple[int, ...]], ...]

    @property
    def degree(self) -> int:
        return self.subgroup.index


def genus_from_branch_data(order: int, periods: Sequence[int]) -> int:
    """Genus of the total space of a cover of the sphere with the given data."""
    r = len(periods)
    g = 1 + Fraction(order, 2) * (r - 2 - sum(Fraction(1, m) for m in periods))
    if g.denominator != 1:
        raise NonIntegerGenus(f"genus {g} is not an integer")
    if g < 0:
        raise NegativeGenus(f"genus {g} is negative")
    return int(g)


def genus_from_vector(v: GeneratingVector) -> int:
    return genus_from_branch_data(v.group.order, v.periods)


def find_generating_vectors(G: FiniteGroup, sig: Signature,
                            limit: int = 1) -> List[GeneratingVector]:
    """Up to `limit` vectors realizing the signature, in deterministic order.

    The first entry only runs over conjugacy class representatives: any
    vector is simultaneously conjugate to one found this way, and all
    derived invariants are conjugation invariant.
    """
    if sig.orbit_genus != 0:
        raise ValueError("only genus-zero base signatures are searched")
    periods = sig.periods
    r = len(periods)
    by_order: Dict[int, List[Permutation]] = {}
    for g in G.elements:
        by_order.setdefault(g.order(), []).append(g)
    firsts = [cls.representative for cls in G.conjugacy_classes()
              if cls.order == periods[0]]
    results: List[GeneratingVector] = []

    def generates(entries: Tuple[Permutation, ...]) -> bool:
        return G.generated_order(list(entries)) == G.order

    def extend(prefix: Tuple[Permutation, ...], prod: Permutation) -> None:
        if len(results) >= limit:
            return
        pos = len(prefix)
        if pos == r - 1:
            last = prod.inverse()
            if last.order() == periods[-1] and generates(prefix + (last,)):
                results.append(GeneratingVector(G, prefix + (last,)))
            return
        for g in by_order.get(periods[pos], []):
            extend(prefix + (g,), prod * g)
            if len(results) >= limit:
                return

    for g in firsts:
        extend((g,), g)
        if len(results) >= limit:
            break
    return results


def quotient_surface(X: QuasiplatonicSurface, H: Subgroup) -> QuotientSurface:
    """X/H with genus from cycle counting on the coset action of H."""
    G = X.group
    action = G.coset_action(H)
    n = H.index
    defect = 0
    branch = []
    for g in X.vector.entries:
        lengths = action[g].cycle_lengths()
        defect += n - len(lengths)
        branch.append((g.order(), tuple(sorted(lengths, reverse=True))))
    assert defect % 2 == 0, "Riemann-Hurwitz parity violated"
    genus = 1 - n + defect // 2
    assert genus >= 0
    return QuotientSurface(X, H, genus, tuple(branch))


def galois_quotient_signature(X: QuasiplatonicSurface, H: Subgroup,
                              N: Subgroup) -> Signature:
    """Signature of the Galois cover X/H -> X/N (H normal in N)."""
    G = X.group
    if H.parent is not G or N.parent is not G:
        raise SubgroupMismatch("subgroups of a different group")
    if not H.element_set <= N.element_set:
        raise SubgroupMismatch("H is not contained in N")
    for g in N.generators():
        gi = g.inverse()
        for h in H.elements:
            if g * h * gi not in H.element_set:
                raise NotNormalInN("H is not normal in N")

    act_H = G.coset_action(H)
    act_N = G.coset_action(N)
    cosets_H = G.left_cosets(H)
    cosets_N = G.left_cosets(N)
    n_coset_of: Dict[Permutation, int] = {}
    for ci, members in enumerate(cosets_N):
        for m in members:
            n_coset_of[m] = ci
    proj = [n_coset_of[c[0]] for c in cosets_H]

    periods = []
    for g in X.vector.entries:
        perm_H = act_H[g]
        for cyc in act_N[g].all_cycles():
            l_base = len(cyc)
            in_fiber = set(cyc)
            pts = [i for i, t in enumerate(proj) if t in in_fiber]
            lengths = set()
            seen = set()
            for start in pts:
                if start in seen:
                    continue
                length = 0
                x = start
                while x not in seen:
                    seen.add(x)
                    x = perm_H(x)
                    length += 1
                lengths.add(length)
            if len(lengths) != 1:
                raise InconsistentRamification(
                    f"unequal ramification over one point: {sorted(lengths)}")
            l_top = lengths.pop()
            if l_top % l_base:
                raise InconsistentRamification(
                    f"cycle length {l_top} not divisible by {l_base}")
            if l_top // l_base > 1:
                periods.append(l_top // l_base)
    orbit = quotient_surface(X, N).genus
    return Signature(orbit, tuple(periods))


def chevalley_weil_multiplicities(X: QuasiplatonicSurface,
                                  T: CharacterTable) -> Tuple[int, ...]:
    """Multiplicity of each irreducible in the space of holomorphic 1-forms.

    For each branch point with local generator g of order m, the eigenvalue
    exp(2*pi*i*alpha/m) of rho(g) contributes (m - alpha)/m.  The opposite
    orientation would produce the conjugate character; every verdict
    computed downstream is invariant under that swap.
    """
    G = X.group
    if T.group is not G:
        raise GroupMismatch("table belongs to a different group")
    key = ("cw", X)
    if key in T._cache:
        return T._cache[key]
    trivial = T.trivial_index

    power_data = []
    for g in X.vector.entries:
        m = g.order()
        pcs = []
        cur = G.identity
        for _ in range(m):
            pcs.append(G.class_index(cur))
            cur = cur * g
        power_data.append((m, pcs))

    mults = []
    for idx, chi in enumerate(T.irreducibles):
        d = chi.degree
        total = Fraction(-d) + (1 if idx == trivial else 0)
        for m, pcs in power_data:
            for alpha in range(1, m):
                acc = Cyclotomic.zero()
                for s in range(m):
                    acc = acc + chi.values[pcs[s]] * Cyclotomic.zeta(m, (-alpha * s) % m)
                acc = acc / m
                try:
                    count = acc.integer_value()
                except ValueError:
                    raise NonIntegralMultiplicity(
                        f"eigenvalue multiplicity {acc.to_string()} not integral") from None
                if count < 0:
                    raise NonIntegralMultiplicity(f"negative eigenvalue count {count}")
                if count:
                    total += Fraction(count * (m - alpha), m)
        if total.denominator != 1 or total < 0:
            raise NonIntegralMultiplicity(f"multiplicity {total} for irreducible {idx}")
        mults.append(int(total))

    assert mults[trivial] == 0
    assert sum(n * chi.degree for n, chi in zip(mults, T.irreducibles)) == X.genus
    result = tuple(mults)
    T._cache[key] = result
    return result


def analytic_character(X: QuasiplatonicSurface, T: CharacterTable) -> Character:
    """Character of the group action on holomorphic 1-forms; degree = genus."""
    key = ("analytic", X)
    if key in T._cache:
        return T._cache[key]
    mults = chevalley_weil_multiplicities(X, T)
    k = len(T.irreducibles[0].values)
    values = []
    for j in range(k):
        acc = Cyclotomic.zero()
        for n, chi in zip(mults, T.irreducibles):
            if n:
                acc = acc + chi.values[j] * n
        values.append(acc)
    chi_a = Character(T.group, tuple(values))
    assert chi_a.degree == X.genus
    T._cache[key] = chi_a
    return chi_a
