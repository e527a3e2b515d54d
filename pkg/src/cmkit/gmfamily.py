"""The two-generator family C2^2 x| C_m of covering groups, for even m >= 6.

The group gm(m) is <a, b, t> with a^2 = b^2 = (ab)^2 = t^m = 1, t a t^-1 = a
and t b t^-1 = a b.  Elements are triples a^x b^y t^k; the permutation
realization is the regular action on those 4m triples.  The twist has order
two, which is why odd m collapses the presentation and is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import InvalidParameter, VectorNotFound
from .group import DEFAULT_MAX_ORDER, FiniteGroup, Subgroup
from .perm import Permutation
from .surface import (
    GeneratingVector,
    QuasiplatonicSurface,
    Signature,
    find_generating_vectors,
)


@dataclass(frozen=True)
class GmExpected:
    """Reference values carried for regression checks and reports."""

    genus: int
    periods: Tuple[int, ...]
    quotient_genus_a: int
    quotient_genus_b: Optional[int]
    curve_a: str
    curve_b: Optional[str]


class GmInstance:
    """gm(m) together with its distinguished generators and reference data."""

    def __init__(self, m: int, group: FiniteGroup,
                 a: Permutation, b: Permutation, t: Permutation):
        self.m = m
        self.group = group
        self.a = a
        self.b = b
        self.t = t
        if m % 4 == 2:
            periods = (2, m, 2 * m)
            genus = m - 2
            qb = None
            curve_b = None
        else:
            periods = (2, m, m)
            genus = m - 3
            qb = m // 4 - 1
            curve_b = f"y^2 = x^{m // 2} - 1"
        self.expected = GmExpected(
            genus=genus,
            periods=periods,
            quotient_genus_a=m // 2 - 1,
            quotient_genus_b=qb,
            curve_a=f"y^2 = x^{m} - 1",
            curve_b=curve_b,
        )
        self._vector: Optional[GeneratingVector] = None

    def subgroup_a(self) -> Subgroup:
        return self.group.subgroup_generated([self.a])

    def subgroup_b(self) -> Subgroup:
        return self.group.subgroup_generated([self.b])

    def surface(self) -> QuasiplatonicSurface:
        return QuasiplatonicSurface.from_vector(canonical_vector(self))

    def __repr__(self) -> str:
        return f"<gm({self.m}): order {self.group.order}>"


def build_gm(m: int, max_order: int = DEFAULT_MAX_ORDER) -> GmInstance:
    """Construct gm(m) as a permutation group on 4m points."""
    if m < 6 or m % 2 != 0:
        raise InvalidParameter(f"m must be an even integer >= 6, got {m}")

    def idx(x: int, y: int, k: int) -> int:
        return (x * 2 + y) * m + k

    def mul(p, q):
        x1, y1, k1 = p
        x2, y2, k2 = q
        return ((x1 + x2 + k1 * y2) % 2, (y1 + y2) % 2, (k1 + k2) % m)

    triples = [(x, y, k) for x in (0, 1) for y in (0, 1) for k in range(m)]

    def left_mult(g) -> Permutation:
        images = [0] * (4 * m)
        for p in triples:
            images[idx(*p)] = idx(*mul(g, p))
        return Permutation(images)

    a = left_mult((1, 0, 0))
    b = left_mult((0, 1, 0))
    t = left_mult((0, 0, 1))
    group = FiniteGroup.from_generators(4 * m, [a, b, t], max_order=max_order)
    assert group.order == 4 * m

    ident = group.identity
    assert a * a == ident and b * b == ident
    ab = a * b
    assert ab * ab == ident
    assert t ** m == ident and not (t ** (m // 2)).is_identity()
    ti = t.inverse()
    assert t * a * ti == a
    assert t * b * ti == ab
    return GmInstance(m, group, a, b, t)


def canonical_vector(inst: GmInstance) -> GeneratingVector:
    """A generating vector with the family's branch orders, found and cached."""
    if inst._vector is None:
        sig = Signature(0, inst.expected.periods)
        found = find_generating_vectors(inst.group, sig, limit=1)
        if not found:
            raise VectorNotFound(
                f"no generating vector with periods {inst.expected.periods} for m={inst.m}")
        inst._vector = found[0]
    return inst._vector


def known_subgroup_collection(inst: GmInstance):
    """The quotient collection realizing the family's Jacobian decomposition.

    For m = 2 mod 4 the Jacobian is isogenous to the square of the quotient
    by <a>; for m = 0 mod 4 it is isogenous to (quotient by <a>) times the
    square of the quotient by <b>.
    """
    from .criteria import IsogenyRelation

    if inst.m % 4 == 2:
        return IsogenyRelation(1, ((inst.subgroup_a(), 2),))
    return IsogenyRelation(1, ((inst.subgroup_a(), 1), (inst.subgroup_b(), 2)))
