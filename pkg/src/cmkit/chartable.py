"""Exact complex irreducible character tables.

The table is computed with the class-matrix method: the joint eigenvectors
of the class-multiplication matrices are found over F_p for a prime
p = 1 (mod e), where e is the group exponent, degrees are recovered from
the orthogonality relation, and exact cyclotomic values are lifted with
the discrete Fourier formula over power maps.  Multiplicities of roots of
unity are small non-negative integers, so their mod-p representatives are
exact and the lifted table is an exact object; the norm-one and degree-sum
identities are re-checked after lifting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Tuple

from .cyclotomic import Cyclotomic, _reduction_rows
from .errors import GroupMismatch, GroupTooLarge, NonIntegralResult, SubgroupMismatch
from .group import FiniteGroup, Subgroup

DEFAULT_CHARTABLE_BOUND = 2000


@dataclass(frozen=True, eq=False)
class Character:
    """A class function given by one exact value per conjugacy class."""

    group: FiniteGroup
    values: Tuple[Cyclotomic, ...]

    @property
    def degree(self) -> int:
        return self.values[0].integer_value()

    def value_at(self, g) -> Cyclotomic:
        return self.values[self.group.class_index(g)]

    def conjugate(self) -> "Character":
        return Character(self.group, tuple(v.conjugate() for v in self.values))

    def __add__(self, other: "Character") -> "Character":
        if other.group is not self.group:
            raise GroupMismatch("characters of different groups")
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Character) and other.group is self.group
                and all(a == b for a, b in zip(self.values, other.values)))

    def __repr__(self) -> str:
        return f"Character(deg {self.values[0].to_string()}, {len(self.values)} classes)"


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: FiniteGroup
    irreducibles: Tuple[Character, ...]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def conductor(self) -> int:
        return self.group.exponent()

    def __len__(self) -> int:
        return len(self.irreducibles)

    @property
    def trivial_index(self) -> int:
        one = Cyclotomic.one()
        for i, chi in enumerate(self.irreducibles):
            if all(v == one for v in chi.values):
                return i
        raise AssertionError("trivial character missing")

    def conjugate_index(self, i: int) -> int:
        key = ("conj", i)
        if key not in self._cache:
            conj = self.irreducibles[i].conjugate()
            for j, chi in enumerate(self.irreducibles):
                if chi == conj:
                    self._cache[key] = j
                    break
            else:
                raise AssertionError("table not closed under conjugation")
        return self._cache[key]

    def degrees(self) -> Tuple[int, ...]:
        return tuple(chi.degree for chi in self.irreducibles)


def character_table(G: FiniteGroup, bound: int = DEFAULT_CHARTABLE_BOUND) -> CharacterTable:
    if G._chartable is not None:
        return G._chartable
    if G.order > bound:
        raise GroupTooLarge(f"character table bound {bound} exceeded (order {G.order})")
    rows = _dixon_rows(G)
    e = G.exponent()
    chars = [Character(G, tuple(row)) for row in rows]
    chars.sort(key=lambda c: (c.values[0].integer_value(),
                              tuple(v.dense(e) for v in c.values)))
    table = CharacterTable(G, tuple(chars))
    _verify_table(table)
    G._chartable = table
    return table


def inner_product(chi: Character, psi: Character) -> Cyclotomic:
    """(1/|G|) sum over classes of |C| chi(C) conj(psi(C)), exact."""
    if chi.group is not psi.group:
        raise GroupMismatch("characters of different groups")
    G = chi.group
    total = Cyclotomic.zero()
    for cls, a, b in zip(G.conjugacy_classes(), chi.values, psi.values):
        total = total + a * b.conjugate() * cls.size
    return total / G.order


def power_class_map(G: FiniteGroup, k: int) -> Tuple[int, ...]:
    """Class index of g^k for a representative g of each class."""
    classes = G.conjugacy_classes()
    return tuple(G.class_index(cls.representative ** k) for cls in classes)


def symmetric_square(chi: Character) -> Character:
    """S^2(chi)(g) = (chi(g)^2 + chi(g^2)) / 2."""
    G = chi.group
    squares = power_class_map(G, 2)
    values = tuple((chi.values[j] * chi.values[j] + chi.values[squares[j]]) / 2
                   for j in range(len(chi.values)))
    return Character(G, values)


def fixed_space_dimension(chi: Character, H: Subgroup) -> int:
    """dim V^H = (1/|H|) sum over h of chi(h); integral for genuine characters."""
    G = chi.group
    if H.parent is not G:
        raise SubgroupMismatch("subgroup of a different group")
    total = Cyclotomic.zero()
    for h in H.elements:
        total = total + chi.values[G.class_index(h)]
    total = total / H.order
    try:
        value = total.integer_value()
    except ValueError:
        raise NonIntegralResult(
            f"fixed-space dimension {total.to_string()} is not an integer") from None
    if value < 0:
        raise NonIntegralResult(f"fixed-space dimension {value} is negative")
    return value


def regular_character(G: FiniteGroup) -> Character:
    values = [Cyclotomic.rational(G.order)]
    values += [Cyclotomic.zero()] * (len(G.conjugacy_classes()) - 1)
    return Character(G, tuple(values))


def trivial_character(G: FiniteGroup) -> Character:
    return Character(G, tuple(Cyclotomic.one() for _ in G.conjugacy_classes()))


# ---------------------------------------------------------------------------
# Dixon's method over F_p


def _dixon_rows(G: FiniteGroup) -> List[List[Cyclotomic]]:
    classes = G.conjugacy_classes()
    k = len(classes)
    n = G.order
    e = G.exponent()
    sizes = [cls.size for cls in classes]
    reps = [cls.representative for cls in classes]
    inv_class = [G.class_index(rep.inverse()) for rep in reps]

    p = _find_prime(e, 2 * n + 1)
    z = _find_root_of_unity(e, p)

    matrices = _class_matrices(G, classes)

    vectors = _joint_eigenvectors(matrices, k, p)
    assert len(vectors) == k

    inv_sizes = [pow(s, p - 2, p) for s in sizes]
    rows_out: List[List[Cyclotomic]] = []
    power_classes = [_power_classes_of(G, rep, e) for rep in reps]
    inv_e = pow(e, p - 2, p)
    zpow = [pow(z, t, p) for t in range(e)]

    for v in vectors:
        assert v[0] % p != 0
        norm = pow(v[0], p - 2, p)
        omega = [(x * norm) % p for x in v]
        s = sum(omega[j] * omega[inv_class[j]] * inv_sizes[j] for j in range(k)) % p
        d2 = (n * pow(s, p - 2, p)) % p
        degree = next((d for d in range(1, isqrt(n) + 1) if (d * d) % p == d2), None)
        assert degree is not None, "degree recovery failed"
        vals = [(degree * omega[j] * inv_sizes[j]) % p for j in range(k)]

        row: List[Cyclotomic] = []
        for j in range(k):
            pc = power_classes[j]
            mults: Dict[int, int] = {}
            total = 0
            for k_exp in range(e):
                m = sum(vals[pc[s_]] * zpow[(-k_exp * s_) % e] for s_ in range(e))
                m = (m * inv_e) % p
                if m:
                    assert m <= degree, "lifted multiplicity out of range"
                    mults[k_exp] = m
                    total += m
            assert total == degree, "eigenvalue multiplicities do not sum to the degree"
            row.append(_from_root_multiplicities(e, mults))
        rows_out.append(row)
    return rows_out


def _power_classes_of(G: FiniteGroup, rep, e: int) -> List[int]:
    out = []
    cur = G.identity
    for _ in range(e):
        out.append(G.class_index(cur))
        cur = cur * rep
    return out


def _from_root_multiplicities(e: int, mults: Dict[int, int]) -> Cyclotomic:
    rows = _reduction_rows(e)
    acc: Dict[int, Fraction] = {}
    for k_exp, m in mults.items():
        for j, t in rows[k_exp % e].items():
            v = acc.get(j, Fraction(0)) + m * t
            if v:
                acc[j] = v
            elif j in acc:
                del acc[j]
    return Cyclotomic(e, acc)


def _class_matrices(G: FiniteGroup, classes) -> List[List[List[int]]]:
    """M_i[j][l] = #{(x, y) in C_i x C_j : xy = z_l} for a fixed z_l."""
    G._ensure_table()
    k = len(classes)
    cls_of = [0] * G.order
    for ci, cls in enumerate(classes):
        for m in cls.members:
            cls_of[G.index_of(m)] = ci
    mats = [[[0] * k for _ in range(k)] for _ in range(k)]
    for l in range(k):
        zl = G.index_of(classes[l].representative)
        for x in range(G.order):
            y = G.mul(G.inv(x), zl)
            mats[cls_of[x]][cls_of[y]][l] += 1
    return mats


def _find_prime(e: int, minimum: int) -> int:
    p = minimum + ((1 - minimum) % e)
    if p < minimum:
        p += e
    while True:
        if p > 2 and _is_prime(p):
            return p
        p += e


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _find_root_of_unity(e: int, p: int) -> int:
    if e == 1:
        return 1
    prime_divs = []
    m = e
    d = 2
    while d * d <= m:
        if m % d == 0:
            prime_divs.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        prime_divs.append(m)
    for c in range(2, p):
        z = pow(c, (p - 1) // e, p)
        if all(pow(z, e // q, p) != 1 for q in prime_divs):
            return z
    raise AssertionError("no primitive root found")


# -- linear algebra over F_p --------------------------------------------------


def _joint_eigenvectors(matrices, k: int, p: int) -> List[List[int]]:
    """1-dimensional common eigenspaces of the commuting class matrices."""
    subspaces: List[List[List[int]]] = [[[1 if i == j else 0 for j in range(k)]
                                         for i in range(k)]]
    for mat in matrices[1:]:
        if all(len(b) == 1 for b in subspaces):
            break
        refined: List[List[List[int]]] = []
        for basis in subspaces:
            if len(basis) == 1:
                refined.append(basis)
                continue
            restricted = _restrict(mat, basis, p)
            eigs = _eigenvalues(restricted, p)
            if len(eigs) <= 1:
                refined.append(basis)
                continue
            for lam in sorted(eigs):
                lifted = []
                for coords in _nullspace(_shift(restricted, lam, p), p):
                    vec = [0] * k
                    for c, b in zip(coords, basis):
                        if c:
                            for idx in range(k):
                                vec[idx] = (vec[idx] + c * b[idx]) % p
                    lifted.append(vec)
                refined.append(lifted)
        subspaces = refined
    assert all(len(b) == 1 for b in subspaces), "class matrices failed to separate"
    return [b[0] for b in subspaces]


def _matvec(mat, vec, p):
    return [sum(row[j] * vec[j] for j in range(len(vec))) % p for row in mat]


def _restrict(mat, basis, p):
    solver = _RowBasis(basis, p)
    d = len(basis)
    cols = []
    for b in basis:
        w = _matvec(mat, b, p)
        coords = solver.coords(w)
        assert coords is not None, "subspace not invariant"
        cols.append(coords)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _shift(mat, lam, p):
    d = len(mat)
    return [[(mat[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]


def _eigenvalues(mat, p) -> List[int]:
    coeffs = _charpoly(mat, p)
    roots = []
    for lam in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * lam + c) % p
        if acc == 0:
            roots.append(lam)
    return roots


def _charpoly(mat, p) -> List[int]:
    """Characteristic polynomial coefficients (ascending) over F_p."""
    d = len(mat)
    h = [row[:] for row in mat]
    # similarity reduction to upper Hessenberg form
    for c in range(d - 2):
        pivot = next((r for r in range(c + 1, d) if h[r][c] % p), None)
        if pivot is None:
            continue
        if pivot != c + 1:
            h[pivot], h[c + 1] = h[c + 1], h[pivot]
            for r in range(d):
                h[r][pivot], h[r][c + 1] = h[r][c + 1], h[r][pivot]
        inv = pow(h[c + 1][c], p - 2, p)
        for r in range(c + 2, d):
            f = (h[r][c] * inv) % p
            if not f:
                continue
            for j in range(d):
                h[r][j] = (h[r][j] - f * h[c + 1][j]) % p
            for i in range(d):
                h[i][c + 1] = (h[i][c + 1] + f * h[i][r]) % p
    # expand det(xI - H) along the last column of each leading block
    polys: List[List[int]] = [[1]]
    for m in range(1, d + 1):
        # (x - H[m-1][m-1]) * f_{m-1}
        prev = polys[m - 1]
        cur = [0] + prev[:]
        for idx, c in enumerate(prev):
            cur[idx] = (cur[idx] - h[m - 1][m - 1] * c) % p
        cur = [c % p for c in cur]
        prod = 1
        for i in range(1, m):
            prod = (prod * h[m - i][m - i - 1]) % p
            coef = (h[m - 1 - i][m - 1] * prod) % p
            if coef:
                lower = polys[m - 1 - i]
                for idx, c in enumerate(lower):
                    cur[idx] = (cur[idx] - coef * c) % p
        polys.append([c % p for c in cur])
    return polys[d]


def _nullspace(mat, p) -> List[List[int]]:
    d = len(mat)
    m = [row[:] for row in mat]
    pivots = []
    r = 0
    for c in range(d):
        pivot = next((i for i in range(r, d) if m[i][c] % p), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(d):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * d
        vec[fc] = 1
        for row_idx, pc in enumerate(pivots):
            vec[pc] = (-m[row_idx][fc]) % p
        basis.append(vec)
    return basis


class _RowBasis:
    """Coordinates of vectors with respect to a fixed basis, over F_p."""

    def __init__(self, basis: List[List[int]], p: int):
        self.p = p
        d = len(basis)
        k = len(basis[0])
        rows = [b[:] for b in basis]
        transform = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
        pivots = []
        r = 0
        for c in range(k):
            pivot = next((i for i in range(r, d) if rows[i][c] % p), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            transform[r], transform[pivot] = transform[pivot], transform[r]
            inv = pow(rows[r][c], p - 2, p)
            rows[r] = [(x * inv) % p for x in rows[r]]
            transform[r] = [(x * inv) % p for x in transform[r]]
            for i in range(d):
                if i != r and rows[i][c] % p:
                    f = rows[i][c]
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
                    transform[i] = [(a - f * b) % p for a, b in zip(transform[i], transform[r])]
            pivots.append(c)
            r += 1
            if r == d:
                break
        assert r == d, "basis vectors are dependent"
        self.rows = rows
        self.transform = transform
        self.pivots = pivots

    def coords(self, w: List[int]) -> Optional[List[int]]:
        p = self.p
        y = [w[c] % p for c in self.pivots]
        # verify w = y . rows
        k = len(w)
        for j in range(k):
            acc = sum(y[i] * self.rows[i][j] for i in range(len(y))) % p
            if acc != w[j] % p:
                return None
        d = len(y)
        return [sum(y[i] * self.transform[i][j] for i in range(d)) % p for j in range(d)]


def _verify_table(table: CharacterTable) -> None:
    G = table.group
    k = len(G.conjugacy_classes())
    assert len(table.irreducibles) == k, "irreducible count != class count"
    degrees = table.degrees()
    assert sum(d * d for d in degrees) == G.order, "degree-sum identity failed"
    one = Cyclotomic.one()
    for chi in table.irreducibles:
        assert inner_product(chi, chi) == one, "character is not norm one"
