"""Exact arithmetic in cyclotomic fields Q(zeta_e) with rational coefficients.

A value is stored against a fixed conductor e as a polynomial in zeta_e
reduced modulo the e-th cyclotomic polynomial, so the coefficient vector on
the power basis {1, zeta, ..., zeta^(phi(e)-1)} is unique and equality is
exact.  Rational values are normalized down to conductor 1, values from
different conductors are compared after lifting to the lcm.

Only ring operations and division by rationals are needed here: character
theory never divides by an irrational value.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Tuple

_POLY_CACHE: Dict[int, list] = {}
_ROW_CACHE: Dict[int, list] = {}


def euler_phi(n: int) -> int:
    result = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            result -= result // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _poly_div_exact(num: list, den: list) -> list:
    """Exact division of integer polynomials (den monic)."""
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q[i - dn] = c
        for j, dj in enumerate(den):
            num[i - dn + j] -= c * dj
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return q


def cyclotomic_polynomial(e: int) -> list:
    """Integer coefficients of the e-th cyclotomic polynomial, ascending."""
    if e in _POLY_CACHE:
        return _POLY_CACHE[e]
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in _divisors(e):
        if d < e:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    _POLY_CACHE[e] = poly
    return poly


def _reduction_rows(e: int) -> list:
    """x^j mod Phi_e as {exponent: int} for j in range(e)."""
    if e in _ROW_CACHE:
        return _ROW_CACHE[e]
    poly = cyclotomic_polynomial(e)
    phi = len(poly) - 1
    top = {i: -poly[i] for i in range(phi) if poly[i] != 0}
    rows = [{j: 1} for j in range(phi)]
    for _ in range(phi, e):
        prev = rows[-1]
        nxt: Dict[int, int] = {}
        for exp, c in prev.items():
            ne = exp + 1
            if ne < phi:
                nxt[ne] = nxt.get(ne, 0) + c
            else:
                for k, t in top.items():
                    v = nxt.get(k, 0) + c * t
                    if v:
                        nxt[k] = v
                    elif k in nxt:
                        del nxt[k]
        rows.append(nxt)
    _ROW_CACHE[e] = rows
    return rows


class Cyclotomic:
    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Dict[int, Fraction]):
        """Internal; use rational(), zeta(), or arithmetic to build values."""
        clean = {k: v for k, v in coeffs.items() if v != 0}
        if not clean or set(clean) == {0}:
            conductor = 1
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        q = Fraction(q)
        return cls(1, {0: q} if q else {})

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls(1, {})

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls(1, {0: Fraction(1)})

    @classmethod
    def zeta(cls, e: int, k: int = 1) -> "Cyclotomic":
        """The root of unity zeta_e^k."""
        if e <= 0:
            raise ValueError("conductor must be positive")
        rows = _reduction_rows(e)
        row = rows[k % e]
        return cls(e, {exp: Fraction(c) for exp, c in row.items()})

    # -- representation helpers ---------------------------------------------

    def _lifted(self, e2: int) -> Dict[int, Fraction]:
        e = self.conductor
        if e == e2:
            return dict(self.coeffs)
        assert e2 % e == 0
        f = e2 // e
        rows = _reduction_rows(e2)
        out: Dict[int, Fraction] = {}
        for exp, c in self.coeffs.items():
            for k, t in rows[(exp * f) % e2].items():
                v = out.get(k, Fraction(0)) + c * t
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return out

    def lift(self, e2: int) -> "Cyclotomic":
        if e2 % self.conductor != 0:
            raise ValueError("can only lift to a multiple of the conductor")
        return Cyclotomic(e2, self._lifted(e2))

    def dense(self, e2: int) -> Tuple[Fraction, ...]:
        """Coefficient tuple on the power basis of Q(zeta_e2); a sort key."""
        lifted = self._lifted(e2) if e2 != self.conductor else self.coeffs
        width = euler_phi(e2)
        return tuple(lifted.get(i, Fraction(0)) for i in range(width))

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs.get(0, Fraction(0))

    def integer_value(self) -> int:
        q = self.rational_value()
        if q.denominator != 1:
            raise ValueError(f"{self!r} is not a rational integer")
        return q.numerator

    # -- arithmetic ------------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return NotImplemented

    def __add__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = lcm(self.conductor, other.conductor)
        a = self._lifted(e)
        for k, v in other._lifted(e).items():
            s = a.get(k, Fraction(0)) + v
            if s:
                a[k] = s
            elif k in a:
                del a[k]
        return Cyclotomic(e, a)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyclotomic":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return Cyclotomic.zero()
            return Cyclotomic(self.conductor, {k: v * q for k, v in self.coeffs.items()})
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        e = lcm(self.conductor, other.conductor)
        a = self._lifted(e)
        b = other._lifted(e)
        rows = _reduction_rows(e)
        out: Dict[int, Fraction] = {}
        for i, ci in a.items():
            for j, cj in b.items():
                c = ci * cj
                for k, t in rows[(i + j) % e].items():
                    v = out.get(k, Fraction(0)) + c * t
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return Cyclotomic(e, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return self * (Fraction(1) / q)
        return NotImplemented

    def __pow__(self, n: int) -> "Cyclotomic":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclotomic.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, k: int) -> "Cyclotomic":
        """Image under zeta |-> zeta^k (requires gcd(k, conductor) = 1)."""
        e = self.conductor
        if e == 1:
            return self
        if gcd(k, e) != 1:
            raise ValueError(f"galois exponent {k} not coprime to conductor {e}")
        rows = _reduction_rows(e)
        out: Dict[int, Fraction] = {}
        for exp, c in self.coeffs.items():
            for j, t in rows[(exp * k) % e].items():
                v = out.get(j, Fraction(0)) + c * t
                if v:
                    out[j] = v
                elif j in out:
                    del out[j]
        return Cyclotomic(e, out)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    # -- comparison and formatting ----------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        e = lcm(self.conductor, other.conductor)
        return self._lifted(e) == other._lifted(e)

    __hash__ = None  # values are compared exactly, never hashed

    def to_string(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for exp in sorted(self.coeffs):
            c = self.coeffs[exp]
            term = str(c) if exp == 0 else f"{c}*{var}^{exp}"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.to_string()}, e={self.conductor})"
