"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is a vector of rationals over the power basis
{1, zeta, ..., zeta^(phi(N)-1)} of Q(zeta_N), reduced modulo the N-th
cyclotomic polynomial.  Reduction data is precomputed once per conductor and
is division-free; all arithmetic is exact.  Two values with different
conductors compare equal iff their embeddings into the lcm conductor have
identical coefficient vectors (the power-basis representation is unique, so
this is genuine field equality).

Nothing here touches floating point except :meth:`Cyclotomic.to_complex`,
which exists only for debug cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import linalg
from .errors import InvalidConductorError

__all__ = [
    "Cyclotomic",
    "zeta",
    "rational",
    "order_of_root",
    "two_cos_pi_over",
    "euler_phi",
    "cyclotomic_polynomial",
]


def euler_phi(n: int) -> int:
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_div_exact(p: list[int], q: list[int]) -> list[int]:
    # long division by a monic integer polynomial; remainder must vanish
    dq = len(q) - 1
    out = [0] * (len(p) - dq)
    rem = list(p)
    for d in range(len(p) - 1, dq - 1, -1):
        c = rem[d]
        if c:
            out[d - dq] = c
            for i in range(dq + 1):
                rem[d - dq + i] -= c * q[i]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise InvalidConductorError("conductor must be a positive integer")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d < n:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k = coefficients of zeta_n^k over the power basis, k = 0..n-1."""
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    zero, one = Fraction(0), Fraction(1)
    top = tuple(Fraction(-phi_poly[i]) for i in range(deg))
    rows = [tuple(one if i == k else zero for i in range(deg)) for k in range(deg)]
    for k in range(deg, n):
        prev = rows[k - 1]
        shifted = [zero] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            shifted = [shifted[i] + lead * top[i] for i in range(deg)]
        rows.append(tuple(shifted))
    return tuple(rows)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class Cyclotomic:
    """An element of Q(zeta_N), immutable and exact."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise InvalidConductorError("conductor must be a positive integer")
        coeffs = tuple(Fraction(c) for c in coeffs)
        deg = euler_phi(conductor)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for conductor {conductor}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @staticmethod
    def _raw(conductor: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(Cyclotomic)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        """The root of unity zeta_n^k, in canonical reduced form."""
        if n < 1:
            raise InvalidConductorError("conductor must be a positive integer")
        return Cyclotomic._raw(n, _power_rows(n)[k % n])

    @staticmethod
    def rational(q) -> "Cyclotomic":
        return Cyclotomic._raw(1, (Fraction(q),))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def embed(self, m: int) -> "Cyclotomic":
        """The same value viewed in Q(zeta_m); m must be a multiple of the conductor."""
        if m == self.conductor:
            return self
        if m % self.conductor != 0:
            raise InvalidConductorError(
                f"cannot embed conductor {self.conductor} into {m}"
            )
        rows = _power_rows(m)
        deg = len(rows[0])
        scale = m // self.conductor
        acc = [Fraction(0)] * deg
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[(j * scale) % m]
                for t in range(deg):
                    if row[t]:
                        acc[t] += c * row[t]
        return Cyclotomic._raw(m, tuple(acc))

    def conj(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^-1 (a Galois automorphism, exact)."""
        n = self.conductor
        rows = _power_rows(n)
        deg = len(self.coeffs)
        acc = [Fraction(0)] * deg
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[(n - j) % n]
                for t in range(deg):
                    if row[t]:
                        acc[t] += c * row[t]
        return Cyclotomic._raw(n, tuple(acc))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic._raw(1, (Fraction(x),))
        return None

    def _aligned(self, other: "Cyclotomic"):
        if self.conductor == other.conductor:
            return self.coeffs, other.coeffs, self.conductor
        n = _lcm(self.conductor, other.conductor)
        return self.embed(n).coeffs, other.embed(n).coeffs, n

    def __add__(self, other):
        other = Cyclotomic._coerce(other)
        if other is None:
            return NotImplemented
        a, b, n = self._aligned(other)
        return Cyclotomic._raw(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is None:
            return NotImplemented
        a, b, n = self._aligned(other)
        return Cyclotomic._raw(n, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return Cyclotomic._raw(self.conductor, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = Cyclotomic._coerce(other)
        if other is None:
            return NotImplemented
        if other.conductor == 1:
            q = other.coeffs[0]
            return Cyclotomic._raw(self.conductor, tuple(c * q for c in self.coeffs))
        if self.conductor == 1:
            q = self.coeffs[0]
            return Cyclotomic._raw(other.conductor, tuple(c * q for c in other.coeffs))
        a, b, n = self._aligned(other)
        rows = _power_rows(n)
        deg = len(a)
        acc = [Fraction(0)] * deg
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if not cb:
                    continue
                c = ca * cb
                e = i + j
                if e < deg:
                    acc[e] += c
                else:
                    row = rows[e % n]
                    for t in range(deg):
                        if row[t]:
                            acc[t] += c * row[t]
        return Cyclotomic._raw(n, tuple(acc))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero in a cyclotomic field")
        if self.conductor == 1:
            return Cyclotomic._raw(1, (1 / self.coeffs[0],))
        n = self.conductor
        deg = len(self.coeffs)
        # solve (self * zeta^j) columns against e_0
        cols = [(self * Cyclotomic.zeta(n, j)).coeffs for j in range(deg)]
        mat = [[cols[j][i] for j in range(deg)] for i in range(deg)]
        rhs = [Fraction(1)] + [Fraction(0)] * (deg - 1)
        sol = linalg.solve(mat, rhs)
        if sol is None:  # impossible: multiplication by a nonzero field element
            raise ZeroDivisionError("inversion failed; not a field element?")
        return Cyclotomic._raw(n, tuple(sol))

    def __truediv__(self, other):
        other = Cyclotomic._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Cyclotomic._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic._raw(1, (Fraction(1),))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = Cyclotomic._coerce(other)
        if other is None:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a == b

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    # equality crosses conductors, so there is no cheap consistent hash
    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    # -- io ----------------------------------------------------------------

    def to_json(self) -> dict:
        """Bit-exact encoding: sorted nonzero terms [exponent, num, den]."""
        terms = [
            [j, c.numerator, c.denominator]
            for j, c in enumerate(self.coeffs)
            if c != 0
        ]
        return {"conductor": self.conductor, "terms": terms}

    @staticmethod
    def from_json(data: dict) -> "Cyclotomic":
        n = data["conductor"]
        deg = euler_phi(n)
        coeffs = [Fraction(0)] * deg
        for exp, num, den in data["terms"]:
            if not 0 <= exp < deg:
                raise ValueError(f"exponent {exp} out of range for conductor {n}")
            coeffs[exp] = Fraction(num, den)
        return Cyclotomic(n, coeffs)

    def to_complex(self) -> complex:
        """Floating approximation; debug cross-checks only, never the exact path."""
        import cmath

        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * j / self.conductor)
            for j, c in enumerate(self.coeffs)
        )

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                base = f"z{self.conductor}" + (f"^{j}" if j > 1 else "")
                if c == 1:
                    parts.append(base)
                elif c == -1:
                    parts.append(f"-{base}")
                else:
                    parts.append(f"{c}*{base}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def zeta(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(n, k)


def rational(q) -> Cyclotomic:
    return Cyclotomic.rational(q)


def two_cos_pi_over(n: int) -> Cyclotomic:
    """2*cos(pi/n) represented exactly as zeta_2n + zeta_2n^-1."""
    return Cyclotomic.zeta(2 * n, 1) + Cyclotomic.zeta(2 * n, 2 * n - 1)


def order_of_root(x: Cyclotomic):
    """Smallest k >= 1 with x^k = 1, or None if x is not a root of unity.

    Any root of unity inside Q(zeta_N) has order dividing lcm(2, N), so a
    single exact power test settles membership.
    """
    x = Cyclotomic._coerce(x)
    if x is None or x.is_zero():
        return None
    bound = _lcm(2, x.conductor)
    if x**bound != 1:
        return None
    for d in _divisors(bound):
        if x**d == 1:
            return d
    return None
