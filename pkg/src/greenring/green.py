"""The Green ring r(H) of a pointed rank-one Hopf algebra of nilpotent type.

Elements are integer vectors over the basis {M[i,j] : 1 <= i <= m,
1 <= j <= n} of classes of indecomposables.  Products are computed by the
Clebsch-Gordan rules: M[i,k]M[j,l] = [V_i][V_j] (M[1,k]M[1,l]) with the
simple part resolved through exact character-ring structure constants and
the M[1,k]M[1,l] part through the two-case decomposition rule (below n, or
folding at n with projective terms).  Also here: Dickson polynomials, the
one-relation presentation, duals, the almost-split-sequence basis elements
delta and delta*, both bilinear forms, the map to the Grothendieck ring,
and the Frobenius/integral data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .datum import GroupDatum
from .errors import DomainError, InternalConsistencyError, ProjectiveModuleError

__all__ = [
    "DicksonPoly",
    "dickson",
    "dickson_closed_form",
    "GreenElement",
    "GreenRing",
    "ARData",
]


class DicksonPoly:
    """A bivariate integer polynomial in (y, z), sparse map (deg_y, deg_z) -> c."""

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    def __eq__(self, other):
        return isinstance(other, DicksonPoly) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return DicksonPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return DicksonPoly(out)

    def shift(self, dy: int, dz: int) -> "DicksonPoly":
        return DicksonPoly({(y + dy, z + dz): c for (y, z), c in self.terms.items()})

    def scale(self, c) -> "DicksonPoly":
        return DicksonPoly({k: c * v for k, v in self.terms.items()})

    def evaluate(self, y_val, z_val, one):
        """Evaluate with values from any commutative ring containing `one`."""
        acc = one * 0
        for (dy, dz), c in sorted(self.terms.items()):
            term = one * c
            for _ in range(dy):
                term = term * y_val
            for _ in range(dz):
                term = term * z_val
            acc = acc + term
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (dy, dz), c in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0])):
            s = "" if abs(c) == 1 else f"{abs(c)}*"
            mono = "*".join(
                ([f"y^{dy}" if dy > 1 else "y"] if dy else [])
                + ([f"z^{dz}" if dz > 1 else "z"] if dz else [])
            )
            parts.append(("-" if c < 0 else "+", s + (mono or "1")))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, p in parts[1:]:
            out += f" {sign} {p}"
        return out


def dickson(s: int) -> DicksonPoly:
    """F_s by the recursion F_1 = 1, F_2 = z, F_s = z F_(s-1) - y F_(s-2)."""
    if s < 1:
        raise DomainError("Dickson index must be >= 1")
    prev, cur = DicksonPoly({(0, 0): 1}), DicksonPoly({(0, 1): 1})
    if s == 1:
        return prev
    for _ in range(s - 2):
        prev, cur = cur, cur.shift(0, 1) - prev.shift(1, 0)
    return cur


def dickson_closed_form(s: int) -> DicksonPoly:
    """F_s as the alternating binomial sum over y^i z^(s-1-2i)."""
    if s < 1:
        raise DomainError("Dickson index must be >= 1")
    terms = {}
    for i in range((s - 1) // 2 + 1):
        terms[(i, s - 1 - 2 * i)] = (-1) ** i * comb(s - 1 - i, i)
    return DicksonPoly(terms)


class GreenElement:
    """An integer combination of the basis classes M[i,j]."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "GreenRing", coeffs: dict):
        self.ring = ring
        self.coeffs = {k: int(v) for k, v in coeffs.items() if v != 0}

    def _check_ring(self, other: "GreenElement"):
        if self.ring is not other.ring:
            raise DomainError("elements belong to different Green rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.one * other
        self._check_ring(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return GreenElement(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.one * other
        self._check_ring(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return GreenElement(self.ring, out)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return GreenElement(self.ring, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return GreenElement(self.ring, {k: v * other for k, v in self.coeffs.items()})
        if not isinstance(other, GreenElement):
            return NotImplemented
        self._check_ring(other)
        return self.ring._multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative powers are not defined in the Green ring")
        acc = self.ring.one
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.one * other
        return isinstance(other, GreenElement) and self.ring is other.ring and self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def dim(self) -> int:
        """Dimension augmentation: sum of c * dim M(i,j)."""
        d = self.ring.datum
        return sum(c * j * d.dims[i - 1] for (i, j), c in self.coeffs.items())

    def dual(self) -> "GreenElement":
        return self.ring.dual(self)

    def to_json(self) -> dict:
        return {"coeffs": [[i, j, c] for (i, j), c in sorted(self.coeffs.items())]}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(self.coeffs.items()):
            s = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(("-" if c < 0 else "+", f"{s}M[{i},{j}]"))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, p in parts[1:]:
            out += f" {sign} {p}"
        return out


@dataclass
class ARData:
    """End terms and middle of the almost split sequence ending at M(i,j)."""

    left: tuple
    middle: "GreenElement"
    right: tuple
    delta: "GreenElement"


class GreenRing:
    """Exact arithmetic in r(H) for a fixed datum."""

    def __init__(self, datum: GroupDatum):
        self.datum = datum
        self.m = datum.m
        self.n = datum.n
        self.basis = [(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]
        self.basis_index = {b: p for p, b in enumerate(self.basis)}
        self._product_cache = {}
        self._simple_cache = {}
        self._tau1 = None
        self._delta_inverse = None
        self._delta_star_inverse = None

    # -- element constructors ---------------------------------------------

    def element(self, coeffs: dict) -> GreenElement:
        for (i, j) in coeffs:
            if not (1 <= i <= self.m and 1 <= j <= self.n):
                raise DomainError(f"basis index {(i, j)} out of range")
        return GreenElement(self, coeffs)

    def M(self, i: int, j: int) -> GreenElement:
        return self.element({(i, j): 1})

    @property
    def one(self) -> GreenElement:
        return GreenElement(self, {(1, 1): 1})

    @property
    def zero(self) -> GreenElement:
        return GreenElement(self, {})

    @property
    def a(self) -> GreenElement:
        """a = [V_(chi^-1)] = M[tau(1), 1]."""
        return self.M(self.datum.a_index, 1)

    def a_power(self, t: int) -> GreenElement:
        return self.M(self.tau1_power(t), 1)

    def simple(self, i: int) -> GreenElement:
        return self.M(i, 1)

    def from_json(self, data: dict) -> GreenElement:
        return self.element({(i, j): c for i, j, c in data["coeffs"]})

    # -- multiplication -----------------------------------------------------

    def tau1_power(self, t: int) -> int:
        """tau^t(1), the index of the simple class a^t."""
        if self._tau1 is None:
            seq = [1]
            for _ in range(self.datum.l - 1):
                seq.append(self.datum.tau[seq[-1]])
            self._tau1 = seq
        return self._tau1[t % self.datum.l]

    def clebsch(self, k: int, l: int):
        """M[1,k]M[1,l] as a list of (t, length) with terms M[tau^t(1), length]."""
        n = self.n
        if not (1 <= k <= n and 1 <= l <= n):
            raise DomainError(f"lengths {(k, l)} out of range 1..{n}")
        lo = min(k, l)
        if k + l - 1 <= n:
            return [(t, k + l - 1 - 2 * t) for t in range(lo)]
        r = k + l - 1 - n
        return [(t, n) for t in range(r + 1)] + [
            (t, k + l - 1 - 2 * t) for t in range(r + 1, lo)
        ]

    def simple_product(self, i: int, j: int) -> tuple:
        """[V_i][V_j] as a multiplicity vector (position p is V_(p+1))."""
        return self.datum.table.product_decompose(i, j)

    def _triple_simple(self, i: int, j: int, s: int) -> tuple:
        key = tuple(sorted((i, j, s)))
        cached = self._simple_cache.get(key)
        if cached is not None:
            return cached
        v1 = self.simple_product(i, j)
        acc = [0] * self.m
        for t, c in enumerate(v1, start=1):
            if c:
                v2 = self.simple_product(t, s)
                for u in range(self.m):
                    acc[u] += c * v2[u]
        acc = tuple(acc)
        self._simple_cache[key] = acc
        return acc

    def basis_product(self, i: int, k: int, j: int, l: int) -> dict:
        """M[i,k] * M[j,l] as a coefficient dict."""
        key = ((i, k), (j, l)) if (i, k) <= (j, l) else ((j, l), (i, k))
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        out = {}
        for t, length in self.clebsch(k, l):
            vec = self._triple_simple(i, j, self.tau1_power(t))
            for s, c in enumerate(vec, start=1):
                if c:
                    out[(s, length)] = out.get((s, length), 0) + c
        self._product_cache[key] = out
        return out

    def _multiply(self, x: GreenElement, y: GreenElement) -> GreenElement:
        acc = {}
        for (i, k), cx in x.coeffs.items():
            for (j, l), cy in y.coeffs.items():
                for b, c in self.basis_product(i, k, j, l).items():
                    acc[b] = acc.get(b, 0) + cx * cy * c
        return GreenElement(self, acc)

    def multiply(self, x: GreenElement, y: GreenElement) -> GreenElement:
        return x * y

    # -- polynomials over the character ring ---------------------------------

    def zpoly_from_dickson(self, s: int) -> list:
        """F_s(a, z) as a z-polynomial with coefficients in r(kG)."""
        poly = dickson(s)
        top = max((dz for (_, dz) in poly.terms), default=0)
        coeffs = [self.zero for _ in range(top + 1)]
        for (dy, dz), c in poly.terms.items():
            coeffs[dz] = coeffs[dz] + self.a_power(dy) * c
        return coeffs

    def presentation_relation(self) -> list:
        """(1 + a - z) * F_n(a, z), the generator of the defining ideal."""
        f = self.zpoly_from_dickson(self.n)
        lin = [self.one + self.a, -self.one]
        out = [self.zero for _ in range(len(f) + 1)]
        for d1, c1 in enumerate(lin):
            for d2, c2 in enumerate(f):
                out[d1 + d2] = out[d1 + d2] + c1 * c2
        return out

    def phi_eval(self, zpoly: list) -> GreenElement:
        """Evaluate a z-polynomial over r(kG) at z = M[1,2]."""
        z = self.M(1, 2)
        acc = self.zero
        for coeff in reversed(zpoly):
            acc = acc * z + coeff
        return acc

    # -- duality and the delta bases ----------------------------------------

    def dual(self, x: GreenElement) -> GreenElement:
        """The ring involution M[i,j] -> M[tau^(1-j)(i*), j]."""
        d = self.datum
        out = {}
        for (i, j), c in x.coeffs.items():
            b = (d.tau_power(d.star[i], 1 - j), j)
            out[b] = out.get(b, 0) + c
        return GreenElement(self, out)

    def delta(self, i: int, j: int) -> GreenElement:
        """Alternating sum of the almost split sequence ending at M(i,j);
        for j = n, the projective-cover difference M[i,n] - a M[i,n-1]."""
        if j == self.n:
            return self.M(i, self.n) - self.a * self.M(i, self.n - 1)
        return (self.one + self.a - self.M(1, 2)) * self.M(i, j)

    def delta_star(self, i: int, j: int) -> GreenElement:
        return self.dual(self.delta(i, j))

    def delta_family(self) -> dict:
        return {b: self.delta(*b) for b in self.basis}

    def delta_star_family(self) -> dict:
        return {b: self.delta_star(*b) for b in self.basis}

    def _basis_matrix(self, family: dict):
        """Columns = family elements over the M-basis (integer matrix)."""
        size = len(self.basis)
        mat = [[0] * size for _ in range(size)]
        for col, b in enumerate(self.basis):
            for bb, c in family[b].coeffs.items():
                mat[self.basis_index[bb]][col] = c
        return mat

    def _inverse_expansion(self, which: str):
        cached = self._delta_inverse if which == "delta" else self._delta_star_inverse
        if cached is not None:
            return cached
        family = self.delta_family() if which == "delta" else self.delta_star_family()
        mat = self._basis_matrix(family)
        frac = [[Fraction(e) for e in row] for row in mat]
        inv = linalg.inverse(frac)
        if inv is None:
            raise InternalConsistencyError("delta family is not a basis")
        for row in inv:
            for e in row:
                if e.denominator != 1:
                    raise InternalConsistencyError("delta change of basis not integral")
        inv = [[int(e) for e in row] for row in inv]
        if which == "delta":
            self._delta_inverse = inv
        else:
            self._delta_star_inverse = inv
        return inv

    def expand_in_delta(self, x: GreenElement, starred: bool = False) -> dict:
        """Coefficients of x over the delta (or delta*) basis."""
        inv = self._inverse_expansion("delta_star" if starred else "delta")
        vec = [x.coefficient(*b) for b in self.basis]
        out = {}
        for row, b in enumerate(self.basis):
            v = sum(inv[row][col] * vec[col] for col in range(len(vec)))
            if v:
                out[b] = v
        return out

    # -- bilinear forms -------------------------------------------------------

    def form_hom(self, x: GreenElement, y: GreenElement) -> int:
        """<x, y> = dim Hom_H(x, y), via the expansion over the delta basis."""
        expansion = self.expand_in_delta(y)
        return sum(x.coefficient(*b) * c for b, c in expansion.items())

    def form_sym(self, x: GreenElement, y: GreenElement) -> int:
        """(x, y) = <x, y*>, the associative symmetric form."""
        expansion = self.expand_in_delta(y, starred=True)
        return sum(x.coefficient(*b) * c for b, c in expansion.items())

    # -- almost split sequences ------------------------------------------------

    def ar_sequence(self, i: int, j: int) -> ARData:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise DomainError(f"index {(i, j)} out of range")
        if j == self.n:
            raise ProjectiveModuleError(
                f"M({i},{j}) is projective; no almost split sequence ends there"
            )
        tau_i = self.datum.tau[i]
        middle = self.M(i, j + 1)
        if j >= 2:
            middle = middle + self.M(tau_i, j - 1)
        delta = self.M(tau_i, j) - middle + self.M(i, j)
        return ARData(left=(tau_i, j), middle=middle, right=(i, j), delta=delta)

    # -- Grothendieck ring -------------------------------------------------------

    def grothendieck_image(self, x: GreenElement) -> tuple:
        """Image in G_0(H) = r(kG): M[i,j] -> [V_i](1 + a + ... + a^(j-1))."""
        acc = [0] * self.m
        for (i, j), c in x.coeffs.items():
            for t in range(j):
                acc[self.datum.tau_power(i, t) - 1] += c
        return tuple(acc)

    def g0_product(self, v: tuple, w: tuple) -> tuple:
        """Product of two multiplicity vectors in G_0(H) = r(kG)."""
        acc = [0] * self.m
        for i, a in enumerate(v, start=1):
            if a:
                for j, b in enumerate(w, start=1):
                    if b:
                        for u, c in enumerate(self.simple_product(i, j)):
                            acc[u] += a * b * c
        return tuple(acc)

    def class_value(self, x: GreenElement, class_index: int):
        """Evaluate a simple-supported element as a character at a class."""
        table = self.datum.table
        acc = None
        for (i, j), c in x.coeffs.items():
            if j != 1:
                raise DomainError("class_value needs an element of r(kG) (j = 1)")
            v = table.value(i, class_index) * c
            acc = v if acc is None else acc + v
        from .cyclotomic import Cyclotomic

        return acc if acc is not None else Cyclotomic.rational(0)

    # -- Frobenius structure -------------------------------------------------------

    @property
    def regular_class(self) -> GreenElement:
        """[H], the class of the regular module: sum of dim(V_i) M[i,n]."""
        return GreenElement(
            self, {(i, self.n): self.datum.dims[i - 1] for i in range(1, self.m + 1)}
        )

    def frobenius_phi(self, x: GreenElement) -> int:
        """The Frobenius homomorphism phi(x) = (x, 1)."""
        return self.form_sym(x, self.one)

    def casimir_pairs(self) -> list:
        """The Casimir element as (delta*_b, M_b) basis pairs."""
        return [(self.delta_star(i, j), self.M(i, j)) for (i, j) in self.basis]

    def pretty(self, x: GreenElement) -> str:
        names = self.datum.table.names
        if not x.coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(x.coeffs.items()):
            s = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(("-" if c < 0 else "+", f"{s}M[{names[i - 1]},{j}]"))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, p in parts[1:]:
            out += f" {sign} {p}"
        return out
