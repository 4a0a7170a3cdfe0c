"""The stable Green ring: r(H) modulo the projective classes.

The quotient keeps the basis classes M[i,j] with j <= n-1; multiplication is
the Green product with all (., n) coordinates deleted.  Scalars live in the
cyclotomic field of the datum's working conductor, which contains
2*cos(pi/n) = zeta_2n + zeta_2n^-1.  On top of the quotient sit the
augmentation, the rescaled group-like basis b = eps(M) M with its involution,
and the bi-Frobenius quadruple (phi, Delta, t, S), all exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .cyclotomic import Cyclotomic, two_cos_pi_over
from .errors import DomainError
from .green import GreenElement, GreenRing, dickson


def inverse_dickson(s: int):
    """Rational coefficients c_i with z^s = sum_i c_i y^i F_(s+1-2i)(y, z).

    c_i = binom(s, i) (s+1-2i)/(s+1-i), for 0 <= i <= floor(s/2).
    """
    if s < 0:
        raise DomainError("inverse Dickson expansion needs s >= 0")
    return [
        Fraction(comb(s, i) * (s + 1 - 2 * i), s + 1 - i) for i in range(s // 2 + 1)
    ]


def inverse_dickson_identity(s: int) -> bool:
    """Exact polynomial check of the expansion of z^s over the F's."""
    from .green import DicksonPoly

    total = DicksonPoly({})
    for i, c in enumerate(inverse_dickson(s)):
        total = total + dickson(s + 1 - 2 * i).shift(i, 0).scale(c)
    return total == DicksonPoly({(0, s): 1})


class StableElement:
    """A cyclotomic-coefficient vector over the stable basis M[i,j], j < n."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "StableRing", coeffs: dict):
        clean = {}
        for k, v in coeffs.items():
            v = v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v)
            if not v.is_zero():
                clean[k] = v
        self.ring = ring
        self.coeffs = clean

    def _check_ring(self, other):
        if self.ring is not other.ring:
            raise DomainError("elements belong to different stable rings")

    def coefficient(self, i: int, j: int) -> Cyclotomic:
        return self.coeffs.get((i, j), Cyclotomic.rational(0))

    def __add__(self, other):
        self._check_ring(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return StableElement(self.ring, out)

    def __sub__(self, other):
        self._check_ring(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] - v if k in out else -v
        return StableElement(self.ring, out)

    def __neg__(self):
        return StableElement(self.ring, {k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "StableElement":
        return StableElement(self.ring, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        self._check_ring(other)
        return self.ring._multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, StableElement) or self.ring is not other.ring:
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(*k) == other.coefficient(*k) for k in keys)

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def to_json(self) -> dict:
        return {
            "coeffs": [[i, j, c.to_json()] for (i, j), c in sorted(self.coeffs.items())]
        }

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({c})*M[{i},{j}]" for (i, j), c in sorted(self.coeffs.items())
        )


class StableRing:
    """r(H) / <M[1,n]> with its group-like and bi-Frobenius structure."""

    def __init__(self, green: GreenRing):
        self.green = green
        self.datum = green.datum
        n = green.n
        self.basis = [(i, j) for i in range(1, green.m + 1) for j in range(1, n)]
        self.cos = two_cos_pi_over(n).embed(self.datum.conductor)
        self._eps = {}
        self._f_at_cos = {}

    # -- quotient structure ---------------------------------------------

    def reduce(self, x: GreenElement) -> StableElement:
        """Quotient map r(H) -> r_st(H): delete all (., n) coordinates."""
        if x.ring is not self.green:
            raise DomainError("element belongs to a different Green ring")
        n = self.green.n
        return StableElement(
            self, {b: Cyclotomic.rational(c) for b, c in x.coeffs.items() if b[1] != n}
        )

    def element(self, coeffs: dict) -> StableElement:
        for (i, j) in coeffs:
            if not (1 <= i <= self.green.m and 1 <= j <= self.green.n - 1):
                raise DomainError(f"stable basis index {(i, j)} out of range")
        return StableElement(self, coeffs)

    def M(self, i: int, j: int) -> StableElement:
        return self.element({(i, j): Cyclotomic.rational(1)})

    @property
    def one(self) -> StableElement:
        return self.M(1, 1)

    @property
    def zero(self) -> StableElement:
        return StableElement(self, {})

    def _multiply(self, x: StableElement, y: StableElement) -> StableElement:
        n = self.green.n
        acc = {}
        for (i, k), cx in x.coeffs.items():
            for (j, l), cy in y.coeffs.items():
                for b, c in self.green.basis_product(i, k, j, l).items():
                    if b[1] == n:
                        continue
                    v = cx * cy * c
                    acc[b] = acc[b] + v if b in acc else v
        return StableElement(self, acc)

    # -- augmentation -----------------------------------------------------

    def f_at_cos(self, j: int) -> Cyclotomic:
        """F_j(1, 2cos(pi/n)), exact in Q(zeta_2n)."""
        cached = self._f_at_cos.get(j)
        if cached is None:
            one = Cyclotomic.rational(1)
            cached = dickson(j).evaluate(one, self.cos, one)
            self._f_at_cos[j] = cached
        return cached

    def eps_basis(self, i: int, j: int) -> Cyclotomic:
        """eps(M[i,j]) = dim(V_i) F_j(1, 2cos(pi/n))."""
        cached = self._eps.get((i, j))
        if cached is None:
            cached = self.f_at_cos(j) * self.datum.dims[i - 1]
            self._eps[(i, j)] = cached
        return cached

    def epsilon(self, x: StableElement) -> Cyclotomic:
        acc = Cyclotomic.rational(0)
        for (i, j), c in x.coeffs.items():
            acc = acc + c * self.eps_basis(i, j)
        return acc

    # -- group-like basis ----------------------------------------------------

    def star_index(self, i: int, j: int) -> tuple:
        """(i,j)* = (tau^(1-j)(i*), j), the involution from the dual module."""
        d = self.datum
        return (d.tau_power(d.star[i], 1 - j), j)

    def b(self, i: int, j: int) -> StableElement:
        return self.M(i, j).scale(self.eps_basis(i, j))

    def b_coefficients(self, x: StableElement) -> dict:
        """Coefficients of x over the b-basis: x_u / eps(M_u)."""
        return {
            u: c / self.eps_basis(*u) for u, c in x.coeffs.items()
        }

    def structure_constants(self, u: tuple, v: tuple) -> dict:
        """p with b_u b_v = sum_w p[w] b_w."""
        prod = self.b(*u) * self.b(*v)
        return self.b_coefficients(prod)

    def grouplike_check(self) -> dict:
        """Test the axioms (G1), (G2), (G3) of a group-like algebra exactly.

        Returns per-axiom pass flags with a first counterexample, if any.
        """
        report = {
            "G1": {"pass": True, "witness": None},
            "G2": {"pass": True, "witness": None},
            "G3": {"pass": True, "witness": None},
        }
        zero = Cyclotomic.rational(0)
        eps_b = {u: self.eps_basis(*u) ** 2 for u in self.basis}
        for u in self.basis:
            us = self.star_index(*u)
            if eps_b[u].is_zero() or eps_b[u] != eps_b[us]:
                report["G1"] = {"pass": False, "witness": {"index": list(u)}}
                break
        consts = {
            (u, v): self.structure_constants(u, v)
            for u in self.basis
            for v in self.basis
        }
        for u in self.basis:
            if not report["G2"]["pass"]:
                break
            for v in self.basis:
                p_uv = consts[(u, v)]
                p_dual = consts[(self.star_index(*v), self.star_index(*u))]
                bad = next(
                    (
                        w
                        for w in self.basis
                        if p_uv.get(w, zero) != p_dual.get(self.star_index(*w), zero)
                    ),
                    None,
                )
                if bad is not None:
                    report["G2"] = {
                        "pass": False,
                        "witness": {"u": list(u), "v": list(v), "w": list(bad)},
                    }
                    break
        unit = (1, 1)
        for u in self.basis:
            if not report["G3"]["pass"]:
                break
            for v in self.basis:
                lhs = consts[(u, v)].get(unit, zero)
                rhs = eps_b[u] if v == self.star_index(*u) else zero
                if lhs != rhs:
                    report["G3"] = {
                        "pass": False,
                        "witness": {"u": list(u), "v": list(v)},
                    }
                    break
        return report

    # -- bi-Frobenius quadruple --------------------------------------------------

    def phi(self, x: StableElement) -> Cyclotomic:
        """Frobenius homomorphism: the b-basis coefficient of b_(1,1) = 1."""
        return x.coefficient(1, 1) / self.eps_basis(1, 1)

    def delta_map(self, x: StableElement) -> dict:
        """Comultiplication as a dict (u, v) -> coefficient of M_u (x) M_v.

        Defined on the group-like basis by Delta(b_u) = b_u (x) b_u / eps(b_u)
        and extended linearly; since eps(b_u) = eps(M_u)^2 this reads
        Delta(M_u) = M_u (x) M_u / eps(M_u) over the module basis.
        """
        out = {}
        for u, c in x.coeffs.items():
            v = c / self.eps_basis(*u)
            key = (u, u)
            out[key] = out[key] + v if key in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def integral_t(self) -> StableElement:
        """t = sum of all b_(i,j)."""
        acc = self.zero
        for u in self.basis:
            acc = acc + self.b(*u)
        return acc

    def antipode(self, x: StableElement) -> StableElement:
        """S(b_u) = b_(u*), extended linearly."""
        acc = {}
        for u, c in self.b_coefficients(x).items():
            us = self.star_index(*u)
            v = c * self.eps_basis(*us)
            acc[us] = acc[us] + v if us in acc else v
        return StableElement(self, acc)

    def bifrobenius_data(self) -> dict:
        """The quadruple (phi, Delta, t, S) in JSON-ready form."""
        phi_rows = [
            [i, j, self.phi(self.b(i, j)).to_json()] for (i, j) in self.basis
        ]
        delta_rows = [
            [i, j, (1 / self.eps_basis(i, j) ** 2).to_json()] for (i, j) in self.basis
        ]
        s_rows = [
            [i, j] + list(self.star_index(i, j)) for (i, j) in self.basis
        ]
        return {
            "phi": phi_rows,
            "delta": delta_rows,
            "t": self.integral_t().to_json(),
            "S": s_rows,
        }

    # -- bi-Frobenius checks --------------------------------------------------

    def dual_pair_check(self) -> bool:
        """sum_u phi(x b_u) b_(u*)/eps(b_u) = x, for every basis x."""
        for v in self.basis:
            x = self.b(*v)
            acc = self.zero
            for u in self.basis:
                c = self.phi(x * self.b(*u))
                if not c.is_zero():
                    term = self.b(*self.star_index(*u)).scale(
                        c / self.eps_basis(*u) ** 2
                    )
                    acc = acc + term
            if acc != x:
                return False
        return True

    def counit_check(self) -> bool:
        """(eps (x) id) Delta = id on every basis element."""
        for u in self.basis:
            x = self.b(*u)
            acc = self.zero
            for (w1, w2), c in self.delta_map(x).items():
                acc = acc + self.M(*w2).scale(c * self.eps_basis(*w1))
            if acc != x:
                return False
        return True

    def antipode_checks(self) -> dict:
        """S^2 = id, S anti-algebra, S anti-coalgebra (all exact)."""
        s_squared = all(
            self.antipode(self.antipode(self.b(*u))) == self.b(*u) for u in self.basis
        )
        anti_algebra = True
        for u in self.basis:
            for v in self.basis:
                lhs = self.antipode(self.b(*u) * self.b(*v))
                rhs = self.antipode(self.b(*v)) * self.antipode(self.b(*u))
                if lhs != rhs:
                    anti_algebra = False
                    break
            if not anti_algebra:
                break
        anti_coalgebra = True
        for u in self.basis:
            lhs = self.delta_map(self.antipode(self.b(*u)))
            # (S (x) S) after swapping tensor factors; S(M_w) picks up the
            # ratio eps(M_w*)/eps(M_w)
            swapped = {}
            for (w1, w2), c in self.delta_map(self.b(*u)).items():
                k1, k2 = self.star_index(*w2), self.star_index(*w1)
                ratio = (self.eps_basis(*k1) / self.eps_basis(*w2)) * (
                    self.eps_basis(*k2) / self.eps_basis(*w1)
                )
                key = (k1, k2)
                v = c * ratio
                swapped[key] = swapped[key] + v if key in swapped else v
            keys = set(lhs) | set(swapped)
            zero = Cyclotomic.rational(0)
            if any(lhs.get(k, zero) != swapped.get(k, zero) for k in keys):
                anti_coalgebra = False
                break
        return {
            "S_squared": s_squared,
            "anti_algebra": anti_algebra,
            "anti_coalgebra": anti_coalgebra,
        }

    # -- monomial basis [V_i] z^j -----------------------------------------------

    def monomials(self) -> list:
        return [(i, j) for i in range(1, self.green.m + 1) for j in range(self.green.n - 1)]

    def monomial_to_stable(self, i: int, j: int) -> StableElement:
        """[V_i] z^j expanded over the stable M-basis via the inverse Dickson
        expansion: sum_k c_k M[tau^k(i), j+1-2k]."""
        d = self.datum
        acc = {}
        for k, c in enumerate(inverse_dickson(j)):
            key = (d.tau_power(i, k), j + 1 - 2 * k)
            v = Cyclotomic.rational(c)
            acc[key] = acc[key] + v if key in acc else v
        return StableElement(self, acc)

    def monomial_phi(self, i: int, j: int) -> Cyclotomic:
        """phi([V_i] z^j): binom(j, j/2) * 2/(j+2) when j is even and
        [V_i] = a^(-j/2), else 0."""
        if j % 2 == 0 and i == self.green.tau1_power(-(j // 2)):
            return Cyclotomic.rational(Fraction(comb(j, j // 2) * 2, j + 2))
        return Cyclotomic.rational(0)

    def monomial_delta(self, i: int, j: int) -> dict:
        """Delta([V_i] z^j) as a dict over pairs of stable basis indices."""
        d = self.datum
        out = {}
        for k, c in enumerate(inverse_dickson(j)):
            u = (d.tau_power(i, k), j + 1 - 2 * k)
            denom = self.f_at_cos(j + 1 - 2 * k) * d.dims[i - 1]
            v = Cyclotomic.rational(c) / denom
            key = (u, u)
            out[key] = out[key] + v if key in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def monomial_antipode(self, i: int, j: int) -> StableElement:
        """S([V_i] z^j) = sum_k c_k [V_(i*)] a^(k-j) F_(j+1-2k)(a, z)."""
        d = self.datum
        acc = {}
        for k, c in enumerate(inverse_dickson(j)):
            key = (d.tau_power(d.star[i], k - j), j + 1 - 2 * k)
            v = Cyclotomic.rational(c)
            acc[key] = acc[key] + v if key in acc else v
        return StableElement(self, acc)

    def monomial_agreement(self) -> bool:
        """The closed monomial formulas must match the b-basis definitions
        after the exact change of basis."""
        zero = Cyclotomic.rational(0)
        for (i, j) in self.monomials():
            x = self.monomial_to_stable(i, j)
            if self.monomial_phi(i, j) != self.phi(x):
                return False
            lhs = self.monomial_delta(i, j)
            rhs = self.delta_map(x)
            keys = set(lhs) | set(rhs)
            if any(lhs.get(k, zero) != rhs.get(k, zero) for k in keys):
                return False
            if self.monomial_antipode(i, j) != self.antipode(x):
                return False
        return True

    def report(self) -> dict:
        return {
            "grouplike": self.grouplike_check(),
            "bifrobenius": self.bifrobenius_data(),
            "epsilon_values": [
                [i, j, self.eps_basis(i, j).to_json()] for (i, j) in self.basis
            ],
        }

    # -- optional numeric cross-check (never on the exact path) ----------------

    def epsilon_positivity_float_check(self, slack: float = 1e-9) -> bool:
        """Debug-only: the eps values are real and positive under the canonical
        complex embedding, checked in floating point with interval slack."""
        for u in self.basis:
            z = self.eps_basis(*u).to_complex()
            if abs(z.imag) > slack or z.real < slack:
                return False
        return True
