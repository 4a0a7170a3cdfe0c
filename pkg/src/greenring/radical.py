"""The Jacobson radical of the Green ring.

The simple modules of the complexified character ring are evaluations at
conjugacy-class representatives; on each, the class a acts by a power
omega^t of a fixed primitive l-th root of unity.  Partitioning the classes
by that exponent gives the counts (d1, d2, d3); the radical itself is the
principal ideal generated by M[1,n] * theta with
theta = (1 - a)(1 + a^n + ... + a^(l-n)), and its rank is certified exactly
by a Smith-normal-form computation over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .cyclotomic import Cyclotomic
from .errors import InternalConsistencyError
from .green import GreenElement, GreenRing, dickson


@dataclass
class OmegaCounts:
    """Per-class action of a on the evaluation modules, and the counts d1-d3.

    Class j sees a act by values[j] = omega^exponents[j] with omega a fixed
    primitive l-th root of unity.
    """

    exponents: tuple  # t_j for each conjugacy class, 0 <= t_j < l
    values: tuple  # omega^t_j as exact cyclotomics
    omega1: tuple  # classes with t_j = 0
    omega2: tuple  # t_j != 0, (l/n) does not divide t_j
    omega3: tuple  # t_j != 0, (l/n) divides t_j

    @property
    def d1(self) -> int:
        return len(self.omega1)

    @property
    def d2(self) -> int:
        return len(self.omega2)

    @property
    def d3(self) -> int:
        return len(self.omega3)


def omega_counts(ring: GreenRing) -> OmegaCounts:
    """Exponents of a on the evaluation modules, tallied into the Omega sets."""
    datum = ring.datum
    l, n = datum.l, datum.n
    omega = Cyclotomic.zeta(l)
    a_values = [v.conj() for v in datum.table.row(datum.chi)]  # chi^-1 per class
    exponents = []
    for val in a_values:
        for t in range(l):
            if omega**t == val:
                exponents.append(t)
                break
        else:
            raise InternalConsistencyError("a-value is not a power of omega")
    o1, o2, o3 = [], [], []
    step = l // n
    for j, t in enumerate(exponents):
        if t == 0:
            o1.append(j)
        elif t % step == 0:
            o3.append(j)
        else:
            o2.append(j)
    return OmegaCounts(
        tuple(exponents), tuple(a_values), tuple(o1), tuple(o2), tuple(o3)
    )


def theta(ring: GreenRing) -> GreenElement:
    """theta = (1 - a)(1 + a^n + a^(2n) + ... + a^((l/n - 1)n)) in r(kG)."""
    datum = ring.datum
    geo = ring.zero
    for u in range(datum.l // datum.n):
        geo = geo + ring.a_power(u * datum.n)
    return (ring.one - ring.a) * geo


def radical_generator(ring: GreenRing) -> GreenElement:
    """M[1,n] * theta, the principal generator of the Jacobson radical."""
    return ring.M(1, ring.n) * theta(ring)


def ideal_rank(ring: GreenRing, gen: GreenElement | None = None) -> int:
    """Exact rank of the ideal generated by gen, certified over the integers.

    Builds the integer matrix with rows gen * M[i,j] over the full basis and
    takes the number of nonzero invariant factors of its Smith normal form.
    """
    if gen is None:
        gen = radical_generator(ring)
    rows = []
    for (i, j) in ring.basis:
        prod = gen * ring.M(i, j)
        rows.append([prod.coefficient(*b) for b in ring.basis])
    return linalg.integer_rank(rows)


def root_counts(ring: GreenRing) -> list:
    """N_j per conjugacy class: the number of distinct roots of
    (x - omega^t_j - 1) F_n(omega^t_j, x), counted exactly by square-free
    degree over the cyclotomic field."""
    datum = ring.datum
    counts = omega_counts(ring)
    omega = Cyclotomic.zeta(datum.l).embed(datum.conductor)
    one = Cyclotomic.rational(1)
    f_n = dickson(datum.n)
    out = []
    for t in counts.exponents:
        w = omega**t
        # univariate coefficients of F_n(w, x)
        deg = max(dz for (_, dz) in f_n.terms)
        coeffs = [one * 0 for _ in range(deg + 1)]
        for (dy, dz), c in f_n.terms.items():
            coeffs[dz] = coeffs[dz] + c * w**dy
        linear = [-(w + 1), one]
        poly = linalg.poly_mul(linear, coeffs)
        out.append(linalg.distinct_root_count(poly))
    return out


def simple_module_count(ring: GreenRing) -> int:
    """Number of one-dimensional modules of the complexified Green ring."""
    return sum(root_counts(ring))


def radical_report(ring: GreenRing) -> dict:
    counts = omega_counts(ring)
    th = theta(ring)
    gen = radical_generator(ring)
    return {
        "d1": counts.d1,
        "d2": counts.d2,
        "d3": counts.d3,
        "theta": th.to_json(),
        "generator": gen.to_json(),
        "rank": ideal_rank(ring, gen),
        "nilpotency_checked": (gen * gen) == ring.zero,
    }
