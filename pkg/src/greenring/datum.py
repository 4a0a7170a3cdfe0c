"""Validated group data (G, chi, g, mu) of nilpotent type.

A datum fixes a finite group G, a linear character chi, a central element g
and the scalar mu = 0, and derives everything downstream modules need:
q = chi(g), its order n >= 2, the order l of chi, the permutation tau with
V_(chi^-1) (x) V_i = V_(tau(i)), the duality involution i -> i*, and the
trace of the antipode.  All character data is re-embedded once into the
working conductor lcm(exponent(G), 2n) so later arithmetic never changes
fields mid-computation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclotomic import Cyclotomic, order_of_root
from .errors import (
    InternalConsistencyError,
    InvalidDatumError,
    UnsupportedDatumError,
)
from .groups import CharacterTable, Group, character_table, group_build, group_from_json


class Permutations:
    """tau, its inverse, and the duality star on 1..m (index 0 unused)."""

    def __init__(self, tau, star):
        self.tau = tuple(tau)
        self.star = tuple(star)
        inv = [0] * len(tau)
        for i in range(1, len(tau)):
            inv[tau[i]] = i
        self.tau_inv = tuple(inv)

    def tau_power(self, i: int, t: int) -> int:
        table = self.tau if t >= 0 else self.tau_inv
        for _ in range(abs(t)):
            i = table[i]
        return i


class GroupDatum:
    """A validated nilpotent-type group datum with derived quantities."""

    def __init__(self, group: Group, table: CharacterTable, chi: int, g: int, mu=0):
        mu = Fraction(mu)
        if mu != 0:
            raise UnsupportedDatumError(
                "mu != 0: non-nilpotent data are out of scope (normalize mu to 0)"
            )
        if not 1 <= chi <= table.m:
            raise InvalidDatumError(f"chi index {chi} out of range 1..{table.m}")
        if not table.is_linear(chi):
            raise InvalidDatumError(f"chi = {table.names[chi - 1]} is not 1-dimensional")
        if not 0 <= g < group.order:
            raise InvalidDatumError(f"g index {g} out of range")
        if not group.is_central(g):
            raise InvalidDatumError("g not central")
        q = table.value_at_element(chi, g)
        n = order_of_root(q)
        if n is None:
            raise InternalConsistencyError("chi(g) is not a root of unity")
        if n < 2:
            raise UnsupportedDatumError(
                "chi(g) = 1: the construction assumes its order n >= 2"
            )
        self.group = group
        self.chi = chi
        self.g = g
        self.mu = mu
        self.n = n
        self.m = table.m
        self.dim_h = n * group.order
        self.l = self._chi_order(group, table, chi)
        if self.l % n != 0:
            raise InternalConsistencyError("order of chi not divisible by ord(chi(g))")
        exponent = group.exponent()
        self.conductor = exponent // gcd(exponent, 2 * n) * (2 * n)
        # one working conductor for the whole datum: re-embed the table once
        self.table = CharacterTable(
            group,
            [list(row) for row in table.values],
            table.dims,
            table.names,
            self.conductor,
        )
        self.q = self.table.value_at_element(chi, g)
        self.dims = self.table.dims
        self.perms = self._compute_permutations()

    @staticmethod
    def _chi_order(group: Group, table: CharacterTable, chi: int) -> int:
        l = 1
        for _, gen in group.generators:
            o = order_of_root(table.value_at_element(chi, gen))
            l = l // gcd(l, o) * o
        return l

    # -- permutations ----------------------------------------------------

    def _compute_permutations(self):
        table = self.table
        k = len(table.classes)
        chi_inv = tuple(v.conj() for v in table.row(self.chi))
        tau = [0]
        star = [0]
        for i in range(1, self.m + 1):
            row = table.row(i)
            tau.append(table.index_of_values(
                tuple(chi_inv[c] * row[c] for c in range(k))
            ))
            star.append(table.index_of_values(tuple(v.conj() for v in row)))
        perms = Permutations(tau, star)
        if perms.star[perms.star[1]] != 1 or perms.star[1] != 1:
            raise InternalConsistencyError("duality does not fix the trivial module")
        return perms

    @property
    def tau(self):
        return self.perms.tau

    @property
    def star(self):
        return self.perms.star

    def tau_power(self, i: int, t: int) -> int:
        return self.perms.tau_power(i, t)

    @property
    def a_index(self) -> int:
        """Index of V_(chi^-1), the class called a in the Green ring."""
        return self.perms.tau[1]

    def chi_value(self, e: int) -> Cyclotomic:
        return self.table.value_at_element(self.chi, e)

    # -- antipode trace ----------------------------------------------------

    def antipode_trace(self) -> Cyclotomic:
        """chi evaluated at the antipode-trace element.

        Sums (-1)^k chi(h)^-k chi(g)^(-k(1+k)/2) over k = 0..n-1 and over
        the elements h with h^2 = g^-k.
        """
        group = self.group
        total = Cyclotomic.rational(0)
        for k in range(self.n):
            target = group.power(self.g, -k)
            qpart = self.q ** (-(k * (1 + k)) // 2)
            sign = -1 if k % 2 else 1
            for h in range(group.order):
                if group.mul(h, h) == target:
                    total = total + sign * self.chi_value(h) ** (-k) * qpart
        return total

    def describe(self) -> dict:
        return {
            "family": self.group.family,
            "group_order": self.group.order,
            "m": self.m,
            "n": self.n,
            "l": self.l,
            "q": self.q.to_json(),
            "dim_H": self.dim_h,
            "conductor": self.conductor,
            "chi": self.table.names[self.chi - 1],
            "g": self.group.names[self.g],
            "simple_names": list(self.table.names),
            "dims": list(self.dims),
            "tau": list(self.perms.tau[1:]),
            "star": list(self.perms.star[1:]),
            "antipode_trace": self.antipode_trace().to_json(),
        }

    def __repr__(self):
        return (
            f"GroupDatum({self.group.family}, |G|={self.group.order}, "
            f"chi={self.table.names[self.chi - 1]}, g={self.group.names[self.g]}, "
            f"n={self.n}, l={self.l})"
        )


def gauge_comparison(d1: GroupDatum, d2: GroupDatum) -> dict:
    """Compare two data: can their Hopf algebras be tensor equivalent, and do
    the cyclic-criterion hypotheses force isomorphic Green rings anyway?

    The antipode trace is a gauge invariant, so distinct traces rule out
    tensor equivalence.  For cyclic groups with the same g, chi' = chi^i with
    gcd(i, |G|) = 1 gives an automorphism of the character ring carrying a to
    a', hence isomorphic Green rings.  No general automorphism search is
    attempted.
    """
    t1, t2 = d1.antipode_trace(), d2.antipode_trace()
    traces_equal = t1 == t2
    cyclic_criterion = None
    if (
        d1.group.family == "cyclic"
        and d2.group.family == "cyclic"
        and d1.group.order == d2.group.order
        and d1.g == d2.g
    ):
        order = d1.group.order
        k = len(d1.table.classes)
        cyclic_criterion = False
        for i in range(1, order + 1):
            if gcd(i, order) != 1:
                continue
            powered = tuple(d1.table.value(d1.chi, c) ** i for c in range(k))
            if all(powered[c] == d2.table.value(d2.chi, c) for c in range(k)):
                cyclic_criterion = True
                break
    report = {
        "antipode_trace_1": t1.to_json(),
        "antipode_trace_2": t2.to_json(),
        "antipode_traces_equal": traces_equal,
        "green_rings_isomorphic_by_cyclic_criterion": cyclic_criterion,
    }
    if not traces_equal:
        report["tensor_equivalent"] = False
    return report


def datum_from_spec(spec: dict) -> GroupDatum:
    """Build a datum from its JSON description.

    Format: {"group": family descriptor, "chi": index or irreducible name,
    "g": element expression over the named generators, "mu": 0}.
    """
    gspec = spec["group"]
    if "mult" in gspec:
        group, table_data = group_from_json(gspec)
    else:
        group = group_build(gspec)
        table_data = gspec.get("character_table")
    table = character_table(group, table_data)
    chi = spec["chi"]
    if isinstance(chi, str):
        chi = table.index_by_name(chi)
    g = group.parse_element(spec["g"])
    datum = GroupDatum(group, table, int(chi), g, spec.get("mu", 0))
    reps = spec.get("representations")
    if reps:
        datum.imported_reps = _load_representations(datum, reps)
    return datum


def _load_representations(datum: GroupDatum, reps: dict) -> dict:
    """Per-irreducible generator matrices (Cyclotomic JSON) for the oracle."""
    out = {}
    for key, mats in reps.items():
        idx = datum.table.index_by_name(key) if not str(key).isdigit() else int(key)
        out[idx] = [
            [[Cyclotomic.from_json(v).embed(datum.conductor) for v in row] for row in mat]
            for mat in mats
        ]
    return out


def load_datum(path) -> GroupDatum:
    import json

    with open(path, "r", encoding="utf-8") as fh:
        return datum_from_spec(json.load(fh))
