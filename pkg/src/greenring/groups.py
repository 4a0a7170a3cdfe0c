"""Finite group models and exact character tables.

Groups are multiplication tables on indices 0..|G|-1 with element 0 the
identity.  Supported families: cyclic, products of cyclics, dihedral
(relations b^2 = c^(2s) = (cb)^2 = 1, s odd, order 4s), and generic groups
imported together with a character table.  Character values are exact
cyclotomics with conductor the exponent of the group.
"""

from __future__ import annotations

from math import gcd

from .cyclotomic import Cyclotomic
from .errors import (
    InternalConsistencyError,
    InvalidGroupError,
    InvalidTableError,
    MissingTableError,
    NotACharacterError,
    UnsupportedParameterError,
)

_VALIDATION_BOUND = 200  # exhaustive associativity check up to this order


class Group:
    """A finite group as a validated multiplication table."""

    def __init__(self, family, mult, generators, names=None):
        self.family = family
        self.mult = tuple(tuple(row) for row in mult)
        self.order = len(self.mult)
        self.generators = tuple(generators)  # (name, element index) pairs
        self.names = tuple(names) if names else tuple(
            "1" if i == 0 else f"x{i}" for i in range(self.order)
        )
        self._validate()
        self._inverse = self._build_inverses()
        self._words = None
        self._classes = None

    # -- validation ----------------------------------------------------

    def _validate(self):
        n = self.order
        if n == 0:
            raise InvalidGroupError("empty multiplication table")
        for row in self.mult:
            if len(row) != n or any(not 0 <= e < n for e in row):
                raise InvalidGroupError("multiplication table is not square over 0..n-1")
        for i in range(n):
            if self.mult[0][i] != i or self.mult[i][0] != i:
                raise InvalidGroupError("element 0 is not a two-sided identity")
        if n <= _VALIDATION_BOUND:
            for a in range(n):
                for b in range(n):
                    ab = self.mult[a][b]
                    for c in range(n):
                        if self.mult[ab][c] != self.mult[a][self.mult[b][c]]:
                            raise InvalidGroupError(
                                f"associativity fails at ({a},{b},{c})"
                            )

    def _build_inverses(self):
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.mult[a][b] == 0:
                    if self.mult[b][a] != 0:
                        raise InvalidGroupError(f"one-sided inverse at {a}")
                    inv[a] = b
                    break
            if inv[a] is None:
                raise InvalidGroupError(f"element {a} has no inverse")
        return tuple(inv)

    # -- structure -------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        result = 0
        base = a
        while k:
            if k & 1:
                result = self.mult[result][base]
            base = self.mult[base][base]
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mult[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        e = 1
        for a in range(self.order):
            o = self.element_order(a)
            e = e // gcd(e, o) * o
        return e

    def is_central(self, a: int) -> bool:
        return all(self.mult[a][h] == self.mult[h][a] for h in range(self.order))

    def conjugacy_classes(self) -> "ConjugacyClasses":
        if self._classes is None:
            self._classes = ConjugacyClasses(self)
        return self._classes

    def generator_words(self):
        """For each element, a shortest word in the generators (BFS), as a
        tuple of positions into ``self.generators``."""
        if self._words is not None:
            return self._words
        words = {0: ()}
        frontier = [0]
        while frontier:
            nxt = []
            for e in frontier:
                for pos, (_, g) in enumerate(self.generators):
                    f = self.mult[e][g]
                    if f not in words:
                        words[f] = words[e] + (pos,)
                        nxt.append(f)
            frontier = nxt
        if len(words) != self.order:
            raise InternalConsistencyError("generators do not generate the group")
        self._words = tuple(words[e] for e in range(self.order))
        return self._words

    def parse_element(self, expr) -> int:
        """Evaluate an element expression like "c^3", "g1*g2^2" or "1"."""
        if isinstance(expr, int):
            if not 0 <= expr < self.order:
                raise InvalidGroupError(f"element index {expr} out of range")
            return expr
        by_name = {name: idx for name, idx in self.generators}
        result = 0
        for token in str(expr).replace(" ", "").split("*"):
            if token in ("", "1", "e"):
                continue
            name, _, exp = token.partition("^")
            if name not in by_name:
                raise InvalidGroupError(f"unknown generator {name!r} in {expr!r}")
            k = int(exp) if exp else 1
            result = self.mult[result][self.power(by_name[name], k)]
        return result

    def __repr__(self):
        return f"Group({self.family}, order={self.order})"


class ConjugacyClasses:
    """Partition of the elements into conjugacy orbits, brute force."""

    def __init__(self, group: Group):
        n = group.order
        class_of = [-1] * n
        members = []
        for a in range(n):
            if class_of[a] >= 0:
                continue
            orbit = sorted(
                {group.mul(group.mul(h, a), group.inv(h)) for h in range(n)}
            )
            idx = len(members)
            for e in orbit:
                class_of[e] = idx
            members.append(tuple(orbit))
        self.members = tuple(members)
        self.reps = tuple(orbit[0] for orbit in members)
        self.sizes = tuple(len(orbit) for orbit in members)
        self.class_of = tuple(class_of)

    def __len__(self):
        return len(self.members)


# ---------------------------------------------------------------------------
# Group builders.


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise UnsupportedParameterError("cyclic order must be >= 1")
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    gens = [("g", 1)] if n > 1 else []
    return Group("cyclic", mult, gens, names)


def abelian_group(orders) -> Group:
    orders = tuple(int(o) for o in orders)
    if not orders or any(o < 1 for o in orders):
        raise UnsupportedParameterError("abelian factor orders must be >= 1")
    n = 1
    for o in orders:
        n *= o
    def unrank(i):
        t = []
        for o in reversed(orders):
            t.append(i % o)
            i //= o
        return tuple(reversed(t))
    def rank(t):
        i = 0
        for v, o in zip(t, orders):
            i = i * o + v
        return i
    mult = [
        [rank(tuple((x + y) % o for x, y, o in zip(unrank(i), unrank(j), orders)))
         for j in range(n)]
        for i in range(n)
    ]
    names = []
    for i in range(n):
        t = unrank(i)
        parts = [
            f"g{k+1}^{v}" if v > 1 else f"g{k+1}" for k, v in enumerate(t) if v
        ]
        names.append("*".join(parts) if parts else "1")
    gens = []
    for k, o in enumerate(orders):
        if o > 1:
            gens.append((f"g{k+1}", rank(tuple(1 if t == k else 0 for t in range(len(orders))))))
    return Group("abelian-product", mult, gens, names)


def dihedral_group(s: int) -> Group:
    """The group <b, c | b^2 = c^(2s) = (cb)^2 = 1>, s odd; it has order 4s."""
    if s < 1 or s % 2 == 0:
        raise UnsupportedParameterError("dihedral parameter s must be odd and positive")
    n = 4 * s
    # element (k, e) = c^k * b^e at index k + 2s*e
    def idx(k, e):
        return k % (2 * s) + 2 * s * e
    mult = [[0] * n for _ in range(n)]
    for k1 in range(2 * s):
        for e1 in range(2):
            for k2 in range(2 * s):
                for e2 in range(2):
                    k = k1 + (k2 if e1 == 0 else -k2)
                    mult[idx(k1, e1)][idx(k2, e2)] = idx(k, (e1 + e2) % 2)
    names = []
    for e in range(2):
        for k in range(2 * s):
            c = "" if k == 0 else ("c" if k == 1 else f"c^{k}")
            b = "b" if e else ""
            names.append("*".join(x for x in (c, b) if x) or "1")
    return Group("dihedral", mult, [("c", idx(1, 0)), ("b", idx(0, 1))], names)


def generic_group(mult, names=None) -> Group:
    """A group from an explicit multiplication table; generators picked greedily."""
    probe = Group("generic-table", mult, [], names)
    gens = []
    reached = {0}
    for a in range(1, probe.order):
        if a not in reached:
            gens.append((f"x{a}", a))
            reached = _closure(probe, [g for _, g in gens])
    return Group("generic-table", mult, gens, names)


def _closure(group: Group, gens) -> set:
    reached = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                f = group.mul(e, g)
                if f not in reached:
                    reached.add(f)
                    nxt.append(f)
        frontier = nxt
    return reached


def group_build(spec: dict) -> Group:
    """Build a group from a family descriptor (see the datum JSON format)."""
    family = spec.get("family")
    if family is None and "mult" in spec:
        family = "generic"
    if family == "cyclic":
        return cyclic_group(int(spec["order"]))
    if family in ("abelian", "abelian-product"):
        return abelian_group(spec["orders"])
    if family == "dihedral":
        return dihedral_group(int(spec["s"]))
    if family in ("generic", "generic-table"):
        return generic_group(spec["mult"], spec.get("names"))
    raise UnsupportedParameterError(f"unknown group family {family!r}")


# ---------------------------------------------------------------------------
# Character tables.


class CharacterTable:
    """Exact character table; row 1 (index 1) is always the trivial character."""

    def __init__(self, group: Group, values, dims, names, conductor):
        self.group = group
        self.classes = group.conjugacy_classes()
        self.m = len(values)
        self.conductor = conductor
        self.values = tuple(
            tuple(v.embed(conductor) for v in row) for row in values
        )
        self.dims = tuple(dims)
        self.names = tuple(names)
        self._product_cache = {}
        self._check()

    def _check(self):
        k = len(self.classes)
        if self.m != k:
            raise InvalidTableError(f"{self.m} irreducibles but {k} classes")
        if any(len(row) != k for row in self.values):
            raise InvalidTableError("ragged value matrix")
        if any(self.values[0][c] != 1 for c in range(k)):
            raise InvalidTableError("row 1 is not the trivial character")
        if self.dims[0] != 1:
            raise InvalidTableError("trivial character must have dimension 1")
        order = self.group.order
        if sum(d * d for d in self.dims) != order:
            raise InvalidTableError("sum of squared dimensions != |G|")
        identity_class = self.classes.class_of[0]
        for i in range(self.m):
            if self.values[i][identity_class] != self.dims[i]:
                raise InvalidTableError(f"dims[{i+1}] disagrees with the identity value")
        for i in range(self.m):
            for j in range(i, self.m):
                acc = Cyclotomic.rational(0)
                for c in range(k):
                    acc = acc + self.classes.sizes[c] * self.values[i][c] * self.values[j][c].conj()
                expected = order if i == j else 0
                if acc != expected:
                    raise InvalidTableError(f"row orthogonality fails at ({i+1},{j+1})")

    # 1-based irreducible indices throughout the public API.

    def value(self, i: int, class_index: int) -> Cyclotomic:
        return self.values[i - 1][class_index]

    def value_at_element(self, i: int, e: int) -> Cyclotomic:
        return self.values[i - 1][self.classes.class_of[e]]

    def is_linear(self, i: int) -> bool:
        return self.dims[i - 1] == 1

    def row(self, i: int):
        return self.values[i - 1]

    def index_of_values(self, values) -> int:
        """1-based index of the irreducible with the given per-class values."""
        for i, row in enumerate(self.values):
            if all(row[c] == values[c] for c in range(len(row))):
                return i + 1
        raise InternalConsistencyError("class function matches no irreducible")

    def index_by_name(self, name: str) -> int:
        name = name.replace(" ", "")
        for i, n in enumerate(self.names):
            if n.replace(" ", "") == name:
                return i + 1
        raise InvalidTableError(f"no irreducible named {name!r}")

    def decompose(self, values) -> tuple:
        """Multiplicity vector of a genuine character given by per-class values.

        m_i = (1/|G|) sum_c |c| f(c) conj(chi_i(c)); each must come out a
        non-negative rational integer, else NotACharacterError.
        """
        order = self.group.order
        k = len(self.classes)
        mults = []
        for i in range(self.m):
            acc = Cyclotomic.rational(0)
            for c in range(k):
                acc = acc + self.classes.sizes[c] * values[c] * self.values[i][c].conj()
            if not acc.is_rational():
                raise NotACharacterError("non-rational inner product")
            q = acc.as_fraction() / order
            if q.denominator != 1 or q < 0:
                raise NotACharacterError(f"multiplicity {q} of row {i+1}")
            mults.append(int(q))
        return tuple(mults)

    def product_values(self, i: int, j: int):
        ri, rj = self.row(i), self.row(j)
        return tuple(a * b for a, b in zip(ri, rj))

    def product_decompose(self, i: int, j: int) -> tuple:
        """Structure constants of the character ring: chi_i * chi_j as a
        multiplicity vector over the irreducibles."""
        key = (i, j) if i <= j else (j, i)
        cached = self._product_cache.get(key)
        if cached is None:
            cached = self.decompose(self.product_values(i, j))
            self._product_cache[key] = cached
        return cached

    def check_column_orthogonality(self) -> bool:
        k = len(self.classes)
        order = self.group.order
        for c in range(k):
            for d in range(k):
                acc = Cyclotomic.rational(0)
                for i in range(self.m):
                    acc = acc + self.values[i][c] * self.values[i][d].conj()
                expected = order // self.classes.sizes[c] if c == d else 0
                if acc != expected:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "values": [[v.to_json() for v in row] for row in self.values],
            "class_reps": list(self.classes.reps),
            "class_sizes": list(self.classes.sizes),
        }


def character_table(group: Group, imported: dict | None = None) -> CharacterTable:
    """Character table for the supported families, or from imported data."""
    if group.family == "cyclic":
        return _cyclic_table(group)
    if group.family == "abelian-product":
        return _abelian_table(group)
    if group.family == "dihedral":
        return _dihedral_table(group)
    if imported is None:
        raise MissingTableError(
            "generic groups need an imported character table"
        )
    return _imported_table(group, imported)


def _cyclic_table(group: Group) -> CharacterTable:
    n = group.order
    classes = group.conjugacy_classes()
    values = [
        tuple(Cyclotomic.zeta(n, (i * r) % n) for r in classes.reps)
        for i in range(n)
    ]
    names = [f"chi{i+1}" for i in range(n)]
    return CharacterTable(group, values, [1] * n, names, n)


def _abelian_table(group: Group) -> CharacterTable:
    # characters of a direct product of cyclics are indexed by the same
    # mixed-radix digit tuples as the elements themselves
    n = group.order
    conductor = group.exponent()
    classes = group.conjugacy_classes()
    orders = [group.element_order(g) for _, g in group.generators]

    def digits(i):
        t = []
        for o in reversed(orders):
            t.append(i % o)
            i //= o
        return tuple(reversed(t))

    rows = []
    for i in range(n):
        ti = digits(i)
        row = []
        for r in classes.reps:
            tr = digits(r)
            acc = Cyclotomic.rational(1)
            for a, b, o in zip(ti, tr, orders):
                if a and b:
                    acc = acc * Cyclotomic.zeta(o, a * b)
            row.append(acc)
        rows.append(tuple(row))
    names = [f"chi[{group.names[i]}]" for i in range(n)]
    return CharacterTable(group, rows, [1] * n, names, conductor)


def _dihedral_table(group: Group) -> CharacterTable:
    s = group.order // 4
    classes = group.conjugacy_classes()
    two_s = 2 * s
    def split(e):
        return (e % two_s, e // two_s)  # e = c^k * b^eps
    rows, dims, names = [], [], []
    for i, j in ((0, 0), (0, 1), (1, 0), (1, 1)):
        row = []
        for r in classes.reps:
            k, eps = split(r)
            row.append(Cyclotomic.rational((-1) ** (i * k + j * eps)))
        rows.append(tuple(row))
        dims.append(1)
        names.append(f"F({i},{j})")
    for l in range(1, s):
        row = []
        for r in classes.reps:
            k, eps = split(r)
            if eps:
                row.append(Cyclotomic.rational(0))
            else:
                row.append(Cyclotomic.zeta(two_s, l * k) + Cyclotomic.zeta(two_s, -l * k))
        rows.append(tuple(row))
        dims.append(2)
        names.append(f"V({l})")
    return CharacterTable(group, rows, dims, names, group.exponent())


def _imported_table(group: Group, data: dict) -> CharacterTable:
    classes = group.conjugacy_classes()
    reps = data.get("class_reps")
    sizes = data.get("class_sizes")
    raw = [[Cyclotomic.from_json(v) for v in row] for row in data["values"]]
    k = len(classes)
    if reps is None:
        reps = list(classes.reps)
    if len(reps) != k or sorted(classes.class_of[r] for r in reps) != list(range(k)):
        raise InvalidTableError("class representatives do not hit every class once")
    if sizes is not None:
        for r, sz in zip(reps, sizes):
            if classes.sizes[classes.class_of[r]] != sz:
                raise InvalidTableError(f"class size mismatch at representative {r}")
    # re-order columns to the canonical class order (minimal-index reps)
    column_of = [None] * k
    for col, r in enumerate(reps):
        column_of[classes.class_of[r]] = col
    rows = [tuple(row[column_of[c]] for c in range(k)) for row in raw]
    conductor = group.exponent()
    identity_class = classes.class_of[0]
    dims = []
    for row in rows:
        v = row[identity_class]
        if not v.is_rational() or v.as_fraction().denominator != 1 or v.as_fraction() <= 0:
            raise InvalidTableError("identity column must hold positive integers")
        dims.append(int(v.as_fraction()))
    # move the trivial character to the front
    trivial = None
    for i, row in enumerate(rows):
        if all(v == 1 for v in row):
            trivial = i
            break
    if trivial is None:
        raise InvalidTableError("no trivial character in the imported table")
    order = list(range(len(rows)))
    order.insert(0, order.pop(trivial))
    rows = [rows[i] for i in order]
    dims = [dims[i] for i in order]
    names = data.get("names")
    if names and len(names) == len(rows):
        names = [names[i] for i in order]
    else:
        names = [f"chi{i+1}" for i in range(len(rows))]
    return CharacterTable(group, rows, dims, names, conductor)


def group_from_json(data: dict):
    """Load the group import format: {"order", "mult", "classes"?, "character_table"}."""
    mult = data["mult"]
    if len(mult) != data.get("order", len(mult)):
        raise InvalidGroupError("declared order disagrees with the table size")
    group = generic_group(mult, data.get("names"))
    table_data = data.get("character_table")
    return group, table_data
