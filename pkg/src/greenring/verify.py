"""Named verification suites over a datum.

Every suite is a list of exact checks; a check either passes or produces a
minimal witness (the indices and both sides of the first failing identity).
The oracle suite is the slow one: it rebuilds tensor products as explicit
matrices and decomposes them, independently of the symbolic rules.
"""

from __future__ import annotations

import random

from . import linalg
from . import oracle as orc
from . import radical as rad
from .green import GreenRing, dickson, dickson_closed_form
from .stable import StableRing, inverse_dickson_identity

SUITE_NAMES = (
    "clebsch-gordan",
    "presentation",
    "dual-bases",
    "radical",
    "grouplike",
    "bifrobenius",
    "oracle",
)

_RANDOM_TRIPLES = 200


def _result(name, passed, witness=None):
    return {"check": name, "pass": bool(passed), "witness": witness}


def _random_element(ring, rng):
    coeffs = {}
    for _ in range(rng.randint(1, 3)):
        b = ring.basis[rng.randrange(len(ring.basis))]
        coeffs[b] = coeffs.get(b, 0) + rng.randint(-3, 3)
    return ring.element(coeffs)


def suite_clebsch_gordan(ring: GreenRing, max_dim=None, seed=0):
    out = []
    basis = ring.basis
    bad = next((b for b in basis if ring.one * ring.M(*b) != ring.M(*b)), None)
    out.append(_result("unit-law", bad is None, bad and {"index": list(bad)}))

    witness = None
    for x in basis:
        for y in basis:
            if ring.M(*x) * ring.M(*y) != ring.M(*y) * ring.M(*x):
                witness = {"x": list(x), "y": list(y)}
                break
        if witness:
            break
    out.append(_result("commutativity-basis", witness is None, witness))

    rng = random.Random(seed)
    witness = None
    for _ in range(_RANDOM_TRIPLES):
        x, y, z = (_random_element(ring, rng) for _ in range(3))
        if (x * y) * z != x * (y * z) or x * y != y * x:
            witness = {"x": x.to_json(), "y": y.to_json(), "z": z.to_json()}
            break
    out.append(_result("associativity-random", witness is None, witness))

    d = ring.datum
    witness = None
    for i in range(1, ring.m + 1):
        for j in range(1, ring.m + 1):
            coeff = (ring.simple(i) * ring.simple(j)).coefficient(1, 1)
            expected = 1 if i == d.star[j] else 0
            if coeff != expected:
                witness = {"i": i, "j": j, "coefficient": coeff}
                break
        if witness:
            break
    out.append(_result("unit-coefficient-duality", witness is None, witness))

    witness = None
    for x in basis:
        if ring.dual(ring.dual(ring.M(*x))) != ring.M(*x):
            witness = {"index": list(x)}
            break
    out.append(_result("dual-involution", witness is None, witness))

    witness = None
    for x in basis:
        for y in basis:
            lhs = ring.dual(ring.M(*x) * ring.M(*y))
            rhs = ring.dual(ring.M(*x)) * ring.dual(ring.M(*y))
            if lhs != rhs:
                witness = {"x": list(x), "y": list(y)}
                break
        if witness:
            break
    out.append(_result("dual-ring-map", witness is None, witness))

    out.append(_result("a-order", ring.a ** d.l == ring.one, {"l": d.l}))

    witness = None
    for (i, j) in basis:
        if j == ring.n:
            continue
        ar = ring.ar_sequence(i, j)
        if ar.middle != ring.M(1, 2) * ring.M(i, j):
            witness = {"index": [i, j]}
            break
        if ar.delta != ring.delta(i, j):
            witness = {"index": [i, j], "part": "delta"}
            break
    out.append(_result("ar-middle-term", witness is None, witness))
    return out


def suite_presentation(ring: GreenRing, max_dim=None, seed=0):
    out = []
    witness = None
    for s in range(1, max(ring.n + 2, 11)):
        if dickson(s) != dickson_closed_form(s):
            witness = {"s": s}
            break
    out.append(_result("dickson-closed-form", witness is None, witness))

    witness = None
    for j in range(1, ring.n + 1):
        if ring.phi_eval(ring.zpoly_from_dickson(j)) != ring.M(1, j):
            witness = {"j": j}
            break
    out.append(_result("dickson-evaluates-to-basis", witness is None, witness))

    relation = ring.phi_eval(ring.presentation_relation())
    out.append(
        _result(
            "defining-relation-vanishes",
            relation == ring.zero,
            None if relation == ring.zero else relation.to_json(),
        )
    )
    return out


def suite_dual_bases(ring: GreenRing, max_dim=None, seed=0):
    out = []
    basis = ring.basis
    witness = None
    for x in basis:
        for y in basis:
            got = ring.form_sym(ring.M(*x), ring.delta_star(*y))
            expected = 1 if x == y else 0
            if got != expected:
                witness = {"x": list(x), "y": list(y), "value": got}
                break
        if witness:
            break
    out.append(_result("dual-basis-identity-matrix", witness is None, witness))

    witness = None
    for x in basis:
        for y in basis:
            got = ring.form_hom(ring.M(*x), ring.delta(*y))
            expected = 1 if x == y else 0
            if got != expected:
                witness = {"x": list(x), "y": list(y), "value": got}
                break
        if witness:
            break
    out.append(_result("hom-delta-identity-matrix", witness is None, witness))

    mat = ring._basis_matrix(ring.delta_family())
    out.append(_result("delta-change-of-basis-unimodular", linalg.is_unimodular(mat)))

    rng = random.Random(seed)
    witness = None
    for _ in range(_RANDOM_TRIPLES):
        x, y, z = (_random_element(ring, rng) for _ in range(3))
        if ring.form_sym(x, y) != ring.form_sym(y, x):
            witness = {"kind": "symmetry", "x": x.to_json(), "y": y.to_json()}
            break
        if ring.form_sym(x * y, z) != ring.form_sym(x, y * z):
            witness = {"kind": "associativity", "x": x.to_json(), "y": y.to_json(), "z": z.to_json()}
            break
    out.append(_result("form-symmetric-associative", witness is None, witness))

    h = ring.regular_class
    witness = None
    for b in basis:
        x = ring.M(*b)
        if h * x != x.dim() * h:
            witness = {"index": list(b), "kind": "integral"}
            break
        if ring.form_sym(h, x) != x.dim():
            witness = {"index": list(b), "kind": "form"}
            break
    out.append(_result("integral-and-dimension-form", witness is None, witness))

    out.append(_result("phi-of-unit", ring.frobenius_phi(ring.one) == 1))

    witness = None
    for (i, j) in basis:
        if j == ring.n:
            continue
        image = ring.grothendieck_image(ring.delta(i, j))
        if any(image):
            witness = {"index": [i, j], "image": list(image)}
            break
    out.append(_result("grothendieck-kills-delta", witness is None, witness))

    rng = random.Random(seed + 1)
    witness = None
    for _ in range(50):
        x, y = _random_element(ring, rng), _random_element(ring, rng)
        lhs = ring.grothendieck_image(x * y)
        rhs = ring.g0_product(ring.grothendieck_image(x), ring.grothendieck_image(y))
        if lhs != rhs:
            witness = {"x": x.to_json(), "y": y.to_json()}
            break
    out.append(_result("grothendieck-ring-map", witness is None, witness))
    return out


def suite_radical(ring: GreenRing, max_dim=None, seed=0):
    out = []
    counts = rad.omega_counts(ring)
    out.append(
        _result(
            "omega-partition",
            counts.d1 + counts.d2 + counts.d3 == len(ring.datum.table.classes),
            {"d1": counts.d1, "d2": counts.d2, "d3": counts.d3},
        )
    )
    th = rad.theta(ring)
    gen = rad.radical_generator(ring)
    out.append(_result("generator-squares-to-zero", (gen * gen) == ring.zero))

    geo = ring.zero
    for t in range(ring.n):
        geo = geo + ring.a_power(t)
    out.append(_result("geometric-sum-kills-theta", geo * th == ring.zero))

    witness = None
    for c in range(len(ring.datum.table.classes)):
        value = ring.class_value(th, c)
        vanish = value.is_zero()
        expected = c in counts.omega1 or c in counts.omega2
        if vanish != expected:
            witness = {"class": c, "value": value.to_json()}
            break
    out.append(_result("theta-vanishing-pattern", witness is None, witness))

    rank = rad.ideal_rank(ring, gen)
    out.append(
        _result("rank-equals-d3", rank == counts.d3, {"rank": rank, "d3": counts.d3})
    )

    roots = rad.root_counts(ring)
    witness = None
    for c, nj in enumerate(roots):
        expected = ring.n - 1 if c in counts.omega3 else ring.n
        if nj != expected:
            witness = {"class": c, "roots": nj, "expected": expected}
            break
    out.append(_result("root-count-lemma", witness is None, witness))

    total = sum(roots)
    out.append(
        _result(
            "simple-count",
            total == ring.m * ring.n - counts.d3,
            {"total": total},
        )
    )

    out.append(
        _result(
            "generator-dies-in-grothendieck",
            not any(ring.grothendieck_image(gen)),
        )
    )
    return out


def suite_grouplike(ring: GreenRing, max_dim=None, seed=0):
    out = []
    st = StableRing(ring)
    witness = None
    for x in ring.basis:
        for y in ring.basis:
            lhs = st.reduce(ring.M(*x) * ring.M(*y))
            rhs = st.reduce(ring.M(*x)) * st.reduce(ring.M(*y))
            if lhs != rhs:
                witness = {"x": list(x), "y": list(y)}
                break
        if witness:
            break
    out.append(_result("stable-reduction-ring-map", witness is None, witness))

    witness = None
    for u in st.basis:
        for v in st.basis:
            lhs = st.epsilon(st.M(*u) * st.M(*v))
            rhs = st.eps_basis(*u) * st.eps_basis(*v)
            if lhs != rhs:
                witness = {"u": list(u), "v": list(v)}
                break
        if witness:
            break
    out.append(_result("epsilon-algebra-map", witness is None, witness))

    out.append(_result("epsilon-kills-relator", st.f_at_cos(ring.n).is_zero()))
    witness = None
    for j in range(1, ring.n):
        if st.f_at_cos(j).is_zero():
            witness = {"j": j}
            break
    out.append(_result("epsilon-nonzero-below-n", witness is None, witness))

    report = st.grouplike_check()
    for axiom in ("G1", "G2", "G3"):
        out.append(_result(f"grouplike-{axiom}", report[axiom]["pass"], report[axiom]["witness"]))

    out.append(_result("b-unit", st.b(1, 1) == st.one))
    return out


def suite_bifrobenius(ring: GreenRing, max_dim=None, seed=0):
    out = []
    st = StableRing(ring)
    out.append(_result("dual-pair", st.dual_pair_check()))
    out.append(_result("counit-axiom", st.counit_check()))
    anti = st.antipode_checks()
    out.append(_result("antipode-squared", anti["S_squared"]))
    out.append(_result("antipode-anti-algebra", anti["anti_algebra"]))
    out.append(_result("antipode-anti-coalgebra", anti["anti_coalgebra"]))
    witness = None
    for s in range(0, 11):
        if not inverse_dickson_identity(s):
            witness = {"s": s}
            break
    out.append(_result("inverse-dickson-identity", witness is None, witness))
    out.append(_result("monomial-basis-agreement", st.monomial_agreement()))
    return out


def suite_oracle(ring: GreenRing, max_dim=200, seed=0):
    out = []
    datum = ring.datum
    modules = {}

    def build(i, j):
        if (i, j) not in modules:
            modules[(i, j)] = orc.module_build(datum, i, j)
        return modules[(i, j)]

    witness = None
    skipped = 0
    for x in ring.basis:
        for y in ring.basis:
            a, b = build(*x), build(*y)
            if a.dim * b.dim > max_dim:
                skipped += 1
                continue
            got = orc.module_decompose(orc.module_tensor(a, b))
            expected = (ring.M(*x) * ring.M(*y)).coeffs
            if got != expected:
                witness = {
                    "x": list(x),
                    "y": list(y),
                    "oracle": sorted([list(k) + [v] for k, v in got.items()]),
                    "symbolic": sorted([list(k) + [v] for k, v in expected.items()]),
                }
                break
        if witness:
            break
    out.append(
        _result("tensor-decomposition-matches-multiply", witness is None, witness)
    )
    if skipped:
        out.append(_result("tensor-pairs-skipped-over-max-dim", True, {"count": skipped}))

    witness = None
    for (i, j) in ring.basis:
        if orc.module_decompose(build(i, j)) != {(i, j): 1}:
            witness = {"index": [i, j]}
            break
    out.append(_result("decompose-round-trip", witness is None, witness))

    witness = None
    for (i, j) in ring.basis:
        dual = orc.module_dual(build(i, j))
        expected = (datum.tau_power(datum.star[i], 1 - j), j)
        if orc.module_decompose(dual) != {expected: 1}:
            witness = {"index": [i, j]}
            break
        if orc.module_decompose(orc.module_dual(dual)) != {(i, j): 1}:
            witness = {"index": [i, j], "kind": "double-dual"}
            break
    out.append(_result("dual-modules", witness is None, witness))

    witness = None
    for x in ring.basis:
        for y in ring.basis:
            a, b = build(*x), build(*y)
            if a.dim * b.dim > max_dim:
                continue
            hom = orc.hom_dim(a, b)
            if hom != ring.form_hom(ring.M(*x), ring.M(*y)):
                witness = {"x": list(x), "y": list(y), "kind": "hom-form"}
                break
            sym = orc.hom_dim(a, orc.module_dual(b))
            if sym != ring.form_sym(ring.M(*x), ring.M(*y)):
                witness = {"x": list(x), "y": list(y), "kind": "sym-form"}
                break
        if witness:
            break
    out.append(_result("hom-dimensions-match-forms", witness is None, witness))

    witness = None
    for (i, j) in ring.basis:
        probe = orc.structure_probe(build(i, j))
        socle = [0] * ring.m
        socle[datum.tau_power(i, j - 1) - 1] = 1
        top = [0] * ring.m
        top[i - 1] = 1
        dims = [(j - p) * datum.dims[i - 1] for p in range(j)] + [0]
        if list(probe["socle"]) != socle or list(probe["top"]) != top:
            witness = {"index": [i, j], "probe": probe}
            break
        if probe["radical_series_dims"] != dims:
            witness = {"index": [i, j], "kind": "radical-series", "probe": probe}
            break
    out.append(_result("socle-top-radical-series", witness is None, witness))

    if datum.dim_h <= max_dim:
        reg = orc.regular_module(datum)
        expected = {(i, ring.n): datum.dims[i - 1] for i in range(1, ring.m + 1)}
        got = orc.module_decompose(reg)
        out.append(
            _result(
                "regular-module-projective-covers",
                got == expected,
                None if got == expected else sorted([list(k) + [v] for k, v in got.items()]),
            )
        )

    symbolic = datum.antipode_trace()
    pbw = orc.antipode_trace_pbw(datum)
    out.append(
        _result(
            "antipode-trace",
            symbolic == pbw,
            None if symbolic == pbw else {"formula": symbolic.to_json(), "pbw": pbw.to_json()},
        )
    )
    return out


SUITES = {
    "clebsch-gordan": suite_clebsch_gordan,
    "presentation": suite_presentation,
    "dual-bases": suite_dual_bases,
    "radical": suite_radical,
    "grouplike": suite_grouplike,
    "bifrobenius": suite_bifrobenius,
    "oracle": suite_oracle,
}


def run_suites(ring: GreenRing, names=None, max_dim=200, seed=0) -> dict:
    """Run the named suites (all by default); results keyed by suite name."""
    if names is None or names == ["all"] or names == "all":
        names = list(SUITE_NAMES)
    results = {}
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
        results[name] = SUITES[name](ring, max_dim=max_dim, seed=seed)
    return results


def all_passed(results: dict) -> bool:
    return all(check["pass"] for checks in results.values() for check in checks)


def first_failure(results: dict):
    for name in results:
        for check in results[name]:
            if not check["pass"]:
                return {"suite": name, **check}
    return None
