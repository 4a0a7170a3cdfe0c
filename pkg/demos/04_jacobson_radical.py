# The Jacobson radical of the Green ring is a principal ideal.
#
# The class a acts on each evaluation module of the complexified character
# ring by a power omega^t of a primitive l-th root of unity; counting the
# classes by whether (l/n) divides t gives (d1, d2, d3).  The radical is
# generated by M[1,n] theta with theta = (1-a)(1 + a^n + ... + a^(l-n)), it
# squares to zero, and its rank is exactly d3 - certified over the integers
# by a Smith normal form.

from greenring import GreenRing, datum_from_spec
from greenring.presets import generalized_taft_faithful, taft
from greenring.radical import (
    ideal_rank,
    omega_counts,
    radical_generator,
    root_counts,
    simple_module_count,
    theta,
)

for label, spec in [("taft4", taft(4)), ("faithful C_6 datum", generalized_taft_faithful(3))]:
    ring = GreenRing(datum_from_spec(spec))
    datum = ring.datum
    counts = omega_counts(ring)
    print(f"{label}: n={datum.n}, l={datum.l}, m={datum.m}")
    print("  a-action exponents per class:", counts.exponents)
    print(f"  d1={counts.d1}  d2={counts.d2}  d3={counts.d3}")
    th = theta(ring)
    gen = radical_generator(ring)
    print("  theta =", th)
    print("  radical generator M[1,n] theta =", gen)
    print("  generator squared:", gen * gen)
    print("  exact rank of the ideal:", ideal_rank(ring, gen), " (should be d3)")
    roots = root_counts(ring)
    print("  distinct-root counts per class:", roots)
    print(
        "  simple modules of the complexified Green ring:",
        simple_module_count(ring),
        f"= m*n - d3 = {ring.m * ring.n - counts.d3}",
    )
    print()
