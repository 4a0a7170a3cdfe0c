# The Green ring of a Taft algebra, computed exactly.
#
# A datum (G, chi, g, mu=0) with G cyclic of order n, g a generator and
# chi(g) a primitive n-th root of unity gives the n^2-dimensional Taft
# algebra.  Its indecomposable modules are the M(i,j) with i indexing the
# simple characters and j = 1..n the length; the Green ring multiplies them
# by explicit Clebsch-Gordan rules.

from greenring import GreenRing, datum_from_spec, dickson
from greenring.presets import taft

n = 3
datum = datum_from_spec(taft(n))
ring = GreenRing(datum)

print("datum:", datum)
print("simples:", datum.table.names, "dims:", datum.dims)
print("tau:", datum.tau[1:], " star:", datum.star[1:])
print("a = [V_(chi^-1)] =", ring.a)
print()

# the full multiplication table of the basis
print("multiplication table of the M[i,j]:")
for x in ring.basis:
    for y in ring.basis:
        if y < x:
            continue
        print(f"  M{list(x)} * M{list(y)} = {ring.M(*x) * ring.M(*y)}")
print()

# M[1,j] is the image of the Dickson polynomial F_j(a, z) under z -> M[1,2]
for j in range(1, n + 1):
    f = dickson(j)
    print(f"F_{j}(y,z) = {f}  ->  {ring.phi_eval(ring.zpoly_from_dickson(j))}")

# and the single defining relation (1 + a - z) F_n(a, z) maps to zero
relation = ring.presentation_relation()
print("relation (1 + a - z) F_n(a,z) evaluates to:", ring.phi_eval(relation))
print()

# duals and the almost-split-sequence basis
print("duals:  M[1,n]* =", ring.dual(ring.M(1, n)))
for j in range(1, n):
    ar = ring.ar_sequence(1, j)
    print(f"AR sequence ending at M(1,{j}): 0 -> M{list(ar.left)} -> {ar.middle} -> M(1,{j}) -> 0")
print("delta basis element delta_(1,1) =", ring.delta(1, 1))
print()

# the symmetric form pairs the M-basis with the delta*-basis
print("form values (M[i,j], delta*_(k,l)) on a few pairs:")
for x in ring.basis[:3]:
    row = [ring.form_sym(ring.M(*x), ring.delta_star(*y)) for y in ring.basis]
    print(f"  row of M{list(x)}:", row)

# the integral of the Green ring is generated by the regular representation
h = ring.regular_class
print()
print("[H] =", h, "  dim:", h.dim())
print("[H] * M[1,2] =", h * ring.M(1, 2), " (= dim M(1,2) * [H])")
