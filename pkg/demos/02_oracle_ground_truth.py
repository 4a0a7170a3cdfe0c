# The module oracle: every symbolic rule has a matrix-level counterpart.
#
# M(i,j) is built as explicit cyclotomic matrices; tensor products use the
# comultiplication y -> y (x) g + 1 (x) y; decomposition reads characters off
# the filtration im(y^0) > im(y^1) > ...  None of this consults the
# Clebsch-Gordan rules, so agreement is a genuine check.

from greenring import (
    GreenRing,
    antipode_trace_pbw,
    datum_from_spec,
    hom_dim,
    module_build,
    module_decompose,
    module_dual,
    module_tensor,
    regular_module,
    structure_probe,
)
from greenring.presets import taft

datum = datum_from_spec(taft(3))
ring = GreenRing(datum)

m12 = module_build(datum, 1, 2)
print("M(1,2) group matrix for g:", m12.gen_mats["g"])
print("M(1,2) y matrix:          ", m12.y_mat)
print()

tensor = module_tensor(m12, m12)
print(f"M(1,2) (x) M(1,2)  has dim {tensor.dim}")
print("oracle decomposition:", module_decompose(tensor))
print("symbolic product:    ", dict((ring.M(1, 2) * ring.M(1, 2)).coeffs))
print()

# sweep every basis pair
mismatches = 0
for x in ring.basis:
    for y in ring.basis:
        a, b = module_build(datum, *x), module_build(datum, *y)
        oracle = module_decompose(module_tensor(a, b))
        if oracle != (ring.M(*x) * ring.M(*y)).coeffs:
            mismatches += 1
print(f"tensor sweep over all {len(ring.basis)}^2 basis pairs: {mismatches} mismatches")
print()

m13 = module_build(datum, 1, 3)
probe = structure_probe(m13)
print("structure of M(1,3):")
print("  socle multiplicities:", probe["socle"], " top:", probe["top"])
print("  radical series dims: ", probe["radical_series_dims"])
print("  dual decomposes as:  ", module_decompose(module_dual(m13)))
print()

print("hom dimensions agree with the bilinear form <.,.>:")
for x in ring.basis[:4]:
    a = module_build(datum, *x)
    homs = [hom_dim(a, module_build(datum, *y)) for y in ring.basis]
    forms = [ring.form_hom(ring.M(*x), ring.M(*y)) for y in ring.basis]
    print(f"  M{list(x)}: oracle {homs} vs form {forms}")
print()

reg = regular_module(datum)
print("regular module decomposes into projective covers:", module_decompose(reg))
print("antipode trace, PBW oracle:", antipode_trace_pbw(datum))
print("antipode trace, formula:   ", datum.antipode_trace())
