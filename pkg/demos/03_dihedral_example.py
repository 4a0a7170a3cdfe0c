# A pointed rank-one Hopf algebra over a dihedral group.
#
# For odd s, the group <b, c | b^2 = c^(2s) = (cb)^2 = 1> has order 4s, four
# linear characters F(i,j) and s-1 two-dimensional simples V(l).  Taking
# chi = F(1,0) and g = c^s (the unique nontrivial central element) gives a
# datum with n = 2: every indecomposable is a simple or its projective cover.

from greenring import GreenRing, datum_from_spec, dihedral_group, character_table
from greenring.presets import dihedral

s = 3
group = dihedral_group(s)
table = character_table(group)
print(f"dihedral s={s}: order {group.order}, {len(group.conjugacy_classes())} classes")
print("irreducibles:", table.names, "dims:", table.dims)
print()

# fusion rules of the group characters
idx = {name: k + 1 for k, name in enumerate(table.names)}
pairs = [("V(1)", "V(1)"), ("F(1,0)", "V(1)"), ("F(0,1)", "V(2)"), ("F(1,1)", "F(1,0)")]
for left, right in pairs:
    mults = table.product_decompose(idx[left], idx[right])
    terms = " + ".join(
        (f"{m}*" if m > 1 else "") + table.names[k] for k, m in enumerate(mults) if m
    )
    print(f"  {left} (x) {right} = {terms}")
print()

datum = datum_from_spec(dihedral(s))
ring = GreenRing(datum)
print("datum:", datum)
print("tau swaps:", {table.names[i - 1]: table.names[datum.tau[i] - 1] for i in range(1, datum.m + 1)})
print()

# n = 2, so M[1,2] generates over the character ring with one relation
print("M[1,2]^2 =", ring.pretty(ring.M(1, 2) * ring.M(1, 2)))
print("relation (1 + a - z) F_2(a,z) = (1 + a - z) z evaluates to:",
      ring.phi_eval(ring.presentation_relation()))
print()

# the f-polynomials of the Grothendieck-ring presentation:
# f_0 = 1 + x2, f_1 = x3, f_i = x3 f_(i-1) - f_(i-2); the last relation is
# f_((s+1)/2) - x1 f_((s-1)/2) = 0 with x1, x2, x3 the three generators
def unit(i):
    v = [0] * ring.m
    v[i - 1] = 1
    return tuple(v)

def sub(u, v):
    return tuple(x - y for x, y in zip(u, v))

def add(u, v):
    return tuple(x + y for x, y in zip(u, v))

x1, x2, x3 = unit(idx["F(1,0)"]), unit(idx["F(0,1)"]), unit(idx["V(1)"])
fs = [add(unit(1), x2), x3]
for _ in range(2, (s + 1) // 2 + 1):
    fs.append(sub(ring.g0_product(x3, fs[-1]), fs[-2]))
relation = sub(fs[(s + 1) // 2], ring.g0_product(x1, fs[(s - 1) // 2]))
print("f_((s+1)/2) - x1 f_((s-1)/2) in G_0:", relation)
