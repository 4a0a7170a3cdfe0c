# The stable Green ring and its group-like / bi-Frobenius structure.
#
# Quotienting by the projective classes leaves the basis M[i,j] with j < n.
# The augmentation sends z to 2cos(pi/n), represented exactly as
# zeta_2n + zeta_2n^-1; rescaling the basis by its augmentation values gives
# a group-like algebra, which carries a bi-Frobenius quadruple (phi, Delta,
# t, S).

from greenring import GreenRing, datum_from_spec
from greenring.presets import taft
from greenring.stable import StableRing, inverse_dickson

ring = GreenRing(datum_from_spec(taft(4)))
st = StableRing(ring)
n = ring.n

print("stable basis:", st.basis)
print("2cos(pi/n) =", st.cos, f" (n = {n})")
for j in range(1, n + 1):
    print(f"  F_{j}(1, 2cos(pi/n)) =", st.f_at_cos(j))
print("(the last value vanishing is exactly the stable relation)")
print()

print("projectives die:", st.reduce(ring.M(1, n)))
x = st.M(1, 2) * st.M(1, 3)
print("M[1,2] * M[1,3] in the quotient =", x)
print()

print("augmentation values eps(M[i,j]):")
for u in st.basis:
    print(f"  eps(M{list(u)}) = {st.eps_basis(*u)}")
print()

report = st.grouplike_check()
print("group-like axioms:", {k: v["pass"] for k, v in report.items()})
print("involution on the index set:", {u: st.star_index(*u) for u in st.basis})
print()

print("bi-Frobenius checks:")
print("  dual pair:   ", st.dual_pair_check())
print("  counit axiom:", st.counit_check())
print("  antipode:    ", st.antipode_checks())
print("  t = sum of b_(i,j) =", st.integral_t())
print()

# the monomial picture: [V_i] z^j expands over the M-basis by the inverse
# Dickson coefficients, and phi/Delta/S have closed forms there
print("inverse Dickson coefficients for z^4:", inverse_dickson(4))
print("[V_1] z^2 over the stable basis:", st.monomial_to_stable(1, 2))
print("phi([V_1] z^0) =", st.monomial_phi(1, 0))
print("phi([V_i] z^2) nonzero only at i = tau^-1(1):",
      {i: st.monomial_phi(i, 2) for i in range(1, ring.m + 1)})
print("monomial formulas agree with the b-basis definitions:", st.monomial_agreement())
