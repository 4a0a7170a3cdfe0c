"""Stable Green ring: the quotient, epsilon, group-like axioms, bi-Frobenius."""

from fractions import Fraction

from greenring.cyclotomic import Cyclotomic, two_cos_pi_over
from greenring.radical import radical_generator
from greenring.stable import StableRing, inverse_dickson, inverse_dickson_identity

from conftest import ACCEPTANCE, get_ring

_stables = {}


def get_stable(name: str) -> StableRing:
    if name not in _stables:
        _stables[name] = StableRing(get_ring(name))
    return _stables[name]


def test_projectives_die():
    st = get_stable("taft3")
    ring = st.green
    assert not st.reduce(ring.M(1, ring.n))
    assert not st.reduce(radical_generator(ring))


def test_reduce_rejects_foreign_elements():
    import pytest

    from greenring.errors import DomainError

    st = get_stable("taft3")
    with pytest.raises(DomainError):
        st.reduce(get_ring("taft2").one)


def test_reduction_is_ring_map():
    for name in ("taft3", "dihedral3", "gtaft2"):
        st = get_stable(name)
        ring = st.green
        for x in ring.basis:
            for y in ring.basis:
                assert st.reduce(ring.M(*x) * ring.M(*y)) == st.reduce(
                    ring.M(*x)
                ) * st.reduce(ring.M(*y))


def test_quotient_multiplication_example():
    # M[1,2] * M[1,n-1] evaluated in the quotient two ways
    st = get_stable("taft4")
    ring = st.green
    lhs = st.M(1, 2) * st.M(1, ring.n - 1)
    rhs = st.reduce(ring.M(1, 2) * ring.M(1, ring.n - 1))
    assert lhs == rhs


def test_epsilon_values():
    st = get_stable("taft3")
    assert st.epsilon(st.one) == 1
    # eps(z) = 2cos(pi/n) and eps(M[1,2]) = F_2(1, 2cos(pi/n)) = 2cos(pi/n)
    assert st.eps_basis(1, 2) == two_cos_pi_over(3)
    # the relator image vanishes: F_n(1, 2cos(pi/n)) = 0, exactly in Q(zeta_2n)
    for name in ACCEPTANCE:
        st2 = get_stable(name)
        assert st2.f_at_cos(st2.green.n).is_zero()
        for j in range(1, st2.green.n):
            assert not st2.f_at_cos(j).is_zero()


def test_epsilon_is_algebra_map():
    for name in ("taft3", "dihedral3"):
        st = get_stable(name)
        for u in st.basis:
            for v in st.basis:
                assert st.epsilon(st.M(*u) * st.M(*v)) == st.eps_basis(*u) * st.eps_basis(*v)


def test_epsilon_positivity_float_check():
    for name in ACCEPTANCE:
        assert get_stable(name).epsilon_positivity_float_check()


def test_b_basis_unit():
    for name in ACCEPTANCE:
        st = get_stable(name)
        assert st.b(1, 1) == st.one


def test_grouplike_axioms():
    for name in ACCEPTANCE:
        report = get_stable(name).grouplike_check()
        assert report["G1"]["pass"], (name, report["G1"])
        assert report["G2"]["pass"], (name, report["G2"])
        assert report["G3"]["pass"], (name, report["G3"])


def test_g3_unit_coefficient_instance():
    # with k != l the product b_(i,k) b_(j,l) has no b_(1,1) term
    st = get_stable("taft4")
    zero = Cyclotomic.rational(0)
    for u in st.basis:
        for v in st.basis:
            if u[1] != v[1]:
                assert st.structure_constants(u, v).get((1, 1), zero).is_zero()


def test_bifrobenius_checks():
    for name in ACCEPTANCE:
        st = get_stable(name)
        assert st.dual_pair_check(), name
        assert st.counit_check(), name
        anti = st.antipode_checks()
        assert anti["S_squared"] and anti["anti_algebra"] and anti["anti_coalgebra"], name


def test_phi_on_b_basis():
    st = get_stable("taft4")
    for u in st.basis:
        expected = 1 if u == (1, 1) else 0
        assert st.phi(st.b(*u)) == expected


def test_integral_t():
    st = get_stable("taft3")
    t = st.integral_t()
    for u in st.basis:
        assert t.coefficient(*u) == st.eps_basis(*u)


def test_inverse_dickson_small():
    assert inverse_dickson(0) == [Fraction(1)]
    assert inverse_dickson(2) == [Fraction(1), Fraction(1)]
    assert inverse_dickson(6) == [Fraction(1), Fraction(5), Fraction(9), Fraction(5)]


def test_inverse_dickson_identity_range():
    for s in range(0, 11):
        assert inverse_dickson_identity(s)


def test_monomial_phi_values():
    st = get_stable("taft3")
    # phi([V_1] z^0) = 1; phi([V_i] z^1) = 0 for all i (odd power)
    assert st.monomial_phi(1, 0) == 1
    for i in range(1, st.green.m + 1):
        if st.green.n >= 3:
            assert st.monomial_phi(i, 1).is_zero()


def test_monomial_agreement():
    for name in ACCEPTANCE:
        assert get_stable(name).monomial_agreement(), name


def test_monomial_change_of_basis_is_invertible_description():
    # z^2 = F_3 + y F_1 translates to [V_i]z^2 = M[i,3] + M[tau(i),1]
    st = get_stable("taft4")
    d = st.datum
    x = st.monomial_to_stable(2, 2)
    assert x == st.M(2, 3) + st.M(d.tau[2], 1)


def test_report_shape():
    report = get_stable("taft2").report()
    assert set(report) == {"grouplike", "bifrobenius", "epsilon_values"}
    assert set(report["bifrobenius"]) == {"phi", "delta", "t", "S"}
