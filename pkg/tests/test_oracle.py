"""Explicit-matrix oracle: module construction, tensors, decomposition, duals."""

import pytest

from greenring import linalg
from greenring.errors import UnsupportedRepresentationError
from greenring.oracle import (
    antipode_trace_pbw,
    check_relations,
    decomposition_report,
    hom_dim,
    module_build,
    module_decompose,
    module_dual,
    module_tensor,
    regular_module,
    simple_matrices,
    structure_probe,
)

from conftest import get_ring


def test_trivial_module():
    d = get_ring("taft3").datum
    m = module_build(d, 1, 1)
    assert m.dim == 1
    assert m.y_mat[0][0].is_zero()
    assert m.gen_mats["g"][0][0] == 1


def test_projective_is_jordan_block():
    d = get_ring("taft3").datum
    m = module_build(d, 1, d.n)
    # y is the nilpotent shift, group acts diagonally by chi^-k
    for k in range(d.n - 1):
        assert m.y_mat[k + 1][k] == 1
    g = m.gen_mats["g"]
    for k in range(d.n):
        assert g[k][k] == d.chi_value(d.group.generators[0][1]) ** (-k)


def test_dimension_formula():
    d = get_ring("dihedral3").datum
    for i in range(1, d.m + 1):
        for j in range(1, d.n + 1):
            assert module_build(d, i, j).dim == j * d.dims[i - 1]


def test_relations_verified_on_build_and_tensor():
    d = get_ring("dihedral3").datum
    a = module_build(d, 5, 2)
    b = module_build(d, 6, 1)
    t = module_tensor(a, b)
    check_relations(t)  # must not raise
    assert t.dim == a.dim * b.dim


def test_tensor_with_trivial():
    d = get_ring("taft4").datum
    a = module_build(d, 1, 3)
    one = module_build(d, 1, 1)
    t = module_tensor(a, one)
    assert linalg.mat_eq(t.y_mat, a.y_mat)
    assert module_decompose(t) == {(1, 3): 1}


def test_decompose_round_trip():
    for name in ("taft3", "dihedral3"):
        d = get_ring(name).datum
        for i in range(1, d.m + 1):
            for j in range(1, d.n + 1):
                assert module_decompose(module_build(d, i, j)) == {(i, j): 1}


def test_taft_tensor_square():
    ring = get_ring("taft3")
    d = ring.datum
    m12 = module_build(d, 1, 2)
    got = module_decompose(module_tensor(m12, m12))
    assert got == {(1, 3): 1, (d.tau[1], 1): 1}


def test_tensor_projective_rule():
    # M(1,2) (x) M(1,n) = M(1,n) + M(tau(1),n)
    for name in ("taft3", "taft4"):
        d = get_ring(name).datum
        got = module_decompose(
            module_tensor(module_build(d, 1, 2), module_build(d, 1, d.n))
        )
        assert got == {(1, d.n): 1, (d.tau[1], d.n): 1}


def test_tensor_symmetry():
    d = get_ring("dihedral3").datum
    a, b = module_build(d, 5, 1), module_build(d, 3, 2)
    assert module_decompose(module_tensor(a, b)) == module_decompose(module_tensor(b, a))


def test_ar_middle_term():
    # M(1,2) (x) M(i,j) = M(i,j+1) + M(tau(i), j-1) for 1 < j < n
    d = get_ring("taft4").datum
    m12 = module_build(d, 1, 2)
    for i in range(1, d.m + 1):
        for j in range(2, d.n):
            got = module_decompose(module_tensor(m12, module_build(d, i, j)))
            assert got == {(i, j + 1): 1, (d.tau[i], j - 1): 1}


def test_hom_dims():
    d = get_ring("taft3").datum
    ring = get_ring("taft3")
    trivial = module_build(d, 1, 1)
    proj = module_build(d, 1, d.n)
    assert hom_dim(trivial, proj) == ring.form_hom(ring.M(1, 1), ring.M(1, d.n))
    # Schur: distinct simples have no homs
    assert hom_dim(module_build(d, 2, 1), module_build(d, 3, 1)) == 0
    assert hom_dim(module_build(d, 2, 1), module_build(d, 2, 1)) == 1


def test_dual_decomposition():
    for name in ("taft3", "dihedral3"):
        d = get_ring(name).datum
        for i in range(1, d.m + 1):
            for j in range(1, d.n + 1):
                mod = module_build(d, i, j)
                dual = module_dual(mod)
                expected = (d.tau_power(d.star[i], 1 - j), j)
                assert module_decompose(dual) == {expected: 1}
                assert module_decompose(module_dual(dual)) == {(i, j): 1}


def test_structure_probe():
    d = get_ring("taft4").datum
    probe = structure_probe(module_build(d, 2, 3))
    socle = [0] * d.m
    socle[d.tau_power(2, 2) - 1] = 1
    top = [0] * d.m
    top[1] = 1
    assert list(probe["socle"]) == socle
    assert list(probe["top"]) == top
    assert probe["radical_series_dims"] == [3, 2, 1, 0]
    # the radical of M(i,j) is M(tau(i), j-1): its series is the tail
    radical_probe = structure_probe(module_build(d, d.tau[2], 2))
    assert radical_probe["radical_series_dims"] == probe["radical_series_dims"][1:]


def test_regular_module():
    for name in ("taft2", "taft3", "dihedral3"):
        d = get_ring(name).datum
        reg = regular_module(d)
        assert reg.dim == d.dim_h
        expected = {(i, d.n): d.dims[i - 1] for i in range(1, d.m + 1)}
        assert module_decompose(reg) == expected


def test_antipode_trace_matches_formula():
    for name in ("taft2", "taft3", "taft4", "gtaft2", "gtaft3", "dihedral3"):
        d = get_ring(name).datum
        assert antipode_trace_pbw(d) == d.antipode_trace()


def test_sweedler_trace_value():
    assert antipode_trace_pbw(get_ring("taft2").datum) == 2


def test_decompose_rejects_non_module():
    # a matrix set violating the layer structure must be flagged loudly
    from greenring.cyclotomic import rational, zeta
    from greenring.errors import InconsistentModuleError
    from greenring.oracle import ModuleRep

    d = get_ring("taft3").datum
    zero, one = rational(0), rational(1)
    # g acts by a non-character scalar pattern on ker(y)/im(y) layers
    gen_mats = {"g": [[zeta(9), zero], [zero, one]]}
    y = [[zero, zero], [one, zero]]
    broken = ModuleRep(d, gen_mats, y)
    with pytest.raises(InconsistentModuleError):
        module_decompose(broken)


def test_decompose_mixed_direct_sum():
    # block-diagonal sum M(1,2) + M(2,1) + M(1,2) built by hand
    from greenring.cyclotomic import rational
    from greenring.oracle import ModuleRep

    d = get_ring("taft3").datum
    parts = [module_build(d, 1, 2), module_build(d, 2, 1), module_build(d, 1, 2)]
    dim = sum(p.dim for p in parts)
    zero = rational(0)

    def block_diag(mats):
        out = [[zero] * dim for _ in range(dim)]
        offset = 0
        for mat in mats:
            for r, row in enumerate(mat):
                for c, v in enumerate(row):
                    out[offset + r][offset + c] = v
            offset += len(mat)
        return out

    gen_mats = {
        name: block_diag([p.gen_mats[name] for p in parts])
        for name, _ in d.group.generators
    }
    y = block_diag([p.y_mat for p in parts])
    total = ModuleRep(d, gen_mats, y)
    assert module_decompose(total) == {(1, 2): 2, (2, 1): 1}


def test_decomposition_report_format():
    d = get_ring("taft3").datum
    t = module_tensor(module_build(d, 1, 2), module_build(d, 1, 2))
    report = decomposition_report(t)
    assert report == {"summands": [[1, 3, 1], [d.tau[1], 1, 1]]}


def test_imported_representation_matrices():
    # a generic-table copy of D_12 can still feed the oracle if the datum file
    # carries explicit matrices for the 2-dimensional irreducible
    from greenring.cyclotomic import rational, zeta
    from greenring.datum import GroupDatum
    from greenring.groups import character_table, dihedral_group, group_from_json

    g = dihedral_group(3)
    source = character_table(g)
    group, table_data = group_from_json(
        {"order": 12, "mult": [list(r) for r in g.mult], "character_table": source.to_json()}
    )
    table = character_table(group, table_data)
    chi = next(
        i for i in range(1, table.m + 1)
        if table.is_linear(i) and table.row(i) == source.row(source.index_by_name("F(1,0)"))
    )
    v1 = next(
        i for i in range(1, table.m + 1)
        if table.row(i) == source.row(source.index_by_name("V(1)"))
    )
    datum = GroupDatum(group, table, chi, g.parse_element("c^3"))
    # V(1): the rotation acts by diag(zeta6, zeta6^-1), the reflection swaps;
    # match matrices to the greedily chosen generators by element order
    zero, one = rational(0), rational(1)
    rotation = [[zeta(6), zero], [zero, zeta(6, 5)]]
    reflection = [[zero, one], [one, zero]]
    datum.imported_reps = {
        v1: [
            rotation if group.element_order(e) == 6 else reflection
            for _, e in group.generators
        ]
    }
    mod = module_build(datum, v1, 2)
    assert mod.dim == 4
    assert module_decompose(mod) == {(v1, 2): 1}


def test_missing_matrix_model():
    from greenring.datum import datum_from_spec
    from greenring.groups import character_table, dihedral_group

    # a generic-table copy of the dihedral group loses the V(l) matrix models
    g = dihedral_group(3)
    source = character_table(g)
    from greenring.groups import generic_group

    generic = generic_group([list(r) for r in g.mult])
    table = character_table(generic, source.to_json())
    from greenring.datum import GroupDatum

    chi = next(
        i for i in range(1, table.m + 1)
        if table.is_linear(i) and table.row(i) == source.row(3)
    )
    datum = GroupDatum(generic, table, chi, g.parse_element("c^3"))
    two_dim = next(i for i in range(1, table.m + 1) if not table.is_linear(i))
    with pytest.raises(UnsupportedRepresentationError):
        simple_matrices(datum, two_dim)
    # linear simples still work without imported matrices
    assert module_build(datum, 1, 2).dim == 2
