"""Ground-truth module computations with explicit exact matrices.

Builds every indecomposable M(i,j) as concrete matrices for the group
generators and for the nilpotent generator y (group acts on the k-th layer
through chi^-k, y shifts layers), tensors modules through the
comultiplication y -> y (x) g + 1 (x) y, and decomposes any module back into
indecomposables by a filtration argument: the layers im(y^(p-1))/im(y^p) are
group modules whose exact characters pin the multiplicities.  This module
never consults the Clebsch-Gordan rules, so its decompositions are an
independent check of them.
"""

from __future__ import annotations

from . import linalg
from .cyclotomic import Cyclotomic
from .datum import GroupDatum
from .errors import (
    DomainError,
    InconsistentModuleError,
    NotACharacterError,
    UnsupportedRepresentationError,
)

_ZERO = Cyclotomic.rational(0)
_ONE = Cyclotomic.rational(1)


def _zeros(rows, cols):
    return [[_ZERO for _ in range(cols)] for _ in range(rows)]


def _identity(n):
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


class ModuleRep:
    """An H-module as exact matrices: one per group generator, plus y."""

    def __init__(self, datum: GroupDatum, gen_mats: dict, y_mat, label=None):
        self.datum = datum
        self.gen_mats = gen_mats
        self.y_mat = y_mat
        self.dim = len(y_mat)
        self.label = label
        self._elem_cache = {0: _identity(self.dim)}

    def group_matrix(self, e: int):
        """Matrix of the group element e, from its generator word."""
        cached = self._elem_cache.get(e)
        if cached is not None:
            return cached
        word = self.datum.group.generator_words()[e]
        mat = _identity(self.dim)
        for pos in word:
            name = self.datum.group.generators[pos][0]
            mat = linalg.mat_mul(mat, self.gen_mats[name])
        self._elem_cache[e] = mat
        return mat

    def class_traces(self):
        """Character of the module: traces at the class representatives."""
        reps = self.datum.table.classes.reps
        return tuple(linalg.mat_trace(self.group_matrix(r)) for r in reps)

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"ModuleRep(dim={self.dim}{tag})"


def check_relations(module: ModuleRep) -> None:
    """Verify y^n = 0, y h = chi(h) h y and the generator orders, exactly."""
    datum = module.datum
    y = module.y_mat
    power = _identity(module.dim)
    for _ in range(datum.n):
        power = linalg.mat_mul(power, y)
    if not linalg.is_zero_matrix(power):
        raise InconsistentModuleError("y^n != 0")
    for name, e in datum.group.generators:
        h = module.gen_mats[name]
        lhs = linalg.mat_mul(y, h)
        rhs = linalg.mat_scale(linalg.mat_mul(h, y), datum.chi_value(e))
        if not linalg.mat_eq(lhs, rhs):
            raise InconsistentModuleError(f"y*{name} != chi({name}) {name}*y")
        order = datum.group.element_order(e)
        acc = _identity(module.dim)
        for _ in range(order):
            acc = linalg.mat_mul(acc, h)
        if not linalg.mat_eq(acc, _identity(module.dim)):
            raise InconsistentModuleError(f"generator {name} violates its order")


def simple_matrices(datum: GroupDatum, i: int) -> dict:
    """Explicit generator matrices for the simple module V_i.

    Linear characters always have a model; the 2-dimensional dihedral
    irreducibles use the defining diagonal/swap matrices; generic groups may
    supply imported matrices.  Anything else raises.
    """
    table = datum.table
    if table.is_linear(i):
        return {
            name: [[table.value_at_element(i, e)]] for name, e in datum.group.generators
        }
    imported = getattr(datum, "imported_reps", {})
    if i in imported:
        return {
            name: imported[i][pos]
            for pos, (name, _) in enumerate(datum.group.generators)
        }
    name = table.names[i - 1]
    if datum.group.family == "dihedral" and name.startswith("V("):
        s = datum.group.order // 4
        l = int(name[2:-1])
        theta = Cyclotomic.zeta(2 * s).embed(datum.conductor)
        return {
            "c": [[theta**l, _ZERO], [_ZERO, theta ** (-l)]],
            "b": [[_ZERO, _ONE], [_ONE, _ZERO]],
        }
    raise UnsupportedRepresentationError(
        f"no matrix model for the simple module {name}"
    )


def module_build(datum: GroupDatum, i: int, j: int) -> ModuleRep:
    """The uniserial module M(i,j) = V_i + x V_i + ... + x^(j-1) V_i.

    Layer k is a copy of V_i twisted by chi^-k; y shifts layer k to k+1 and
    kills the top layer.
    """
    if not (1 <= i <= datum.m and 1 <= j <= datum.n):
        raise DomainError(f"module index {(i, j)} out of range")
    base = simple_matrices(datum, i)
    d = datum.dims[i - 1]
    dim = j * d
    gen_mats = {}
    for name, e in datum.group.generators:
        chi_e = datum.chi_value(e)
        mat = _zeros(dim, dim)
        for k in range(j):
            scale = chi_e ** (-k)
            block = base[name]
            for r in range(d):
                for c in range(d):
                    v = block[r][c]
                    if not v.is_zero():
                        mat[k * d + r][k * d + c] = v * scale
        gen_mats[name] = mat
    y = _zeros(dim, dim)
    for k in range(j - 1):
        for r in range(d):
            y[(k + 1) * d + r][k * d + r] = _ONE
    module = ModuleRep(datum, gen_mats, y, label=f"M({i},{j})")
    check_relations(module)
    return module


def module_tensor(a: ModuleRep, b: ModuleRep) -> ModuleRep:
    """Tensor product along Delta(h) = h (x) h, Delta(y) = y (x) g + 1 (x) y."""
    if a.datum is not b.datum:
        raise DomainError("modules belong to different data")
    datum = a.datum
    gen_mats = {
        name: linalg.kronecker(a.gen_mats[name], b.gen_mats[name])
        for name, _ in datum.group.generators
    }
    g_on_b = b.group_matrix(datum.g)
    y = linalg.mat_add(
        linalg.kronecker(a.y_mat, g_on_b),
        linalg.kronecker(_identity(a.dim), b.y_mat),
    )
    label = f"{a.label}(x){b.label}" if a.label and b.label else None
    module = ModuleRep(datum, gen_mats, y, label=label)
    check_relations(module)
    return module


def _image_filtration(module: ModuleRep):
    """Bases of im(y^p) for p = 0, 1, ... until the image vanishes."""
    spaces = [_identity(module.dim)]
    power = _identity(module.dim)
    for _ in range(module.datum.n):
        power = linalg.mat_mul(power, module.y_mat)
        basis = linalg.column_space_basis(power)
        spaces.append(basis)
        if not basis:
            break
    return spaces


def _subspace_traces(module: ModuleRep, basis):
    """Traces of the class representatives restricted to an invariant subspace."""
    reps = module.datum.table.classes.reps
    if not basis:
        return tuple(_ZERO for _ in reps)
    if len(basis) == module.dim:
        return module.class_traces()
    columns = linalg.ColumnSolver(basis)
    traces = []
    for r in reps:
        restricted = columns.restrict(module.group_matrix(r))
        if restricted is None:
            raise InconsistentModuleError("image of y^p is not group-stable")
        traces.append(linalg.mat_trace(restricted))
    return tuple(traces)


def module_decompose(module: ModuleRep) -> dict:
    """Multiset of (i, j) with module = + M(i,j)^mult, computed exactly.

    The layer im(y^(p-1))/im(y^p) is a group module; if c_p is its character
    multiplicity vector then mult(i,j) = c_j(tau^(j-1) i) - c_(j+1)(tau^j i).
    """
    datum = module.datum
    n = datum.n
    spaces = _image_filtration(module)
    while len(spaces) < n + 1:
        spaces.append([])
    traces = [_subspace_traces(module, basis) for basis in spaces]
    layer_mults = []
    for p in range(1, n + 1):
        diff = tuple(traces[p - 1][c] - traces[p][c] for c in range(len(traces[0])))
        try:
            layer_mults.append(datum.table.decompose(diff))
        except NotACharacterError as exc:
            raise InconsistentModuleError(f"layer {p} is not a group module: {exc}")
    out = {}
    total = 0
    for i in range(1, datum.m + 1):
        for j in range(1, n + 1):
            c_j = layer_mults[j - 1][datum.tau_power(i, j - 1) - 1]
            c_next = layer_mults[j][datum.tau_power(i, j) - 1] if j < n else 0
            mult = c_j - c_next
            if mult < 0:
                raise InconsistentModuleError(f"negative multiplicity at {(i, j)}")
            if mult:
                out[(i, j)] = mult
                total += mult * j * datum.dims[i - 1]
    if total != module.dim:
        raise InconsistentModuleError("dimensions do not reconcile")
    return out


def hom_dim(a: ModuleRep, b: ModuleRep) -> int:
    """dim Hom_H(a, b): the solution space of X rho_a(x) = rho_b(x) X for all
    generators x (group generators and y)."""
    if a.datum is not b.datum:
        raise DomainError("modules belong to different data")
    constraints = [(a.gen_mats[name], b.gen_mats[name]) for name, _ in a.datum.group.generators]
    constraints.append((a.y_mat, b.y_mat))
    da, db = a.dim, b.dim
    rows = []
    for p, q in constraints:
        for r in range(db):
            for c in range(da):
                row = [_ZERO] * (da * db)
                for k in range(da):
                    row[r * da + k] = row[r * da + k] + p[k][c]
                for k in range(db):
                    row[k * da + c] = row[k * da + c] - q[r][k]
                rows.append(row)
    return len(linalg.nullspace(rows))


def module_dual(a: ModuleRep) -> ModuleRep:
    """Dual module along the antipode: h acts by rho(h^-1)^T, y by
    -(rho(y) rho(g^-1))^T."""
    datum = a.datum
    group = datum.group
    gen_mats = {
        name: linalg.transpose(a.group_matrix(group.inv(e)))
        for name, e in group.generators
    }
    g_inv = a.group_matrix(group.inv(datum.g))
    y = linalg.mat_scale(linalg.transpose(linalg.mat_mul(a.y_mat, g_inv)), -1)
    label = f"({a.label})*" if a.label else None
    module = ModuleRep(datum, gen_mats, y, label=label)
    check_relations(module)
    return module


def structure_probe(module: ModuleRep) -> dict:
    """Socle and top characters (as multiplicity vectors) plus the radical
    series dimensions [dim im(y^0), dim im(y^1), ...]."""
    datum = module.datum
    kernel = linalg.nullspace(module.y_mat)
    socle_traces = _subspace_traces(module, kernel)
    spaces = _image_filtration(module)
    image_traces = _subspace_traces(module, spaces[1]) if len(spaces) > 1 else None
    full = module.class_traces()
    if image_traces is None:
        top_traces = full
    else:
        top_traces = tuple(full[c] - image_traces[c] for c in range(len(full)))
    return {
        "socle": datum.table.decompose(socle_traces),
        "top": datum.table.decompose(top_traces),
        "radical_series_dims": [len(basis) for basis in spaces],
    }


def regular_module(datum: GroupDatum) -> ModuleRep:
    """H as a module over itself, on the basis y^k h (k < n, h in G)."""
    order = datum.group.order
    n = datum.n
    dim = n * order

    def idx(k, h):
        return k * order + h

    gen_mats = {}
    for name, t in datum.group.generators:
        mat = _zeros(dim, dim)
        chi_t = datum.chi_value(t)
        for k in range(n):
            scale = chi_t ** (-k)
            for h in range(order):
                mat[idx(k, datum.group.mul(t, h))][idx(k, h)] = scale * _ONE
        gen_mats[name] = mat
    y = _zeros(dim, dim)
    for k in range(n - 1):
        for h in range(order):
            y[idx(k + 1, h)][idx(k, h)] = _ONE
    module = ModuleRep(datum, gen_mats, y, label="H")
    check_relations(module)
    return module


def decomposition_report(module: ModuleRep) -> dict:
    """JSON-ready decomposition: {"summands": [[i, j, mult], ...]}."""
    return {
        "summands": [
            [i, j, mult] for (i, j), mult in sorted(module_decompose(module).items())
        ]
    }


# ---------------------------------------------------------------------------
# Symbolic PBW arithmetic, used to take the trace of the antipode honestly.


def _pbw_multiply(datum: GroupDatum, x: dict, y: dict) -> dict:
    """Product in H on the PBW basis.

    Straightening by h y^j = chi(h)^-j y^j h gives
    (y^i h)(y^j h') = chi(h)^-j y^(i+j) hh', truncated at y^n = 0.
    """
    out = {}
    for (i, h), cx in x.items():
        for (j, hp), cy in y.items():
            if i + j >= datum.n:
                continue
            key = (i + j, datum.group.mul(h, hp))
            v = cx * cy * datum.chi_value(h) ** (-j)
            out[key] = out[key] + v if key in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


def antipode_trace_pbw(datum: GroupDatum) -> Cyclotomic:
    """Trace of the antipode on the PBW basis, computed by expanding
    S(y^k h) = S(h) S(y)^k with exact symbolic multiplication."""
    group = datum.group
    minus_y_ginv = {(1, group.inv(datum.g)): Cyclotomic.rational(-1)}
    total = Cyclotomic.rational(0)
    s_y_power = {(0, 0): _ONE}  # S(y)^0 = 1
    for k in range(datum.n):
        for h in range(group.order):
            s_h = {(0, group.inv(h)): _ONE}
            image = _pbw_multiply(datum, s_h, s_y_power)
            total = total + image.get((k, h), _ZERO)
        s_y_power = _pbw_multiply(datum, s_y_power, minus_y_ginv)
    return total
