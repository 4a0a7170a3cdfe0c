"""Exact Green rings of pointed rank-one Hopf algebras of nilpotent type.

Build a datum (a finite group G, a linear character chi, a central element g,
mu = 0), then work in the Green ring of the associated Hopf algebra with
exact integer/cyclotomic arithmetic, verify every symbolic rule against the
explicit-matrix module oracle, compute the Jacobson radical, and study the
stable Green ring with its group-like and bi-Frobenius structure.
"""

from .cyclotomic import Cyclotomic, order_of_root, rational, two_cos_pi_over, zeta
from .datum import GroupDatum, datum_from_spec, gauge_comparison, load_datum
from .green import ARData, DicksonPoly, GreenElement, GreenRing, dickson, dickson_closed_form
from .groups import (
    CharacterTable,
    Group,
    abelian_group,
    character_table,
    cyclic_group,
    dihedral_group,
    generic_group,
    group_build,
)
from .radical import OmegaCounts, ideal_rank, omega_counts, radical_generator, radical_report, theta
from .stable import StableElement, StableRing, inverse_dickson
from .oracle import (
    ModuleRep,
    antipode_trace_pbw,
    hom_dim,
    module_build,
    module_decompose,
    module_dual,
    module_tensor,
    regular_module,
    structure_probe,
)

__all__ = [
    "Cyclotomic",
    "zeta",
    "rational",
    "order_of_root",
    "two_cos_pi_over",
    "Group",
    "CharacterTable",
    "cyclic_group",
    "abelian_group",
    "dihedral_group",
    "generic_group",
    "group_build",
    "character_table",
    "GroupDatum",
    "datum_from_spec",
    "gauge_comparison",
    "load_datum",
    "GreenRing",
    "GreenElement",
    "DicksonPoly",
    "dickson",
    "dickson_closed_form",
    "ARData",
    "OmegaCounts",
    "omega_counts",
    "theta",
    "radical_generator",
    "ideal_rank",
    "radical_report",
    "StableRing",
    "StableElement",
    "inverse_dickson",
    "ModuleRep",
    "module_build",
    "module_tensor",
    "module_decompose",
    "module_dual",
    "hom_dim",
    "structure_probe",
    "regular_module",
    "antipode_trace_pbw",
]

__version__ = "0.1.0"
