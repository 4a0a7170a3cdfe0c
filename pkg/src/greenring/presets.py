"""Ready-made datum descriptions (JSON-shaped dicts) for the standard families.

These are the inputs the CLI reads from disk; tests and demos build them
in memory via :func:`greenring.datum.datum_from_spec`.
"""

from __future__ import annotations


def taft(n: int) -> dict:
    """Taft datum: G cyclic of order n, chi(g) = zeta_n, g the generator."""
    return {"group": {"family": "cyclic", "order": n}, "chi": 2, "g": "g", "mu": 0}


def sweedler() -> dict:
    """The 4-dimensional Sweedler Hopf algebra (Taft with n = 2)."""
    return taft(2)


def generalized_taft(n: int) -> dict:
    """Generalized Taft datum: G cyclic of order 2n, chi(g) = zeta_n of order n."""
    return {"group": {"family": "cyclic", "order": 2 * n}, "chi": 3, "g": "g", "mu": 0}


def generalized_taft_faithful(n: int) -> dict:
    """Variant with chi faithful of order 2n and g the square of the generator,
    so l = 2n > n; exercises a theta with more than one geometric term."""
    return {"group": {"family": "cyclic", "order": 2 * n}, "chi": 2, "g": "g^2", "mu": 0}


def dihedral(s: int) -> dict:
    """Dihedral datum: relations b^2 = c^(2s) = (cb)^2 = 1 (order 4s, s odd),
    chi the linear character F(1,0), g = c^s the nontrivial central element."""
    return {
        "group": {"family": "dihedral", "s": s},
        "chi": "F(1,0)",
        "g": f"c^{s}",
        "mu": 0,
    }


def acceptance_data() -> list:
    """The fixed datum list the acceptance criteria sweep over."""
    return [
        ("taft2", taft(2)),
        ("taft3", taft(3)),
        ("taft4", taft(4)),
        ("gtaft2", generalized_taft(2)),
        ("gtaft3", generalized_taft(3)),
        ("dihedral3", dihedral(3)),
    ]
