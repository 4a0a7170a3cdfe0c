import pytest

from greenring import GreenRing
from greenring import presets
from greenring.datum import datum_from_spec

SPECS = {
    "taft2": presets.taft(2),
    "taft3": presets.taft(3),
    "taft4": presets.taft(4),
    "gtaft2": presets.generalized_taft(2),
    "gtaft3": presets.generalized_taft(3),
    "dihedral3": presets.dihedral(3),
    "dihedral5": presets.dihedral(5),
    "gtaft_faithful2": presets.generalized_taft_faithful(2),
    "gtaft_faithful3": presets.generalized_taft_faithful(3),
}

ACCEPTANCE = ["taft2", "taft3", "taft4", "gtaft2", "gtaft3", "dihedral3"]

_cache = {}


def get_ring(name: str) -> GreenRing:
    if name not in _cache:
        _cache[name] = GreenRing(datum_from_spec(SPECS[name]))
    return _cache[name]


@pytest.fixture(scope="session")
def ring_of():
    return get_ring
