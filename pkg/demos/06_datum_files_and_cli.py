# Datum files and the command-line front end.
#
# Every computation is also reachable through the `greenring` CLI, which
# reads a datum JSON file and writes one deterministic JSON report.  This
# demo writes a few datum files and drives the CLI in-process.

import json
import pathlib
import tempfile

from greenring.cli import main
from greenring.presets import dihedral, taft

workdir = pathlib.Path(tempfile.mkdtemp(prefix="greenring-demo-"))

taft3 = workdir / "taft3.json"
taft3.write_text(json.dumps(taft(3), indent=2))
taft3_twisted = workdir / "taft3_chi_squared.json"
spec = taft(3)
spec["chi"] = 3
taft3_twisted.write_text(json.dumps(spec, indent=2))
dihedral3 = workdir / "dihedral3.json"
dihedral3.write_text(json.dumps(dihedral(3), indent=2))

print("datum file:", taft3)
print(taft3.read_text())

print("=== describe (with the gauge comparison against the twisted datum) ===")
main(["describe", "--datum", str(taft3), "--compare", str(taft3_twisted)])

print("=== tensor M[1,2] (x) M[1,2], pretty ===")
main(["tensor", "--datum", str(taft3), "--left", "1,2", "--right", "1,2", "--pretty"])

print("=== radical report ===")
main(["radical", "--datum", str(dihedral3)])

print("=== verify the fast suites ===")
code = main(["verify", "--datum", str(taft3), "--suite", "presentation,dual-bases"])
print("exit code:", code)
