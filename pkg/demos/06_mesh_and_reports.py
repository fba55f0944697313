"""
Exporting meshes and tables
===========================

Writes an OBJ of mode 3, a five-dimensional PLY and a CSV/JSON report into
a scratch directory.  The same files come out of the ``annuli`` command.
"""

import sys
import tempfile
from pathlib import Path

from annuli.mesh import tessellate, write_mesh
from annuli.report import write_report
from annuli.surface import AnnulusSurface, noncompactness_report

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="annuli-"))
out.mkdir(parents=True, exist_ok=True)

s = AnnulusSurface.from_mode(3, integrate=False)
mesh = tessellate(s, 32, 192, "hemisphere3d")
write_mesh(mesh, out / "mode3.obj")
print(f"mode3.obj: {mesh.n_vertices} vertices, {mesh.n_faces} faces")

# Positions (x, y, z, cos t, sin t): the annulus as it sits in R^5.
write_mesh(tessellate(s, 16, 96, "full5d"), out / "mode3_5d.ply")

rows = noncompactness_report(12)
write_report(rows, out / "report.csv")
write_report(rows, out / "report.json")
print("wrote", ", ".join(sorted(p.name for p in out.iterdir())), "to", out)

# Equivalent shell commands:
#   annuli mesh --mode 3 --res 32x192 --out mode3.obj
#   annuli report --n-max 12 --out report.csv
