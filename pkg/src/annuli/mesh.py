"""Triangle meshes of an annulus and ASCII OBJ / PLY writers.

The true surface lives in S^2 x S^1, a 3-manifold sitting in R^5.  Three
projections are offered:

* ``graph3d``: the height graph ``(theta, t, r)``;
* ``hemisphere3d``: the hemisphere point ``(x, y, z)``, with t kept only as a
  vertex attribute.  Sheets at different t overlap, so this view
  self-intersects by design;
* ``full5d``: ``(x, y, z, cos t, sin t)``, PLY only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ambient import chart_to_euclidean
from .errors import ArtifactIOError, InvalidArgumentError, UnsupportedCombinationError
from .surface import AnnulusSurface, principal_curvatures

__all__ = ["TriangleMesh", "PROJECTIONS", "tessellate", "write_mesh", "read_obj_counts"]

PROJECTIONS = ("graph3d", "hemisphere3d", "full5d")
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TriangleMesh:
    positions: np.ndarray          # (N, 3) or (N, 5)
    faces: np.ndarray              # (F, 3) vertex indices
    boundary_loops: tuple          # (theta = 0 loop, theta = pi loop)
    r: np.ndarray
    theta: np.ndarray
    t: np.ndarray
    kappa1: np.ndarray
    projection: str

    @property
    def n_vertices(self) -> int:
        return int(self.positions.shape[0])

    @property
    def n_faces(self) -> int:
        return int(self.faces.shape[0])


def tessellate(s: AnnulusSurface, n_theta: int, n_t: int,
               projection: str = "hemisphere3d") -> TriangleMesh:
    """Grid the parameter domain ``[0, pi] x S^1`` with ``n_theta`` by ``n_t`` cells.

    The t = 2 pi row is identified with t = 0, which leaves ``(n_theta + 1) n_t``
    vertices and ``2 n_theta n_t`` triangles.
    """
    if projection not in PROJECTIONS:
        raise InvalidArgumentError(f"unknown projection {projection!r}; choose from {PROJECTIONS}")
    if int(n_theta) != n_theta or int(n_t) != n_t or n_theta < 2 or n_t < 3:
        raise InvalidArgumentError(f"need n_theta >= 2 and n_t >= 3, got {n_theta} x {n_t}")
    n_theta, n_t = int(n_theta), int(n_t)

    theta_1d = np.linspace(0.0, math.pi, n_theta + 1)
    t_1d = np.linspace(0.0, TWO_PI, n_t, endpoint=False)
    r_1d, rp_1d, rpp_1d = s.evaluate(t_1d)
    k1_1d, _ = principal_curvatures(r_1d, rp_1d, rpp_1d)

    # vertex (i, j) -> j * (n_theta + 1) + i, theta index i, t index j
    theta = np.tile(theta_1d, n_t)
    t = np.repeat(t_1d, n_theta + 1)
    r = np.repeat(r_1d, n_theta + 1)
    kappa1 = np.repeat(k1_1d, n_theta + 1)

    if projection == "graph3d":
        positions = np.column_stack([theta, t, r])
    else:
        full = chart_to_euclidean(np.column_stack([r, theta, t]))
        positions = full if projection == "full5d" else full[:, :3]

    stride = n_theta + 1
    i = np.arange(n_theta)
    faces = []
    for j in range(n_t):
        row, nxt = j * stride, ((j + 1) % n_t) * stride
        a, b, c, d = row + i, row + i + 1, nxt + i + 1, nxt + i
        faces.append(np.column_stack([a, b, c]))
        faces.append(np.column_stack([a, c, d]))
    faces = np.concatenate(faces).astype(np.int64)

    loops = (np.arange(n_t) * stride, np.arange(n_t) * stride + n_theta)
    return TriangleMesh(positions, faces, loops, r, theta, t, kappa1, projection)


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _obj_lines(mesh: TriangleMesh):
    yield f"# annulus mesh, projection={mesh.projection}"
    if mesh.projection == "hemisphere3d":
        yield "# note: 3D hemisphere projection self-intersects across t"
    for p in mesh.positions:
        yield "v " + " ".join(_fmt(x) for x in p)
    for tt, th in zip(mesh.t, mesh.theta):
        yield f"vt {_fmt(tt / TWO_PI)} {_fmt(th / math.pi)}"
    for f in mesh.faces + 1:
        yield "f " + " ".join(f"{k}/{k}" for k in f)


def _ply_lines(mesh: TriangleMesh):
    coords = ["x", "y", "z"] + (["w1", "w2"] if mesh.positions.shape[1] == 5 else [])
    yield "ply"
    yield "format ascii 1.0"
    yield f"comment annulus mesh, projection={mesh.projection}"
    if mesh.projection == "hemisphere3d":
        yield "comment 3D hemisphere projection self-intersects across t"
    yield f"element vertex {mesh.n_vertices}"
    for name in coords + ["r", "kappa1"]:
        yield f"property double {name}"
    yield f"element face {mesh.n_faces}"
    yield "property list uchar int vertex_indices"
    yield "end_header"
    for p, r, k in zip(mesh.positions, mesh.r, mesh.kappa1):
        yield " ".join(_fmt(x) for x in (*p, r, k))
    for f in mesh.faces:
        yield "3 " + " ".join(str(int(k)) for k in f)


def write_mesh(mesh: TriangleMesh, path, format: str | None = None) -> None:
    """Write ``mesh`` as ASCII OBJ or PLY; output is byte-for-byte deterministic."""
    path = Path(path)
    fmt = (format or path.suffix.lstrip(".")).lower()
    if fmt not in ("obj", "ply"):
        raise InvalidArgumentError(f"mesh format must be obj or ply, got {fmt!r}")
    if fmt == "obj" and mesh.positions.shape[1] != 3:
        raise UnsupportedCombinationError("OBJ holds 3D positions only; use ply for full5d")
    lines = _obj_lines(mesh) if fmt == "obj" else _ply_lines(mesh)
    text = "\n".join(lines) + "\n"
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ArtifactIOError(f"cannot write mesh to {path}: {exc}") from exc


def read_obj_counts(path) -> tuple[int, int]:
    """``(vertices, faces)`` in an OBJ file; a minimal reader for round-trip checks."""
    n_v = n_f = 0
    with open(path, encoding="ascii") as fh:
        for line in fh:
            if line.startswith("v "):
                n_v += 1
            elif line.startswith("f "):
                n_f += 1
    return n_v, n_f
