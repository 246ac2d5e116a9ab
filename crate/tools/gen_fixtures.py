"""Regenerate the polyhedron fixture files from coordinates.

Each solid is the convex hull of an explicit point set; coplanar hull
triangles are merged into faces and every face is listed counter-clockwise
as seen from outside. The output is independent of the Rust builders and
serves as a cross-check for them.

    python3 tools/gen_fixtures.py crates/core/fixtures
"""
import itertools
import sys
from pathlib import Path

import numpy as np
from scipy.spatial import ConvexHull
from scipy.spatial.transform import Rotation

PHI = (1 + 5 ** 0.5) / 2


def even_perms(p):
    x, y, z = p
    return [(x, y, z), (y, z, x), (z, x, y)]


def odd_perms(p):
    x, y, z = p
    return [(y, x, z), (x, z, y), (z, y, x)]


def sign_variants(p):
    out = set()
    for s in itertools.product((1, -1), repeat=3):
        out.add(tuple(a * b for a, b in zip(s, p)))
    return sorted(out)


def faces_of(points):
    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    groups = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 6))
        groups.setdefault(key, set()).update(int(i) for i in simplex)
    faces = []
    for key, verts in groups.items():
        normal = np.array(key[:3])
        verts = sorted(verts)
        c = pts[verts].mean(axis=0)
        u = pts[verts[0]] - c
        u /= np.linalg.norm(u)
        w = np.cross(normal, u)
        ang = {v: np.arctan2(np.dot(pts[v] - c, w), np.dot(pts[v] - c, u)) for v in verts}
        cyc = sorted(verts, key=lambda v: ang[v])
        k = cyc.index(min(cyc))
        faces.append(cyc[k:] + cyc[:k])
    faces.sort(key=lambda f: (len(f), f))
    # renumber vertices in order of first appearance
    order = {}
    for f in faces:
        for v in f:
            order.setdefault(v, len(order))
    return [[order[v] for v in f] for f in faces]


def check(faces, nv, sizes):
    deg = [0] * nv
    for f in faces:
        for v in f:
            deg[v] += 1
    got = sorted(len(f) for f in faces)
    assert sorted(sizes) == got, (sizes, got)
    return deg


def tetrahedron():
    return [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]


def cube():
    return list(itertools.product((1, -1), repeat=3))


def octahedron():
    return [p for q in [(1, 0, 0)] for r in even_perms(q) for p in sign_variants(r)]


def icosahedron():
    return [p for r in even_perms((0, 1, PHI)) for p in sign_variants(r)]


def dodecahedron():
    pts = cube()
    pts += [p for r in even_perms((0, 1 / PHI, PHI)) for p in sign_variants(r)]
    return pts


def snub_cube():
    t = np.roots([1, -1, -1, -1]).real.max()
    pts = []
    for p in sign_variants((1, 1 / t, t)):
        plus = sum(1 for a in p if a > 0)
        if plus % 2 == 0:
            pts += even_perms(p)
        else:
            pts += odd_perms(p)
    return pts


def icosahedral_rotations():
    gens = [
        Rotation.from_rotvec(2 * np.pi / 5 * np.array([0, 1, PHI]) / np.linalg.norm([0, 1, PHI])),
        Rotation.from_rotvec(2 * np.pi / 3 * np.array([1, 1, 1]) / np.sqrt(3)),
    ]
    group = [np.eye(3)]
    frontier = [np.eye(3)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                h = g.as_matrix() @ m
                if not any(np.allclose(h, x) for x in group):
                    group.append(h)
                    nxt.append(h)
        frontier = nxt
    assert len(group) == 60
    return group


def snub_dodecahedron():
    group = icosahedral_rotations()
    axis = np.array([0, 1, PHI]) / np.linalg.norm([0, 1, PHI])
    # a point rotated slightly off a five-fold axis; the hull of its orbit
    # under the rotation group has the snub dodecahedron's face structure
    base = axis + np.array([0.11, 0.04, -0.03])
    return [tuple(m @ base) for m in group]


def pseudorhombicuboctahedron():
    s = 1 + 2 ** 0.5
    pts = set()
    for p in [(1, 1, s)]:
        for r in even_perms(p) + odd_perms(p):
            pts.update(sign_variants(r))
    pts = [p for p in pts]
    out = []
    r2 = 2 ** 0.5
    for p in pts:
        if abs(p[2] - s) < 1e-9:
            continue
        out.append(p)
    # top square turned by an eighth of a revolution
    out += [(r2, 0, s), (-r2, 0, s), (0, r2, s), (0, -r2, s)]
    return out


SOLIDS = [
    ("tetrahedron", tetrahedron, [3] * 4),
    ("cube", cube, [4] * 6),
    ("octahedron", octahedron, [3] * 8),
    ("dodecahedron", dodecahedron, [5] * 12),
    ("icosahedron", icosahedron, [3] * 20),
    ("snub_cube", snub_cube, [3] * 32 + [4] * 6),
    ("snub_dodecahedron", snub_dodecahedron, [3] * 80 + [5] * 12),
    ("pseudorhombicuboctahedron", pseudorhombicuboctahedron, [3] * 8 + [4] * 18),
]


def main(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, fn, sizes in SOLIDS:
        pts = sorted(set(tuple(round(c, 12) for c in p) for p in fn()))
        faces = faces_of(pts)
        deg = check(faces, len(pts), sizes)
        flags = 2 * sum(len(f) for f in faces)
        lines = [f"name: {name}", f"expected_flags: {flags}", "faces:"]
        lines += [" ".join(str(v) for v in f) for f in faces]
        (outdir / f"{name}.poly").write_text("\n".join(lines) + "\n")
        print(name, len(pts), "vertices", len(faces), "faces", flags, "flags", "degrees", sorted(set(deg)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/fixtures")
