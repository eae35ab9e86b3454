"""Convex polytopes, exact facet enumeration, and face lattices.

A polytope is stored as a tuple of rational vertex points together with its
full face lattice: every face (including the empty face, with dimension -1,
and the polytope itself) identified by its vertex index set. Faces of a
polytope are vertex-determined, so the lattice is closed under intersection
of vertex sets by construction.

The builtin families (simplex, cube, cross, pyramid, prism, bipyramid) build
their lattices combinatorially; coordinate inputs go through brute-force
supporting-hyperplane enumeration, which is exact and adequate at the scales
this package targets (dimension <= 5, a few dozen vertices).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .geometry import (
    GeometryError,
    Hyperplane,
    Point,
    affine_rank,
    barycenter,
    hyperplane_through,
    matrix_rank,
    point,
    rational_str,
    side_of_hyperplane,
    solve_linear,
    vsub,
)

@dataclass(frozen=True)
class Polytope:
    """A convex polytope given by its (extremal, pairwise distinct) vertices.

    Vertices are stored in coordinates for the polytope's own affine hull, so
    ``dim`` always equals the ambient dimension of the stored points.
    """

    name: str
    vertices: tuple[Point, ...]
    dim: int

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0


@dataclass(frozen=True)
class Face:
    id: int
    vertices: frozenset[int]
    dim: int


class FaceLattice:
    """All faces of a polytope, ordered by inclusion of vertex sets.

    Faces are sorted by (dimension, vertex tuple) and identified by their
    position in that order, so face ids are deterministic. Id 0 is always the
    empty face and the last id is the polytope itself.
    """

    def __init__(self, polytope: Polytope, face_sets: set[frozenset[int]]):
        self.polytope = polytope
        full = frozenset(range(len(polytope.vertices)))
        sets = set(face_sets)
        sets.add(full)
        sets.discard(frozenset())
        verts = polytope.vertices
        dims = {s: affine_rank([verts[i] for i in sorted(s)]) for s in sets}
        ordered = sorted(sets, key=lambda s: (dims[s], tuple(sorted(s))))
        faces = [Face(0, frozenset(), -1)]
        faces += [Face(i + 1, s, dims[s]) for i, s in enumerate(ordered)]
        self.faces: tuple[Face, ...] = tuple(faces)
        self.dim = polytope.dim
        self._id_by_vertices = {f.vertices: f.id for f in self.faces}
        by_dim: dict[int, list[int]] = {}
        for f in self.faces:
            by_dim.setdefault(f.dim, []).append(f.id)
        self.by_dim = {d: tuple(ids) for d, ids in by_dim.items()}
        self._subfaces = tuple(
            tuple(g.id for g in self.faces if g.vertices < f.vertices) for f in self.faces
        )

    @property
    def empty(self) -> Face:
        return self.faces[0]

    @property
    def top(self) -> Face:
        return self.faces[-1]

    def face_id(self, vertices: frozenset[int]) -> int:
        return self._id_by_vertices[frozenset(vertices)]

    def is_face(self, vertices: frozenset[int]) -> bool:
        return frozenset(vertices) in self._id_by_vertices

    def subface_ids(self, fid: int, include_empty: bool = False) -> tuple[int, ...]:
        """Ids of the proper subfaces of face ``fid`` (excluding ``fid`` itself)."""
        ids = self._subfaces[fid]
        return ids if include_empty else ids[1:]

    def faces_of_dim(self, d: int) -> tuple[Face, ...]:
        return tuple(self.faces[i] for i in self.by_dim.get(d, ()))

    def facet_ids(self) -> tuple[int, ...]:
        return self.by_dim.get(self.dim - 1, ())

    def proper_face_vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(f.vertices for f in self.faces[:-1])

    def face_counts(self) -> dict[int, int]:
        return {d: len(ids) for d, ids in self.by_dim.items()}

    def __len__(self) -> int:
        return len(self.faces)


# ---------------------------------------------------------------------------
# Construction from coordinates.

def _hull_coordinates(pts: list[Point]) -> tuple[list[Point], int]:
    """Re-coordinatize points inside their affine hull (exact affine bijection)."""
    p0 = pts[0]
    diffs = [vsub(p, p0) for p in pts]
    rank = matrix_rank(diffs)
    ambient = len(p0)
    if rank == ambient:
        return pts, rank
    basis: list[tuple[Fraction, ...]] = []
    for dvec in diffs:
        if len(basis) == rank:
            break
        if matrix_rank(basis + [dvec]) > len(basis):
            basis.append(dvec)
    if not basis:
        return [() for _ in pts], 0
    cols = [[b[j] for b in basis] for j in range(ambient)]
    new_pts = []
    for p in pts:
        sol = solve_linear(cols, list(vsub(p, p0)))
        assert sol is not None
        new_pts.append(tuple(sol[0]))
    return new_pts, rank


def enumerate_facets(p: Polytope) -> list[tuple[Hyperplane, frozenset[int]]]:
    """Exact supporting hyperplanes of a full-dimensional polytope.

    Every hyperplane spanned by ``dim`` affinely independent vertices is kept
    iff all vertices lie weakly on one side of it and its incident vertex set
    has affine rank dim - 1. Results are deduplicated by the canonical
    hyperplane form and returned in a deterministic order.
    """
    verts = p.vertices
    d = p.dim
    if d != p.ambient_dim:
        raise GeometryError("facet enumeration requires hull coordinates")
    if d == 0:
        return []
    if len(verts) < d + 1:
        raise GeometryError(f"a {d}-polytope needs at least {d + 1} vertices, got {len(verts)}")
    seen: dict[Hyperplane, frozenset[int] | None] = {}
    for combo in combinations(range(len(verts)), d):
        pts = [verts[i] for i in combo]
        try:
            h = hyperplane_through(pts)
        except GeometryError:
            continue
        if h in seen:
            continue
        sides = [side_of_hyperplane(h, v) for v in verts]
        keep = all(s >= 0 for s in sides) or all(s <= 0 for s in sides)
        incident = frozenset(i for i, s in enumerate(sides) if s == 0)
        if keep and affine_rank([verts[i] for i in sorted(incident)]) == d - 1:
            seen[h] = incident
        else:
            seen[h] = None
    found = [(h, vs) for h, vs in seen.items() if vs is not None]
    found.sort(key=lambda hv: (tuple(sorted(hv[1])), hv[0].normal, hv[0].offset))
    return found


def _close_under_intersection(sets: set[frozenset[int]]) -> set[frozenset[int]]:
    closed = set(sets)
    queue = list(closed)
    while queue:
        s = queue.pop()
        for t in list(closed):
            u = s & t
            if u and u not in closed:
                closed.add(u)
                queue.append(u)
    return closed


def build_face_lattice(
    p: Polytope, face_sets: list[frozenset[int]] | None = None
) -> FaceLattice:
    """Face lattice of a polytope, from supplied faces or by hull search.

    When ``face_sets``` is given (maximal faces per dimension, or the full
    list), hyperplane enumeration is skipped and the lattice is the
    intersection closure of the given sets plus the polytope and the empty
    face. Otherwise facets are enumerated and every vertex is checked to be
    extremal (its active facet normals must span the full dimension).
    """
    if face_sets is None:
        facets = enumerate_facets(p)
        d = p.dim
        if d > 0:
            for i in range(len(p.vertices)):
                active = [list(h.normal) for h, vs in facets if i in vs]
                if matrix_rank(active) != d:
                    raise GeometryError(f"vertex {i} of {p.name!r} is not extremal")
        sets = {vs for _, vs in facets}
    else:
        sets = {frozenset(s) for s in face_sets}
    return FaceLattice(p, _close_under_intersection(sets))


def polytope_from_vertices(name, coords, face_sets=None) -> FaceLattice:
    """Build a polytope (projected into its affine hull) and its lattice."""
    pts = [point(c) for c in coords]
    if not pts:
        raise GeometryError("a polytope needs at least one vertex")
    if len({len(c) for c in pts}) != 1:
        raise GeometryError("vertices have mixed ambient dimensions")
    if len(set(pts)) != len(pts):
        raise GeometryError("vertices must be pairwise distinct")
    hull_pts, dim = _hull_coordinates(pts)
    if len(set(hull_pts)) != len(hull_pts):
        raise GeometryError("vertices must be pairwise distinct")
    p = Polytope(name, tuple(hull_pts), dim)
    faces = None if face_sets is None else [frozenset(s) for s in face_sets]
    return build_face_lattice(p, faces)


# ---------------------------------------------------------------------------
# Builtin families (combinatorial lattices, no hull search).

def _simplex(d: int) -> FaceLattice:
    zero = tuple(Fraction(0) for _ in range(d))
    verts = [zero] + [
        tuple(Fraction(1 if j == i else 0) for j in range(d)) for i in range(d)
    ]
    sets = set()
    for k in range(1, d + 2):
        for c in combinations(range(d + 1), k):
            sets.add(frozenset(c))
    return FaceLattice(Polytope(f"simplex:{d}", tuple(verts), d), sets)


def _cube(d: int) -> FaceLattice:
    verts = [tuple(Fraction(b) for b in bits) for bits in product((0, 1), repeat=d)]
    index = {v: i for i, v in enumerate(verts)}
    sets = set()
    for pattern in product((0, 1, None), repeat=d):
        members = frozenset(
            index[v] for v in verts
            if all(p is None or v[j] == p for j, p in enumerate(pattern))
        )
        sets.add(members)
    return FaceLattice(Polytope(f"cube:{d}", tuple(verts), d), sets)


def _cross(d: int) -> FaceLattice:
    verts = []
    for i in range(d):
        for sign in (1, -1):
            verts.append(tuple(Fraction(sign if j == i else 0) for j in range(d)))
    sets = {frozenset(range(2 * d))}
    for k in range(1, d + 1):
        for axes in combinations(range(d), k):
            for signs in product((0, 1), repeat=k):
                sets.add(frozenset(2 * a + s for a, s in zip(axes, signs)))
    return FaceLattice(Polytope(f"cross:{d}", tuple(verts), d), sets)


def _lift(v: Point, last) -> Point:
    return tuple(v) + (Fraction(last),)


def _pyramid(base: FaceLattice) -> FaceLattice:
    bp = base.polytope
    apex_idx = len(bp.vertices)
    verts = [_lift(v, 0) for v in bp.vertices]
    verts.append(_lift(barycenter(bp.vertices), 1))
    sets = set()
    for f in base.faces:
        if f.vertices:
            sets.add(f.vertices)
        sets.add(f.vertices | {apex_idx})
    p = Polytope(f"pyramid:{bp.name}", tuple(verts), bp.dim + 1)
    return FaceLattice(p, sets)


def _prism(base: FaceLattice) -> FaceLattice:
    bp = base.polytope
    nb = len(bp.vertices)
    verts = [_lift(v, 0) for v in bp.vertices] + [_lift(v, 1) for v in bp.vertices]
    sets = set()
    for f in base.faces:
        if not f.vertices:
            continue
        top = frozenset(i + nb for i in f.vertices)
        sets.add(f.vertices)
        sets.add(top)
        sets.add(f.vertices | top)
    p = Polytope(f"prism:{bp.name}", tuple(verts), bp.dim + 1)
    return FaceLattice(p, sets)


def _bipyramid(base: FaceLattice) -> FaceLattice:
    bp = base.polytope
    nb = len(bp.vertices)
    verts = [_lift(v, 0) for v in bp.vertices]
    bary = barycenter(bp.vertices)
    verts.append(_lift(bary, 1))
    verts.append(_lift(bary, -1))
    sets = {frozenset(range(nb + 2))}
    for f in base.faces[:-1]:  # proper faces of the base only
        if f.vertices:
            sets.add(f.vertices)
        sets.add(f.vertices | {nb})
        sets.add(f.vertices | {nb + 1})
    p = Polytope(f"bipyramid:{bp.name}", tuple(verts), bp.dim + 1)
    return FaceLattice(p, sets)


# dimension caps keep lattice construction (quadratic in face count) snappy
_BASIC_FAMILIES = {"simplex": (_simplex, 0, 10), "cube": (_cube, 0, 7), "cross": (_cross, 1, 7)}
_COMPOUND_FAMILIES = {"pyramid": _pyramid, "prism": _prism, "bipyramid": _bipyramid}
_BASE_ALIASES = {"square": "cube:2", "triangle": "simplex:2", "segment": "simplex:1"}


def builtin(family: str, dim: int | None = None, base: FaceLattice | None = None) -> FaceLattice:
    """Construct a builtin polytope family member with its combinatorial lattice."""
    if family in _BASIC_FAMILIES:
        ctor, min_dim, max_dim = _BASIC_FAMILIES[family]
        if dim is None or dim < min_dim or dim > max_dim:
            raise ValueError(f"{family} requires a dimension in [{min_dim}, {max_dim}]")
        return ctor(dim)
    if family in _COMPOUND_FAMILIES:
        if base is None:
            raise ValueError(f"{family} requires a base polytope")
        if base.polytope.dim != base.polytope.ambient_dim:
            raise ValueError(f"{family} base must be full-dimensional in its coordinates")
        return _COMPOUND_FAMILIES[family](base)
    raise ValueError(f"unknown builtin family {family!r}")


def parse_builtin(spec: str) -> FaceLattice:
    """Parse a builtin spec like "cube:3", "pyramid:square" or "bipyramid:cross:3"."""
    spec = _BASE_ALIASES.get(spec, spec)
    family, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"builtin spec {spec!r} must look like family:dim or family:base")
    if family in _BASIC_FAMILIES:
        try:
            d = int(rest)
        except ValueError:
            raise ValueError(f"invalid dimension {rest!r} in builtin spec {spec!r}") from None
        return builtin(family, d)
    if family in _COMPOUND_FAMILIES:
        return builtin(family, base=parse_builtin(rest))
    raise ValueError(f"unknown builtin family {family!r}")


# ---------------------------------------------------------------------------
# JSON interchange.

def polytope_to_json(lattice: FaceLattice) -> dict:
    p = lattice.polytope
    return {
        "name": p.name,
        "vertices": [[rational_str(c) for c in v] for v in p.vertices],
        "faces": [sorted(f.vertices) for f in lattice.faces if f.vertices],
    }


def polytope_from_json(data: dict) -> FaceLattice:
    if "vertices" not in data:
        raise ValueError("polytope JSON needs a 'vertices' field")
    name = data.get("name", "polytope")
    faces = data.get("faces")
    face_sets = None if faces is None else [frozenset(f) for f in faces]
    return polytope_from_vertices(name, data["vertices"], face_sets)
