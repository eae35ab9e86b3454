"""Pointed triangulations built from a generic linear functional.

Each nonempty face F of the polytope gets an apex: the vertex minimizing the
functional over F. Simplices are the convex hulls of apex sets along strictly
decreasing chains of faces G_1 > G_2 > ... with the apex of each G_i outside
G_{i+1}; the triangulation of a face is the union over chains inside that
face, closed by the empty simplex. Chains are enumerated bottom-up over the
lattice with one memoized simplex set per face, and duplicate simplices from
different chains are merged by vertex set.

Complexes throughout the package are plain sets of ``frozenset[int]`` vertex
index sets, with ``frozenset()`` standing for the empty simplex.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .geometry import LinearFunctional, evaluate_functional
from .lattice import FaceLattice

Simplex = frozenset[int]
Complex = frozenset[Simplex]


class GenericityError(ValueError):
    """A functional or point assumed generic turned out not to be."""


@dataclass(frozen=True)
class ApexAssignment:
    """Apex vertex per nonempty face id, induced by a generic functional."""

    functional: LinearFunctional
    apex: dict[int, int]


@dataclass(frozen=True)
class PointedTriangulation:
    lattice: FaceLattice
    apexes: ApexAssignment
    simplices: Complex
    per_face: dict[int, Complex]
    maximal: tuple[Simplex, ...]

    @property
    def dim(self) -> int:
        return self.lattice.dim

    @property
    def apex_vertex(self) -> int:
        """Apex of the polytope itself (the global functional's argmin)."""
        return self.apexes.apex[self.lattice.top.id]

    def vertex_points(self, s: Simplex):
        verts = self.lattice.polytope.vertices
        return [verts[i] for i in sorted(s)]


@dataclass(frozen=True)
class ComplexSplit:
    boundary: Complex
    interior: Complex


@dataclass(frozen=True)
class PointedCertificate:
    ok: bool
    condition: int | None = None
    detail: str = ""


def generic_functional(lattice_or_polytope, seed: int = 0) -> LinearFunctional:
    """A functional taking pairwise distinct values on the polytope's vertices.

    Tries the weight vector (1, M, M^2, ...) with M = 1 + the largest
    per-coordinate spread, which provably separates points with integer
    coordinates; if verification fails (possible for fractional coordinates),
    falls back to seeded random integer coefficients over a growing range.
    """
    p = getattr(lattice_or_polytope, "polytope", lattice_or_polytope)
    verts = p.vertices
    amb = p.ambient_dim
    spread = Fraction(0)
    for j in range(amb):
        col = [v[j] for v in verts]
        spread = max(spread, max(col) - min(col))
    m = spread + 1
    candidate = tuple(m**j for j in range(amb))
    if _separates(candidate, verts):
        return candidate
    rng = random.Random(seed)
    bound = 16
    for _ in range(64):
        candidate = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(amb))
        if _separates(candidate, verts):
            return candidate
        bound *= 2
    raise RuntimeError("could not find a separating functional")


def _separates(c: LinearFunctional, verts) -> bool:
    values = [evaluate_functional(c, v) for v in verts]
    return len(set(values)) == len(values)


def assign_apexes(lattice: FaceLattice, c: LinearFunctional) -> ApexAssignment:
    """Apex of every nonempty face: the strict argmin of the functional."""
    verts = lattice.polytope.vertices
    value = {i: evaluate_functional(c, v) for i, v in enumerate(verts)}
    apex: dict[int, int] = {}
    for f in lattice.faces[1:]:
        best = min(f.vertices, key=lambda i: (value[i], i))
        if sum(1 for i in f.vertices if value[i] == value[best]) > 1:
            raise GenericityError(
                f"functional is not generic: duplicate minimum on face {sorted(f.vertices)}"
            )
        apex[f.id] = best
    return ApexAssignment(c, apex)


def build_pointed_triangulation(
    lattice: FaceLattice, apexes: ApexAssignment, verify: bool = True
) -> PointedTriangulation:
    """Construct the pointed triangulation determined by an apex assignment.

    With ``verify`` (the debug profile, and the default) the three pointedness
    conditions are checked after construction and a violation raises.
    """
    chain: dict[int, set[Simplex]] = {}
    for f in lattice.faces[1:]:
        v = apexes.apex[f.id]
        grown: set[Simplex] = {frozenset({v})}
        for gid in lattice.subface_ids(f.id):
            if v in lattice.faces[gid].vertices:
                continue
            for s in chain[gid]:
                grown.add(s | {v})
        chain[f.id] = grown
    per_face: dict[int, Complex] = {}
    for f in lattice.faces[1:]:
        acc: set[Simplex] = {frozenset()}
        acc |= chain[f.id]
        for gid in lattice.subface_ids(f.id):
            acc |= chain[gid]
        per_face[f.id] = frozenset(acc)
    top = per_face[lattice.top.id]
    maximal = tuple(sorted(maximal_simplices(top), key=_simplex_key))
    tri = PointedTriangulation(lattice, apexes, top, per_face, maximal)
    if verify:
        cert = verify_pointed(tri)
        if not cert.ok:
            raise GenericityError(f"construction violated pointedness condition {cert.condition}: {cert.detail}")
    return tri


def _simplex_key(s: Simplex):
    return (len(s), tuple(sorted(s)))


def maximal_simplices(complex_: Complex | set[Simplex]) -> list[Simplex]:
    """Simplices with no proper superset in the complex (the empty simplex never counts)."""
    members = set(complex_)
    pool = set().union(*members) if members else set()
    return [
        s for s in members
        if s and not any((s | {v}) in members for v in pool - s)
    ]


def is_simplicial_complex(complex_: Complex | set[Simplex], exhaustive: bool = False) -> bool:
    """Closure under subsets, and (optionally) all pairwise intersections present."""
    members = set(complex_)
    if not members:
        return True
    if frozenset() not in members:
        return False
    for s in members:
        for v in s:
            if (s - {v}) not in members:
                return False
    if exhaustive:
        for s, t in combinations(members, 2):
            if (s & t) not in members:
                return False
    return True


def is_pure(complex_: Complex | set[Simplex], dim: int) -> bool:
    return all(len(s) == dim + 1 for s in maximal_simplices(complex_))


def verify_pointed(tri: PointedTriangulation) -> PointedCertificate:
    """Check the three pointedness conditions; reports the first violation.

    1. Every maximal simplex of each face's triangulation contains that
       face's apex.
    2. If the apexes of two faces both lie in the intersection of those
       faces, they coincide.
    3. For each face F, every edge from the apex of F to another vertex of F
       belongs to F's triangulation.
    """
    lattice = tri.lattice
    apex = tri.apexes.apex
    for f in lattice.faces[1:]:
        cf = tri.per_face[f.id]
        v = apex[f.id]
        for s in maximal_simplices(cf):
            if v not in s:
                return PointedCertificate(
                    False, 1, f"maximal simplex {sorted(s)} of face {sorted(f.vertices)} misses apex {v}"
                )
    nonempty = lattice.faces[1:]
    for f1, f2 in combinations(nonempty, 2):
        shared = f1.vertices & f2.vertices
        v1, v2 = apex[f1.id], apex[f2.id]
        if v1 in shared and v2 in shared and v1 != v2:
            return PointedCertificate(
                False, 2, f"faces {sorted(f1.vertices)} and {sorted(f2.vertices)} share both apexes {v1}, {v2}"
            )
    for f in lattice.faces[1:]:
        cf = tri.per_face[f.id]
        v = apex[f.id]
        for w in f.vertices - {v}:
            if frozenset({v, w}) not in cf:
                return PointedCertificate(
                    False, 3, f"edge [{v}, {w}] missing from triangulation of face {sorted(f.vertices)}"
                )
    return PointedCertificate(True)


def split_boundary_interior(tri: PointedTriangulation) -> ComplexSplit:
    """Partition the triangulation into boundary and interior simplices.

    A simplex is boundary iff its vertex set lies inside some proper face of
    the polytope; testing against facets suffices since every proper face is
    contained in one.
    """
    lattice = tri.lattice
    if lattice.dim >= 1:
        targets = [lattice.faces[i].vertices for i in lattice.facet_ids()]
    else:
        targets = [frozenset()]
    boundary = frozenset(s for s in tri.simplices if any(s <= t for t in targets))
    interior = frozenset(tri.simplices - boundary)
    return ComplexSplit(boundary, interior)


def star(v: int, complex_: Complex | set[Simplex]) -> set[Simplex]:
    """All faces containing v, and their faces."""
    members = set(complex_)
    if frozenset({v}) not in members:
        raise ValueError(f"vertex {v} is not in the complex")
    return {s for s in members if (s | {v}) in members}


def link(v: int, complex_: Complex | set[Simplex]) -> set[Simplex]:
    """Faces of the star of v that do not contain v."""
    return {s for s in star(v, complex_) if v not in s}


def boundary_ridge_counts(tri: PointedTriangulation) -> dict[Simplex, int]:
    """How many maximal simplices contain each (d-1)-simplex of the complex."""
    counts: dict[Simplex, int] = {}
    for s in tri.maximal:
        for v in s:
            r = s - {v}
            counts[r] = counts.get(r, 0) + 1
    return counts


def pseudomanifold_certificate(tri: PointedTriangulation, split: ComplexSplit) -> tuple[bool, str]:
    """Boundary ridges must lie in exactly 1 maximal simplex, interior ones in 2."""
    d = tri.dim
    if d == 0:
        return True, ""
    counts = boundary_ridge_counts(tri)
    ridges = {s for s in tri.simplices if len(s) == d}
    if set(counts) != ridges:
        missing = sorted(sorted(s) for s in ridges.symmetric_difference(counts))
        return False, f"ridge set mismatch: {missing[:3]}"
    for r, c in counts.items():
        expected = 1 if r in split.boundary else 2
        if c != expected:
            return False, f"ridge {sorted(r)} lies in {c} maximal simplices, expected {expected}"
    return True, ""


def triangulation_to_json(tri: PointedTriangulation, split: ComplexSplit | None = None) -> dict:
    if split is None:
        split = split_boundary_interior(tri)
    def listed(c):
        return [sorted(s) for s in sorted(c, key=_simplex_key) if s]
    return {
        "apexes": {str(fid): v for fid, v in sorted(tri.apexes.apex.items())},
        "simplices": listed(tri.simplices),
        "boundary": listed(split.boundary),
        "interior": listed(split.interior),
    }
