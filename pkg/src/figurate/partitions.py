"""Visibility partitions of a pointed triangulation and the vector calculus.

From a generic interior point x, every maximal simplex F contributes one
interval of the face poset: [G_F, F] where G_F collects the vertices opposite
the facets of F visible from x, and the intervals partition the whole
complex. The interior variant uses D_F, the vertices opposite the facets NOT
visible from x, and partitions exactly the interior simplices. Histograms of
|G_F| and |D_F| give the h- and k-vectors, cross-checkable against the
binomial transform of the f-vector.

Visibility is implemented as an exact side test (x strictly opposite the
vertex across the facet's hyperplane), which is equivalent to ray casting for
simplices and never leaves rational arithmetic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from math import comb

from .geometry import (
    Point,
    affine_hull_contains,
    hyperplane_through,
    side_of_hyperplane,
)
from .triangulation import (
    Complex,
    ComplexSplit,
    GenericityError,
    PointedTriangulation,
    Simplex,
    split_boundary_interior,
)

EXTERIOR = "exterior"
INTERIOR = "interior"


@dataclass(frozen=True)
class GenericPoint:
    """An interior point avoiding every lower-dimensional affine hull.

    ``certificate`` lists the simplices whose affine hulls were checked (and
    passed) exactly, so the genericity of the point is auditable.
    """

    x: Point
    certificate: tuple[Simplex, ...]
    seed: int


@dataclass(frozen=True)
class Interval:
    """The set of simplices G with lower <= G <= upper."""

    lower: Simplex
    upper: Simplex
    kind: str

    def size(self) -> int:
        return 2 ** (len(self.upper) - len(self.lower))

    def members(self):
        extra = sorted(self.upper - self.lower)
        for k in range(len(extra) + 1):
            for pick in combinations(extra, k):
                yield self.lower | frozenset(pick)


@dataclass(frozen=True)
class Partition:
    intervals: tuple[Interval, ...]
    kind: str
    point: Point
    verified: bool = False


@dataclass(frozen=True)
class PartitionCertificate:
    ok: bool
    uncovered: tuple[Simplex, ...] = ()
    multiply_covered: tuple[Simplex, ...] = ()
    foreign: tuple[Simplex, ...] = ()


@dataclass(frozen=True)
class VectorSet:
    """f/h/k/e vectors of one pointed triangulation, mutually consistent.

    Index conventions: f[0] is the empty-face count f_{-1}; h and k run over
    0..d+1; e runs over 0..d.
    """

    dim: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    k: tuple[int, ...]
    e: tuple[int, ...]


def generic_point(
    tri: PointedTriangulation, seed: int = 0, avoid: tuple[Point, ...] = ()
) -> GenericPoint:
    """Deterministic search for a generic interior point.

    Starts from the barycenter of the first maximal simplex and, while any
    exact affine-hull membership check fails (or the candidate collides with
    a point in ``avoid``), retries with seeded random barycentric weights of
    growing size. Candidates always stay strictly inside one maximal simplex,
    hence inside the polytope.
    """
    if tri.dim < 1:
        raise ValueError("generic points require a polytope of dimension >= 1")
    verts = tri.lattice.polytope.vertices
    targets = sorted(
        (s for s in tri.simplices if s and len(s) <= tri.dim),
        key=lambda s: (len(s), tuple(sorted(s))),
    )
    target_points = [[verts[i] for i in sorted(s)] for s in targets]
    home = sorted(tri.maximal[0])
    corners = [verts[i] for i in home]
    rng = random.Random(seed)
    bound = 8
    weights = [1] * len(corners)
    for _ in range(64):
        total = Fraction(sum(weights))
        x = tuple(
            sum((w * p[j] for w, p in zip(weights, corners)), Fraction(0)) / total
            for j in range(len(corners[0]))
        )
        if x not in avoid and not any(
            affine_hull_contains(pts, x) for pts in target_points
        ):
            return GenericPoint(x, tuple(targets), seed)
        weights = [rng.randint(1, bound) for _ in corners]
        bound *= 2
    raise RuntimeError("could not find a generic point")


def visible_facets(tri: PointedTriangulation, f: Simplex, x: Point) -> set[Simplex]:
    """Facets of a maximal simplex visible from x (exact side test).

    A facet is visible iff x and the opposite vertex lie strictly on opposite
    sides of the facet's hyperplane; when x is inside the simplex no facet is
    visible. x on a facet hyperplane violates genericity and raises.
    """
    verts = tri.lattice.polytope.vertices
    out: set[Simplex] = set()
    for v in sorted(f):
        g = f - {v}
        h = hyperplane_through([verts[i] for i in sorted(g)])
        sx = side_of_hyperplane(h, x)
        if sx == 0:
            raise GenericityError(f"point lies on the affine hull of facet {sorted(g)}")
        if sx * side_of_hyperplane(h, verts[v]) < 0:
            out.add(g)
    return out


def _partition(tri: PointedTriangulation, x, kind: str, target: set[Simplex]) -> Partition:
    pt = x.x if isinstance(x, GenericPoint) else x
    intervals = []
    for f in tri.maximal:
        visible = visible_facets(tri, f, pt)
        if kind == EXTERIOR:
            lower = frozenset(v for v in f if (f - {v}) in visible)
        else:
            lower = frozenset(v for v in f if (f - {v}) not in visible)
        intervals.append(Interval(lower, f, kind))
    part = Partition(tuple(intervals), kind, pt)
    cert = verify_partition(part, target)
    if not cert.ok:
        raise RuntimeError(f"{kind} intervals failed to partition their target: {cert}")
    return replace(part, verified=True)


def exterior_partition(tri: PointedTriangulation, x) -> Partition:
    """One interval [G_F, F] per maximal simplex, partitioning the whole complex."""
    return _partition(tri, x, EXTERIOR, set(tri.simplices))


def interior_partition(
    tri: PointedTriangulation, x, split: ComplexSplit | None = None
) -> Partition:
    """One interval [D_F, F] per maximal simplex, partitioning the interior complex."""
    if split is None:
        split = split_boundary_interior(tri)
    return _partition(tri, x, INTERIOR, set(split.interior))


def verify_partition(partition: Partition, target: set[Simplex]) -> PartitionCertificate:
    """Element-by-element check: target covered exactly once, nothing foreign."""
    counts: dict[Simplex, int] = {}
    foreign = []
    for iv in partition.intervals:
        for member in iv.members():
            if member in target:
                counts[member] = counts.get(member, 0) + 1
            else:
                foreign.append(member)
    uncovered = [s for s in target if s not in counts]
    multiple = [s for s, c in counts.items() if c > 1]
    ok = not (uncovered or multiple or foreign)
    key = lambda s: (len(s), tuple(sorted(s)))
    return PartitionCertificate(
        ok,
        tuple(sorted(uncovered, key=key)),
        tuple(sorted(multiple, key=key)),
        tuple(sorted(foreign, key=key)),
    )


# ---------------------------------------------------------------------------
# Face-count vectors.

def f_vector(complex_: Complex | set[Simplex], dim: int) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_dim); f_{-1} is 1 exactly when the empty simplex is present."""
    counts = [0] * (dim + 2)
    for s in complex_:
        counts[len(s)] += 1
    return tuple(counts)


def e_vector(interior: Complex | set[Simplex], dim: int) -> tuple[int, ...]:
    """(e_0, ..., e_dim) for an interior complex, which never holds the empty simplex."""
    if frozenset() in interior:
        raise ValueError("an interior complex cannot contain the empty simplex")
    counts = [0] * (dim + 1)
    for s in interior:
        counts[len(s) - 1] += 1
    return tuple(counts)


def h_from_f(f: tuple[int, ...], dim: int) -> tuple[int, ...]:
    """Binomial transform of the f-vector; h_k for k in 0..dim+1.

    h_k = sum_{i=0..k} (-1)^(k-i) C(dim+1-i, k-i) f_{i-1}, the convention
    inverse to f_i = sum_j h_j C(dim+1-j, i+1-j).
    """
    return tuple(
        sum((-1) ** (k - i) * comb(dim + 1 - i, k - i) * f[i] for i in range(k + 1))
        for k in range(dim + 2)
    )


def f_from_h(h: tuple[int, ...], dim: int) -> tuple[int, ...]:
    """Inverse of h_from_f; round-tripping is the identity."""
    return tuple(
        sum(h[j] * comb(dim + 1 - j, ii - j) for j in range(ii + 1))
        for ii in range(dim + 2)
    )


def _histogram(partition: Partition) -> tuple[int, ...]:
    if not partition.verified:
        raise ValueError("partition has not been verified")
    dim = len(partition.intervals[0].upper) - 1
    hist = [0] * (dim + 2)
    for iv in partition.intervals:
        hist[len(iv.lower)] += 1
    return tuple(hist)


def h_from_partition(partition: Partition) -> tuple[int, ...]:
    """h_i = number of intervals with |G_F| = i (exterior partitions only)."""
    if partition.kind != EXTERIOR:
        raise ValueError("h-vector histogram requires an exterior partition")
    return _histogram(partition)


def k_from_partition(partition: Partition) -> tuple[int, ...]:
    """k_i = number of intervals with |D_F| = i (interior partitions only)."""
    if partition.kind != INTERIOR:
        raise ValueError("k-vector histogram requires an interior partition")
    return _histogram(partition)


def euler_characteristic(f: tuple[int, ...]) -> int:
    """Alternating sum of the face counts over dimensions 0 and up."""
    return sum((-1) ** j * fj for j, fj in enumerate(f[1:]))


def interior_counts_from_k(k: tuple[int, ...], dim: int) -> tuple[int, ...]:
    """e_i = sum_{j<=i+1} k_j C(dim+1-j, i+1-j): interval sizes sorted by dimension."""
    return tuple(
        sum(k[j] * comb(dim + 1 - j, i + 1 - j) for j in range(i + 2))
        for i in range(dim + 1)
    )


def compute_vectors(
    tri: PointedTriangulation,
    point_seed: int = 0,
    split: ComplexSplit | None = None,
) -> VectorSet:
    """All four vectors of a triangulation, with every dual route cross-checked.

    The h-vector is computed both from the f-vector transform and as the
    exterior partition histogram; the k-vector both as the interior partition
    histogram and by reversing h; the e-vector both by counting and from k.
    Any disagreement raises, since each equality is a proved identity.
    """
    d = tri.dim
    if split is None:
        split = split_boundary_interior(tri)
    f = f_vector(tri.simplices, d)
    h = h_from_f(f, d)
    e = e_vector(split.interior, d)
    if d >= 1:
        gp = generic_point(tri, seed=point_seed)
        h_part = h_from_partition(exterior_partition(tri, gp))
        k = k_from_partition(interior_partition(tri, gp, split))
    else:
        h_part = h
        k = tuple(reversed(h))
    if h_part != h:
        raise RuntimeError(f"partition h-vector {h_part} != transform h-vector {h}")
    if k != tuple(reversed(h)):
        raise RuntimeError(f"k-vector {k} is not the reversal of h-vector {h}")
    if e != interior_counts_from_k(k, d):
        raise RuntimeError(f"e-vector {e} disagrees with its k-vector expansion")
    return VectorSet(d, f, h, k, e)


def partition_to_json(partition: Partition) -> dict:
    from .geometry import rational_str

    data = {
        "point": [rational_str(c) for c in partition.point],
        "intervals": [
            {"lower": sorted(iv.lower), "upper": sorted(iv.upper)}
            for iv in sorted(partition.intervals, key=lambda iv: tuple(sorted(iv.upper)))
        ],
    }
    if partition.kind == EXTERIOR:
        data["h"] = list(h_from_partition(partition))
    else:
        data["k"] = list(k_from_partition(partition))
    return data
