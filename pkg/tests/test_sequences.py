"""Closed forms, the recursion, its reformulations, and the identity checkers."""
from itertools import permutations, product
from math import comb, factorial

import pytest

from figurate.lattice import parse_builtin
from figurate.sequences import (
    alpha_difference_check,
    cross_number,
    eulerian_number,
    facet_cut_check,
    interior_from_h_reversed,
    interior_from_k,
    measure_number,
    polytope_number_from_h,
    polytope_number_recursive,
    polytope_number_simplex_sum,
    sequence_from_h,
    simplex_interior,
    simplex_number,
    vandermonde_check,
)
from figurate.triangulation import assign_apexes, build_pointed_triangulation, generic_functional

from conftest import make_bundle


def test_simplex_number_examples():
    assert simplex_number(2, 3) == 6
    assert all(simplex_number(d, 1) == 1 for d in range(9))
    assert simplex_number(3, 4) == 20
    assert simplex_number(4, 0) == 0
    assert simplex_number(4, -7) == 0  # zero-extended, never resurrects
    with pytest.raises(ValueError):
        simplex_number(-1, 3)


def test_simplex_interior_examples():
    assert simplex_interior(3, 4) == simplex_number(3, 0) == 0
    assert simplex_interior(1, 4) == 2
    assert all(simplex_interior(0, n) == 1 for n in range(1, 10))
    assert simplex_interior(0, 0) == 0


def _descents(perm):
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


def test_eulerian_numbers_against_brute_force():
    assert all(eulerian_number(d, 0) == 1 for d in range(1, 8))
    assert eulerian_number(3, 1) == 4
    for d in range(1, 7):
        brute = [0] * d
        for perm in permutations(range(d)):
            brute[_descents(perm)] += 1
        assert [eulerian_number(d, i) for i in range(d)] == brute
        assert sum(brute) == factorial(d)
    assert eulerian_number(4, 9) == 0 and eulerian_number(4, -1) == 0


def test_cross_and_measure_closed_forms():
    assert cross_number(3, 3) == 10 + 2 * 4 + 1 == 19
    assert [cross_number(3, n) for n in range(1, 5)] == [1, 6, 19, 44]
    assert measure_number(3, 2) == 4 + 4 * 1 + 0 == 8
    assert all(measure_number(d, 1) == 1 for d in range(1, 7))


def test_measure_number_is_nth_power():
    for d in range(1, 7):
        for n in range(1, 21):
            assert measure_number(d, n) == n**d


def _grid_count(n, d, interior=False):
    """Lattice points of the n-th cube figurate stage, by direct enumeration."""
    if n <= 0:
        return 0
    inside = range(1, n - 1) if interior else range(n)
    return sum(1 for _ in product(inside, repeat=d))


def test_recursive_square_matches_grid():
    b = make_bundle("cube:2")
    rec = polytope_number_recursive(b.lattice, b.apexes, 6)
    assert rec.values[1:4] == (1, 4, 9)
    assert rec.values == tuple(_grid_count(n, 2) for n in range(7))


def test_recursive_cube_matches_grid():
    b = make_bundle("cube:3")
    rec = polytope_number_recursive(b.lattice, b.apexes, 6)
    assert rec.values == tuple(_grid_count(n, 3) for n in range(7))
    interior = polytope_number_recursive(b.lattice, b.apexes, 6, interior=True)
    assert interior.values == tuple(_grid_count(n, 3, interior=True) for n in range(7))
    assert interior.values[4] == 8


def test_sequence_base_values(family):
    for b in family.values():
        rec = polytope_number_recursive(b.lattice, b.apexes, 3)
        assert rec.values[0] == 0 and rec.values[1] == 1, b.spec
        ssum = polytope_number_simplex_sum(b.tri, 3)
        assert ssum.values[0] == 0 and ssum.values[1] == 1, b.spec
        ri = polytope_number_recursive(b.lattice, b.apexes, 3, interior=True)
        assert ri.values[0] == 0 and ri.values[1] == 0, b.spec


def test_simplex_sum_examples(cube3):
    ssum = polytope_number_simplex_sum(cube3.tri, 3)
    assert ssum.values[3] == 8 * 1 + 19 * 1 + 18 * 0 + 6 * 0 == 27
    b2 = make_bundle("cube:2")
    assert polytope_number_simplex_sum(b2.tri, 2).values[2] == 4 * 1 + 5 * 0 + 2 * 0 == 4


def test_simplex_sum_reduces_to_closed_form():
    for d in range(1, 6):
        lat = parse_builtin(f"simplex:{d}")
        tri = build_pointed_triangulation(lat, assign_apexes(lat, generic_functional(lat)))
        ssum = polytope_number_simplex_sum(tri, 10)
        assert ssum.values == tuple(simplex_number(d, n) for n in range(11))


def test_from_h_examples():
    assert polytope_number_from_h((1, 4, 1), 3, 2) == 4 + 4 + 0 == 8 == measure_number(3, 2)
    assert polytope_number_from_h((1, 2, 1), 3, 3) == 10 + 8 + 1 == 19
    for h in [(1, 4, 1, 0, 0), (1, 2, 1, 0, 0), (1, 0, 0)]:
        assert polytope_number_from_h(h, len(h) - 2, 1) == 1


def test_interior_from_k_examples():
    assert interior_from_k((0, 0, 1, 4, 1), 3, 4) == 4 + 4 + 0 == 8
    for d in range(1, 6):
        k = (0,) * (d + 1) + (1,)
        for n in range(0, 12):
            assert interior_from_k(k, d, n) == simplex_number(d, n - d - 1)
    assert interior_from_h_reversed((1, 4, 1, 0, 0), 3, 3) == 1


def test_sequence_from_h_record():
    res = sequence_from_h("cube:3", (1, 4, 1, 0, 0), 3, 5)
    assert res.values == (0, 1, 8, 27, 64, 125)
    assert res.decomposition.coeffs == (1, 4, 1, 0, 0)
    assert res.decomposition.basis == "alpha_shifted"


def test_closed_forms_match_recursion():
    for d in range(1, 5):
        bc = make_bundle(f"cube:{d}")
        rec = polytope_number_recursive(bc.lattice, bc.apexes, 12)
        assert rec.values == tuple(measure_number(d, n) if n else 0 for n in range(13))
        assert bc.h == tuple(eulerian_number(d, i) for i in range(d)) + (0, 0)
        bx = make_bundle(f"cross:{d}")
        rec = polytope_number_recursive(bx.lattice, bx.apexes, 12)
        assert rec.values == tuple(cross_number(d, n) if n else 0 for n in range(13))
        assert bx.h == tuple(comb(d - 1, i) for i in range(d)) + (0, 0)


def test_decomposition_coefficients_invariants(family):
    for b in family.values():
        assert b.h[0] == 1, b.spec
        assert all(x >= 0 for x in b.h), b.spec


def test_pyramid_sequence_depends_on_recorded_functional():
    # pyramid over a square is not vertex transitive; record the h-vector under
    # functionals whose global apex is a base vertex vs. the pyramid apex, and
    # assert only per-functional validity, not agreement between the two.
    from fractions import Fraction

    lat = parse_builtin("pyramid:square")
    outcomes = {}
    for tag, c in [
        ("base-vertex", generic_functional(lat)),
        ("pyramid-apex", (Fraction(1), Fraction(2), Fraction(-100))),
    ]:
        apexes = assign_apexes(lat, c)
        tri = build_pointed_triangulation(lat, apexes)
        from figurate.partitions import f_vector, h_from_f

        h = h_from_f(f_vector(tri.simplices, 3), 3)
        rec = polytope_number_recursive(lat, apexes, 10)
        fromh = tuple(polytope_number_from_h(h, 3, n) for n in range(11))
        assert rec.values == fromh, tag
        assert h[0] == 1 and all(x >= 0 for x in h), tag
        outcomes[tag] = (h, rec.values)
    # the observed outcome (recorded, not required): both apex choices agree here
    assert outcomes["base-vertex"][0] == (1, 1, 0, 0, 0)


def test_compound_family_closed_forms(family):
    # independent closed forms: stacked layers for the prism, summed squares
    # for the pyramid, and the octahedral numbers for the square bipyramid
    prism = family["prism:triangle"]
    rec = polytope_number_recursive(prism.lattice, prism.apexes, 10).values
    assert rec == tuple(n * comb(n + 1, 2) for n in range(11))
    pyr = family["pyramid:square"]
    rec = polytope_number_recursive(pyr.lattice, pyr.apexes, 10).values
    assert rec == tuple(sum(k * k for k in range(n + 1)) for n in range(11))
    bipyr = family["bipyramid:square"]
    rec = polytope_number_recursive(bipyr.lattice, bipyr.apexes, 10).values
    assert rec == tuple(cross_number(3, n) if n else 0 for n in range(11))


def test_facet_cut_examples():
    assert simplex_number(3, 5) - sum(simplex_number(2, 5 - i) for i in range(4)) == 1
    assert facet_cut_check(3, 5, 4)
    assert all(facet_cut_check(d, n, 0) for d in range(1, 5) for n in range(8))


def test_vandermonde_examples():
    # the sum over all dimensions against the f-vector of a simplex
    for d in range(1, 7):
        for n in list(range(2, 21)) + [0]:
            assert vandermonde_check(d, 0, n), (d, n)
    # base cases sit outside the identity: a documented, expected failure
    assert not vandermonde_check(1, 0, 1)
    assert not vandermonde_check(3, 1, 1)


def test_alpha_difference_identity():
    for d in range(1, 9):
        for n in range(0, 31):
            assert alpha_difference_check(d, n)
